#include "twocolor/dg.hpp"

#include <algorithm>
#include <sstream>

#include "twocolor/qnum.hpp"

#include <json.hpp>

namespace twocolor {

int monomial_degree(const GenMonomial& m) {
    int d = 0;
    for (const auto& g : m) d += 1 - 2 * g.k;
    return d;
}

int monomial_total(const GenMonomial& m) {
    int t = 0;
    for (const auto& g : m) t += g.k;
    return t;
}

bool monomial_less(const GenMonomial& a, const GenMonomial& b) {
    auto key = [](const Generator& g) { return std::pair<int, int>(g.k, g.color == GenColor::rho ? 0 : 1); };
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        [&](const Generator& x, const Generator& y) { return key(x) < key(y); });
}

std::string alternating_word(char first, int length) {
    std::string w;
    w.reserve(length);
    char c = first;
    for (int i = 0; i < length; ++i) {
        w.push_back(c);
        c = c == 's' ? 't' : 's';
    }
    return w;
}

std::string associated_word(const GenMonomial& m) {
    std::string w;
    for (const auto& g : m)
        w += alternating_word(g.color == GenColor::rho ? 's' : 't', 2 * g.k - 1);
    return w;
}

std::string monomial_label(const GenMonomial& m) {
    if (m.empty()) return "1";
    bool beta_only = std::all_of(m.begin(), m.end(), [](const Generator& g) { return g.color == GenColor::beta; });
    std::ostringstream out;
    if (beta_only) {
        bool wide = std::any_of(m.begin(), m.end(), [](const Generator& g) { return g.k > 9; });
        for (size_t i = 0; i < m.size(); ++i) {
            if (wide && i) out << ".";
            out << m[i].k;
        }
    } else {
        for (const auto& g : m) out << (g.color == GenColor::rho ? 'r' : 'b') << g.k;
    }
    return out.str();
}

bool is_subword(std::string_view u, std::string_view w) {
    size_t i = 0;
    for (char c : w) {
        if (i < u.size() && u[i] == c) ++i;
    }
    return i == u.size();
}

std::vector<DiffTerm> diff_generator(const Generator& g, bool antispherical) {
    if (g.k < 1) throw arg_error("diff_generator: k must be >= 1");
    if (antispherical && g.color == GenColor::rho)
        throw arg_error("diff_generator: rho generators vanish in the antispherical quotient");
    std::vector<DiffTerm> out;
    const int k = g.k;
    if (g.color == GenColor::rho) {
        if (k == 1) {
            out.emplace_back(BiPoly::var_as(), GenMonomial{});
            return out;
        }
        for (int i = 1; i <= k - 1; ++i) {
            out.emplace_back(-qbinomial(k, i, Color::x),
                             GenMonomial{{GenColor::rho, i}, {GenColor::rho, k - i}});
            out.emplace_back(qbinomial(k - 1, i - 1, Color::y),
                             GenMonomial{{GenColor::rho, i}, {GenColor::beta, k - i}});
            out.emplace_back(qbinomial(k - 1, k - i - 1, Color::y),
                             GenMonomial{{GenColor::beta, i}, {GenColor::rho, k - i}});
        }
        return out;
    }
    if (k == 1) {
        if (!antispherical) out.emplace_back(-BiPoly::var_at(), GenMonomial{});
        return out;
    }
    for (int i = 1; i <= k - 1; ++i) {
        out.emplace_back(qbinomial(k, i, Color::y),
                         GenMonomial{{GenColor::beta, i}, {GenColor::beta, k - i}});
        if (!antispherical) {
            out.emplace_back(-qbinomial(k - 1, k - i - 1, Color::x),
                             GenMonomial{{GenColor::rho, i}, {GenColor::beta, k - i}});
            out.emplace_back(-qbinomial(k - 1, i - 1, Color::x),
                             GenMonomial{{GenColor::beta, i}, {GenColor::rho, k - i}});
        }
    }
    return out;
}

std::vector<DiffTerm> diff_monomial(const GenMonomial& m, bool antispherical) {
    std::map<GenMonomial, BiPoly> acc;
    for (size_t j = 0; j < m.size(); ++j) {
        int sign = (j % 2 == 0) ? 1 : -1;  // generators strictly to the left
        for (auto& [coef, mid] : diff_generator(m[j], antispherical)) {
            GenMonomial t(m.begin(), m.begin() + j);
            t.insert(t.end(), mid.begin(), mid.end());
            t.insert(t.end(), m.begin() + j + 1, m.end());
            BiPoly c = sign == 1 ? coef : -coef;
            auto it = acc.find(t);
            if (it == acc.end()) acc.emplace(std::move(t), std::move(c));
            else it->second += c;
        }
    }
    std::vector<DiffTerm> out;
    for (auto& [mono, coef] : acc)
        if (!coef.is_zero()) out.emplace_back(std::move(coef), mono);
    return out;
}

long DgComplex::total_rank() const {
    long r = 0;
    for (const auto& b : basis) r += static_cast<long>(b.size());
    return r;
}

long DgComplex::euler_characteristic() const {
    long chi = 0;
    for (int i = 0; i < num_degrees(); ++i) {
        int d = min_degree + i;
        long sz = static_cast<long>(basis[i].size());
        chi += (d % 2 == 0) ? sz : -sz;
    }
    return chi;
}

namespace {

DgComplex assemble(std::vector<GenMonomial> monomials, bool antispherical) {
    DgComplex cx;
    if (monomials.empty()) return cx;
    int lo = monomial_degree(monomials.front()), hi = lo;
    for (const auto& m : monomials) {
        int d = monomial_degree(m);
        lo = std::min(lo, d);
        hi = std::max(hi, d);
    }
    cx.min_degree = lo;
    cx.basis.resize(hi - lo + 1);
    cx.monos.resize(hi - lo + 1);
    for (auto& m : monomials) cx.monos[monomial_degree(m) - lo].push_back(std::move(m));
    for (auto& bucket : cx.monos) std::sort(bucket.begin(), bucket.end(), monomial_less);
    std::vector<std::map<GenMonomial, int>> index(cx.monos.size());
    for (size_t i = 0; i < cx.monos.size(); ++i) {
        for (size_t j = 0; j < cx.monos[i].size(); ++j) {
            cx.basis[i].push_back(monomial_label(cx.monos[i][j]));
            index[i][cx.monos[i][j]] = static_cast<int>(j);
        }
    }
    if (cx.num_degrees() > 1) cx.diff.resize(cx.num_degrees() - 1);
    for (int i = 0; i + 1 < cx.num_degrees(); ++i) {
        for (size_t col = 0; col < cx.monos[i].size(); ++col) {
            for (auto& [coef, target] : diff_monomial(cx.monos[i][col], antispherical)) {
                auto it = index[i + 1].find(target);
                if (it == index[i + 1].end())
                    throw std::logic_error("differential leaves the complex: " + monomial_label(target));
                cx.diff[i][{it->second, static_cast<int>(col)}] = coef;
            }
        }
    }
    return cx;
}

void enumerate_subword_monomials(const std::string& word, bool antispherical,
                                 GenMonomial& cur, size_t pos,
                                 std::vector<GenMonomial>& out) {
    out.push_back(cur);
    // append one more generator, embedding its word greedily after pos
    std::vector<GenColor> colors = antispherical
        ? std::vector<GenColor>{GenColor::beta}
        : std::vector<GenColor>{GenColor::rho, GenColor::beta};
    for (GenColor color : colors) {
        for (int k = 1; 2 * k - 1 <= static_cast<int>(word.size() - pos); ++k) {
            std::string gw = alternating_word(color == GenColor::rho ? 's' : 't', 2 * k - 1);
            size_t p = pos, i = 0;
            while (p < word.size() && i < gw.size()) {
                if (word[p] == gw[i]) ++i;
                ++p;
            }
            if (i < gw.size()) continue;  // longer k embeds even later; still may fit, so keep trying
            cur.push_back({color, k});
            enumerate_subword_monomials(word, antispherical, cur, p, out);
            cur.pop_back();
        }
    }
}

} // namespace

DgComplex build_tilde_C(int n, bool antispherical) {
    if (n < 0) throw arg_error("build_tilde_C: n must be >= 0");
    std::string word = alternating_word('s', 2 * n);
    GenMonomial cur;
    std::vector<GenMonomial> monomials;
    enumerate_subword_monomials(word, antispherical, cur, 0, monomials);
    return assemble(std::move(monomials), antispherical);
}

DgComplex build_gamma_truncation(int max_total) {
    if (max_total < 0) throw arg_error("build_gamma_truncation: max_total must be >= 0");
    std::vector<GenMonomial> monomials;
    GenMonomial cur;
    auto rec = [&](auto&& self, int remaining) -> void {
        monomials.push_back(cur);
        for (GenColor color : {GenColor::rho, GenColor::beta}) {
            for (int k = 1; k <= remaining; ++k) {
                cur.push_back({color, k});
                self(self, remaining - k);
                cur.pop_back();
            }
        }
    };
    rec(rec, max_total);
    return assemble(std::move(monomials), false);
}

std::vector<DgComplex> split_B(const DgComplex& c) {
    int n = 0;
    for (const auto& bucket : c.monos)
        for (const auto& m : bucket) n = std::max(n, monomial_total(m));
    std::vector<std::vector<GenMonomial>> parts(n + 1);
    for (const auto& bucket : c.monos)
        for (const auto& m : bucket) {
            for (const auto& g : m)
                if (g.color != GenColor::beta)
                    throw arg_error("split_B: complex must be antispherical");
            parts[monomial_total(m)].push_back(m);
        }
    std::vector<DgComplex> out;
    for (auto& p : parts) out.push_back(assemble(std::move(p), true));
    return out;
}

bool check_d_squared(const DgComplex& c) {
    for (size_t i = 0; i + 1 < c.diff.size(); ++i) {
        // compose diff[i+1] * diff[i]
        std::map<std::pair<int, int>, BiPoly> acc;
        for (const auto& [rc1, f] : c.diff[i]) {
            auto [mid, col] = rc1;
            for (const auto& [rc2, g] : c.diff[i + 1]) {
                auto [row, mid2] = rc2;
                if (mid2 != mid) continue;
                acc[{row, col}] += g * f;
            }
        }
        for (const auto& [rc, v] : acc)
            if (!v.is_zero()) return false;
    }
    return true;
}

std::string DgComplex::to_dot() const {
    std::ostringstream out;
    out << "digraph complex {\n";
    for (int i = 0; i < num_degrees(); ++i)
        for (const auto& lbl : basis[i]) out << "  \"" << lbl << "\";\n";
    for (size_t i = 0; i < diff.size(); ++i) {
        // deterministic: by source column, then target row
        std::vector<std::pair<std::pair<int, int>, const BiPoly*>> entries;
        for (const auto& [rc, v] : diff[i]) entries.push_back({{rc.second, rc.first}, &v});
        std::sort(entries.begin(), entries.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (const auto& [cr, v] : entries) {
            out << "  \"" << basis[i][cr.first] << "\" -> \"" << basis[i + 1][cr.second]
                << "\" [label=\"" << v->str() << "\"];\n";
        }
    }
    out << "}\n";
    return out.str();
}

std::string DgComplex::to_json() const {
    nlohmann::json j;
    j["degrees"] = {min_degree, max_degree()};
    j["basis"] = basis;
    j["diff"] = nlohmann::json::array();
    for (size_t i = 0; i < diff.size(); ++i) {
        nlohmann::json entry;
        entry["deg"] = min_degree + static_cast<int>(i);
        auto& list = entry["entries"] = nlohmann::json::array();
        for (const auto& [rc, v] : diff[i])
            list.push_back({rc.first, rc.second, v.str()});
        j["diff"].push_back(std::move(entry));
    }
    return j.dump(2);
}

} // namespace twocolor
