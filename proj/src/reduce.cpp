#include "twocolor/reduce.hpp"

#include <algorithm>
#include <sstream>

#include "twocolor/predict.hpp"
#include "twocolor/qnum.hpp"

namespace twocolor {

DgComplex gaussian_eliminate(const DgComplex& c, int degree, int row, int col) {
    int i = c.index_of_degree(degree);
    if (i < 0 || i + 1 >= c.num_degrees()) throw arg_error("gaussian_eliminate: bad degree");
    auto it = c.diff[i].find({row, col});
    if (it == c.diff[i].end() || !it->second.is_unit())
        throw not_a_unit("pivot is not a unit of the coefficient ring");
    Int phi = *it->second.as_constant();

    DgComplex r;
    r.min_degree = c.min_degree;
    r.basis = c.basis;
    r.monos = c.monos;
    r.diff = c.diff;

    auto drop = [](std::vector<std::string>& v, int at) { v.erase(v.begin() + at); };
    drop(r.basis[i], col);
    drop(r.basis[i + 1], row);
    if (!r.monos.empty()) {
        if (!r.monos[i].empty()) r.monos[i].erase(r.monos[i].begin() + col);
        if (!r.monos[i + 1].empty()) r.monos[i + 1].erase(r.monos[i + 1].begin() + row);
    }

    auto renum_row = [](SparseMat& m, int at) {
        SparseMat out;
        for (auto& [rc, v] : m) {
            if (rc.first == at) continue;
            out[{rc.first > at ? rc.first - 1 : rc.first, rc.second}] = std::move(v);
        }
        m = std::move(out);
    };
    auto renum_col = [](SparseMat& m, int at) {
        SparseMat out;
        for (auto& [rc, v] : m) {
            if (rc.second == at) continue;
            out[{rc.first, rc.second > at ? rc.second - 1 : rc.second}] = std::move(v);
        }
        m = std::move(out);
    };

    // d' = a - b phi^{-1} c over the remaining basis of this layer
    SparseMat corrected;
    for (const auto& [rc, v] : c.diff[i]) {
        if (rc.first == row || rc.second == col) continue;
        corrected[rc] = v;
    }
    for (const auto& [rc_b, b] : c.diff[i]) {
        if (rc_b.second != col || rc_b.first == row) continue;  // b: pivot column, other rows
        for (const auto& [rc_c, cc] : c.diff[i]) {
            if (rc_c.first != row || rc_c.second == col) continue;  // c: pivot row, other cols
            BiPoly delta = b * cc;
            if (phi == 1) corrected[{rc_b.first, rc_c.second}] -= delta;
            else corrected[{rc_b.first, rc_c.second}] += delta;
            if (corrected[{rc_b.first, rc_c.second}].is_zero()) corrected.erase({rc_b.first, rc_c.second});
        }
    }
    r.diff[i] = std::move(corrected);
    renum_row(r.diff[i], row);
    renum_col(r.diff[i], col);
    if (i > 0) renum_row(r.diff[i - 1], col);
    if (i + 1 < static_cast<int>(r.diff.size())) renum_col(r.diff[i + 1], row);
    return r;
}

int gamma_degree(const GammaMonomial& m) {
    int d = 0;
    for (const auto& f : m) d += f.sign == -1 ? 2 - 2 * f.k : 1 - 2 * f.k;
    return d;
}

std::string gamma_label(const GammaMonomial& m) {
    if (m.empty()) return "1";
    std::ostringstream out;
    for (const auto& f : m) {
        out << f.k;
        if (f.sign == 1) out << "+";
        else if (f.sign == -1) out << "-";
    }
    return out.str();
}

std::vector<int> gamma_parts(const GammaMonomial& m) {
    std::vector<int> p;
    for (const auto& f : m) p.push_back(f.k);
    return p;
}

std::vector<std::pair<Frac, GenMonomial>> gamma_expansion(const GammaMonomial& m) {
    std::vector<std::pair<Frac, GenMonomial>> acc{{Frac{BiPoly::one(), BiPoly::one()}, GenMonomial{}}};
    for (const auto& f : m) {
        std::vector<std::pair<Frac, GenMonomial>> factor;
        if (f.sign == -1) {
            BiPoly den = qnum(f.k, Color::y);
            for (int i = 1; i <= f.k - 1; ++i)
                factor.push_back({Frac{qbinomial(f.k, i, Color::y), den},
                                  GenMonomial{{GenColor::beta, i}, {GenColor::beta, f.k - i}}});
        } else {
            factor.push_back({Frac{BiPoly::one(), BiPoly::one()}, GenMonomial{{GenColor::beta, f.k}}});
        }
        std::vector<std::pair<Frac, GenMonomial>> next;
        for (const auto& [fa, ma] : acc)
            for (const auto& [fb, mb] : factor) {
                GenMonomial mm = ma;
                mm.insert(mm.end(), mb.begin(), mb.end());
                next.push_back({fa * fb, std::move(mm)});
            }
        acc = std::move(next);
    }
    return acc;
}

namespace {

int gamma_gens(const GammaFactor& f) { return f.sign == -1 ? 2 : 1; }

GenMonomial gamma_leading(const GammaMonomial& m) {
    GenMonomial lead;
    for (const auto& f : m) {
        if (f.sign == -1) {
            lead.push_back({GenColor::beta, 1});
            lead.push_back({GenColor::beta, f.k - 1});
        } else {
            lead.push_back({GenColor::beta, f.k});
        }
    }
    return lead;
}

// formal gamma differential: differentiate each + factor
std::vector<std::pair<BiPoly, GammaMonomial>> gamma_diff(const GammaMonomial& m) {
    std::vector<std::pair<BiPoly, GammaMonomial>> out;
    int gens_left = 0;
    for (size_t j = 0; j < m.size(); ++j) {
        if (m[j].sign == 1) {
            GammaMonomial t = m;
            t[j].sign = -1;
            BiPoly c = qnum(m[j].k, Color::y);
            out.push_back({gens_left % 2 == 0 ? c : -c, std::move(t)});
        }
        gens_left += gamma_gens(m[j]);
    }
    return out;
}

std::vector<GammaMonomial> gamma_basis_of(int m) {
    std::vector<GammaMonomial> out;
    if (m == 0) {
        out.push_back({});
        return out;
    }
    // compositions of `total` into parts >= 2, with all sign choices
    auto comps = [](int total) {
        std::vector<std::vector<int>> cs;
        std::vector<int> cur;
        auto rec = [&](auto&& self, int rem) -> void {
            if (rem == 0) {
                if (!cur.empty()) cs.push_back(cur);
                return;
            }
            for (int k = 2; k <= rem; ++k) {
                cur.push_back(k);
                self(self, rem - k);
                cur.pop_back();
            }
        };
        rec(rec, total);
        return cs;
    };
    auto with_signs = [&](const std::vector<int>& comp, bool trailing_one) {
        int r = static_cast<int>(comp.size());
        for (int mask = 0; mask < (1 << r); ++mask) {
            GammaMonomial gm;
            for (int j = 0; j < r; ++j) gm.push_back({comp[j], (mask >> j) & 1 ? -1 : 1});
            if (trailing_one) gm.push_back({1, 0});
            out.push_back(std::move(gm));
        }
    };
    for (const auto& comp : comps(m)) with_signs(comp, false);
    if (m == 1) out.push_back({{1, 0}});
    else
        for (const auto& comp : comps(m - 1)) with_signs(comp, true);
    return out;
}

bool gamma_less(const GammaMonomial& a, const GammaMonomial& b) {
    auto key = [](const GammaFactor& f) {
        return std::tuple<int, int>(f.k, f.sign == 1 ? 0 : (f.sign == -1 ? 1 : 2));
    };
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        [&](const GammaFactor& x, const GammaFactor& y) { return key(x) < key(y); });
}

using BetaVector = std::map<GenMonomial, Frac>;

void accumulate(BetaVector& v, const GenMonomial& m, const Frac& f) {
    auto it = v.find(m);
    if (it == v.end()) v.emplace(m, f);
    else it->second = it->second + f;
}

} // namespace

GammaComplex gamma_transform(const DgComplex& B_m) {
    if (B_m.monos.empty()) throw arg_error("gamma_transform: complex carries no monomial data");
    int m = 0;
    size_t count = 0;
    for (const auto& bucket : B_m.monos)
        for (const auto& mono : bucket) {
            m = std::max(m, monomial_total(mono));
            ++count;
        }
    auto gammas = gamma_basis_of(m);
    if (gammas.size() != count)
        throw std::logic_error("gamma basis size mismatch for B_" + std::to_string(m));

    // unitriangularity: leading beta-monomials are pairwise distinct, carry
    // coefficient 1, and every other expansion term is lex-greater
    std::map<GenMonomial, int> seen;
    for (const auto& g : gammas) {
        GenMonomial lead = gamma_leading(g);
        if (!seen.emplace(lead, 1).second)
            throw std::logic_error("leading terms collide in gamma basis");
        for (const auto& [frac, mono] : gamma_expansion(g)) {
            if (mono == lead) {
                if (!frac.is_one()) throw std::logic_error("leading coefficient is not 1");
            } else if (!monomial_less(lead, mono)) {
                throw std::logic_error("expansion term below the leading term");
            }
        }
    }
    // the leading terms exhaust the beta basis
    for (const auto& bucket : B_m.monos)
        for (const auto& mono : bucket)
            if (!seen.count(mono)) throw std::logic_error("beta monomial is not a leading term");

    // the gamma differential commutes with the expansion
    for (const auto& g : gammas) {
        BetaVector lhs, rhs;
        for (const auto& [coef, gm] : gamma_diff(g))
            for (const auto& [frac, mono] : gamma_expansion(gm))
                accumulate(lhs, mono, Frac{coef, BiPoly::one()} * frac);
        for (const auto& [frac, mono] : gamma_expansion(g))
            for (const auto& [coef, target] : diff_monomial(mono, true))
                accumulate(rhs, target, Frac{coef, BiPoly::one()} * frac);
        for (const auto& [mono, frac] : lhs) {
            auto it = rhs.find(mono);
            Frac other = it == rhs.end() ? Frac{} : it->second;
            if (!frac.equals(other)) throw std::logic_error("gamma differential disagrees with expansion");
        }
        for (const auto& [mono, frac] : rhs)
            if (!lhs.count(mono) && !frac.is_zero())
                throw std::logic_error("expansion differential has an extra term");
    }

    GammaComplex out;
    out.total = m;
    int lo = 0, hi = 0;
    if (!gammas.empty()) {
        lo = hi = gamma_degree(gammas.front());
        for (const auto& g : gammas) {
            lo = std::min(lo, gamma_degree(g));
            hi = std::max(hi, gamma_degree(g));
        }
    }
    out.min_degree = lo;
    out.basis.resize(hi - lo + 1);
    for (auto& g : gammas) out.basis[gamma_degree(g) - lo].push_back(std::move(g));
    for (auto& bucket : out.basis) std::sort(bucket.begin(), bucket.end(), gamma_less);
    if (out.basis.size() > 1) out.diff.resize(out.basis.size() - 1);
    std::vector<std::map<GammaMonomial, int>> index(out.basis.size());
    for (size_t i = 0; i < out.basis.size(); ++i)
        for (size_t j = 0; j < out.basis[i].size(); ++j) index[i][out.basis[i][j]] = static_cast<int>(j);
    for (size_t i = 0; i + 1 < out.basis.size(); ++i)
        for (size_t col = 0; col < out.basis[i].size(); ++col)
            for (const auto& [coef, target] : gamma_diff(out.basis[i][col])) {
                auto it = index[i + 1].find(target);
                if (it == index[i + 1].end()) throw std::logic_error("gamma differential leaves the complex");
                out.diff[i][{it->second, static_cast<int>(col)}] = coef;
            }
    return out;
}

std::vector<GammaComplex> block_decompose(const GammaComplex& g) {
    std::map<std::vector<int>, std::vector<GammaMonomial>> buckets;
    for (const auto& level : g.basis)
        for (const auto& m : level) buckets[gamma_parts(m)].push_back(m);
    std::vector<GammaComplex> out;
    for (auto& [sig, monos] : buckets) {
        GammaComplex b;
        b.total = g.total;
        int lo = gamma_degree(monos.front()), hi = lo;
        for (const auto& m : monos) {
            lo = std::min(lo, gamma_degree(m));
            hi = std::max(hi, gamma_degree(m));
        }
        b.min_degree = lo;
        b.basis.resize(hi - lo + 1);
        for (auto& m : monos) b.basis[gamma_degree(m) - lo].push_back(std::move(m));
        for (auto& bucket : b.basis) std::sort(bucket.begin(), bucket.end(), gamma_less);
        if (b.basis.size() > 1) b.diff.resize(b.basis.size() - 1);
        std::vector<std::map<GammaMonomial, int>> index(b.basis.size());
        for (size_t i = 0; i < b.basis.size(); ++i)
            for (size_t j = 0; j < b.basis[i].size(); ++j) index[i][b.basis[i][j]] = static_cast<int>(j);
        for (size_t i = 0; i + 1 < b.basis.size(); ++i)
            for (size_t col = 0; col < b.basis[i].size(); ++col)
                for (const auto& [coef, target] : gamma_diff(b.basis[i][col])) {
                    auto it = index[i + 1].find(target);
                    if (it == index[i + 1].end())
                        throw std::logic_error("differential crosses block boundaries");
                    b.diff[i][{it->second, static_cast<int>(col)}] = coef;
                }
        out.push_back(std::move(b));
    }
    return out;
}

namespace {

// maximal number of disjoint adjacent pairs (gamma_d^+, gamma_m^pm), d | m,
// excluding the equal-index pair with minus sign
int d_weight(const GammaMonomial& mono, int d) {
    int n = static_cast<int>(mono.size());
    std::vector<int> dp(n + 1, 0);
    for (int i = 1; i <= n; ++i) {
        dp[i] = dp[i - 1];
        if (i >= 2) {
            const auto& a = mono[i - 2];
            const auto& b = mono[i - 1];
            bool pair = a.k == d && a.sign == 1 && b.k >= 1 && b.k % d == 0 &&
                        b.sign != 0 && !(b.k == d && b.sign == -1);
            if (pair) dp[i] = std::max(dp[i], dp[i - 2] + 1);
        }
    }
    return dp[n];
}

Frac rescale_factor(const GammaMonomial& mono) {
    Frac f{BiPoly::one(), BiPoly::one()};
    std::map<int, int> rd;
    for (const auto& g : mono)
        if (g.sign == -1) rd[g.k] += 1;
    std::vector<int> ds;
    for (const auto& g : mono)
        if (g.sign == 1) ds.push_back(g.k);
    std::sort(ds.begin(), ds.end());
    ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
    std::map<int, int> wd;
    for (int d : ds) wd[d] = d_weight(mono, d);
    for (const auto& [d, r] : rd)
        for (int i = 0; i < r; ++i) f.num *= qnum(d, Color::y);
    std::map<int, int> phipow;
    for (const auto& [d, r] : rd) phipow[d] += r;
    for (const auto& [d, w] : wd) phipow[d] += w;
    for (const auto& [d, e] : phipow)
        for (int i = 0; i < e; ++i) f.den *= cyclotomic(d, Color::y);
    return f;
}

} // namespace

DgComplex rescale_block(const GammaComplex& block) {
    DgComplex out;
    out.min_degree = block.min_degree;
    out.basis.resize(block.basis.size());
    std::vector<std::vector<Frac>> scale(block.basis.size());
    for (size_t i = 0; i < block.basis.size(); ++i)
        for (const auto& m : block.basis[i]) {
            out.basis[i].push_back(gamma_label(m));
            scale[i].push_back(rescale_factor(m));
        }
    out.diff.resize(block.diff.size());
    for (size_t i = 0; i < block.diff.size(); ++i) {
        for (const auto& [rc, v] : block.diff[i]) {
            const Frac& cs = scale[i][rc.second];
            const Frac& ct = scale[i + 1][rc.first];
            BiPoly numer = v * cs.num * ct.den;
            BiPoly denom = cs.den * ct.num;
            auto q = numer.divided_by(denom);
            if (!q)
                throw non_integral_after_rescale("entry " + v.str() + " at " + gamma_label(block.basis[i][rc.second]));
            if (!q->is_zero()) out.diff[i][rc] = *q;
        }
    }
    return out;
}

DgComplex cube_complex(const std::vector<BiPoly>& gens, int top_degree) {
    int r = static_cast<int>(gens.size());
    DgComplex out;
    out.min_degree = top_degree - r;
    out.basis.resize(r + 1);
    std::vector<std::vector<unsigned>> masks(r + 1);
    for (unsigned mask = 0; mask < (1u << r); ++mask)
        masks[__builtin_popcount(mask)].push_back(mask);
    for (int i = 0; i <= r; ++i) {
        for (unsigned mask : masks[i]) {
            std::string lbl;
            for (int b = 0; b < r; ++b) lbl += (mask >> b) & 1 ? '1' : '0';
            if (lbl.empty()) lbl = "*";
            out.basis[i].push_back(lbl);
        }
    }
    if (r > 0) out.diff.resize(r);
    for (int i = 0; i < r; ++i) {
        std::map<unsigned, int> index;
        for (size_t j = 0; j < masks[i + 1].size(); ++j) index[masks[i + 1][j]] = static_cast<int>(j);
        for (size_t col = 0; col < masks[i].size(); ++col) {
            unsigned mask = masks[i][col];
            for (int b = 0; b < r; ++b) {
                if ((mask >> b) & 1) continue;
                int below = __builtin_popcount(mask & ((1u << b) - 1));
                BiPoly coef = below % 2 == 0 ? gens[b] : -gens[b];
                out.diff[i][{index[mask | (1u << b)], static_cast<int>(col)}] = coef;
            }
        }
    }
    return out;
}

long CubeModel::rank_in_degree(int d) const {
    long r = 0;
    for (const auto& p : pieces) {
        int sz = static_cast<int>(p.gens.size());
        int j = d - (p.top_degree - sz);
        if (j < 0 || j > sz) continue;
        long c = 1;
        for (int i = 1; i <= j; ++i) c = c * (sz - i + 1) / i;
        r += c;
    }
    return r;
}

long CubeModel::euler_characteristic() const {
    long chi = 0;
    for (const auto& p : pieces) {
        // sum_j (-1)^(top - r + j) C(r, j) = 0 unless r = 0
        if (p.gens.empty()) chi += p.top_degree % 2 == 0 ? 1 : -1;
    }
    return chi;
}

CubeModel cube_model(int n) {
    if (n < 0) throw arg_error("cube_model: n must be >= 0");
    CubeModel model;
    model.pieces.push_back({0, {}, {}});
    if (n >= 1) model.pieces.push_back({-1, {}, {}});
    for (int i = 4; i <= 2 * n; ++i) {
        for (const auto& lambda : distinguished_partitions(i / 2)) {
            int w = partition_weight(lambda);
            std::vector<int> gen_idx = lambda;
            std::sort(gen_idx.begin(), gen_idx.end());
            gen_idx.erase(std::unique(gen_idx.begin(), gen_idx.end()), gen_idx.end());
            CubePiece piece;
            piece.top_degree = w + 1 - i;
            piece.gen_indices = gen_idx;
            for (int d : gen_idx) piece.gens.push_back(cyclotomic(d, Color::y));
            model.pieces.push_back(std::move(piece));
        }
    }
    return model;
}

} // namespace twocolor
