#include "twocolor/homology.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace twocolor {

namespace {

// nearest-integer quotient, |a - q*b| <= |b|/2
Int round_div(const Int& a, const Int& b) {
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (2 * r > abs(b)) q += 1;
    return q;
}

} // namespace

std::vector<Int> smith_normal_form(IntMat m) {
    std::vector<Int> factors;
    if (m.empty() || m[0].empty()) return factors;
    size_t rows = m.size(), cols = m[0].size();
    size_t t = 0;
    while (t < rows && t < cols) {
        // pivot: nonzero entry of minimal absolute value in the working block
        size_t pr = t, pc = t;
        bool found = false;
        Int best;
        for (size_t i = t; i < rows; ++i)
            for (size_t j = t; j < cols; ++j)
                if (m[i][j] != 0 && (!found || abs(m[i][j]) < best)) {
                    best = abs(m[i][j]);
                    pr = i;
                    pc = j;
                    found = true;
                }
        if (!found) break;
        std::swap(m[t], m[pr]);
        for (size_t i = 0; i < rows; ++i) std::swap(m[i][t], m[i][pc]);
        // clear row and column t
        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (size_t i = t + 1; i < rows; ++i) {
                if (m[i][t] == 0) continue;
                Int q = round_div(m[i][t], m[t][t]);
                for (size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
                if (m[i][t] != 0) {  // smaller remainder becomes the pivot
                    std::swap(m[t], m[i]);
                    dirty = true;
                }
            }
            for (size_t j = t + 1; j < cols; ++j) {
                if (m[t][j] == 0) continue;
                Int q = round_div(m[t][j], m[t][t]);
                for (size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
                if (m[t][j] != 0) {
                    for (size_t i = 0; i < rows; ++i) std::swap(m[i][t], m[i][j]);
                    dirty = true;
                }
            }
        }
        // pivot must divide the rest of the block
        bool again = false;
        for (size_t i = t + 1; i < rows && !again; ++i)
            for (size_t j = t + 1; j < cols && !again; ++j)
                if (m[i][j] % m[t][t] != 0) {
                    for (size_t jj = t; jj < cols; ++jj) m[t][jj] += m[i][jj];
                    again = true;
                }
        if (again) continue;
        factors.push_back(abs(m[t][t]));
        ++t;
    }
    return factors;
}

long rank_over_q(const std::vector<std::vector<Rat>>& input) {
    auto m = input;
    if (m.empty() || m[0].empty()) return 0;
    size_t rows = m.size(), cols = m[0].size();
    long rank = 0;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[r], m[p]);
        for (size_t i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            Rat f = m[i][c] / m[r][c];
            for (size_t j = c; j < cols; ++j) {
                m[i][j] -= f * m[r][j];
                m[i][j].canonicalize();
            }
        }
        ++r;
        ++rank;
    }
    return rank;
}

long rank_mod_p(const IntMat& input, unsigned long p) {
    if (input.empty() || input[0].empty()) return 0;
    size_t rows = input.size(), cols = input[0].size();
    std::vector<std::vector<long>> m(rows, std::vector<long>(cols));
    Int pp(p);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) {
            Int v = input[i][j] % pp;
            if (v < 0) v += pp;
            m[i][j] = v.get_si();
        }
    auto inv_mod = [&](long a) {
        long t0 = 0, t1 = 1;
        long r0 = static_cast<long>(p), r1 = a;
        while (r1 != 0) {
            long q = r0 / r1;
            std::swap(t0 -= q * t1, t1);
            std::swap(r0 -= q * r1, r1);
        }
        return ((t0 % static_cast<long>(p)) + static_cast<long>(p)) % static_cast<long>(p);
    };
    long rank = 0;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[r], m[piv]);
        long inv = inv_mod(m[r][c]);
        for (size_t i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            long f = (m[i][c] * inv) % static_cast<long>(p);
            for (size_t j = c; j < cols; ++j)
                m[i][j] = ((m[i][j] - f * m[r][j]) % static_cast<long>(p) + static_cast<long>(p)) %
                          static_cast<long>(p);
        }
        ++r;
        ++rank;
    }
    return rank;
}

std::string AbGroup::str() const {
    if (trivial()) return "0";
    std::ostringstream out;
    bool first = true;
    if (free_rank > 0) {
        out << "Z";
        if (free_rank > 1) out << "^" << free_rank;
        first = false;
    }
    for (const auto& d : torsion) {
        if (!first) out << "+";
        out << "Z/" << d.get_str();
        first = false;
    }
    return out.str();
}

AbGroup canonical_group(long free_rank, const std::vector<Int>& cyclic_orders) {
    // decompose each order into prime powers, then rebuild the chain
    std::map<Int, std::vector<unsigned>> ppows;  // prime -> exponents, one per cyclic factor
    for (Int d : cyclic_orders) {
        if (d <= 1) continue;
        Int n = d;
        for (Int p = 2; p * p <= n; ++p) {
            if (n % p != 0) continue;
            unsigned e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            ppows[p].push_back(e);
        }
        if (n > 1) ppows[n].push_back(1);
    }
    size_t chain_len = 0;
    for (auto& [p, es] : ppows) {
        std::sort(es.begin(), es.end(), std::greater<>());
        chain_len = std::max(chain_len, es.size());
    }
    AbGroup g;
    g.free_rank = free_rank;
    g.torsion.assign(chain_len, Int(1));
    for (const auto& [p, es] : ppows)
        for (size_t i = 0; i < es.size(); ++i) {
            Int pe;
            mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), es[i]);
            g.torsion[i] *= pe;  // largest exponents into the last chain slots
        }
    std::reverse(g.torsion.begin(), g.torsion.end());
    return g;
}

CohomologyReport& CohomologyReport::merge(const CohomologyReport& o) {
    for (const auto& [d, g] : o.groups) {
        AbGroup& mine = groups[d];
        std::vector<Int> orders = mine.torsion;
        orders.insert(orders.end(), g.torsion.begin(), g.torsion.end());
        mine = canonical_group(mine.free_rank + g.free_rank, orders);
        if (mine.trivial()) groups.erase(d);
    }
    return *this;
}

std::string CohomologyReport::to_json() const {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [d, g] : groups) {
        nlohmann::json e;
        e["free"] = g.free_rank;
        e["torsion"] = nlohmann::json::array();
        for (const auto& t : g.torsion) e["torsion"].push_back(t.get_str());
        j[std::to_string(d)] = std::move(e);
    }
    return j.dump();
}

std::string CohomologyReport::str() const {
    std::ostringstream out;
    bool first = true;
    for (const auto& [d, g] : groups) {
        if (!first) out << "  ";
        out << "H^" << d << "=" << g.str();
        first = false;
    }
    if (first) out << "0";
    return out.str();
}

namespace {

IntMat specialize_matrix(const SparseMat& mat, int rows, int cols, const Specialization& s) {
    IntMat m(rows, std::vector<Int>(cols, Int(0)));
    auto vals = s.int_values();
    for (const auto& [rc, p] : mat) m[rc.first][rc.second] = p.eval(vals);
    return m;
}

} // namespace

CohomologyReport integral_cohomology(const DgComplex& c, const Specialization& s) {
    if (s.target != Ring::integers) throw arg_error("integral_cohomology needs an integral specialization");
    CohomologyReport rep;
    int nd = c.num_degrees();
    // invariant factors of each differential
    std::vector<std::vector<Int>> snf(c.diff.size());
    for (size_t i = 0; i < c.diff.size(); ++i) {
        int rows = static_cast<int>(c.basis[i + 1].size());
        int cols = static_cast<int>(c.basis[i].size());
        snf[i] = smith_normal_form(specialize_matrix(c.diff[i], rows, cols, s));
    }
    for (int i = 0; i < nd; ++i) {
        long dim = static_cast<long>(c.basis[i].size());
        long rank_out = (i < static_cast<int>(snf.size())) ? static_cast<long>(snf[i].size()) : 0;
        long rank_in = (i > 0) ? static_cast<long>(snf[i - 1].size()) : 0;
        AbGroup g;
        g.free_rank = dim - rank_out - rank_in;
        if (i > 0)
            for (const auto& d : snf[i - 1])
                if (d > 1) g.torsion.push_back(d);
        if (!g.trivial()) rep.groups[c.min_degree + i] = std::move(g);
    }
    return rep;
}

CohomologyReport field_cohomology(const DgComplex& c, const Specialization& s) {
    if (s.target == Ring::integers) throw arg_error("field_cohomology needs Q or F_p");
    CohomologyReport rep;
    int nd = c.num_degrees();
    std::vector<long> ranks(c.diff.size(), 0);
    for (size_t i = 0; i < c.diff.size(); ++i) {
        int rows = static_cast<int>(c.basis[i + 1].size());
        int cols = static_cast<int>(c.basis[i].size());
        if (s.target == Ring::mod_p) {
            ranks[i] = rank_mod_p(specialize_matrix(c.diff[i], rows, cols, s), s.p);
        } else {
            std::vector<std::vector<Rat>> m(rows, std::vector<Rat>(cols, Rat(0)));
            for (const auto& [rc, p] : c.diff[i]) m[rc.first][rc.second] = p.eval(s.values);
            ranks[i] = rank_over_q(m);
        }
    }
    for (int i = 0; i < nd; ++i) {
        long dim = static_cast<long>(c.basis[i].size());
        long rank_out = (i < static_cast<int>(ranks.size())) ? ranks[i] : 0;
        long rank_in = (i > 0) ? ranks[i - 1] : 0;
        long h = dim - rank_out - rank_in;
        if (h != 0) rep.groups[c.min_degree + i].free_rank = h;
    }
    return rep;
}

bool universal_coefficients_consistent(const CohomologyReport& integral,
                                       const CohomologyReport& mod_p, unsigned long p) {
    Int pp(p);
    std::map<int, long> expected;
    for (const auto& [d, g] : integral.groups) {
        expected[d] += g.free_rank;
        for (const auto& t : g.torsion)
            if (t % pp == 0) {
                expected[d] += 1;      // Z/t x F_p
                expected[d - 1] += 1;  // Tor(Z/t, F_p) shows one degree lower
            }
    }
    std::erase_if(expected, [](const auto& kv) { return kv.second == 0; });
    std::map<int, long> got;
    for (const auto& [d, g] : mod_p.groups) got[d] = g.free_rank;
    return expected == got;
}

bool graded_d_squared_is_zero(const GradedComplex& c) {
    for (size_t i = 0; i + 1 < c.diff.size(); ++i) {
        std::map<std::pair<int, int>, std::map<Expo, Rat>> acc;
        for (const auto& [rc1, e1] : c.diff[i])
            for (const auto& [rc2, e2] : c.diff[i + 1]) {
                if (rc2.second != rc1.first) continue;
                BiPoly prod = e1.poly * e2.poly;
                Rat s = e1.scale * e2.scale;
                auto& slot = acc[{rc2.first, rc1.second}];
                for (const auto& [expo, coef] : prod.terms()) {
                    Rat v = s * Rat(coef);
                    v.canonicalize();
                    slot[expo] += v;
                }
            }
        for (const auto& [rc, poly] : acc)
            for (const auto& [expo, coef] : poly)
                if (coef != 0) return false;
    }
    return true;
}

std::map<std::pair<int, int>, long> graded_field_cohomology(const GradedComplex& c, int cutoff) {
    // dimension of the internal-degree-D slice of R(m)
    auto slice_dim = [](int m, int D) -> long {
        int j = D + m;
        if (j < 0 || j % 2 != 0) return 0;
        return j / 2 + 1;
    };
    // validate homogeneity
    for (size_t i = 0; i < c.diff.size(); ++i) {
        for (const auto& [rc, e] : c.diff[i]) {
            int ms = c.shifts[i][rc.second], mt = c.shifts[i + 1][rc.first];
            if (e.poly.is_zero() || e.scale == 0) continue;
            int want = mt - ms;
            if (want < 0 || want % 2 != 0)
                throw inhomogeneous_entry("shift gap is not a nonnegative even number");
            for (const auto& [expo, coef] : e.poly.terms()) {
                if (expo.x != 0 || expo.y != 0)
                    throw inhomogeneous_entry("entry involves x or y");
                if (2 * static_cast<int>(expo.as + expo.at) != want)
                    throw inhomogeneous_entry("entry is not homogeneous of the required degree");
            }
        }
    }
    std::map<std::pair<int, int>, long> result;
    for (int D = -cutoff; D <= cutoff; ++D) {
        // basis of the D-slice at each cohomological degree: per summand, the
        // monomials a_s^u a_t^v with 2(u+v) = D + m
        std::vector<std::vector<std::pair<int, std::pair<int, int>>>> bases(c.num_degrees());
        for (int i = 0; i < c.num_degrees(); ++i)
            for (size_t s = 0; s < c.shifts[i].size(); ++s) {
                int j = D + c.shifts[i][s];
                if (j < 0 || j % 2 != 0) continue;
                for (int u = 0; u <= j / 2; ++u)
                    bases[i].push_back({static_cast<int>(s), {u, j / 2 - u}});
            }
        std::vector<long> ranks(c.diff.size(), 0);
        for (size_t i = 0; i < c.diff.size(); ++i) {
            if (bases[i].empty() || bases[i + 1].empty()) continue;
            std::map<std::pair<int, std::pair<int, int>>, int> tgt_index;
            for (size_t t = 0; t < bases[i + 1].size(); ++t) tgt_index[bases[i + 1][t]] = static_cast<int>(t);
            std::vector<std::vector<Rat>> m(bases[i + 1].size(), std::vector<Rat>(bases[i].size(), Rat(0)));
            for (size_t col = 0; col < bases[i].size(); ++col) {
                auto [summand, uv] = bases[i][col];
                for (const auto& [rc, e] : c.diff[i]) {
                    if (rc.second != summand) continue;
                    for (const auto& [expo, coef] : e.poly.terms()) {
                        std::pair<int, std::pair<int, int>> key{
                            rc.first,
                            {uv.first + static_cast<int>(expo.as), uv.second + static_cast<int>(expo.at)}};
                        auto it = tgt_index.find(key);
                        if (it == tgt_index.end()) continue;  // outside this slice: impossible if homogeneous
                        Rat v = e.scale * Rat(coef);
                        v.canonicalize();
                        m[it->second][col] += v;
                    }
                }
            }
            ranks[i] = rank_over_q(m);
        }
        for (int i = 0; i < c.num_degrees(); ++i) {
            long dim = static_cast<long>(bases[i].size());
            long rank_out = (i < static_cast<int>(ranks.size())) ? ranks[i] : 0;
            long rank_in = (i > 0) ? ranks[i - 1] : 0;
            long h = dim - rank_out - rank_in;
            if (h != 0) result[{c.min_degree + i, D}] = h;
        }
    }
    return result;
}

} // namespace twocolor
