#include "twocolor/qnum.hpp"

#include <mutex>
#include <sstream>

namespace twocolor {

namespace {

std::mutex memo_mutex;

// memo[color][n]
std::vector<BiPoly>& qnum_memo(Color c) {
    static std::vector<BiPoly> mx, my;
    return c == Color::x ? mx : my;
}

std::vector<BiPoly>& qfact_memo(Color c) {
    static std::vector<BiPoly> mx, my;
    return c == Color::x ? mx : my;
}

std::vector<BiPoly>& cyclo_memo(Color c) {
    static std::vector<BiPoly> mx, my;
    return c == Color::x ? mx : my;
}

BiPoly qnum_nolock(int n, Color c) {
    auto& mx = qnum_memo(Color::x);
    auto& my = qnum_memo(Color::y);
    if (mx.empty()) {
        mx = {BiPoly::zero(), BiPoly::one(), BiPoly::var_x()};
        my = {BiPoly::zero(), BiPoly::one(), BiPoly::var_y()};
    }
    while (static_cast<int>(mx.size()) <= n) {
        int m = static_cast<int>(mx.size());  // computing [m]
        mx.push_back(BiPoly::var_x() * my[m - 1] - mx[m - 2]);
        my.push_back(BiPoly::var_y() * mx[m - 1] - my[m - 2]);
    }
    return (c == Color::x ? mx : my)[n];
}

} // namespace

BiPoly qnum(int n, Color c) {
    if (n < 0) throw range_error("qnum: n must be >= 0");
    std::lock_guard<std::mutex> lock(memo_mutex);
    return qnum_nolock(n, c);
}

BiPoly qfactorial(int n, Color c) {
    if (n < 0) throw range_error("qfactorial: n must be >= 0");
    std::lock_guard<std::mutex> lock(memo_mutex);
    auto& m = qfact_memo(c);
    if (m.empty()) m = {BiPoly::one()};
    while (static_cast<int>(m.size()) <= n)
        m.push_back(m.back() * qnum_nolock(static_cast<int>(m.size()), c));
    return m[n];
}

BiPoly qbinomial(int n, int k, Color c) {
    if (n < 0 || k < 0 || k > n)
        throw range_error("qbinomial: need 0 <= k <= n");
    return qfactorial(n, c).exact_div(qfactorial(k, c) * qfactorial(n - k, c));
}

bool verify_product_identity(int n, int m, Color c) {
    if (n < 1 || m < n) throw arg_error("verify_product_identity: need m >= n >= 1");
    BiPoly lhs, rhs;
    if (n % 2 == 1) {
        lhs = qnum(n, c) * qnum(m, c);
        for (int k = 1; k <= n; ++k) rhs += qnum(m - n + 2 * k - 1, c);
    } else {
        lhs = qnum(n, other(c)) * qnum(m, c);
        for (int k = 1; k <= n; ++k) rhs += qnum(m - n + 2 * k - 1, other(c));
    }
    return lhs == rhs;
}

std::vector<int> divisors(int n) {
    std::vector<int> d;
    for (int i = 1; i <= n; ++i)
        if (n % i == 0) d.push_back(i);
    return d;
}

BiPoly cyclotomic(int n, Color c) {
    if (n < 2) throw range_error("cyclotomic: n must be >= 2");
    std::lock_guard<std::mutex> lock(memo_mutex);
    auto& m = cyclo_memo(c);
    if (m.size() < 3) {
        m.resize(3);
        m[2] = c == Color::x ? BiPoly::var_x() : BiPoly::var_y();
    }
    if (static_cast<int>(m.size()) > n && !m[n].is_zero()) return m[n];
    for (int v = 3; v <= n; ++v) {
        if (static_cast<int>(m.size()) > v && !m[v].is_zero()) continue;
        BiPoly prod = BiPoly::one();
        for (int d = 2; d < v; ++d)
            if (v % d == 0) prod *= m[d];
        if (static_cast<int>(m.size()) <= v) m.resize(v + 1);
        m[v] = qnum_nolock(v, c).exact_div(prod);
    }
    return m[n];
}

long von_mangoldt_value(int n) {
    if (n < 2) throw range_error("von_mangoldt_value: n must be >= 2");
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            long m = n;
            while (m % p == 0) m /= p;
            return m == 1 ? p : 1;
        }
    }
    return n;  // prime
}

bool cyclotomic_divides_binomial(int d, int n, int k) {
    if (d < 2 || n % d != 0) throw arg_error("cyclotomic_divides_binomial: need d >= 2 and d | n");
    if (k < 0 || k > n) throw arg_error("cyclotomic_divides_binomial: need 0 <= k <= n");
    return qbinomial(n, k, Color::y).divided_by(cyclotomic(d, Color::y)).has_value();
}

namespace {

// phi_n for n >= 3 is a polynomial in t = xy; its coefficient vector.
std::vector<Int> as_poly_in_t(const BiPoly& p) {
    std::vector<Int> c;
    for (const auto& [e, v] : p.terms()) {
        if (e.x != e.y || e.as != 0 || e.at != 0)
            throw arg_error("polynomial is not a polynomial in xy");
        if (c.size() <= e.x) c.resize(e.x + 1);
        c[e.x] = v;
    }
    return c;
}

BiPoly from_poly_in_t(const std::vector<Int>& c) {
    BiPoly p;
    for (std::uint32_t i = 0; i < c.size(); ++i)
        p += BiPoly::monomial(Expo{i, i, 0, 0}, c[i]);
    return p;
}

using QPoly = std::vector<Rat>;  // univariate over Q, c[i] * t^i

void qtrim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly qsub(QPoly a, const QPoly& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    qtrim(a);
    return a;
}

QPoly qmul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    qtrim(r);
    return r;
}

// division with remainder over Q[t]
std::pair<QPoly, QPoly> qdivmod(QPoly a, const QPoly& b) {
    QPoly q;
    while (a.size() >= b.size() && !a.empty()) {
        Rat f = a.back() / b.back();
        size_t shift = a.size() - b.size();
        if (q.size() < shift + 1) q.resize(shift + 1, Rat(0));
        q[shift] += f;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        qtrim(a);
    }
    qtrim(q);
    return {q, a};
}

} // namespace

std::pair<BiPoly, BiPoly> cyclotomic_bezout(int k, int n) {
    if (k < 2 || k >= n) throw arg_error("cyclotomic_bezout: need 2 <= k < n");
    if (n % k == 0) throw arg_error("cyclotomic_bezout: need k not dividing n");
    BiPoly pk = cyclotomic(k, Color::x);
    BiPoly pn = cyclotomic(n, Color::x);
    if (k == 2) {
        // phi_{2,x} = x; phi_n is a polynomial in xy with unit constant term
        std::vector<Int> cn = as_poly_in_t(pn);
        Int c0 = cn.empty() ? Int(0) : cn[0];
        if (c0 != 1 && c0 != -1)
            throw no_unit_combination("constant term of phi_" + std::to_string(n) + " is not a unit");
        BiPoly b(c0);  // b = 1/c0 = c0
        BiPoly a = (BiPoly::one() - b * pn).exact_div(BiPoly::var_x());
        return {a, b};
    }
    // both in Z[t], t = xy; extended Euclid over Q[t]
    std::vector<Int> ck = as_poly_in_t(pk), cn = as_poly_in_t(pn);
    QPoly fk(ck.size()), fn(cn.size());
    for (size_t i = 0; i < ck.size(); ++i) fk[i] = Rat(ck[i]);
    for (size_t i = 0; i < cn.size(); ++i) fn[i] = Rat(cn[i]);
    // invariants: r0 = s0*fk + t0*fn, r1 = s1*fk + t1*fn
    QPoly r0 = fk, r1 = fn, s0 = {Rat(1)}, s1 = {}, t0 = {}, t1 = {Rat(1)};
    while (!r1.empty()) {
        auto [q, r] = qdivmod(r0, r1);
        QPoly s2 = qsub(s0, qmul(q, s1));
        QPoly t2 = qsub(t0, qmul(q, t1));
        r0 = r1; r1 = r;
        s0 = s1; s1 = s2;
        t0 = t1; t1 = t2;
    }
    if (r0.size() != 1)
        throw no_unit_combination("gcd of phi_" + std::to_string(k) + ", phi_" + std::to_string(n) +
                                  " over Q[t] is non-constant");
    Rat g = r0[0];
    for (auto& v : s0) v /= g;
    // minimal-degree solution: reduce s0 mod fn; integral because both phis
    // are monic and the pair is comaximal over Z[t]
    s0 = qdivmod(s0, fn).second;
    std::vector<Int> ai(s0.size());
    for (size_t i = 0; i < s0.size(); ++i) {
        Rat v = s0[i];
        v.canonicalize();
        if (v.get_den() != 1)
            throw no_unit_combination("no integral Bezout witness for phi_" + std::to_string(k) +
                                      ", phi_" + std::to_string(n));
        ai[i] = v.get_num();
    }
    BiPoly a = from_poly_in_t(ai);
    BiPoly b = (BiPoly::one() - a * pk).exact_div(pn);
    if (!(a * pk + b * pn).is_one())
        throw no_unit_combination("Bezout verification failed");
    return {a, b};
}

std::vector<PascalRow> pascal_triangle(int rows) {
    if (rows < 1) throw arg_error("pascal_triangle: rows must be >= 1");
    std::vector<PascalRow> table;
    for (int n = 0; n <= rows; ++n) {
        PascalRow row;
        for (int k = 0; k <= n; ++k) {
            std::vector<int> factors;
            BiPoly b = qbinomial(n, k, Color::y);
            for (int d = 2; d <= n; ++d) {
                BiPoly phi = cyclotomic(d, Color::y);
                for (;;) {
                    auto q = b.divided_by(phi);
                    if (!q) break;
                    b = *q;
                    factors.push_back(d);
                }
            }
            row.push_back(std::move(factors));
        }
        table.push_back(std::move(row));
    }
    return table;
}

std::string pascal_csv(int rows) {
    auto table = pascal_triangle(rows);
    std::ostringstream out;
    for (int n = 0; n < static_cast<int>(table.size()); ++n) {
        for (int k = 0; k <= n; ++k) {
            out << n << "," << k << ",";
            const auto& f = table[n][k];
            for (size_t i = 0; i < f.size(); ++i) {
                if (i) out << " ";
                out << f[i];
            }
            out << "\n";
        }
    }
    return out.str();
}

} // namespace twocolor
