#include "twocolor/charzero.hpp"

#include <map>
#include <sstream>

#include "twocolor/qnum.hpp"

namespace twocolor {

RootVector act(std::string_view word, RootVector v, const Realization& r) {
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        if (*it == 's') {
            // alpha_s -> -alpha_s, alpha_t -> alpha_t + [2]_s alpha_s
            v = {r.cartan_s * v.ct - v.cs, v.ct};
        } else if (*it == 't') {
            v = {v.cs, r.cartan_t * v.cs - v.ct};
        } else {
            throw arg_error("act: word letters must be 's' or 't'");
        }
    }
    return v;
}

RootVector root_of_reflection(char side, int length) {
    if (length < 1 || length % 2 == 0) throw arg_error("root_of_reflection: length must be odd >= 1");
    int r = (length - 1) / 2;
    if (side == 's') return {qnum(r + 1, Color::x), qnum(r, Color::y)};
    if (side == 't') return {qnum(r, Color::x), qnum(r + 1, Color::y)};
    throw arg_error("root_of_reflection: side must be 's' or 't'");
}

ArrowCoeff arrow_coefficient(int w_len, char w_letter, char u_letter) {
    if (w_len < 1) throw arg_error("arrow_coefficient: need w_len >= 1");
    int u_len = w_len - 1;
    ArrowCoeff a;
    a.sign = (w_letter == u_letter || u_len == 0) ? ((w_len + 1) % 2 == 0 ? 1 : -1) : 1;
    if (u_len % 2 == 0) {
        int r = u_len / 2;
        Color c = w_letter == 's' ? Color::x : Color::y;
        a.num = r == 0 ? BiPoly::one() : qnum(r, c);
        a.den = r == 0 ? BiPoly::one() : qnum(2 * r, c);
        a.root = root_of_reflection(w_letter, w_len);
    } else {
        int r = (u_len - 1) / 2;
        Color c = u_letter == 's' ? Color::x : Color::y;
        a.num = qnum(r + 1, c);
        a.den = qnum(2 * r + 1, c);
        a.root = root_of_reflection(u_letter == 't' ? 's' : 't', u_len);
    }
    return a;
}

namespace {

GradedEntry make_entry(const ArrowCoeff& a, const Rat& xval, const Rat& yval) {
    std::array<Rat, 4> pt{xval, yval, Rat(0), Rat(0)};
    Rat num = a.num.eval(pt), den = a.den.eval(pt);
    if (den == 0) throw arg_error("quantum number vanishes at the chosen point");
    Rat cs = a.root.cs.eval(pt), ct = a.root.ct.eval(pt);
    // entry = sign * (num/den) * (cs a_s + ct a_t); put the rationals into
    // the scale and keep an integer-coefficient polynomial
    Int ds = cs.get_den(), dt = ct.get_den();
    Int lcm;
    mpz_lcm(lcm.get_mpz_t(), ds.get_mpz_t(), dt.get_mpz_t());
    BiPoly poly = BiPoly::var_as() * Int(cs.get_num() * (lcm / cs.get_den())) +
                  BiPoly::var_at() * Int(ct.get_num() * (lcm / ct.get_den()));
    Rat scale = num / den / Rat(lcm);
    if (a.sign < 0) scale = -scale;
    scale.canonicalize();
    return {poly, scale};
}

} // namespace

GradedComplex build_char0_complex(int n, char start, const Rat& xval, const Rat& yval) {
    if (n < 0) throw arg_error("build_char0_complex: n must be >= 0");
    if (start != 's' && start != 't') throw arg_error("start must be 's' or 't'");
    GradedComplex c;
    c.min_degree = 0;
    c.shifts.resize(n + 1);
    // letters[k]: the tower letter of each summand at cohomological degree k
    std::vector<std::vector<char>> letters(n + 1);
    c.shifts[0] = {-n};
    letters[0] = {start};
    for (int k = 1; k <= n - 1; ++k) {
        c.shifts[k] = {-n + 2 * k, -n + 2 * k};
        letters[k] = {'t', 's'};
    }
    if (n >= 1) {
        c.shifts[n] = {n};
        letters[n] = {'e'};  // the unit
    }
    if (n >= 1) c.diff.resize(n);
    for (int k = 0; k < n; ++k) {
        int w_len = n - k;
        for (size_t src = 0; src < letters[k].size(); ++src) {
            for (size_t tgt = 0; tgt < letters[k + 1].size(); ++tgt) {
                char wl = letters[k][src];
                char ul = letters[k + 1][tgt];
                if (ul == 'e') ul = wl;  // the final dot-arrow behaves as same-letter
                c.diff[k][{static_cast<int>(tgt), static_cast<int>(src)}] =
                    make_entry(arrow_coefficient(w_len, wl, ul), xval, yval);
            }
        }
    }
    return c;
}

namespace {

std::string classify_cell(const std::map<int, long>& dims, int cutoff) {
    if (dims.empty()) return "0";
    // single class of dimension 1
    if (dims.size() == 1 && dims.begin()->second == 1)
        return "K(" + std::to_string(-dims.begin()->first) + ")";
    int d0 = dims.begin()->first;
    // full polynomial ring from degree d0
    bool is_r = true, is_tail = true;
    for (int D = d0; D <= cutoff; D += 2) {
        auto it = dims.find(D);
        long v = it == dims.end() ? 0 : it->second;
        if (v != (D - d0) / 2 + 1) is_r = false;
        if (v != 1) is_tail = false;
    }
    long total = 0;
    for (const auto& [D, v] : dims) {
        if (D < d0 || (D - d0) % 2 != 0) { is_r = false; is_tail = false; }
        total += v;
    }
    if (is_r && d0 == 0) return "R";
    if (is_tail) return "R/A(" + std::to_string(-d0) + ")";
    std::ostringstream out;
    out << "UNCLASSIFIED[";
    for (const auto& [D, v] : dims) out << D << ":" << v << " ";
    out << "]";
    return out.str();
}

} // namespace

ExtTable char0_ext_table(int n_max, int cutoff, const Rat& xval, const Rat& yval) {
    ExtTable t;
    for (int n = 0; n <= n_max; ++n) {
        GradedComplex c = build_char0_complex(n, 't', xval, yval);
        auto dims = graded_field_cohomology(c, cutoff);
        std::vector<std::string> row;
        for (int j = 0; j <= n; ++j) {
            std::map<int, long> cell;
            for (const auto& [key, v] : dims)
                if (key.first == j) cell[key.second] = v;
            row.push_back(classify_cell(cell, cutoff));
        }
        t.cells.push_back(std::move(row));
    }
    return t;
}

std::string ext_table_to_csv(const ExtTable& t) {
    std::ostringstream out;
    for (size_t n = 0; n < t.cells.size(); ++n)
        for (size_t j = 0; j < t.cells[n].size(); ++j)
            if (t.cells[n][j] != "0") out << n << "," << j << "," << t.cells[n][j] << "\n";
    return out.str();
}

} // namespace twocolor
