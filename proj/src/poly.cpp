#include "twocolor/poly.hpp"

#include <cctype>
#include <sstream>

namespace twocolor {

BiPoly BiPoly::monomial(const Expo& e, Int c) {
    BiPoly p;
    if (c != 0) p.terms_[e] = std::move(c);
    return p;
}

bool BiPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == Expo{} && terms_.begin()->second == 1;
}

std::optional<Int> BiPoly::as_constant() const {
    if (terms_.empty()) return Int(0);
    if (terms_.size() == 1 && terms_.begin()->first == Expo{}) return terms_.begin()->second;
    return std::nullopt;
}

bool BiPoly::is_unit() const {
    auto c = as_constant();
    return c && (*c == 1 || *c == -1);
}

int BiPoly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e.total()));
    return d;
}

void BiPoly::add_term(const Expo& e, const Int& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

BiPoly BiPoly::operator-() const {
    BiPoly r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

BiPoly BiPoly::operator+(const BiPoly& o) const { BiPoly r = *this; r += o; return r; }
BiPoly BiPoly::operator-(const BiPoly& o) const { BiPoly r = *this; r -= o; return r; }

BiPoly BiPoly::operator*(const BiPoly& o) const {
    BiPoly r;
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) r.add_term(ea + eb, ca * cb);
    return r;
}

BiPoly BiPoly::operator*(const Int& c) const {
    BiPoly r;
    if (c == 0) return r;
    for (const auto& [e, k] : terms_) r.terms_[e] = k * c;
    return r;
}

namespace {
bool expo_leq(const Expo& a, const Expo& b) {
    return a.x <= b.x && a.y <= b.y && a.as <= b.as && a.at <= b.at;
}
Expo expo_sub(const Expo& a, const Expo& b) {
    return {a.x - b.x, a.y - b.y, a.as - b.as, a.at - b.at};
}
} // namespace

std::optional<BiPoly> BiPoly::divided_by(const BiPoly& b) const {
    if (b.is_zero()) throw arg_error("division by the zero polynomial");
    BiPoly rem = *this, q;
    const auto& [eb, cb] = *b.terms_.rbegin();  // leading term in lex order
    while (!rem.is_zero()) {
        const auto& [er, cr] = *rem.terms_.rbegin();
        if (!expo_leq(eb, er)) return std::nullopt;
        Int qc, r;
        mpz_fdiv_qr(qc.get_mpz_t(), r.get_mpz_t(), cr.get_mpz_t(), cb.get_mpz_t());
        if (r != 0) return std::nullopt;
        BiPoly t = monomial(expo_sub(er, eb), qc);
        q += t;
        rem -= t * b;
    }
    return q;
}

BiPoly BiPoly::exact_div(const BiPoly& b) const {
    auto q = divided_by(b);
    if (!q) throw not_divisible("(" + str() + ") is not divisible by (" + b.str() + ")");
    return *q;
}

Int BiPoly::eval(const std::array<Int, 4>& v) const {
    Int acc = 0, t, pw;
    for (const auto& [e, c] : terms_) {
        t = c;
        const std::uint32_t es[4] = {e.x, e.y, e.as, e.at};
        for (int i = 0; i < 4; ++i) {
            if (es[i] == 0) continue;
            mpz_pow_ui(pw.get_mpz_t(), v[i].get_mpz_t(), es[i]);
            t *= pw;
        }
        acc += t;
    }
    return acc;
}

Rat BiPoly::eval(const std::array<Rat, 4>& v) const {
    Rat acc = 0;
    for (const auto& [e, c] : terms_) {
        Rat t(c);
        const std::uint32_t es[4] = {e.x, e.y, e.as, e.at};
        for (int i = 0; i < 4; ++i)
            for (std::uint32_t j = 0; j < es[i]; ++j) t *= v[i];
        acc += t;
    }
    acc.canonicalize();
    return acc;
}

std::string BiPoly::str() const {
    if (terms_.empty()) return "0";
    static const char* names[4] = {"x", "y", "as", "at"};
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Int a = c;
        if (a < 0) {
            out << "-";
            a = -a;
        } else if (!first) {
            out << "+";
        }
        first = false;
        const std::uint32_t es[4] = {e.x, e.y, e.as, e.at};
        bool has_var = e.total() > 0;
        bool printed = false;
        if (a != 1 || !has_var) {
            out << a.get_str();
            printed = true;
        }
        for (int i = 0; i < 4; ++i) {
            if (es[i] == 0) continue;
            if (printed) out << "*";
            out << names[i];
            if (es[i] > 1) out << "^" << es[i];
            printed = true;
        }
    }
    return out.str();
}

namespace {
struct Cursor {
    std::string_view s;
    size_t i = 0;
    void skip_ws() { while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i; }
    bool done() { skip_ws(); return i >= s.size(); }
    char peek() { skip_ws(); return i < s.size() ? s[i] : '\0'; }
};
} // namespace

BiPoly BiPoly::parse(std::string_view sv) {
    Cursor c{sv};
    BiPoly result;
    bool expect_term = true;
    int sign = 1;
    while (!c.done()) {
        char ch = c.peek();
        if (ch == '+' || ch == '-') {
            if (ch == '-') sign = -sign;
            ++c.i;
            expect_term = true;
            continue;
        }
        if (!expect_term) throw parse_error("unexpected token in polynomial: " + std::string(sv));
        // one term: optional integer, then factors separated by optional '*'
        Int coef = 1;
        Expo e;
        bool any = false;
        for (;;) {
            ch = c.peek();
            if (std::isdigit(static_cast<unsigned char>(ch))) {
                size_t j = c.i;
                while (j < sv.size() && std::isdigit(static_cast<unsigned char>(sv[j]))) ++j;
                coef *= Int(std::string(sv.substr(c.i, j - c.i)));
                c.i = j;
                any = true;
            } else if (ch == 'x' || ch == 'y' || ch == 'a') {
                int var;
                if (ch == 'x') { var = 0; ++c.i; }
                else if (ch == 'y') { var = 1; ++c.i; }
                else {
                    if (c.i + 1 >= sv.size()) throw parse_error("dangling 'a' in: " + std::string(sv));
                    char nx = sv[c.i + 1];
                    if (nx == 's') var = 2;
                    else if (nx == 't') var = 3;
                    else throw parse_error("unknown variable in: " + std::string(sv));
                    c.i += 2;
                }
                std::uint32_t exp = 1;
                if (c.peek() == '^') {
                    ++c.i;
                    c.skip_ws();
                    size_t j = c.i;
                    while (j < sv.size() && std::isdigit(static_cast<unsigned char>(sv[j]))) ++j;
                    if (j == c.i) throw parse_error("missing exponent in: " + std::string(sv));
                    exp = static_cast<std::uint32_t>(std::stoul(std::string(sv.substr(c.i, j - c.i))));
                    c.i = j;
                }
                std::uint32_t* slots[4] = {&e.x, &e.y, &e.as, &e.at};
                *slots[var] += exp;
                any = true;
            } else {
                break;
            }
            if (c.peek() == '*') { ++c.i; continue; }
        }
        if (!any) throw parse_error("empty term in polynomial: " + std::string(sv));
        result.add_term(e, sign * coef);
        sign = 1;
        expect_term = false;
    }
    if (expect_term && !result.is_zero()) throw parse_error("trailing sign in: " + std::string(sv));
    return result;
}

Specialization Specialization::integers_at(long x, long y, long as, long at) {
    Specialization s;
    s.target = Ring::integers;
    s.values = {Rat(x), Rat(y), Rat(as), Rat(at)};
    return s;
}

Specialization Specialization::mod_p_at(unsigned long p, long x, long y, long as, long at) {
    Specialization s;
    s.target = Ring::mod_p;
    s.p = p;
    s.values = {Rat(x), Rat(y), Rat(as), Rat(at)};
    s.validate();
    return s;
}

Specialization Specialization::rationals_at(const Rat& x, const Rat& y, const Rat& as, const Rat& at) {
    Specialization s;
    s.target = Ring::rationals;
    s.values = {x, y, as, at};
    for (auto& v : s.values) v.canonicalize();
    return s;
}

void Specialization::validate() const {
    if (target == Ring::mod_p) {
        Int pp(static_cast<unsigned long>(p));
        if (p < 2 || mpz_probab_prime_p(pp.get_mpz_t(), 30) == 0)
            throw arg_error("modulus must be prime, got " + std::to_string(p));
    }
    if (target != Ring::rationals) {
        for (const auto& v : values)
            if (v.get_den() != 1) throw arg_error("non-integer value for an integral target");
    }
}

std::array<Int, 4> Specialization::int_values() const {
    std::array<Int, 4> r;
    for (int i = 0; i < 4; ++i) {
        if (values[i].get_den() != 1) throw arg_error("non-integer specialization value");
        r[i] = values[i].get_num();
    }
    return r;
}

std::string Specialization::describe() const {
    std::ostringstream out;
    switch (target) {
        case Ring::integers: out << "Z"; break;
        case Ring::mod_p: out << "F" << p; break;
        case Ring::rationals: out << "Q"; break;
    }
    out << " at (";
    for (int i = 0; i < 4; ++i) {
        if (i) out << ",";
        out << values[i];
    }
    out << ")";
    return out.str();
}

Int specialize_int(const BiPoly& a, const Specialization& s) {
    return a.eval(s.int_values());
}

unsigned long specialize_mod(const BiPoly& a, const Specialization& s) {
    s.validate();
    Int v = a.eval(s.int_values());
    Int m = v % Int(s.p);
    if (m < 0) m += Int(s.p);
    return m.get_ui();
}

Rat specialize_rat(const BiPoly& a, const Specialization& s) {
    return a.eval(s.values);
}

} // namespace twocolor
