#ifndef TWOCOLOR_POLY_HPP
#define TWOCOLOR_POLY_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "twocolor/errors.hpp"

namespace twocolor {

using Int = mpz_class;
using Rat = mpq_class;

// Exponent vector for the four fixed variables x, y, a_s, a_t.
struct Expo {
    std::uint32_t x = 0, y = 0, as = 0, at = 0;
    friend auto operator<=>(const Expo&, const Expo&) = default;
    Expo operator+(const Expo& o) const { return {x + o.x, y + o.y, as + o.as, at + o.at}; }
    std::uint32_t total() const { return x + y + as + at; }
};

// Exact polynomial in Z[x, y, a_s, a_t], canonical form: no zero coefficients.
class BiPoly {
public:
    BiPoly() = default;
    explicit BiPoly(long c) { if (c != 0) terms_[Expo{}] = c; }
    explicit BiPoly(Int c) { if (c != 0) terms_[Expo{}] = std::move(c); }

    static BiPoly zero() { return BiPoly(); }
    static BiPoly one() { return BiPoly(1); }
    static BiPoly var_x() { return monomial(Expo{1, 0, 0, 0}, 1); }
    static BiPoly var_y() { return monomial(Expo{0, 1, 0, 0}, 1); }
    static BiPoly var_as() { return monomial(Expo{0, 0, 1, 0}, 1); }
    static BiPoly var_at() { return monomial(Expo{0, 0, 0, 1}, 1); }
    static BiPoly monomial(const Expo& e, Int c);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    // the constant value if the polynomial is constant
    std::optional<Int> as_constant() const;
    bool is_unit() const;  // +1 or -1

    const std::map<Expo, Int>& terms() const { return terms_; }
    int total_degree() const;  // -1 for the zero polynomial

    BiPoly operator-() const;
    BiPoly operator+(const BiPoly& o) const;
    BiPoly operator-(const BiPoly& o) const;
    BiPoly operator*(const BiPoly& o) const;
    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    BiPoly& operator*=(const BiPoly& o) { *this = *this * o; return *this; }
    BiPoly operator*(const Int& c) const;
    friend bool operator==(const BiPoly&, const BiPoly&) = default;

    // Exact quotient, or nullopt when none exists.
    std::optional<BiPoly> divided_by(const BiPoly& b) const;
    // Exact quotient; throws not_divisible.
    BiPoly exact_div(const BiPoly& b) const;

    // Evaluation at a point, one slot per variable (x, y, a_s, a_t).
    Int eval(const std::array<Int, 4>& v) const;
    Rat eval(const std::array<Rat, 4>& v) const;

    // Canonical text form: terms in lexicographically descending exponent
    // order, unit exponents and coefficients elided, e.g. "x^2*y^2-3*x*y+1".
    std::string str() const;
    static BiPoly parse(std::string_view s);  // accepts the same grammar

private:
    std::map<Expo, Int> terms_;
    void add_term(const Expo& e, const Int& c);
};

inline BiPoly operator*(const Int& c, const BiPoly& p) { return p * c; }

enum class Ring { integers, mod_p, rationals };

// Assignment of values to (x, y, a_s, a_t) together with a target ring.
struct Specialization {
    Ring target = Ring::integers;
    std::array<Rat, 4> values{};  // x, y, a_s, a_t
    unsigned long p = 0;          // prime, used when target == mod_p

    static Specialization integers_at(long x, long y, long as = 0, long at = 0);
    static Specialization mod_p_at(unsigned long p, long x, long y, long as = 0, long at = 0);
    static Specialization rationals_at(const Rat& x, const Rat& y,
                                       const Rat& as = Rat(0), const Rat& at = Rat(0));
    void validate() const;  // arg_error on non-prime p or non-integer values for Z/F_p
    std::array<Int, 4> int_values() const;
    std::string describe() const;
};

// Images of a polynomial in the target ring.
Int specialize_int(const BiPoly& a, const Specialization& s);
unsigned long specialize_mod(const BiPoly& a, const Specialization& s);
Rat specialize_rat(const BiPoly& a, const Specialization& s);

} // namespace twocolor

#endif
