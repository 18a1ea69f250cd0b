#ifndef TWOCOLOR_QNUM_HPP
#define TWOCOLOR_QNUM_HPP

#include <utility>
#include <vector>

#include "twocolor/poly.hpp"

namespace twocolor {

// x is the s-color, y the t-color.
enum class Color { x, y };
inline Color other(Color c) { return c == Color::x ? Color::y : Color::x; }

// Two-color quantum number [n]_c, with [0] = 0, [1] = 1, [2]_x = x, [2]_y = y
// and [n+1]_c = [2]_c [n]_c' - [n-1]_c.
BiPoly qnum(int n, Color c);

// [n]_c! = [n]_c [n-1]_c ... [1]_c; empty product is 1.
BiPoly qfactorial(int n, Color c);

// Quantum binomial, an exact polynomial; symmetric in k <-> n-k.
// Throws range_error when k is outside [0, n].
BiPoly qbinomial(int n, int k, Color c);

// The product [n][m] expanded as a sum of n quantum numbers centered at m;
// for even n the colors of the two sides swap. True iff the identity holds
// exactly. Requires m >= n >= 1.
bool verify_product_identity(int n, int m, Color c);

// Two-color cyclotomic polynomial, n >= 2. phi_{2,x} = x and phi_{2,y} = y;
// for n > 2 the polynomial is color-independent.
BiPoly cyclotomic(int n, Color c);

// phi_n(2,2) = p when n = p^r for a prime p, and 1 otherwise.
long von_mangoldt_value(int n);

// Exact-division test of qbinomial(n,k,y) by phi_{d,y}. Requires d | n,
// d >= 2, 0 <= k <= n; throws arg_error otherwise.
bool cyclotomic_divides_binomial(int d, int n, int k);

// A pair (a, b) with a*phi_{k,x} + b*phi_{n,x} = 1 exactly.
// Requires 2 <= k < n and k not dividing n (arg_error otherwise); throws
// no_unit_combination if no unit combination is found.
std::pair<BiPoly, BiPoly> cyclotomic_bezout(int k, int n);

// Row n, column k: sorted cyclotomic indices d (with multiplicity) such that
// phi_{d,y}^m | qbinomial(n,k,y).
using PascalRow = std::vector<std::vector<int>>;
std::vector<PascalRow> pascal_triangle(int rows);  // rows 0..rows
std::string pascal_csv(int rows);                  // lines "n,k,factors"

std::vector<int> divisors(int n);  // all divisors >= 1, ascending

} // namespace twocolor

#endif
