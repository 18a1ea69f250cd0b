#ifndef TWOCOLOR_CHARZERO_HPP
#define TWOCOLOR_CHARZERO_HPP

#include <string>
#include <string_view>
#include <vector>

#include "twocolor/homology.hpp"
#include "twocolor/poly.hpp"

namespace twocolor {

// Rank-2 realization, pinned down by the two Cartan values [2]_s and [2]_t
// (generically the variables x and y).
struct Realization {
    BiPoly cartan_s = BiPoly::var_x();
    BiPoly cartan_t = BiPoly::var_y();
};

// c_s * alpha_s + c_t * alpha_t
struct RootVector {
    BiPoly cs, ct;
    friend bool operator==(const RootVector&, const RootVector&) = default;
};

inline RootVector alpha_s() { return {BiPoly::one(), BiPoly::zero()}; }
inline RootVector alpha_t() { return {BiPoly::zero(), BiPoly::one()}; }

// Left action on h^*, letter by letter (rightmost letter first):
// s: alpha_s -> -alpha_s, alpha_t -> alpha_t + [2]_s alpha_s, and dually.
RootVector act(std::string_view word, RootVector v, const Realization& r = {});

// Root of the odd-length reflection in the s- or t-tower:
// alpha_{s_{2r+1}} = [r+1]_s alpha_s + [r]_t alpha_t,
// alpha_{t_{2r+1}} = [r]_s alpha_s + [r+1]_t alpha_t.
RootVector root_of_reflection(char side, int length);

// Dotted Jones-Wenzl coefficient for an arrow w -> u, lengths differing by
// one: a quantum-number fraction times the root of the reflection appearing
// in w but not in u, with the sign of the complex's arrow.
struct ArrowCoeff {
    BiPoly num, den;  // quantum-number fraction
    RootVector root;
    int sign;  // +1 or -1
};
ArrowCoeff arrow_coefficient(int w_len, char w_letter, char u_letter);

// The complex of dotted morphisms out of the length-n minimal complex,
// with x, y specialized so all quantum numbers are invertible:
// degree 0: R(-n); degrees 1..n-1: R(-n+2k)^2 (t-branch first); degree n: R(n).
GradedComplex build_char0_complex(int n, char start, const Rat& xval, const Rat& yval);

// Classified extension table: rows n = 0..n_max, columns j = 0..n,
// each cell one of "0", "R", "K(m)", "R/A(m)" (R modulo one linear form,
// shift m), or "UNCLASSIFIED[...]" (reported, not fatal).
struct ExtTable {
    std::vector<std::vector<std::string>> cells;  // cells[n][j]
};
ExtTable char0_ext_table(int n_max, int cutoff, const Rat& xval = Rat(2), const Rat& yval = Rat(2));
std::string ext_table_to_csv(const ExtTable& t);

} // namespace twocolor

#endif
