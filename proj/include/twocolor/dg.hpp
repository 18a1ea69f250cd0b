#ifndef TWOCOLOR_DG_HPP
#define TWOCOLOR_DG_HPP

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "twocolor/poly.hpp"

namespace twocolor {

// Generators of the reduced dg-algebra: rho_k (s-side) and beta_k (t-side),
// both of cohomological degree 1-2k. Index 0 is the unit and never appears
// inside a monomial word.
enum class GenColor { rho, beta };

struct Generator {
    GenColor color;
    int k;
    friend auto operator<=>(const Generator&, const Generator&) = default;
};

using GenMonomial = std::vector<Generator>;

int monomial_degree(const GenMonomial& m);  // sum of (1 - 2k)
int monomial_total(const GenMonomial& m);   // sum of k
bool monomial_less(const GenMonomial& a, const GenMonomial& b);  // composition lex

// rho_k -> s t s ... (2k-1 letters), beta_k -> t s t ..., concatenated.
std::string associated_word(const GenMonomial& m);

// "213" for beta_2 beta_1 beta_3 (dot-separated when a part exceeds 9),
// "r2b1" for mixed words, "1" for the empty monomial.
std::string monomial_label(const GenMonomial& m);

// u is a (not necessarily contiguous) subsequence of w
bool is_subword(std::string_view u, std::string_view w);

// alternating word of given length starting with 's' (or 't')
std::string alternating_word(char first, int length);

using DiffTerm = std::pair<BiPoly, GenMonomial>;

// Differential of a single generator. In the antispherical quotient
// (rho = 0, positive-degree coefficients killed) only beta generators are
// allowed and only the beta-beta terms survive.
std::vector<DiffTerm> diff_generator(const Generator& g, bool antispherical);

// Extension of the differential to words; the sign of the term obtained by
// differentiating the j-th factor is (-1)^(number of generators to its left).
std::vector<DiffTerm> diff_monomial(const GenMonomial& m, bool antispherical);

// Sparse matrix, entry (row = target index, col = source index).
using SparseMat = std::map<std::pair<int, int>, BiPoly>;

struct DgComplex {
    int min_degree = 0;
    std::vector<std::vector<std::string>> basis;   // one list per degree
    std::vector<std::vector<GenMonomial>> monos;   // parallel to basis; may be empty
    std::vector<SparseMat> diff;                   // diff[i]: degree (min+i) -> (min+i+1)

    int num_degrees() const { return static_cast<int>(basis.size()); }
    int max_degree() const { return min_degree + num_degrees() - 1; }
    int index_of_degree(int d) const { return d - min_degree; }
    long total_rank() const;
    long euler_characteristic() const;  // sum over degrees of (-1)^d rank_d

    std::string to_dot() const;
    std::string to_json() const;
};

// The reduced dg-module of the Wakimoto sheaf W_{-n}: all monomials whose
// associated word is a subword of the alternating word of length 2n.
// Antispherical: beta-only monomials, rho and the coefficients a_s, a_t
// set to zero.
DgComplex build_tilde_C(int n, bool antispherical);

// Truncation of the free dg-algebra itself: every monomial in both letters
// with total parameter at most max_total, over Z[x,y,a_s,a_t].
DgComplex build_gamma_truncation(int max_total);

// Split an antispherical complex into the summands B_m, m = 0..n.
std::vector<DgComplex> split_B(const DgComplex& c);

bool check_d_squared(const DgComplex& c);

} // namespace twocolor

#endif
