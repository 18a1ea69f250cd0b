#ifndef TWOCOLOR_REDUCE_HPP
#define TWOCOLOR_REDUCE_HPP

#include <string>
#include <vector>

#include "twocolor/dg.hpp"
#include "twocolor/poly.hpp"

namespace twocolor {

// Unnormalized fraction of polynomials; equality by cross-multiplication.
struct Frac {
    BiPoly num = BiPoly::zero();
    BiPoly den = BiPoly::one();
    bool is_zero() const { return num.is_zero(); }
    Frac operator*(const Frac& o) const { return {num * o.num, den * o.den}; }
    Frac operator-() const { return {-num, den}; }
    Frac operator+(const Frac& o) const { return {num * o.den + o.num * den, den * o.den}; }
    bool equals(const Frac& o) const { return num * o.den == o.num * den; }
    bool is_one() const { return num == den; }
};

// Eliminate one contractible pair: the pivot entry (row, col) of the
// differential out of `degree` must be +1 or -1 (not_a_unit otherwise).
// The result has that source and target basis element removed and the
// remaining differential corrected by  a - b phi^{-1} c.
DgComplex gaussian_eliminate(const DgComplex& c, int degree, int row, int col);

// One factor of a monomial in the gamma basis: gamma_k^+ = beta_k (sign +1),
// gamma_k^- = sum_i ([k;i]/[k]) beta_i beta_{k-i} (sign -1), or gamma_1
// (sign 0, k = 1).
struct GammaFactor {
    int k;
    int sign;
    friend auto operator<=>(const GammaFactor&, const GammaFactor&) = default;
};
using GammaMonomial = std::vector<GammaFactor>;

int gamma_degree(const GammaMonomial& m);
std::string gamma_label(const GammaMonomial& m);  // e.g. "2+4-" or "3+1"
std::vector<int> gamma_parts(const GammaMonomial& m);

// Expansion of a gamma monomial in the beta-monomial basis.
std::vector<std::pair<Frac, GenMonomial>> gamma_expansion(const GammaMonomial& m);

struct GammaComplex {
    int total = 0;  // the parameter m of B_m
    int min_degree = 0;
    std::vector<std::vector<GammaMonomial>> basis;
    std::vector<std::map<std::pair<int, int>, BiPoly>> diff;  // entries are +-[k]
};

// Rewrite B_m in the gamma basis. Checks, exactly:
//  - the gamma monomials are in bijection with the beta basis via leading terms
//    and the change of basis is unitriangular,
//  - the differential computed through the expansion agrees with
//    d(gamma_k^+) = [k] gamma_k^-, d(gamma_k^-) = 0, d(gamma_1) = 0.
GammaComplex gamma_transform(const DgComplex& B_m);

// One summand per composition signature (the k's, with or without the
// trailing gamma_1).
std::vector<GammaComplex> block_decompose(const GammaComplex& g);

// Rescale a block's basis by prod_d [d]^{r_d} / prod_d phi_d^{w_d + r_d},
// where r_d counts gamma_d^- factors and w_d is the d-weight: the maximal
// number of disjoint adjacent pairs (gamma_d^+, gamma_m^pm) with d | m,
// the equal-index pair with minus sign excluded. All entries land in
// Z[x,y] (non_integral_after_rescale otherwise), each a unit or a single
// cyclotomic up to sign.
DgComplex rescale_block(const GammaComplex& block);

// Koszul cube on a list of polynomials, final corner in degree top_degree.
DgComplex cube_complex(const std::vector<BiPoly>& gens, int top_degree);

struct CubePiece {
    int top_degree;
    std::vector<int> gen_indices;  // distinct cyclotomic indices, ascending; empty = free rank 1
    std::vector<BiPoly> gens;
};

struct CubeModel {
    std::vector<CubePiece> pieces;
    long rank_in_degree(int d) const;
    long euler_characteristic() const;
};

// The predicted homotopy-type carrier of the antispherical complex: one
// Koszul cube per distinguished partition per shift, plus the two free
// rank-1 pieces in degrees 0 and -1.
CubeModel cube_model(int n);

} // namespace twocolor

#endif
