#ifndef TWOCOLOR_HOMOLOGY_HPP
#define TWOCOLOR_HOMOLOGY_HPP

#include <map>
#include <string>
#include <vector>

#include "twocolor/dg.hpp"
#include "twocolor/poly.hpp"

namespace twocolor {

using IntMat = std::vector<std::vector<Int>>;

// Nonzero invariant factors d_1 | d_2 | ..., all positive.
std::vector<Int> smith_normal_form(IntMat m);

long rank_over_q(const std::vector<std::vector<Rat>>& m);
long rank_mod_p(const IntMat& m, unsigned long p);

struct AbGroup {
    long free_rank = 0;
    std::vector<Int> torsion;  // invariant factors >= 2, divisibility chain
    bool trivial() const { return free_rank == 0 && torsion.empty(); }
    friend bool operator==(const AbGroup&, const AbGroup&) = default;
    std::string str() const;
};

// Rewrite a list of cyclic orders as an invariant-factor chain.
AbGroup canonical_group(long free_rank, const std::vector<Int>& cyclic_orders);

struct CohomologyReport {
    std::map<int, AbGroup> groups;  // degrees with trivial cohomology absent
    friend bool operator==(const CohomologyReport&, const CohomologyReport&) = default;
    CohomologyReport& merge(const CohomologyReport& o);  // direct sum
    std::string to_json() const;
    std::string str() const;
};

// Specialize a complex's differentials and compute cohomology.
// integral_cohomology requires an integral specialization; field_cohomology
// accepts rationals or F_p and reports dimensions in free_rank.
CohomologyReport integral_cohomology(const DgComplex& c, const Specialization& s);
CohomologyReport field_cohomology(const DgComplex& c, const Specialization& s);

// dim_Fp H^i(C x F_p) = free_i + #{p | d : d in torsion_i} + #{p | d : d in torsion_{i+1}}
bool universal_coefficients_consistent(const CohomologyReport& integral,
                                       const CohomologyReport& mod_p, unsigned long p);

// --- graded complexes of free modules over Q[a_s, a_t] (h* in degree 2) ---

struct GradedEntry {
    BiPoly poly;  // polynomial in a_s, a_t only
    Rat scale;
};

// Term R(m) has its generator in internal degree -m; a matrix entry from
// R(m) to R(m') must be homogeneous of a-degree (m' - m)/2.
struct GradedComplex {
    int min_degree = 0;
    std::vector<std::vector<int>> shifts;  // per cohomological degree: list of m
    std::vector<std::map<std::pair<int, int>, GradedEntry>> diff;
    int num_degrees() const { return static_cast<int>(shifts.size()); }
};

// Dimensions of H^(cohomological degree) in each internal degree D with
// |D| <= cutoff. Throws inhomogeneous_entry on a malformed complex.
std::map<std::pair<int, int>, long> graded_field_cohomology(const GradedComplex& c, int cutoff);

bool graded_d_squared_is_zero(const GradedComplex& c);

} // namespace twocolor

#endif
