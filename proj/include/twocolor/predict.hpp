#ifndef TWOCOLOR_PREDICT_HPP
#define TWOCOLOR_PREDICT_HPP

#include <string>
#include <vector>

#include "twocolor/homology.hpp"
#include "twocolor/reduce.hpp"

namespace twocolor {

// Weakly decreasing parts, each part divisible by the next.
using Partition = std::vector<int>;

// All distinguished partitions of k in lexicographically descending order.
// Parts are >= 2 except for the single partition (1) of 1.
std::vector<Partition> distinguished_partitions(int k);

// 2 * (number of parts) - (number of distinct part values)
int partition_weight(const Partition& p);

// A shifted cyclic summand k/(phi_{d_1}, ...)[shift]; its generator sits in
// cohomological degree -shift. Empty generator list = free of rank 1.
struct Summand {
    int shift;
    std::vector<int> gen_indices;  // ascending, duplicates collapsed
    friend bool operator==(const Summand&, const Summand&) = default;
};

struct ModulePresentation {
    std::vector<Summand> summands;
};

// H_1 = k; H_k = sum over distinguished partitions of k/I_lambda[1-|lambda|].
ModulePresentation H_module(int k);

// Predicted cohomology of the antispherical complex for parameter n,
// assembled from the per-B_m contributions (equals the closed-form sum of
// shifted H's for every n >= 2).
ModulePresentation predicted_cohomology(int n);

// Cohomology of the Koszul-cube carrier of a presentation under a
// specialization. Never the naive quotient: each summand contributes the
// full cohomology of its cube.
CohomologyReport specialize_prediction(const ModulePresentation& p, const Specialization& s);

CubeModel cube_model_of(const ModulePresentation& p);

struct DiffEntry {
    int degree;
    std::string expected, got;
};

// Empty result = the reports agree degree by degree.
std::vector<DiffEntry> compare(const CohomologyReport& predicted, const CohomologyReport& computed);

// One line "n,j,cell" per nonzero cell; cell entries are stacked with '|'
// and generator indices joined with ',' ("K" for a free class), e.g.
// "7,5,5|2,4|3".
std::string ext_table_csv(int n_max);

// Layout by rows H_k[shift]: lines "H_k[shift],degree,cell".
std::string h_layout_csv(int n);

} // namespace twocolor

#endif
