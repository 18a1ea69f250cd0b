#ifndef TWOCOLOR_SHRUB_HPP
#define TWOCOLOR_SHRUB_HPP

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "twocolor/errors.hpp"

namespace twocolor {

// red = the s-color, blue = the t-color
enum class SColor { red, blue };
inline SColor other(SColor c) { return c == SColor::red ? SColor::blue : SColor::red; }
inline char letter(SColor c) { return c == SColor::red ? 's' : 't'; }

struct Shrub;

// A sequence of shrubs; the empty shrubbery is the trivial basis element.
struct Shrubbery {
    std::vector<Shrub> shrubs;
};

// A dot, or an arch with k >= 1 slots, each slot a shrubbery whose shrubs
// all have the opposite color.
struct Shrub {
    SColor color;
    std::vector<Shrubbery> slots;  // empty = dot
    bool is_dot() const { return slots.empty(); }
};

bool operator==(const Shrub& a, const Shrub& b);
bool operator==(const Shrubbery& a, const Shrubbery& b);
inline bool operator!=(const Shrub& a, const Shrub& b) { return !(a == b); }
inline bool operator!=(const Shrubbery& a, const Shrubbery& b) { return !(a == b); }

// arbitrary structural total order, for use as a container key only
// (the domain partial order is order_leq below)
struct StructuralLess {
    bool operator()(const Shrub& a, const Shrub& b) const;
    bool operator()(const Shrubbery& a, const Shrubbery& b) const;
};

int length(const Shrub& s);
int length(const Shrubbery& l);
std::string word(const Shrub& s);
std::string word(const Shrubbery& l);

// bracket-string form: dots "r"/"b", arches "R(..|..)" / "B(..|..)"
std::string serialize(const Shrubbery& l);
Shrubbery parse_shrubbery(std::string_view text);

// word together with the decorated 01-sequence, entries U1/U0/D1/D0
std::pair<std::string, std::vector<std::string>> to_word_and_sequence(const Shrubbery& l);

struct Predicates {
    bool complete = false;
    bool well_tended = false;
    int stem_count = 0;
};
Predicates predicates(const Shrubbery& l);
int stem_count(const Shrubbery& l);

// every shrubbery of the exact length; blue_only keeps those whose top-level
// shrubs are all blue; basis_only forbids empty arch slots
std::vector<Shrubbery> enumerate_exact(int len, bool blue_only, bool basis_only);

// every shrubbery whose word is a subword of the given word
std::vector<Shrubbery> enumerate_subword_shrubs(std::string_view w, bool blue_only, bool basis_only);

// complete shrubberies only (each shrub's word alternates), exact length
std::vector<Shrubbery> enumerate_complete(int len);

// uproot the leftmost outer stem (no_stem when well-tended)
Shrubbery uproot_leftmost(const Shrubbery& l);

// uproot the stems with the given reading-order indices, in one pass
Shrubbery uproot_subset(const Shrubbery& l, const std::set<int>& stems);

using ShrubberySet = std::set<Shrubbery, StructuralLess>;

struct EFClasses {
    ShrubberySet e, f;                                   // deduplicated
    std::vector<std::pair<Shrubbery, Shrubbery>> pairs;  // u : E -> F
};
// requires l complete and not well-tended
EFClasses ef_classes(const Shrubbery& l);

// the recursive partial order; length_mismatch unless lengths agree
bool order_leq(const Shrubbery& a, const Shrubbery& b);

// Euler characteristic of the blue basis shrubberies with word inside the
// alternating word of length 2n equals that of the beta-monomial model.
bool euler_check(int n);

} // namespace twocolor

#endif
