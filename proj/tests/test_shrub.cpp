#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <vector>

#include "twocolor/shrub.hpp"

using namespace twocolor;

namespace {

// Independent oracle: count decorated 01-sequences (words over
// {U1,U0,D0,D1} x {red,blue}) that assemble into a shrubbery, by direct
// search over the dictionary ( = U1, dot = U0, | = D0, ) = D1.
enum Sym { U1, U0, D0, D1 };

long count_sequences(int len, bool blue_only, bool basis_only) {
    long count = 0;
    std::vector<SColor> stack;
    Sym prev = D1;
    auto rec = [&](auto&& self, int remaining, Sym prev_sym) -> void {
        if (remaining == 0) {
            if (stack.empty()) ++count;
            return;
        }
        // open a new shrub (U1 or U0) in the current slot
        std::vector<SColor> starts;
        if (stack.empty())
            starts = blue_only ? std::vector<SColor>{SColor::blue}
                               : std::vector<SColor>{SColor::red, SColor::blue};
        else
            starts = {other(stack.back())};
        for (SColor c : starts) {
            stack.push_back(c);
            self(self, remaining - 1, U1);
            stack.pop_back();
            self(self, remaining - 1, U0);  // a dot of color c
        }
        if (!stack.empty()) {
            bool empty_slot = prev_sym == U1 || prev_sym == D0;
            if (!basis_only || !empty_slot) {
                // separator of the open arch
                stack.push_back(stack.back());
                stack.pop_back();
                self(self, remaining - 1, D0);
                // close the open arch
                SColor c = stack.back();
                stack.pop_back();
                self(self, remaining - 1, D1);
                stack.push_back(c);
            }
        }
    };
    (void)prev;
    rec(rec, len, D1);
    return count;
}

} // namespace

TEST_CASE("basic structure and lengths") {
    Shrubbery blue_dot = parse_shrubbery("b");
    CHECK(length(blue_dot) == 1);
    CHECK(word(blue_dot) == "t");
    Shrubbery rho2 = parse_shrubbery("R(b)");
    CHECK(length(rho2) == 3);
    CHECK(word(rho2) == "sts");
    Shrubbery mixed = parse_shrubbery("R(B(r|R(b)))B(r|r)rb");
    CHECK(length(mixed) == 16);
    CHECK(serialize(mixed) == "R(B(r|R(b)))B(r|r)rb");
}

TEST_CASE("word and decorated sequence") {
    auto [w1, d1] = to_word_and_sequence(parse_shrubbery("b"));
    CHECK(w1 == "t");
    CHECK(d1 == std::vector<std::string>{"U0"});

    auto [w2, d2] = to_word_and_sequence(parse_shrubbery("B(r)"));
    CHECK(w2 == "tst");
    CHECK(d2 == std::vector<std::string>{"U1", "U0", "D1"});

    auto [w3, d3] = to_word_and_sequence(parse_shrubbery("R(B(r|R(b)))B(r|r)rb"));
    CHECK(w3 == "stststststststst");
    std::vector<std::string> expect{"U1", "U1", "U0", "D0", "U1", "U0", "D1", "D1",
                                    "D1", "U1", "U0", "D0", "U0", "D1", "U0", "U0"};
    CHECK(d3 == expect);
}

TEST_CASE("enumeration counts at small length") {
    CHECK(enumerate_exact(0, false, false).size() == 1);
    CHECK(enumerate_exact(1, false, false).size() == 2);
    CHECK(enumerate_exact(1, true, false).size() == 1);
    auto basis2 = enumerate_subword_shrubs("st", true, true);
    REQUIRE(basis2.size() == 2);
    CHECK(serialize(basis2[0]).empty());
    CHECK(serialize(basis2[1]) == "b");
}

TEST_CASE("enumeration agrees with the decorated-sequence oracle") {
    for (int len = 0; len <= 9; ++len)
        for (bool blue : {false, true})
            for (bool basis : {false, true})
                CHECK(static_cast<long>(enumerate_exact(len, blue, basis).size()) ==
                      count_sequences(len, blue, basis));
}

TEST_CASE("predicates") {
    auto rho2 = predicates(parse_shrubbery("R(b)"));
    CHECK(rho2.complete);
    CHECK(rho2.well_tended);
    CHECK(rho2.stem_count == 0);

    auto stemmed = predicates(parse_shrubbery("R(b|b)"));
    CHECK(stemmed.complete);
    CHECK(!stemmed.well_tended);
    CHECK(stemmed.stem_count == 1);

    CHECK(predicates(Shrubbery{}).well_tended);

    auto incomplete = predicates(parse_shrubbery("R(bb)"));
    CHECK(!incomplete.complete);
}

TEST_CASE("uprooting") {
    CHECK(serialize(uproot_leftmost(parse_shrubbery("R(b|b)"))) == "R(bb)");
    CHECK(serialize(uproot_leftmost(parse_shrubbery("R(B(r|r))"))) == "R(B(rr))");
    CHECK_THROWS_AS(uproot_leftmost(parse_shrubbery("R(b)")), no_stem);

    // the outer separator is uprooted before anything inside the first slot
    Shrubbery l = parse_shrubbery("B(R(b|b)|r)");
    CHECK(serialize(uproot_leftmost(l)) == "B(R(b|b)r)");

    // products: the first shrub containing a stem
    Shrubbery prod = parse_shrubbery("rB(r|r)B(r|r)");
    CHECK(serialize(uproot_leftmost(prod)) == "rB(rr)B(r|r)");
}

TEST_CASE("uprooting subsets commutes") {
    for (int len = 0; len <= 9; ++len) {
        for (const auto& l : enumerate_exact(len, false, false)) {
            int n = stem_count(l);
            if (n < 2) continue;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    Shrubbery both = uproot_subset(l, {i, j});
                    Shrubbery ij = uproot_subset(uproot_subset(l, {i}), {j - 1});
                    Shrubbery ji = uproot_subset(uproot_subset(l, {j}), {i});
                    CHECK(both == ij);
                    CHECK(both == ji);
                }
        }
    }
}

TEST_CASE("E/F classes and the uprooting bijection") {
    Shrubbery three = parse_shrubbery("B(r|R(b|b))R(b|b)");
    CHECK(stem_count(three) == 3);
    auto ef = ef_classes(three);
    CHECK(ef.e.size() == 4);
    CHECK(ef.f.size() == 4);
    for (const auto& [e, f] : ef.pairs) CHECK(uproot_leftmost(e) == f);

    auto one = ef_classes(parse_shrubbery("R(b|b)"));
    CHECK(one.e.size() == 1);
    CHECK(one.f.size() == 1);

    auto two = ef_classes(parse_shrubbery("R(b|b|b)"));
    CHECK(two.e.size() == 2);
    CHECK(two.f.size() == 2);

    CHECK_THROWS_AS(ef_classes(parse_shrubbery("R(b)")), arg_error);
}

TEST_CASE("E/F bijection exhaustively up to length 9") {
    for (int len = 2; len <= 9; ++len)
        for (const auto& l : enumerate_complete(len)) {
            Predicates p = predicates(l);
            if (p.well_tended) continue;
            auto ef = ef_classes(l);
            CHECK(ef.e.size() == ef.f.size());
            ShrubberySet image;
            for (const auto& [e, f] : ef.pairs) {
                CHECK(uproot_leftmost(e) == f);
                CHECK(!predicates(f).well_tended);
                CHECK(!predicates(e).well_tended);
                image.insert(f);
            }
            CHECK(image == ef.f);
        }
}

TEST_CASE("partial order examples") {
    Shrubbery a = parse_shrubbery("R(b|b)");
    Shrubbery b = parse_shrubbery("R(bb)");
    CHECK(order_leq(a, a));
    CHECK(order_leq(a, b));
    CHECK(!order_leq(b, a));
    CHECK_THROWS_AS(order_leq(a, parse_shrubbery("b")), length_mismatch);

    // u(L) dominates every other term appearing in the length-5 differential
    for (const auto& other_term : {"bR(b)", "rR(b)", "R(b)r", "R(b)b"})
        CHECK(order_leq(parse_shrubbery(other_term), b));
}

TEST_CASE("order axioms exhaustively up to length 6") {
    for (int len = 0; len <= 6; ++len) {
        auto all = enumerate_exact(len, false, false);
        size_t n = all.size();
        size_t words = (n + 63) / 64;
        std::vector<std::vector<std::uint64_t>> rel(n, std::vector<std::uint64_t>(words, 0));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                if (order_leq(all[i], all[j])) rel[i][j / 64] |= 1ull << (j % 64);
        for (size_t i = 0; i < n; ++i) {
            bool refl = (rel[i][i / 64] >> (i % 64)) & 1;
            CHECK(refl);
            for (size_t j = 0; j < n; ++j) {
                bool ij = (rel[i][j / 64] >> (j % 64)) & 1;
                bool ji = (rel[j][i / 64] >> (i % 64)) & 1;
                if (ij && ji) CHECK(all[i] == all[j]);  // antisymmetric
                if (!ij) continue;
                // transitive: row_j must be contained in row_i
                bool contained = true;
                for (size_t w = 0; w < words; ++w)
                    if (rel[j][w] & ~rel[i][w]) contained = false;
                CHECK(contained);
            }
        }
    }
}

TEST_CASE("monoidal lexicography") {
    for (int ltotal = 2; ltotal <= 6; ++ltotal) {
        for (int l1 = 1; l1 < ltotal; ++l1) {
            auto ls = enumerate_exact(l1, false, false);
            auto ms = enumerate_exact(ltotal - l1, false, false);
            for (const auto& L : ls)
                for (const auto& Lp : ls) {
                    if (!(order_leq(L, Lp)) || L == Lp) continue;
                    for (const auto& M : ms)
                        for (const auto& Mp : ms) {
                            Shrubbery a, b;
                            a.shrubs = L.shrubs;
                            a.shrubs.insert(a.shrubs.end(), M.shrubs.begin(), M.shrubs.end());
                            b.shrubs = Lp.shrubs;
                            b.shrubs.insert(b.shrubs.end(), Mp.shrubs.begin(), Mp.shrubs.end());
                            CHECK(order_leq(a, b));
                            CHECK(!order_leq(b, a));
                        }
                }
        }
    }
}

TEST_CASE("euler characteristics match the beta model") {
    for (int n = 0; n <= 4; ++n) CHECK(euler_check(n));
}
