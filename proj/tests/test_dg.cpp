#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <set>

#include "twocolor/dg.hpp"
#include "twocolor/qnum.hpp"

using namespace twocolor;

namespace {

GenMonomial betas(std::initializer_list<int> ks) {
    GenMonomial m;
    for (int k : ks) m.push_back({GenColor::beta, k});
    return m;
}

BiPoly coefficient_of(const std::vector<DiffTerm>& terms, const GenMonomial& target) {
    for (const auto& [c, m] : terms)
        if (m == target) return c;
    return BiPoly::zero();
}

} // namespace

TEST_CASE("generator differentials") {
    auto d_b2 = diff_generator({GenColor::beta, 2}, true);
    REQUIRE(d_b2.size() == 1);
    CHECK(d_b2[0].first == qnum(2, Color::y));
    CHECK(d_b2[0].second == betas({1, 1}));

    auto d_b1 = diff_generator({GenColor::beta, 1}, false);
    REQUIRE(d_b1.size() == 1);
    CHECK(d_b1[0].first == -BiPoly::var_at());
    CHECK(d_b1[0].second.empty());
    CHECK(diff_generator({GenColor::beta, 1}, true).empty());

    auto d_r1 = diff_generator({GenColor::rho, 1}, false);
    REQUIRE(d_r1.size() == 1);
    CHECK(d_r1[0].first == BiPoly::var_as());

    auto d_b4 = diff_generator({GenColor::beta, 4}, true);
    CHECK(coefficient_of(d_b4, betas({1, 3})) == qbinomial(4, 1, Color::y));
    CHECK(coefficient_of(d_b4, betas({2, 2})) == qbinomial(4, 2, Color::y));
    CHECK(coefficient_of(d_b4, betas({3, 1})) == qbinomial(4, 3, Color::y));
}

TEST_CASE("monomial differentials carry the printed signs") {
    auto d = diff_monomial(betas({1, 3}), true);
    CHECK(coefficient_of(d, betas({1, 1, 2})) == -qbinomial(3, 1, Color::y));
    CHECK(coefficient_of(d, betas({1, 2, 1})) == -qbinomial(3, 2, Color::y));

    CHECK(diff_monomial({}, true).empty());
    CHECK(diff_monomial({}, false).empty());

    auto d22 = diff_monomial(betas({2, 2}), true);
    CHECK(coefficient_of(d22, betas({1, 1, 2})) == qnum(2, Color::y));
    CHECK(coefficient_of(d22, betas({2, 1, 1})) == -qnum(2, Color::y));
}

TEST_CASE("associated words") {
    CHECK(associated_word(betas({1, 2})) == "ttst");
    CHECK(associated_word({{GenColor::rho, 2}}) == "sts");
    CHECK(associated_word({}).empty());
}

TEST_CASE("subword test") {
    CHECK(is_subword("tt", "stst"));
    CHECK(is_subword("tst", "stst"));
    CHECK(!is_subword("ss", "st"));
    CHECK(is_subword("", "st"));
}

TEST_CASE("antispherical complex for n = 4") {
    DgComplex c = build_tilde_C(4, true);
    CHECK(c.total_rank() == 16);
    auto parts = split_B(c);
    REQUIRE(parts.size() == 5);
    long sizes[5] = {1, 1, 2, 4, 8};
    for (int m = 0; m <= 4; ++m) CHECK(parts[m].total_rank() == sizes[m]);
    CHECK(check_d_squared(c));
}

TEST_CASE("trivial complex for n = 0") {
    DgComplex c = build_tilde_C(0, true);
    CHECK(c.total_rank() == 1);
    CHECK(c.min_degree == 0);
    CHECK(c.diff.empty());
}

TEST_CASE("beta-only words embed exactly when m <= n") {
    for (int n = 0; n <= 8; ++n) {
        std::string w = alternating_word('s', 2 * n);
        std::vector<GenMonomial> stack{GenMonomial{}};
        while (!stack.empty()) {
            GenMonomial m = stack.back();
            stack.pop_back();
            int total = monomial_total(m);
            if (total > 0) CHECK(is_subword(associated_word(m), w) == (total <= n));
            if (total <= n) {
                for (int k = 1; total + k <= n + 1; ++k) {
                    GenMonomial next = m;
                    next.push_back({GenColor::beta, k});
                    stack.push_back(next);
                }
            }
        }
    }
}

TEST_CASE("degrees and ranks of the summands") {
    DgComplex c = build_tilde_C(6, true);
    auto parts = split_B(c);
    for (int m = 0; m <= 6; ++m) {
        CHECK(parts[m].total_rank() == (m == 0 ? 1 : 1L << (m - 1)));
        for (int i = 0; i < parts[m].num_degrees(); ++i)
            for (const auto& mono : parts[m].monos[i]) {
                CHECK(monomial_degree(mono) == parts[m].min_degree + i);
                CHECK(monomial_degree(mono) ==
                      static_cast<int>(mono.size()) - 2 * monomial_total(mono));
            }
    }
}

TEST_CASE("d squared vanishes symbolically, including rho generators") {
    CHECK(check_d_squared(build_gamma_truncation(4)));
    CHECK(check_d_squared(build_tilde_C(5, false)));
    DgComplex c = build_tilde_C(4, true);
    // negative control: flip one sign
    for (auto& [rc, v] : c.diff[1]) {
        v = -v;
        break;
    }
    CHECK(!check_d_squared(c));
}

TEST_CASE("B_6 reproduces the printed node and edge multiset") {
    DgComplex b6 = split_B(build_tilde_C(6, true))[6];
    CHECK(b6.total_rank() == 32);
    std::multiset<std::pair<std::string, std::string>> edges;
    for (size_t i = 0; i < b6.diff.size(); ++i)
        for (const auto& [rc, v] : b6.diff[i]) {
            CHECK(!v.is_zero());
            edges.insert({b6.basis[i][rc.second], b6.basis[i + 1][rc.first]});
        }
    CHECK(edges.size() == 80);
    std::multiset<std::pair<std::string, std::string>> expected;
    std::ifstream in(std::string(GOLDEN_DIR) + "/b6_edges.txt");
    REQUIRE(in.good());
    std::string a, b;
    while (in >> a >> b) expected.insert({a, b});
    CHECK(edges == expected);
}

TEST_CASE("dot and json exports") {
    DgComplex b2 = split_B(build_tilde_C(2, true))[2];
    std::string dot = b2.to_dot();
    CHECK(dot.find("\"2\" -> \"11\" [label=\"y\"]") != std::string::npos);
    DgComplex b0 = split_B(build_tilde_C(2, true))[0];
    CHECK(b0.total_rank() == 1);
    CHECK(b0.to_dot().find("->") == std::string::npos);
    std::string js = build_tilde_C(1, true).to_json();
    CHECK(js.find("\"degrees\"") != std::string::npos);
}
