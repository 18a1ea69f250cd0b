#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "twocolor/homology.hpp"
#include "twocolor/qnum.hpp"
#include "twocolor/reduce.hpp"

using namespace twocolor;

namespace {

Int det4(const IntMat& m) {
    // cofactor expansion, n <= 4
    size_t n = m.size();
    if (n == 1) return m[0][0];
    Int d = 0;
    for (size_t j = 0; j < n; ++j) {
        IntMat minor;
        for (size_t i = 1; i < n; ++i) {
            std::vector<Int> row;
            for (size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(std::move(row));
        }
        Int t = m[0][j] * det4(minor);
        d += (j % 2 == 0) ? t : -t;
    }
    return d;
}

} // namespace

TEST_CASE("smith normal form examples") {
    CHECK(smith_normal_form({{2, 0}, {0, 3}}) == std::vector<Int>{1, 6});
    CHECK(smith_normal_form({{0, 0}, {0, 0}}).empty());
    CHECK(smith_normal_form({{2, 2}, {-2, 2}}) == std::vector<Int>{2, 4});
}

TEST_CASE("smith normal form invariants") {
    std::mt19937_64 rng(424242);
    std::uniform_int_distribution<long> coef(-6, 6);
    for (int trial = 0; trial < 200; ++trial) {
        IntMat m(4, std::vector<Int>(4));
        for (auto& row : m)
            for (auto& v : row) v = coef(rng);
        Int d = det4(m);
        auto f = smith_normal_form(m);
        for (size_t i = 1; i < f.size(); ++i) CHECK(f[i] % f[i - 1] == 0);
        if (d != 0) {
            REQUIRE(f.size() == 4);
            Int prod = 1;
            for (const auto& v : f) prod *= v;
            CHECK(prod == abs(d));
        } else {
            CHECK(f.size() < 4);
        }
    }
}

TEST_CASE("integral cohomology examples") {
    auto s = Specialization::integers_at(2, 2);
    DgComplex b2 = split_B(build_tilde_C(2, true))[2];
    auto rep = integral_cohomology(b2, s);
    CHECK(!rep.groups.count(-3));
    REQUIRE(rep.groups.count(-2));
    CHECK(rep.groups.at(-2).free_rank == 0);
    CHECK(rep.groups.at(-2).torsion == std::vector<Int>{2});

    DgComplex b0 = split_B(build_tilde_C(2, true))[0];
    auto rep0 = integral_cohomology(b0, s);
    REQUIRE(rep0.groups.count(0));
    CHECK(rep0.groups.at(0).free_rank == 1);
    CHECK(rep0.groups.at(0).torsion.empty());

    // Koszul cube on (phi_2, phi_4) at (2,2): both generators map to 2
    DgComplex cube = cube_complex({cyclotomic(2, Color::y), cyclotomic(4, Color::y)}, 0);
    auto repc = integral_cohomology(cube, s);
    REQUIRE(repc.groups.count(0));
    CHECK(repc.groups.at(0).torsion == std::vector<Int>{2});
    REQUIRE(repc.groups.count(-1));
    CHECK(repc.groups.at(-1).torsion == std::vector<Int>{2});
    CHECK(repc.groups.at(-1).free_rank == 0);
    CHECK(!repc.groups.count(-2));
}

TEST_CASE("cohomology is independent of the basis order") {
    auto s = Specialization::integers_at(2, 2);
    DgComplex c = build_tilde_C(4, true);
    auto rep = integral_cohomology(c, s);
    // permute each degree's basis by reversal
    DgComplex p = c;
    for (size_t i = 0; i < p.basis.size(); ++i) std::reverse(p.basis[i].begin(), p.basis[i].end());
    for (size_t i = 0; i < p.diff.size(); ++i) {
        SparseMat m;
        int rows = static_cast<int>(p.basis[i + 1].size());
        int cols = static_cast<int>(p.basis[i].size());
        for (const auto& [rc, v] : p.diff[i]) m[{rows - 1 - rc.first, cols - 1 - rc.second}] = v;
        p.diff[i] = std::move(m);
    }
    CHECK(integral_cohomology(p, s) == rep);
}

TEST_CASE("field cohomology examples") {
    auto q22 = Specialization::rationals_at(Rat(2), Rat(2));
    for (int n = 1; n <= 5; ++n) {
        auto rep = field_cohomology(build_tilde_C(n, true), q22);
        REQUIRE(rep.groups.size() == 2);
        CHECK(rep.groups.at(0).free_rank == 1);
        CHECK(rep.groups.at(-1).free_rank == 1);
    }
    DgComplex b2 = split_B(build_tilde_C(2, true))[2];
    auto f2 = field_cohomology(b2, Specialization::mod_p_at(2, 2, 2));
    CHECK(f2.groups.at(-3).free_rank == 1);
    CHECK(f2.groups.at(-2).free_rank == 1);
    DgComplex empty;
    CHECK(field_cohomology(empty, q22).groups.empty());
}

TEST_CASE("universal coefficients consistency") {
    auto s = Specialization::integers_at(2, 2);
    for (int n = 1; n <= 6; ++n) {
        DgComplex c = build_tilde_C(n, true);
        auto zrep = integral_cohomology(c, s);
        for (unsigned long p : {2ul, 3ul, 5ul}) {
            auto prep = field_cohomology(c, Specialization::mod_p_at(p, 2, 2));
            CHECK(universal_coefficients_consistent(zrep, prep, p));
        }
    }
}

TEST_CASE("canonical group normalization") {
    AbGroup g = canonical_group(1, {Int(2), Int(3)});
    CHECK(g.free_rank == 1);
    CHECK(g.torsion == std::vector<Int>{6});
    AbGroup h = canonical_group(0, {Int(2), Int(2), Int(4)});
    CHECK(h.torsion == std::vector<Int>{2, 2, 4});
    AbGroup k = canonical_group(0, {Int(6), Int(4)});
    CHECK(k.torsion == std::vector<Int>{2, 12});
}

TEST_CASE("graded cohomology of simple complexes") {
    // R --a_s--> R(2): cokernel has Hilbert series 1,1,1,... ; kernel is zero
    GradedComplex c;
    c.min_degree = 0;
    c.shifts = {{0}, {2}};
    c.diff.resize(1);
    c.diff[0][{0, 0}] = {BiPoly::var_as(), Rat(1)};
    auto dims = graded_field_cohomology(c, 10);
    for (int D = -2; D <= 10; D += 2) {
        CHECK(dims.count({1, D}) == 1);
        CHECK(dims.at({1, D}) == 1);
    }
    for (const auto& [key, v] : dims) CHECK(key.first == 1);

    // zero differential on R: the Hilbert function of R itself
    GradedComplex z;
    z.min_degree = 0;
    z.shifts = {{0}};
    auto zd = graded_field_cohomology(z, 8);
    for (int D = 0; D <= 8; D += 2) CHECK(zd.at({0, D}) == D / 2 + 1);

    // inhomogeneous entry is rejected
    GradedComplex bad;
    bad.min_degree = 0;
    bad.shifts = {{0}, {2}};
    bad.diff.resize(1);
    bad.diff[0][{0, 0}] = {BiPoly::var_as() + BiPoly::one(), Rat(1)};
    CHECK_THROWS_AS(graded_field_cohomology(bad, 4), inhomogeneous_entry);
}
