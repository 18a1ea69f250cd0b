#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "twocolor/poly.hpp"
#include "twocolor/qnum.hpp"

using namespace twocolor;

namespace {

BiPoly random_poly(std::mt19937_64& rng, int max_terms = 5, int max_exp = 2) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> exp(0, max_exp);
    std::uniform_int_distribution<long> coef(-9, 9);
    BiPoly p;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        Expo e{static_cast<std::uint32_t>(exp(rng)), static_cast<std::uint32_t>(exp(rng)),
               static_cast<std::uint32_t>(exp(rng)), static_cast<std::uint32_t>(exp(rng))};
        p += BiPoly::monomial(e, Int(coef(rng)));
    }
    return p;
}

} // namespace

TEST_CASE("addition examples") {
    BiPoly x = BiPoly::var_x();
    CHECK((x + (-x)).is_zero());
    BiPoly xy = x * BiPoly::var_y();
    CHECK(xy - BiPoly::one() + BiPoly::one() == xy);
    CHECK(qnum(2, Color::x) + qnum(2, Color::y) == x + BiPoly::var_y());
}

TEST_CASE("multiplication examples") {
    BiPoly x = BiPoly::var_x(), y = BiPoly::var_y();
    CHECK(x * y == BiPoly::parse("x*y"));
    BiPoly f = x * y - BiPoly::one();
    CHECK(f * f == BiPoly::parse("x^2*y^2-2*x*y+1"));
    CHECK(y * (x * y - BiPoly(2)) == qnum(4, Color::y));
}

TEST_CASE("exact division examples") {
    BiPoly x = BiPoly::var_x(), y = BiPoly::var_y();
    CHECK(qnum(4, Color::y).exact_div(y) == x * y - BiPoly(2));
    CHECK(qnum(3, Color::x).exact_div(x * y - BiPoly::one()).is_one());
    CHECK(!qnum(3, Color::x).divided_by(x).has_value());
    CHECK_THROWS_AS(qnum(3, Color::x).exact_div(x), not_divisible);
    CHECK_THROWS_AS(x.exact_div(BiPoly::zero()), arg_error);
}

TEST_CASE("specialization examples") {
    auto s22 = Specialization::integers_at(2, 2);
    CHECK(specialize_int(qnum(5, Color::x), s22) == 5);
    CHECK(specialize_int(BiPoly::zero(), s22) == 0);
    CHECK(specialize_int(cyclotomic(6, Color::x), s22) == 1);
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937_64 rng(20240811);
    for (int i = 0; i < 1000; ++i) {
        BiPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("exact division undoes multiplication") {
    std::mt19937_64 rng(7);
    int done = 0;
    while (done < 300) {
        BiPoly a = random_poly(rng), b = random_poly(rng);
        if (b.is_zero()) continue;
        CHECK((a * b).exact_div(b) == a);
        ++done;
    }
}

TEST_CASE("specialization is a ring homomorphism") {
    std::mt19937_64 rng(99);
    std::vector<Specialization> points = {
        Specialization::integers_at(2, 2), Specialization::integers_at(3, 3),
        Specialization::integers_at(-1, 4, 2, 5), Specialization::integers_at(0, 7, -3, 1),
        Specialization::integers_at(5, -2, 1, -1)};
    for (int i = 0; i < 200; ++i) {
        BiPoly a = random_poly(rng), b = random_poly(rng);
        for (const auto& s : points) {
            CHECK(specialize_int(a * b, s) == specialize_int(a, s) * specialize_int(b, s));
            CHECK(specialize_int(a + b, s) == specialize_int(a, s) + specialize_int(b, s));
        }
    }
}

TEST_CASE("canonical text and parse round-trip") {
    CHECK(qnum(5, Color::x).str() == "x^2*y^2-3*x*y+1");
    CHECK(BiPoly::zero().str() == "0");
    CHECK(BiPoly(-1).str() == "-1");
    CHECK((BiPoly::var_as() * BiPoly::var_at()).str() == "as*at");
    CHECK((-BiPoly::var_x()).str() == "-x");
    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
        BiPoly p = random_poly(rng);
        CHECK(BiPoly::parse(p.str()) == p);
    }
    CHECK(BiPoly::parse("0").is_zero());
    CHECK(BiPoly::parse("x^2*y^2-3*x*y+1") == qnum(5, Color::y));
}

TEST_CASE("specialization validation") {
    CHECK_THROWS_AS(Specialization::mod_p_at(4, 2, 2), arg_error);
    CHECK(Specialization::mod_p_at(5, 2, 2).p == 5);
    CHECK(specialize_mod(qnum(4, Color::y), Specialization::mod_p_at(2, 2, 2)) == 0);
    auto q = Specialization::rationals_at(Rat(1, 2), Rat(3));
    CHECK(specialize_rat(BiPoly::var_x() * BiPoly::var_y(), q) == Rat(3, 2));
}
