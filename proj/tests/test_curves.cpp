#include "gl4/curves.hpp"

#include <doctest.h>

#include <random>

using namespace gl4;

namespace {
QuadElem q2(Rational a, Rational b) { return QuadElem(std::move(a), std::move(b), 2); }

// Affine points by trying every (x, y), plus the points at infinity.
std::uint64_t brute_count(const FqPoly& f, const FiniteField& k) {
    const FqPoly g = f.embed(k);
    std::uint64_t n = 0;
    for (std::uint64_t i = 0; i < k.size(); ++i) {
        const FqElem fx = g.eval(k.from_index(i));
        for (std::uint64_t j = 0; j < k.size(); ++j) {
            const FqElem y = k.from_index(j);
            n += y * y == fx;
        }
    }
    if (g.degree() == 5) return n + 1;
    for (std::uint64_t j = 0; j < k.size(); ++j) {
        const FqElem y = k.from_index(j);
        n += y * y == g.leading();
    }
    return n;
}

FqPoly random_separable(std::mt19937_64& rng, const FiniteField& k, int degree) {
    for (;;) {
        std::vector<FqElem> c;
        for (int i = 0; i <= degree; ++i) c.push_back(k.from_index(rng() % k.size()));
        if (c.back().is_zero()) continue;
        FqPoly f(k, c);
        if (is_separable(f)) return f;
    }
}
}  // namespace

TEST_SUITE("curves") {

TEST_CASE("the family at (1, 1, 2) over Q(sqrt 2)") {
    const Genus2Curve c = family_curve(1, 1, 2, 2);
    CHECK(c.f().degree() == 6);
    CHECK(c.f().coeff(0).is_zero());
    const Genus2Curve t = tilde_curve(1, 1, 2, 2);
    CHECK(t.f().coeff(0).is_zero());
    const Genus2Curve ex = example_curve();
    CHECK(ex.f().coeff(6) == q2(18, -10));
    CHECK(ex.f().coeff(4) == q2(-21, Rational(-11, 2)));
    const auto lam = proportionality_factor(twist(c, QuadElem::sqrt_delta(2)), ex);
    REQUIRE(lam.has_value());
    CHECK(*lam == q2(1, 0));
    CHECK(isomorphic_by_square(twist(ex, q2(3, 1) * q2(3, 1)), ex));
    CHECK_FALSE(isomorphic_by_square(twist(ex, q2(3, 0)), ex));
}

TEST_CASE("degenerate inputs") {
    CHECK_THROWS_AS(family_curve(1, 1, 2, 4), DomainError);
    CHECK_THROWS_AS(Genus2Curve(QuadPoly({q2(1, 0), q2(0, 0), q2(1, 0)}, 2)), DomainError);
    // (x^2 + 1)^3 is singular.
    const QuadPoly s({q2(1, 0), q2(0, 0), q2(1, 0)}, 2);
    CHECK_THROWS_AS(Genus2Curve(s * s * s), DomainError);
    CHECK_THROWS_AS(WeilPoly(25, 21, 0), DomainError);
    CHECK_THROWS_AS(WeilPoly(10, 0, 0), DomainError);
    CHECK_THROWS_AS(WeilPoly(4, 0, 0), DomainError);
    CHECK_THROWS_AS(WeilPoly(5, 0, 31), DomainError);
}

TEST_CASE("reduction") {
    const Genus2Curve ex = example_curve();
    CHECK(reduce(ex, 5).q() == 25);
    CHECK(reduce(ex, 17, 1).q() == 17);
    CHECK_THROWS_AS(reduce(ex, 7), BadReduction);  // inseparable mod 7
    CHECK_THROWS_AS(reduce(ex, 2), BadReduction);
    CHECK_THROWS_AS(reduce(ex, 3), BadReduction);  // f is inseparable mod 3
}

TEST_CASE("point counts") {
    const auto& f5 = FiniteField::get(5, 1);
    const FqPoly x6p1(f5, {f5.one(), f5.zero(), f5.zero(), f5.zero(), f5.zero(), f5.zero(), f5.one()});
    const ReducedCurve c(x6p1);
    CHECK(count_points(c) == 6);
    CHECK(count_points(c) == brute_count(x6p1, f5));
    CHECK(count_points_over(c, FiniteField::get(5, 2)) == brute_count(x6p1, FiniteField::get(5, 2)));
    std::mt19937_64 rng(77);
    for (std::uint32_t p : {3U, 5U, 7U, 11U}) {
        for (unsigned d : {1U, 2U}) {
            const auto& k = FiniteField::get(p, d);
            for (int deg : {5, 6}) {
                const FqPoly f = random_separable(rng, k, deg);
                const ReducedCurve rc(f);
                CHECK(count_points(rc) == brute_count(f, k));
                if (k.size() <= 25)
                    CHECK(count_points_over(rc, FiniteField::get(p, 2 * d)) == brute_count(f, FiniteField::get(p, 2 * d)));
            }
        }
    }
}

TEST_CASE("frozen Weil polynomials of the example") {
    const WeilPoly w5 = weil_poly(example_curve(), 5);
    CHECK(w5 == WeilPoly(25, 8, 34));
    CHECK(w5.group_order() == 452);
    const WeilPoly w11 = weil_poly(example_curve(), 11);
    CHECK(w11 == WeilPoly(121, 28, 390));
    CHECK(w11.group_order() == 11616);
    CHECK(w5.characteristic() == 5);
    const ReducedCurve r5 = reduce(example_curve(), 5);
    CHECK(count_points(r5) == 18);
    CHECK(count_points_over(r5, FiniteField::get(5, 4)) == 630);
    CHECK(w5.reciprocal().coeff(4) == 625);
}

TEST_CASE("quadratic twists negate the trace") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 25; ++i) {
        const std::uint32_t p = std::vector<std::uint32_t>{3, 5, 7, 11, 13}[rng() % 5];
        const auto& k = FiniteField::get(p, 1 + static_cast<unsigned>(rng() % 2));
        const FqPoly f = random_separable(rng, k, 5 + static_cast<int>(rng() % 2));
        FqElem ns = k.one();
        for (std::uint64_t j = 1; ns.is_square(); ++j) ns = k.from_index(j);
        const WeilPoly w = weil_poly(ReducedCurve(f));
        CHECK(weil_poly(ReducedCurve(f * ns)) == w.quadratic_twist());
        // Group order is chi(1) and agrees with the L-polynomial at 1.
        CHECK(w.group_order() == w.reciprocal().eval(1).get_num());
    }
}

}  // TEST_SUITE
