#include "gl4/numberfield.hpp"

#include <doctest.h>

#include <random>

using namespace gl4;

namespace {
const UniPoly T = UniPoly::variable();
UniPoly c(long v) { return UniPoly::constant(v); }
QuadElem q2(long a, long b) { return QuadElem(a, b, 2); }
}  // namespace

TEST_SUITE("numberfield") {

TEST_CASE("quadratic field arithmetic") {
    const QuadElem x = q2(3, 1), y = q2(1, -2);
    CHECK(x * y == q2(-1, -5));
    CHECK(norm(x) == 7);
    CHECK(conjugate(x) == q2(3, -1));
    CHECK(x * x.inverse() == q2(1, 0));
    CHECK(norm(x * y) == norm(x) * norm(y));
    CHECK_THROWS_AS(QuadElem(1, 1, 4), DomainError);
    CHECK_THROWS_AS(q2(0, 0).inverse(), DomainError);
    CHECK_THROWS_AS(q2(1, 1) + QuadElem(1, 1, 3), DomainError);
    CHECK(QuadElem::parse("12-33/2*sqrt(2)") == QuadElem(12, Rational(-33, 2), 2));
    CHECK(QuadElem::parse("sqrt(5)") == QuadElem(0, 1, 5));
    CHECK(QuadElem::parse("-7", 3) == QuadElem(-7, 0, 3));
    CHECK(QuadElem(12, Rational(-33, 2), 2).to_string() == "12-33/2*sqrt(2)");
    CHECK(is_valid_radicand(-1));
    CHECK_FALSE(is_valid_radicand(1));
    CHECK_FALSE(is_valid_radicand(8));
}

TEST_CASE("square roots") {
    CHECK(square_root(q2(3, 2)) == q2(1, 1));
    CHECK(square_root(q2(2, 0)).has_value());
    CHECK_FALSE(square_root(q2(3, 0)).has_value());
    CHECK_FALSE(square_root(q2(1, 1)).has_value());
    std::mt19937_64 rng(3);
    for (int i = 0; i < 50; ++i) {
        const long d = std::vector<long>{2, 3, 5, -1, -7, 13}[rng() % 6];
        const QuadElem r(static_cast<long>(rng() % 21) - 10, static_cast<long>(rng() % 21) - 10, d);
        const auto s = square_root(r * r);
        REQUIRE(s.has_value());
        CHECK(*s * *s == r * r);
    }
}

TEST_CASE("norm classes") {
    CHECK(norm_class(q2(0, 1)) == NormClass::MinusTwoSquare);     // Nm = -2
    CHECK(norm_class(q2(0, 2)) == NormClass::MinusTwoSquare);     // Nm = -8
    CHECK(norm_class(q2(1, 0)) == NormClass::Neither);
    CHECK(norm_class(QuadElem(0, 1, 3)) == NormClass::Neither);   // Nm = -3
    CHECK(norm_class(QuadElem(1, 1, 3)) == NormClass::MinusTwoSquare);  // 1 - 3
    CHECK(norm_class(QuadElem(2, 2, 7)) == NormClass::Neither);          // -24
    CHECK(norm_class(q2(2, 2)) == NormClass::MinusTwoDeltaSquare);       // -4
    CHECK(norm_class(QuadElem(0, 1, 7)) == NormClass::Neither);          // -7
}

TEST_CASE("quadratic polynomials") {
    const QuadPoly f({q2(-2, 0), q2(0, 0), q2(1, 0)}, 2);  // x^2 - 2
    CHECK(f.eval(q2(0, 1)).is_zero());
    CHECK(discriminant(f) == q2(8, 0));
    const QuadPoly g({q2(0, -1), q2(1, 0)}, 2);  // x - sqrt2
    CHECK(resultant(f, g).is_zero());
    CHECK((f * g).degree() == 3);
    CHECK(f.derivative() == QuadPoly({q2(0, 0), q2(2, 0)}, 2));
    CHECK(g.conjugated() == QuadPoly({q2(0, 1), q2(1, 0)}, 2));
}

TEST_CASE("quartic fields and quadratic subfields") {
    const QuarticField cyc8(pow(T, 4) + c(1));
    CHECK(quadratic_subfields(cyc8) == std::set<Integer>{-2, -1, 2});
    const QuarticField biq(pow(T, 4) - c(10) * T * T + c(1));
    CHECK(quadratic_subfields(biq) == std::set<Integer>{2, 3, 6});
    // Weil polynomial of the example curve at p = 5.
    const QuarticField w5(pow(T, 4) - c(8) * pow(T, 3) + c(34) * T * T - c(200) * T + c(625));
    CHECK(quadratic_subfields(w5) == std::set<Integer>{2});
    const QuarticField w11(pow(T, 4) - c(28) * pow(T, 3) + c(390) * T * T - c(28 * 121) * T + c(14641));
    CHECK(quadratic_subfields(w11) == std::set<Integer>{3});
    CHECK(has_sqrt(cyc8, -1));
    CHECK_FALSE(has_sqrt(cyc8, 3));
    const QuarticField x4m2(pow(T, 4) - c(2));
    CHECK(quadratic_subfields(x4m2) == std::set<Integer>{2});
    CHECK(intersection_is_Q(w5, w11));
    CHECK_FALSE(intersection_is_Q(cyc8, biq));
    CHECK_FALSE(intersection_is_Q(w5, cyc8));
    CHECK_THROWS_AS(QuarticField(pow(T, 4) - c(1)), DomainError);
    for (const auto* k : {&cyc8, &biq, &w5, &w11, &x4m2})
        for (const Integer& m : quadratic_subfields(*k)) CHECK(has_sqrt(*k, m));
}

TEST_CASE("residue fields") {
    const auto inert = residue_field(2, 5);
    CHECK(inert.inert);
    CHECK(inert.q() == 25);
    CHECK(inert.describe() == "prime above 5 in Q(sqrt(2)) (inert, q = 25)");
    const auto split = residue_field(2, 7, 1);
    CHECK_FALSE(split.inert);
    CHECK(split.q() == 7);
    CHECK(split.sqrt_delta * split.sqrt_delta == split.field->from_int(2));
    const auto other = residue_field(2, 7, 2);
    CHECK(other.sqrt_delta == -split.sqrt_delta);
    CHECK(split.sqrt_delta.index() < other.sqrt_delta.index());
    CHECK_THROWS_AS(residue_field(2, 2), BadReduction);
    CHECK_THROWS_AS(residue_field(3, 3), BadReduction);
    CHECK_THROWS_AS(residue_field(2, 9), DomainError);
    CHECK_THROWS_AS(reduce_mod_prime(QuadElem(Rational(1, 7), 0, 2), split), BadReduction);
}

TEST_CASE("reduction is a ring homomorphism") {
    std::mt19937_64 rng(17);
    for (std::uint32_t p : {5U, 7U, 11U, 17U, 23U}) {
        for (int label : {1, 2}) {
            const auto rf = residue_field(2, p, label);
            for (int i = 0; i < 30; ++i) {
                const QuadElem x(Rational(static_cast<long>(rng() % 41) - 20, 3),
                                 static_cast<long>(rng() % 41) - 20, 2);
                const QuadElem y(static_cast<long>(rng() % 41) - 20, static_cast<long>(rng() % 41) - 20, 2);
                CHECK(reduce_mod_prime(x + y, rf) == reduce_mod_prime(x, rf) + reduce_mod_prime(y, rf));
                CHECK(reduce_mod_prime(x * y, rf) == reduce_mod_prime(x, rf) * reduce_mod_prime(y, rf));
                if (!rf.inert) continue;
                // Conjugation is Frobenius on the inert residue field.
                CHECK(reduce_mod_prime(conjugate(x), rf) == reduce_mod_prime(x, rf).frobenius());
            }
        }
    }
}

}  // TEST_SUITE
