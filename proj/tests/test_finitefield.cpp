#include "gl4/finitefield.hpp"
#include "gl4/fqpoly.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace gl4;

TEST_SUITE("finitefield") {

TEST_CASE("prime field arithmetic") {
    const auto& f = FiniteField::get(7, 1);
    CHECK(f.size() == 7);
    CHECK(f.from_int(3) * f.from_int(5) == f.from_int(1));
    CHECK(f.from_int(-1) == f.from_int(6));
    CHECK(f.from_rational(Rational(1, 2)) == f.from_int(4));
    CHECK(f.from_int(3).inverse() == f.from_int(5));
    CHECK_THROWS_AS(f.zero().inverse(), DomainError);
    CHECK_THROWS_AS(f.from_rational(Rational(1, 7)), DomainError);
    CHECK(legendre(Integer(2), 7) == 1);
    CHECK(legendre(Integer(3), 7) == -1);
    CHECK(legendre(Integer(14), 7) == 0);
    CHECK(is_prime(65537));
    CHECK_FALSE(is_prime(91));
    CHECK_THROWS(FiniteField::get(9, 1));
    CHECK_THROWS(FiniteField::get(7, 3));
    CHECK(&FiniteField::get(7, 2) == &FiniteField::get(7, 2));
}

TEST_CASE("extension arithmetic") {
    for (std::uint32_t p : {3U, 5U, 7U, 13U}) {
        for (unsigned d : {2U, 4U}) {
            const auto& f = FiniteField::get(p, d);
            const FqElem th = f.theta();
            CHECK(th * th == f.from_int(f.base_nonresidue()));
            if (d == 4) CHECK(f.eta() * f.eta() != f.zero());
            std::mt19937_64 rng(p * 10 + d);
            for (int i = 0; i < 40; ++i) {
                const FqElem x = f.from_index(rng() % f.size());
                const FqElem y = f.from_index(rng() % f.size());
                const FqElem z = f.from_index(rng() % f.size());
                CHECK((x + y) * z == x * z + y * z);
                CHECK(f.from_index(x.index()) == x);
                CHECK(x.pow(f.size()) == x);
                CHECK((x * y).frobenius() == x.frobenius() * y.frobenius());
                if (!x.is_zero()) CHECK(x * x.inverse() == f.one());
            }
        }
    }
}

TEST_CASE("is_square matches an exhaustive table") {
    for (std::uint64_t q : {9ULL, 25ULL, 49ULL, 121ULL, 169ULL, 81ULL, 625ULL}) {
        std::uint32_t p = 3;
        unsigned d = 2;
        if (q == 25) p = 5;
        if (q == 49) p = 7;
        if (q == 121) p = 11;
        if (q == 169) p = 13;
        if (q == 81) d = 4;
        if (q == 625) { p = 5; d = 4; }
        const auto& f = FiniteField::get(p, d);
        REQUIRE(f.size() == q);
        std::set<std::uint64_t> squares;
        for (std::uint64_t i = 0; i < q; ++i) {
            const FqElem x = f.from_index(i);
            squares.insert((x * x).index());
        }
        CHECK(squares.size() == (q + 1) / 2);
        for (std::uint64_t i = 0; i < q; ++i) {
            const FqElem x = f.from_index(i);
            const bool sq = squares.count(i) != 0;
            CHECK(x.is_square() == sq);
            const auto r = x.sqrt();
            CHECK(r.has_value() == sq);
            if (r) CHECK(*r * *r == x);
        }
    }
}

TEST_CASE("tower embedding is the fixed field of frobenius") {
    for (std::uint32_t p : {3U, 5U, 11U}) {
        const auto& f1 = FiniteField::get(p, 1);
        const auto& f2 = FiniteField::get(p, 2);
        const auto& f4 = FiniteField::get(p, 4);
        std::size_t fixed2 = 0, fixed1 = 0;
        for (std::uint64_t i = 0; i < f4.size(); ++i) {
            const FqElem x = f4.from_index(i);
            const FqElem x2 = x.frobenius().frobenius();
            const bool in2 = x2 == x;
            CHECK(f4.in_subfield(x, 2) == in2);
            CHECK(f4.in_subfield(x, 1) == (x.frobenius() == x));
            fixed2 += in2;
            fixed1 += x.frobenius() == x;
            if (in2) CHECK(f4.embed(f4.restrict_to(x, f2)) == x);
        }
        CHECK(fixed2 == f2.size());
        CHECK(fixed1 == f1.size());
        for (std::uint64_t i = 0; i < f2.size(); ++i) {
            const FqElem x = f2.from_index(i);
            for (std::uint64_t j = 0; j < f2.size(); j += 7) {
                const FqElem y = f2.from_index(j);
                CHECK(f4.embed(x * y) == f4.embed(x) * f4.embed(y));
            }
            CHECK(f4.embed(x).index() == x.index());
        }
    }
}

TEST_CASE("norm to the prime field") {
    const auto& f = FiniteField::get(7, 4);
    std::mt19937_64 rng(1);
    for (int i = 0; i < 30; ++i) {
        const FqElem x = f.from_index(rng() % f.size());
        const FqElem n = x.pow((f.size() - 1) / 6);
        CHECK(n.index() == x.norm_to_prime_field());
    }
}

TEST_CASE("polynomials over F_q") {
    const auto& f = FiniteField::get(11, 2);
    const FqElem a = f.from_int(3), b = f.theta();
    const FqPoly p = FqPoly::linear(a) * FqPoly::linear(b);
    auto roots = roots_of_quadratic(p);
    REQUIRE(roots.size() == 2);
    CHECK(((roots[0] == a && roots[1] == b) || (roots[0] == b && roots[1] == a)));
    CHECK(p.eval(b).is_zero());
    const FqPoly q = FqPoly::linear(a) * FqPoly::linear(a);
    CHECK_FALSE(is_separable(q));
    CHECK(roots_of_quadratic(q).size() == 1);
    CHECK(is_separable(p));
    const auto [g, s, t] = xgcd(p, q);
    CHECK(g == FqPoly::linear(a));
    CHECK(s * p + t * q == g);
    const auto [quo, rem] = divmod(p * q + FqPoly::constant(b), q);
    CHECK(quo == p);
    CHECK(rem == FqPoly::constant(b));
    CHECK(p.taylor_shift(a).eval(f.zero()) == p.eval(a));
    const auto& e = FiniteField::get(11, 4);
    CHECK(p.embed(e).restrict_to(f) == p);
    FqElem nonsq = f.one();
    for (std::uint64_t i = 1; nonsq.is_square(); ++i) nonsq = f.from_index(i);
    const FqPoly ns(f, {-nonsq, f.zero(), f.one()});
    CHECK(roots_of_quadratic(ns).empty());
    CHECK(roots_of_quadratic(ns.embed(e)).size() == 2);
}

}  // TEST_SUITE
