// Acceptance suite: one line per criterion, nonzero exit on any failure.
#include "gl4/criterion.hpp"
#include "gl4/jacobian.hpp"
#include "gl4/richelot.hpp"
#include "gl4/symbolic.hpp"

#include "cli.hpp"
#include "oracles.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace gl4;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

// Records a failed check without stopping the criterion.
struct Tally {
    long checks = 0;
    long failures = 0;
    std::string first_failure;
    void expect(bool ok, const std::string& what) {
        ++checks;
        if (ok) return;
        if (failures++ == 0) first_failure = what;
    }
    Outcome outcome(const std::string& summary) const {
        if (failures == 0) return {true, summary + ", " + std::to_string(checks) + " checks"};
        return {false, summary + ", " + std::to_string(failures) + "/" + std::to_string(checks) +
                           " checks failed, first: " + first_failure};
    }
};

FqPoly random_separable(std::mt19937_64& rng, const FiniteField& k, int degree, bool with_root) {
    for (;;) {
        std::vector<FqElem> c;
        for (int i = 0; i <= degree - (with_root ? 1 : 0); ++i) c.push_back(k.from_index(rng() % k.size()));
        if (c.back().is_zero()) continue;
        FqPoly f(k, c);
        if (with_root) f = f * FqPoly::linear(k.from_index(rng() % k.size()));
        if (is_separable(f)) return f;
    }
}

Outcome symbolic_identities() {
    const auto fam = sym::family_polynomials();
    Tally t;
    t.expect(sym::verify_delta(fam), "delta = D/2");
    t.expect(sym::verify_conjugation(fam), "conjugation identities");
    t.expect(sym::verify_conjugate_product(fam), "conjugate product identity");
    t.expect(sym::verify_transpose(fam), "transpose identity");
    t.expect(!sym::verify_transpose(fam, +1), "control: transpose without the involution is rejected");
    return t.outcome("generic identities in a, b, c, D");
}

Outcome example_end_to_end() {
    Tally t;
    std::ostringstream out, err;
    const char* argv[] = {"gl4cert", "example", "--json"};
    const int code = cli::run(3, argv, out, err);
    t.expect(code == 0, "example exits 0");
    const Certificate cert = certify_trivial_endos(example_curve(), 5, 11);
    t.expect(cert.first.residue.inert && cert.second.residue.inert, "5 and 11 inert in Q(sqrt 2)");
    t.expect(cert.first.weil == WeilPoly(25, 8, 34), "Weil data at 5 is (25, 8, 34)");
    t.expect(cert.second.weil == WeilPoly(121, 28, 390), "Weil data at 11 is (121, 28, 390)");
    t.expect(cert.first.stability.stable() && cert.second.stability.stable(), "stably irreducible at both");
    t.expect(cert.first.ordinary && cert.second.ordinary, "ordinary at both");
    t.expect(cert.intersection_is_Q, "quadratic subfields disjoint");
    t.expect(cert.first.subfields == std::set<Integer>{2} && cert.second.subfields == std::set<Integer>{3},
             "subfields {2} and {3}");
    t.expect(cert.conclusion == Conclusion::EndIsZ, "conclusion EndIsZ");
    t.expect(classify_end_algebra(2, QuadElem(0, 1, 2)) == EndAlgebra::QsqrtMinus2, "End^0 = Q(sqrt(-2))");
    t.expect(out.str().find("\"EndIsZ\"") != std::string::npos, "CLI reports EndIsZ");
    t.expect(out.str().find("Q(sqrt(-2))") != std::string::npos, "CLI reports Q(sqrt(-2))");
    return t.outcome("p = 5, 11; EndIsZ; End^0 = Q(sqrt(-2))");
}

Outcome family_twist() {
    Tally t;
    const Genus2Curve twisted = twist(family_curve(1, 1, 2, 2), QuadElem::sqrt_delta(2));
    const auto lambda = proportionality_factor(twisted, example_curve());
    const bool ok = isomorphic_by_square(twisted, example_curve());
    t.expect(ok, "parameter naming: twist(C(1,1,2), sqrt 2) differs from the printed sextic by a non-square");
    return t.outcome(lambda ? "factor " + lambda->to_string() : "not proportional");
}

Outcome richelot_doubling() {
    Tally t;
    std::mt19937_64 rng(cli::kDefaultSeed);
    int specializations = 0, divisors = 0;
    while (specializations < 6) {
        const long a = static_cast<long>(rng() % 11) - 5, b = static_cast<long>(rng() % 11) - 5,
                   c = static_cast<long>(rng() % 11) - 5;
        const long d = std::vector<long>{2, 3, 5, 6, 7, 10, 11, 13}[rng() % 8];
        std::uint32_t p = 50 + static_cast<std::uint32_t>(rng() % 250);
        while (!is_prime(p) || legendre(Integer(d), p) != 1) ++p;
        std::optional<RichelotPair> pair;
        try {
            pair.emplace(a, b, c, d, p);
        } catch (const BadReduction&) {
            continue;
        } catch (const DomainError&) {
            continue;
        }
        ++specializations;
        int done = 0;
        for (int tries = 0; done < 20 && tries < 1000; ++tries) {
            const auto x = pair->jacobian().random_divisor(rng);
            const auto y = pair->image(x, RichelotDirection::Forward);
            if (!y) continue;
            const auto z = pair->image(*y, RichelotDirection::Transpose);
            if (!z) continue;
            std::ostringstream what;
            what << "(" << a << "," << b << "," << c << "), D = " << d << ", p = " << p;
            t.expect(*z == pair->jacobian().add(x, x), what.str());
            ++done;
        }
        t.expect(done == 20, "too many retries");
        divisors += done;
    }
    return t.outcome(std::to_string(divisors) + " divisors on " + std::to_string(specializations) +
                     " specializations");
}

Outcome weil_properties() {
    Tally t;
    std::mt19937_64 rng(cli::kDefaultSeed + 5);
    int curves = 0, twists = 0, weils = 0;
    for (std::uint32_t p : {11U, 13U, 29U, 53U, 101U}) {
        for (unsigned d : {1U, 2U}) {
            if (p > 29 && d == 2) continue;
            const auto& k = FiniteField::get(p, d);
            const ReducedCurve c(random_separable(rng, k, 5 + static_cast<int>(rng() % 2), true));
            const Jacobian jac = Jacobian::of(c);
            try {
                const Integer n = weil_poly(c).group_order();
                ++weils;
                for (int i = 0; i < 30; ++i)
                    t.expect(jac.scalar_mul(jac.random_divisor(rng), n).is_identity(), "chi(1) annihilates");
                ++curves;
            } catch (const std::exception& e) {
                t.expect(false, e.what());
            }
        }
    }
    for (int i = 0; i < 24; ++i) {
        const std::uint32_t p = std::vector<std::uint32_t>{3, 5, 7, 11, 13, 17, 19, 23}[rng() % 8];
        const auto& k = FiniteField::get(p, 1 + static_cast<unsigned>(rng() % 2));
        const FqPoly f = random_separable(rng, k, 5 + static_cast<int>(rng() % 2), false);
        FqElem ns = k.one();
        for (std::uint64_t j = 1; ns.is_square(); ++j) ns = k.from_index(j);
        try {
            const WeilPoly w = weil_poly(ReducedCurve(f));
            const WeilPoly wt = weil_poly(ReducedCurve(f * ns));
            weils += 2;
            t.expect(wt == w.quadratic_twist(), "twist negates a1");
            ++twists;
        } catch (const std::exception& e) {
            t.expect(false, e.what());
        }
    }
    return t.outcome(std::to_string(curves) + " Jacobians, " + std::to_string(twists) + " twist pairs, " +
                     std::to_string(weils) + " Weil polynomials within bounds");
}

Outcome resultant_structure() {
    Tally t;
    std::mt19937_64 rng(cli::kDefaultSeed + 6);
    const UniPoly T = UniPoly::variable();
    int count = 0;
    while (count < 50) {
        const std::uint32_t p = std::vector<std::uint32_t>{3, 5, 7, 11, 13}[rng() % 5];
        const auto& k = FiniteField::get(p, 1 + static_cast<unsigned>(rng() % 2));
        const WeilPoly w = weil_poly(ReducedCurve(random_separable(rng, k, 5 + static_cast<int>(rng() % 2), false)));
        const UniPoly f = f_resultant(w);
        const Rational q8 = Rational(w.q() * w.q() * w.q() * w.q() * w.q() * w.q() * w.q() * w.q());
        t.expect(f.degree() == 16, "degree 16");
        t.expect(divides(pow(T - UniPoly::constant(1), 4), f), "(T-1)^4 divides f");
        t.expect(f.coeff(16) == q8 && f.coeff(0) == q8, "q^8 at both ends");
        std::vector<Rational> rev(f.coefficients().rbegin(), f.coefficients().rend());
        t.expect(UniPoly(rev) == f, "closed under inversion");
        ++count;
    }
    for (long q : {5L, 9L, 25L, 121L}) {
        const auto rep = is_stably_irreducible(WeilPoly(q, 0, 0));
        t.expect(!rep.stable(), "T^4 + q^2 is not stably irreducible");
    }
    return t.outcome(std::to_string(count) + " Weil polynomials from random curves plus T^4 + q^2 controls");
}

Outcome oracle_equivalence() {
    Tally t;
    for (auto [p, d] : {std::pair{3U, 2U}, std::pair{5U, 2U}, std::pair{7U, 2U}, std::pair{11U, 2U},
                        std::pair{13U, 2U}}) {
        const auto& k = FiniteField::get(p, d);
        std::vector<bool> table(k.size(), false);
        for (std::uint64_t i = 0; i < k.size(); ++i) {
            const FqElem x = k.from_index(i);
            table[(x * x).index()] = true;
        }
        for (std::uint64_t i = 0; i < k.size(); ++i)
            t.expect(k.from_index(i).is_square() == table[i], "is_square over F_" + std::to_string(k.size()));
    }
    std::mt19937_64 rng(cli::kDefaultSeed + 7);
    for (int i = 0; i < 100; ++i) {
        const UniPoly chi = oracle::random_quartic(rng);
        t.expect(is_irreducible_quartic(chi) == !oracle::has_small_factor(chi), "quartic " + chi.to_string());
        for (const auto& pf : factor_quartic(chi))
            if (pf.factor.degree() >= 2) t.expect(!oracle::has_small_factor(pf.factor), "factor is irreducible");
    }
    for (int i = 0; i < 30; ++i) {
        const UniPoly p = oracle::random_monic(rng, 4, 5);
        const unsigned m = 1 + static_cast<unsigned>(rng() % 4), n = 1 + static_cast<unsigned>(rng() % 4);
        t.expect(power_charpoly(p, m * n) == power_charpoly(power_charpoly(p, m), n), "power_charpoly multiplicative");
        t.expect(power_charpoly(p, n) == oracle::newton_power_charpoly(p, n), "power_charpoly vs power sums");
    }
    const UniPoly T = UniPoly::variable();
    const auto c = [](long v) { return UniPoly::constant(v); };
    const QuarticField zeta8(pow(T, 4) + c(1)), fourth_root(pow(T, 4) - c(2)),
        biquad(pow(T, 4) - c(10) * T * T + c(1));
    const std::vector<std::pair<const QuarticField*, std::set<Integer>>> named{
        {&zeta8, {-2, -1, 2}}, {&fourth_root, {2}}, {&biquad, {2, 3, 6}}};
    for (const auto& [k, expected] : named) {
        t.expect(quadratic_subfields(*k) == expected, "subfields of " + k->defining_polynomial().to_string());
        for (const Integer& m : expected) t.expect(has_sqrt(*k, m), "has_sqrt confirms");
        for (long m : {-6L, -3L, 3L, 5L, 6L, 7L})
            if (!expected.count(m)) t.expect(!has_sqrt(*k, m), "has_sqrt rejects");
    }
    return t.outcome("squares for q <= 169, 100 quartics, power charpolys, three named fields");
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"symbolic identity suite", symbolic_identities},
        {"worked example end to end", example_end_to_end},
        {"family and twist consistency", family_twist},
        {"forward then transpose equals [2]", richelot_doubling},
        {"Weil data properties", weil_properties},
        {"f(T) structure", resultant_structure},
        {"oracle equivalence", oracle_equivalence},
    };
    int failed = 0, index = 0;
    for (const auto& [name, check] : criteria) {
        ++index;
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = check();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const auto ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
        std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << index << ". " << name << ": " << o.detail << " (" << ms
                  << " ms)\n";
        failed += !o.pass;
    }
    std::cout << (failed ? std::to_string(failed) + " criteria failed\n" : "all criteria passed\n");
    return failed ? 1 : 0;
}
