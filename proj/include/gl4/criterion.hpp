/**
 * @file criterion.hpp
 * @brief Certifying End(Jac(C) over Qbar) = Z from two primes, and the
 *        norm-class classification of End^0 of the restriction of scalars.
 *
 * A prime is usable when its Weil polynomial chi is irreducible, no ratio of
 * two Frobenius eigenvalues is a root of unity (checked on the degree-16
 * resultant f(T) against Phi_t with phi(t) <= 16), and p does not divide a2.
 * Two usable primes whose quartic fields share no quadratic subfield give
 * the conclusion. Failure proves nothing, so the only other verdict is
 * Inconclusive.
 */
#pragma once

#include "gl4/curves.hpp"
#include "gl4/exact.hpp"
#include "gl4/numberfield.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace gl4 {

/// f(T) = Res_z(z^4 P(1/z), z^4 P(T/z)) = prod_{i,j} (alpha_j T - alpha_i).
UniPoly f_resultant(const WeilPoly& w);

struct StableIrreducibilityReport {
    WeilPoly weil;
    bool irreducible = false;
    UniPoly f_poly;
    std::vector<unsigned long> tested_orders;
    std::optional<unsigned long> failing_t;
    bool stable() const { return irreducible && !failing_t; }
};

StableIrreducibilityReport is_stably_irreducible(const WeilPoly& w);
/// p does not divide a2.
bool is_ordinary(const WeilPoly& w);

struct PrimeData {
    std::uint32_t p = 0;
    ResidueField residue;
    WeilPoly weil;
    bool ordinary = false;
    StableIrreducibilityReport stability;
    /// Quadratic subfields of Q[T]/(chi); empty when chi is reducible.
    std::set<Integer> subfields;
};

enum class Conclusion { EndIsZ, Inconclusive };
std::string to_string(Conclusion c);

enum class EndAlgebra { QsqrtMinus2, QsqrtPlus2, NotCompletelyDefined };
std::string to_string(EndAlgebra e);

struct GL4Block {
    Rational a, b, c;
    long delta = 0;
    QuadElem alpha{0, 1, 2};
    NormClass norm_class = NormClass::Neither;
    int cocycle = 0;
    EndAlgebra end_algebra = EndAlgebra::NotCompletelyDefined;
    /// [Q(sqrt D, sqrt -2) : Q] = 4.
    bool degree_four = false;
};

struct Certificate {
    std::string curve_description;
    Genus2Curve curve;
    PrimeData first;
    PrimeData second;
    bool intersection_is_Q = false;
    Conclusion conclusion = Conclusion::Inconclusive;
    /// Names the first failing hypothesis when Inconclusive.
    std::string reason;
    std::optional<GL4Block> gl4;
};

/// Weil data and stability analysis at the prime above p with the given label.
PrimeData analyze_prime(const Genus2Curve& curve, std::uint32_t p, int label = 1);

/// Runs the two-prime criterion. Throws DomainError if p == q and
/// BadReduction naming the prime if either is unusable.
Certificate certify_trivial_endos(const Genus2Curve& curve, std::uint32_t p, std::uint32_t q, int label_p = 1,
                                  int label_q = 1);

/// Throws DomainError when Q(sqrt D, sqrt -2) is not of degree 4 or alpha is zero.
EndAlgebra classify_end_algebra(long delta, const QuadElem& alpha);
/// -2 or +2; throws DomainError when alpha is in neither norm class.
int cocycle_value(long delta, const QuadElem& alpha);

/// Certificate for C_alpha = twist(C(a, b, c), alpha) with the GL4 block filled in.
Certificate genuinely_gl4_certificate(const Rational& a, const Rational& b, const Rational& c, long delta,
                                      const QuadElem& alpha, std::uint32_t p, std::uint32_t q, int label_p = 1,
                                      int label_q = 1);

}  // namespace gl4
