/**
 * @file richelot.hpp
 * @brief Push divisors through the correspondence
 *        F1(x)L1(u) + F2(x)L2(u) = 0,  y v = F1(x)L1(u)(x - u)
 *        between C: y^2 = F1F2F3 and C~: v^2 = (2/D)L1L2L3.
 *
 * Both curves pass through (0, 0) (F2(0) = L2(0) = 0), which serves as the
 * base point of both Jacobians. A divisor [P1 + P2 - 2W] is sent to
 * [Gamma(P1) + Gamma(P2) - 4W~]; the correction [Gamma(W) - 2W~] is
 * 2-torsion because Gamma commutes with the hyperelliptic involution, so it
 * cancels from a sum of two points.
 *
 * Only split primes are supported: the points of a degree-2 divisor over F_p
 * live in F_{p^2}, their images in F_{p^4}, and the sum descends to F_p.
 */
#pragma once

#include "gl4/curves.hpp"
#include "gl4/jacobian.hpp"

#include <optional>

namespace gl4 {

enum class RichelotDirection { Forward, Transpose };

/// A family member reduced at a split prime, with Jacobians over F_p and F_{p^4}.
class RichelotPair {
public:
    /// Throws BadReduction if p is not split, or either curve reduces badly.
    RichelotPair(const Rational& a, const Rational& b, const Rational& c, long delta, std::uint32_t p, int label = 1);

    const ResidueField& residue_field() const { return rf_; }
    const ReducedCurve& curve() const { return curve_; }
    const ReducedCurve& tilde() const { return tilde_; }
    /// Jacobian of C (forward source), base point (0, 0).
    const Jacobian& jacobian() const { return jac_; }
    /// Jacobian of C~.
    const Jacobian& tilde_jacobian() const { return jac_t_; }

    /// Image of d; nullopt asks the caller to retry with another divisor.
    std::optional<MumfordDivisor> image(const MumfordDivisor& d, RichelotDirection dir) const;

private:
    RichelotPair(const FamilyMember& m, const ResidueField& rf);
    std::optional<MumfordDivisor> push_point(const FqElem& x0, const FqElem& y0, RichelotDirection dir) const;

    ResidueField rf_;
    ReducedCurve curve_;
    ReducedCurve tilde_;
    Jacobian jac_;
    Jacobian jac_t_;
    const FiniteField* ext_;
    std::array<FqPoly, 3> F_;
    std::array<FqPoly, 3> L_;
    Jacobian jac_ext_;
    Jacobian jac_t_ext_;
};

/// Convenience wrapper matching the pair's image().
std::optional<MumfordDivisor> richelot_image(const RichelotPair& pair, const MumfordDivisor& d, RichelotDirection dir);

}  // namespace gl4
