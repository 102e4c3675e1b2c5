/**
 * @file curves.hpp
 * @brief Genus-2 curves y^2 = f(x) over Q(sqrt D) and over small finite
 *        fields: the family C(a, b, c), its partner C~, twists, reduction,
 *        point counting and Weil polynomials.
 */
#pragma once

#include "gl4/exact.hpp"
#include "gl4/fqpoly.hpp"
#include "gl4/numberfield.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>

namespace gl4 {

/// y^2 = f(x) over Q(sqrt D), deg f in {5, 6}, disc(f) != 0.
class Genus2Curve {
public:
    /// Throws DomainError for a wrong degree or a vanishing discriminant.
    explicit Genus2Curve(QuadPoly f);
    const QuadPoly& f() const { return f_; }
    long delta() const { return f_.delta(); }
    bool operator==(const Genus2Curve& o) const { return f_ == o.f_; }
    std::string to_string() const;

private:
    QuadPoly f_;
};

/// y^2 = f(x) over F_q with f separable of degree 5 or 6.
class ReducedCurve {
public:
    explicit ReducedCurve(FqPoly f);
    const FqPoly& f() const { return f_; }
    const FiniteField& field() const { return f_.field(); }
    std::uint64_t q() const { return field().size(); }
    std::string to_string() const { return "y^2 = " + f_.to_string(); }

private:
    FqPoly f_;
};

/// chi(T) = T^4 - a1 T^3 + a2 T^2 - q a1 T + q^2.
class WeilPoly {
public:
    /// Throws DomainError unless q is an odd prime power and the Weil bounds hold.
    WeilPoly(Integer q, Integer a1, Integer a2);
    const Integer& q() const { return q_; }
    const Integer& a1() const { return a1_; }
    const Integer& a2() const { return a2_; }
    /// The prime dividing q.
    Integer characteristic() const;
    /// chi(T), monic.
    UniPoly charpoly() const;
    /// P(T) = 1 - a1 T + a2 T^2 - q a1 T^3 + q^2 T^4.
    UniPoly reciprocal() const;
    /// #Jac(F_q) = chi(1).
    Integer group_order() const;
    /// Weil data of the quadratic twist: (q, -a1, a2).
    WeilPoly quadratic_twist() const { return WeilPoly(q_, -a1_, a2_); }
    bool operator==(const WeilPoly& o) const { return q_ == o.q_ && a1_ == o.a1_ && a2_ == o.a2_; }
    std::string to_string() const;

private:
    Integer q_, a1_, a2_;
};

/// F_j, L_j specialized at rational parameters.
struct FamilyMember {
    Rational a, b, c;
    long delta = 0;
    std::array<QuadPoly, 3> F{QuadPoly(0), QuadPoly(0), QuadPoly(0)};
    std::array<QuadPoly, 3> L{QuadPoly(0), QuadPoly(0), QuadPoly(0)};
};

FamilyMember family_member(const Rational& a, const Rational& b, const Rational& c, long delta);
/// y^2 = F1 F2 F3. Throws DomainError("degenerate parameters") when singular.
Genus2Curve family_curve(const Rational& a, const Rational& b, const Rational& c, long delta);
/// v^2 = (2/D) L1 L2 L3.
Genus2Curve tilde_curve(const Rational& a, const Rational& b, const Rational& c, long delta);
/// y^2 = alpha f(x).
Genus2Curve twist(const Genus2Curve& curve, const QuadElem& alpha);
/// The curve written out in the worked example over Q(sqrt 2).
Genus2Curve example_curve();
/// lambda with f1 = lambda f2, if the two right-hand sides are proportional.
std::optional<QuadElem> proportionality_factor(const Genus2Curve& c1, const Genus2Curve& c2);
/// f1 = lambda^2 f2 for some lambda in Q(sqrt D).
bool isomorphic_by_square(const Genus2Curve& c1, const Genus2Curve& c2);

/// Coefficient-wise reduction; throws BadReduction on a denominator divisible by p.
FqPoly reduce_poly(const QuadPoly& f, const ResidueField& rf);
/// Reduction at the prime above p with the given label; throws BadReduction.
ReducedCurve reduce(const Genus2Curve& curve, std::uint32_t p, int label = 1);
ReducedCurve reduce(const Genus2Curve& curve, const ResidueField& rf);

/// #C(F_q) on the smooth projective model.
std::uint64_t count_points(const ReducedCurve& curve);
/// #C(ext) for an extension field of the curve's field.
std::uint64_t count_points_over(const ReducedCurve& curve, const FiniteField& ext);
/// Weil data from #C(F_q) and #C(F_{q^2}).
WeilPoly weil_poly(const ReducedCurve& curve);
WeilPoly weil_poly(const Genus2Curve& curve, std::uint32_t p, int label = 1);

}  // namespace gl4
