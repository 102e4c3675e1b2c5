/**
 * @file symbolic.hpp
 * @brief Multivariate polynomials over Q in {a, b, c, D, x, u, y, v}, extended
 *        by the formal radicals sqrt(D) and sqrt(-2).
 *
 * D is an indeterminate, so an identity that holds here holds for every
 * choice of the radicand at once. The y and v variables stand for the
 * ordinates of points on the two curves of a correspondence.
 */
#pragma once

#include "gl4/exact.hpp"
#include "gl4/numberfield.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>

namespace gl4::sym {

enum Var : std::size_t { A = 0, B, C, D, X, U, Y, V, kNumVars };

using Exponents = std::array<std::uint8_t, kNumVars>;

/// Sparse polynomial; no stored zero coefficients, so == is structural.
class MPoly {
public:
    MPoly() = default;
    static MPoly constant(const Rational& c);
    static MPoly var(Var v);

    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponents, Rational>& terms() const { return terms_; }
    void add_term(const Exponents& e, const Rational& c);

    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator*(const MPoly& o) const;
    MPoly operator*(const Rational& c) const;
    MPoly operator-() const { return *this * Rational(-1); }
    bool operator==(const MPoly& o) const { return terms_ == o.terms_; }

    MPoly derivative(Var v) const;
    /// Coefficient of v^k, as a polynomial free of v.
    MPoly coeff(Var v, unsigned k) const;
    unsigned degree(Var v) const;
    /// Exchanges the roles of two variables.
    MPoly swap_vars(Var v, Var w) const;
    /// Substitutes the rational values given for A, B, C, D (others untouched).
    MPoly specialize(const Rational& a, const Rational& b, const Rational& c, const Rational& d) const;

    std::string to_string() const;

private:
    std::map<Exponents, Rational> terms_;
};

/// c0 + c1 sqrt(D) + c2 sqrt(-2) + c3 sqrt(-2D).
class RadicalElem {
public:
    RadicalElem() = default;
    RadicalElem(MPoly c0, MPoly c1 = {}, MPoly c2 = {}, MPoly c3 = {}) : c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {}
    static RadicalElem rational(const Rational& r) { return RadicalElem(MPoly::constant(r)); }
    static RadicalElem sqrt_delta() { return RadicalElem({}, MPoly::constant(1)); }
    static RadicalElem sqrt_minus_two() { return RadicalElem({}, {}, MPoly::constant(1)); }
    static RadicalElem var(Var v) { return RadicalElem(MPoly::var(v)); }

    const MPoly& component(std::size_t i) const { return c_[i]; }
    bool is_zero() const;

    RadicalElem operator+(const RadicalElem& o) const;
    RadicalElem operator-(const RadicalElem& o) const;
    RadicalElem operator*(const RadicalElem& o) const;
    RadicalElem operator*(const Rational& r) const;
    RadicalElem operator-() const { return *this * Rational(-1); }
    bool operator==(const RadicalElem& o) const { return c_ == o.c_; }

    /// The automorphism s: sqrt(D) -> -sqrt(D), fixing sqrt(-2).
    RadicalElem conjugate_s() const;
    RadicalElem derivative(Var v) const;
    RadicalElem coeff(Var v, unsigned k) const;
    unsigned degree(Var v) const;
    RadicalElem swap_vars(Var v, Var w) const;
    /// Substitutes v -> scale * v.
    RadicalElem scale_var(Var v, const RadicalElem& scale) const;
    /// Coefficient of the monomial x^i u^j y^k v^l (a radical element in a, b, c, D).
    RadicalElem monomial_coeff(const std::array<std::uint8_t, 4>& xuyv) const;

    std::string to_string() const;

private:
    std::array<MPoly, 4> c_;
};

RadicalElem pow(const RadicalElem& x, unsigned e);

/// The family polynomials F1, F2, F3 in x, the derived L1, L2, L3, and
/// delta = det(coefficient of x^i in F_j).
struct FamilyPolynomials {
    std::array<RadicalElem, 3> F;
    std::array<RadicalElem, 3> L;
    RadicalElem delta;
};

/// F_j as polynomials in x over Q(a, b, c, D)(sqrt D).
std::array<RadicalElem, 3> family_F();
/// L_1 = F2' F3 - F2 F3', and cyclically.
std::array<RadicalElem, 3> derived_L(const std::array<RadicalElem, 3>& F);
RadicalElem coefficient_determinant(const std::array<RadicalElem, 3>& F);
FamilyPolynomials family_polynomials();
/// Builds the derived quantities from a (possibly altered) triple F.
FamilyPolynomials family_from(const std::array<RadicalElem, 3>& F);

/// det(q_ij) == D/2.
bool verify_delta(const FamilyPolynomials& fam);
/// D * s(F1) + L1 == 0, s(F2) + L2 == 0, s(F3) + L3 == 0.
bool verify_conjugation(const FamilyPolynomials& fam);
/// D * s(F1 F2 F3) + L1 L2 L3 == 0.
bool verify_conjugate_product(const FamilyPolynomials& fam);

/// The two equations of a correspondence between curves with coordinates (x, y) and (u, v).
struct Correspondence {
    RadicalElem first;   ///< F1(x)L1(u) + F2(x)L2(u)
    RadicalElem second;  ///< y v - F1(x)L1(u)(x - u)
};

Correspondence gamma(const FamilyPolynomials& fam);
/// Gamma with (x, y) and (u, v) exchanged.
Correspondence gamma_transpose(const FamilyPolynomials& fam);
/// The literal target system: L1(x)F1(u) + L2(x)F2(u) = 0, yv - L1(x)F1(u)(u - x) = 0.
Correspondence transposed_target(const FamilyPolynomials& fam);
/// Image of the conjugate correspondence s(Gamma) under (inv_sign * phitilde^{-1}) x phi^{-1},
/// with phi(x, y) = (x, sqrt(-2) y) and phitilde(x, y) = (x, y / sqrt(-2)).
Correspondence twisted_conjugate_gamma(const FamilyPolynomials& fam, int involution_sign = -1);

/// p = lambda q for a nonzero lambda free of x, u, y, v (decided by cross-multiplication).
bool proportional(const RadicalElem& p, const RadicalElem& q);

struct TransposeCheck {
    bool first_matches_target = false;
    bool second_matches_target = false;
    bool target_is_transpose = false;
    bool ok() const { return first_matches_target && second_matches_target && target_is_transpose; }
};

TransposeCheck check_transpose(const FamilyPolynomials& fam, int involution_sign = -1);
bool verify_transpose(const FamilyPolynomials& fam, int involution_sign = -1);

/// Specializes a radical element free of sqrt(-2), y, v, u to a polynomial in x over Q(sqrt D).
QuadPoly specialize(const RadicalElem& e, const Rational& a, const Rational& b, const Rational& c, long delta);

}  // namespace gl4::sym
