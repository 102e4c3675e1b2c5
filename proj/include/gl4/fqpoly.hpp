/**
 * @file fqpoly.hpp
 * @brief Univariate polynomials over a small finite field.
 */
#pragma once

#include "gl4/finitefield.hpp"

#include <string>
#include <tuple>
#include <vector>

namespace gl4 {

class FqPoly {
public:
    explicit FqPoly(const FiniteField& field) : field_(&field) {}
    FqPoly(const FiniteField& field, std::vector<FqElem> coeffs);
    static FqPoly constant(const FqElem& c);
    /// x - root.
    static FqPoly linear(const FqElem& root);

    const FiniteField& field() const { return *field_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<FqElem>& coefficients() const { return coeffs_; }
    FqElem coeff(std::size_t i) const;
    FqElem leading() const;

    FqPoly operator+(const FqPoly& o) const;
    FqPoly operator-(const FqPoly& o) const;
    FqPoly operator*(const FqPoly& o) const;
    FqPoly operator*(const FqElem& c) const;
    FqPoly operator-() const;
    bool operator==(const FqPoly& o) const { return field_ == o.field_ && coeffs_ == o.coeffs_; }
    bool operator!=(const FqPoly& o) const { return !(*this == o); }

    FqElem eval(const FqElem& x) const;
    FqPoly derivative() const;
    FqPoly monic() const;
    /// p(x + shift).
    FqPoly taylor_shift(const FqElem& shift) const;
    /// Coefficients mapped into a larger field of the same characteristic.
    FqPoly embed(const FiniteField& ext) const;
    /// Coefficients mapped into a subfield that contains them all.
    FqPoly restrict_to(const FiniteField& sub) const;
    bool coefficients_in(const FiniteField& sub) const;

    std::string to_string(const std::string& var = "x") const;

private:
    void normalize();
    const FiniteField* field_;
    std::vector<FqElem> coeffs_;
};

std::pair<FqPoly, FqPoly> divmod(const FqPoly& a, const FqPoly& b);
FqPoly operator%(const FqPoly& a, const FqPoly& b);
FqPoly operator/(const FqPoly& a, const FqPoly& b);
/// Monic gcd g with g = s a + t b.
std::tuple<FqPoly, FqPoly, FqPoly> xgcd(const FqPoly& a, const FqPoly& b);
FqPoly gcd(const FqPoly& a, const FqPoly& b);
/// Squarefree with nonzero leading coefficient (gcd(f, f') = 1).
bool is_separable(const FqPoly& f);
/// Roots of a polynomial of degree <= 2 lying in its coefficient field.
std::vector<FqElem> roots_of_quadratic(const FqPoly& f);

}  // namespace gl4
