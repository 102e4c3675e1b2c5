/**
 * @file finitefield.hpp
 * @brief Small finite fields F_p, F_{p^2}, F_{p^4} (p odd, p <= 2^16).
 *
 * F_{p^2} = F_p(theta) with theta^2 = c, c the least quadratic non-residue
 * mod p. F_{p^4} = F_{p^2}(eta) with eta^2 = nu, nu the first non-square of
 * F_{p^2} in index order. Coordinates of an element of F_{p^4} are
 * (x0, x1, x2, x3) for (x0 + x1 theta) + (x2 + x3 theta) eta, so the
 * embedding F_p -> F_{p^2} -> F_{p^4} is padding with zeros.
 *
 * Field contexts are interned: FiniteField::get returns a reference that
 * stays valid for the life of the process and is never mutated.
 */
#pragma once

#include "gl4/exact.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gl4 {

class FqElem;

class FiniteField {
public:
    static constexpr std::uint32_t kMaxPrime = 1U << 16;

    /// Interned field of order p^degree; degree in {1, 2, 4}.
    static const FiniteField& get(std::uint32_t p, unsigned degree);

    std::uint32_t characteristic() const { return p_; }
    unsigned degree() const { return degree_; }
    /// Number of elements p^degree.
    std::uint64_t size() const { return size_; }
    /// The non-residue c with theta^2 = c.
    std::uint32_t base_nonresidue() const { return nonresidue_; }

    FqElem zero() const;
    FqElem one() const;
    FqElem from_int(std::int64_t v) const;
    FqElem from_rational(const Rational& r) const;
    FqElem from_coords(const std::array<std::uint32_t, 4>& coords) const;
    /// Element number `index` in the enumeration c0 + c1 p + c2 p^2 + c3 p^3.
    FqElem from_index(std::uint64_t index) const;
    /// theta (requires degree >= 2).
    FqElem theta() const;
    /// eta (requires degree 4).
    FqElem eta() const;
    /// Image of x (from a subfield of this field) under the tower embedding.
    FqElem embed(const FqElem& x) const;
    /// Whether x (in this field) lies in the subfield of the given degree.
    bool in_subfield(const FqElem& x, unsigned sub_degree) const;
    /// Projection of x onto a subfield that contains it.
    FqElem restrict_to(const FqElem& x, const FiniteField& sub) const;

    bool is_residue_mod_p(std::uint32_t a) const { return residue_[a % p_] != 0; }

    bool operator==(const FiniteField& o) const { return p_ == o.p_ && degree_ == o.degree_; }

private:
    FiniteField(std::uint32_t p, unsigned degree);
    friend class FqElem;

    std::uint32_t p_;
    unsigned degree_;
    std::uint64_t size_;
    std::uint32_t nonresidue_ = 0;
    std::array<std::uint32_t, 2> tower_nonsquare_{};  // nu in F_{p^2}
    std::array<std::uint32_t, 4> nonsquare_{};       // fixed non-square of this field
    std::vector<std::uint8_t> residue_;               // Legendre table mod p (0 counts as residue)
};

/// Element of a small finite field. Cheap to copy.
class FqElem {
public:
    FqElem() = default;

    const FiniteField& field() const { return *field_; }
    const std::array<std::uint32_t, 4>& coords() const { return c_; }
    std::uint64_t index() const;

    bool is_zero() const { return c_ == std::array<std::uint32_t, 4>{}; }
    bool is_one() const;

    FqElem operator+(const FqElem& o) const;
    FqElem operator-(const FqElem& o) const;
    FqElem operator*(const FqElem& o) const;
    FqElem operator/(const FqElem& o) const { return *this * o.inverse(); }
    FqElem operator-() const;
    FqElem& operator+=(const FqElem& o) { return *this = *this + o; }
    FqElem& operator-=(const FqElem& o) { return *this = *this - o; }
    FqElem& operator*=(const FqElem& o) { return *this = *this * o; }
    bool operator==(const FqElem& o) const;
    bool operator!=(const FqElem& o) const { return !(*this == o); }

    /// Throws DomainError on zero.
    FqElem inverse() const;
    FqElem pow(std::uint64_t e) const;
    /// x^p.
    FqElem frobenius() const;
    /// Euler's criterion x^{(q-1)/2} = 1; zero counts as a square.
    bool is_square() const;
    /// A square root if one exists (Tonelli-Shanks).
    std::optional<FqElem> sqrt() const;
    /// Norm down to F_p.
    std::uint32_t norm_to_prime_field() const;

    std::string to_string() const;

private:
    friend class FiniteField;
    FqElem(const FiniteField* f, std::array<std::uint32_t, 4> c) : field_(f), c_(c) {}
    void check_same(const FqElem& o) const;

    const FiniteField* field_ = nullptr;
    std::array<std::uint32_t, 4> c_{};
};

bool is_prime(std::uint64_t n);
/// Legendre symbol (a|p) for an odd prime p, in {-1, 0, 1}.
int legendre(const Integer& a, std::uint32_t p);

}  // namespace gl4
