/**
 * @file numberfield.hpp
 * @brief Real quadratic fields Q(sqrt D), quartic fields Q[T]/(chi), and
 *        reduction of quadratic-field elements modulo unramified primes.
 */
#pragma once

#include "gl4/exact.hpp"
#include "gl4/finitefield.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace gl4 {

/// a + b sqrt(D) with D squarefree, D not in {0, 1}.
class QuadElem {
public:
    QuadElem(Rational a, Rational b, long delta);
    static QuadElem rational(const Rational& a, long delta) { return QuadElem(a, 0, delta); }
    static QuadElem sqrt_delta(long delta) { return QuadElem(0, 1, delta); }
    /// Parses "a+b*sqrt(D)" (terms in either order, either may be omitted).
    /// A purely rational text needs `delta_hint`; a radicand in the text must
    /// agree with a nonzero hint.
    static QuadElem parse(const std::string& text, long delta_hint = 0);

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    long delta() const { return delta_; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }

    QuadElem operator+(const QuadElem& o) const;
    QuadElem operator-(const QuadElem& o) const;
    QuadElem operator*(const QuadElem& o) const;
    QuadElem operator/(const QuadElem& o) const;
    QuadElem operator-() const { return QuadElem(-a_, -b_, delta_); }
    QuadElem operator*(const Rational& c) const { return QuadElem(a_ * c, b_ * c, delta_); }
    QuadElem& operator+=(const QuadElem& o) { return *this = *this + o; }
    QuadElem& operator-=(const QuadElem& o) { return *this = *this - o; }
    QuadElem& operator*=(const QuadElem& o) { return *this = *this * o; }
    bool operator==(const QuadElem& o) const { return a_ == o.a_ && b_ == o.b_ && delta_ == o.delta_; }
    bool operator!=(const QuadElem& o) const { return !(*this == o); }

    QuadElem inverse() const;

    /// Normalized text form, e.g. "12-33/2*sqrt(2)".
    std::string to_string() const;

private:
    void check_same(const QuadElem& o) const;
    Rational a_;
    Rational b_;
    long delta_;
};

/// a^2 - D b^2.
Rational norm(const QuadElem& x);
QuadElem conjugate(const QuadElem& x);
/// A square root of x inside Q(sqrt D), if there is one.
std::optional<QuadElem> square_root(const QuadElem& x);
/// Whether D is squarefree and not 0 or 1.
bool is_valid_radicand(long delta);

enum class NormClass { MinusTwoSquare, MinusTwoDeltaSquare, Neither };
std::string to_string(NormClass c);

/// Classifies Nm(alpha) against -2 Q^{x2} and -2D Q^{x2}.
NormClass norm_class(const QuadElem& alpha);

/// Polynomial with coefficients in one quadratic field, ascending degree.
class QuadPoly {
public:
    explicit QuadPoly(long delta) : delta_(delta) {}
    QuadPoly(std::vector<QuadElem> coeffs, long delta);

    long delta() const { return delta_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<QuadElem>& coefficients() const { return coeffs_; }
    QuadElem coeff(std::size_t i) const;

    QuadPoly operator+(const QuadPoly& o) const;
    QuadPoly operator-(const QuadPoly& o) const;
    QuadPoly operator*(const QuadPoly& o) const;
    QuadPoly operator*(const QuadElem& c) const;
    bool operator==(const QuadPoly& o) const { return delta_ == o.delta_ && coeffs_ == o.coeffs_; }

    QuadPoly derivative() const;
    QuadElem eval(const QuadElem& x) const;
    /// Galois conjugate of every coefficient.
    QuadPoly conjugated() const;

    std::string to_string(const std::string& var = "x") const;

private:
    void normalize();
    std::vector<QuadElem> coeffs_;
    long delta_;
};

/// Sylvester resultant over Q(sqrt D).
QuadElem resultant(const QuadPoly& p, const QuadPoly& q);
/// (-1)^{n(n-1)/2} Res(f, f') / lc(f).
QuadElem discriminant(const QuadPoly& f);

/// Q[T]/(chi) for a monic irreducible integer quartic chi.
class QuarticField {
public:
    /// Throws DomainError if chi is not a monic irreducible integer quartic.
    explicit QuarticField(UniPoly chi, std::string provenance = {});

    const UniPoly& defining_polynomial() const { return chi_; }
    const std::string& provenance() const { return provenance_; }

private:
    UniPoly chi_;
    std::string provenance_;
};

/// Whether Q(sqrt m) embeds in K, by solving for a conjugate pair of monic
/// quadratic factors of chi over Q(sqrt m).
bool has_sqrt(const QuarticField& k, const Integer& m);
/// Candidate radicands for quadratic subfields (may contain false positives).
std::set<Integer> quadratic_subfield_candidates(const UniPoly& chi);
/// All squarefree m with Q(sqrt m) contained in K.
std::set<Integer> quadratic_subfields(const QuarticField& k);
/// K1 and K2 share no quadratic subfield.
bool intersection_is_Q(const QuarticField& k1, const QuarticField& k2);

/// Residue field of Q(sqrt D) at a prime above an odd unramified p.
struct ResidueField {
    std::uint32_t p = 0;
    long delta = 0;
    bool inert = false;
    /// 1 or 2 for split primes (roots of T^2 - D ordered as least residues); 0 when inert.
    int label = 0;
    const FiniteField* field = nullptr;
    /// Image of sqrt(D).
    FqElem sqrt_delta;

    /// Size of the residue field (p or p^2).
    std::uint64_t q() const { return field->size(); }
    std::string describe() const;
};

/// Raised when a prime cannot be used (ramified, p = 2, bad denominators, singular reduction).
class BadReduction : public std::runtime_error {
public:
    BadReduction(std::uint32_t prime, const std::string& reason);
    std::uint32_t prime() const { return prime_; }

private:
    std::uint32_t prime_;
};

/// Residue field at the prime above p with the given label (ignored when inert).
ResidueField residue_field(long delta, std::uint32_t p, int label = 1);
FqElem reduce_mod_prime(const QuadElem& x, const ResidueField& rf);

}  // namespace gl4
