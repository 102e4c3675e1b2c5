/**
 * @file exact.hpp
 * @brief Exact rational arithmetic and univariate polynomials over Q.
 *
 * Everything in the library is built on top of these types. Nothing here
 * (or anywhere else) uses floating point: every verdict the certifier
 * produces is an exact yes/no answer.
 */
#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gl4 {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised when an operation is called outside its mathematical domain.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Dense univariate polynomial over Q, coefficients in ascending degree.
/// The zero polynomial has no coefficients; otherwise the top one is nonzero.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coefficients);
    UniPoly(std::initializer_list<Rational> coefficients);

    static UniPoly constant(const Rational& c);
    static UniPoly monomial(const Rational& c, std::size_t degree);
    /// The polynomial T.
    static UniPoly variable();

    /// Degree, or -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    /// Coefficient of T^i; zero past the degree.
    Rational coeff(std::size_t i) const;
    const Rational& leading() const;

    bool is_monic() const;
    bool has_integer_coefficients() const;
    UniPoly monic() const;
    UniPoly derivative() const;
    Rational eval(const Rational& t) const;
    /// T^deg * p(1/T).
    UniPoly reversed() const;

    UniPoly operator-() const;
    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    UniPoly& operator*=(const UniPoly& o);
    UniPoly& operator*=(const Rational& c);

    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
    friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
    friend UniPoly operator*(const Rational& c, UniPoly a) { return a *= c; }
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

    std::string to_string(const std::string& var = "T") const;

private:
    void normalize();
    std::vector<Rational> coeffs_;
};

/// Euclidean division; throws DomainError on division by zero.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
/// Quotient a / b, which must be exact.
UniPoly exact_quotient(const UniPoly& a, const UniPoly& b);
bool divides(const UniPoly& d, const UniPoly& a);
/// Monic gcd (zero if both inputs are zero).
UniPoly gcd(UniPoly a, UniPoly b);
UniPoly pow(const UniPoly& p, unsigned e);

/// Sylvester resultant Res(p, q). Throws if both are zero.
Rational resultant(const UniPoly& p, const UniPoly& q);
Rational discriminant(const UniPoly& p);

/// Polynomial in z whose coefficients (ascending in z) are polynomials in T.
struct BiPoly {
    std::vector<UniPoly> z_coeffs;

    int z_degree() const;
    void normalize();
};

/// Res_z(p, q) as a polynomial in T, from the Sylvester determinant over Q[T].
UniPoly resultant_in_z(const BiPoly& p, const BiPoly& q);

/// The t-th cyclotomic polynomial.
UniPoly cyclotomic(unsigned long t);
unsigned long euler_phi(unsigned long n);
/// All t >= 2 with phi(t) <= bound, ascending.
std::vector<unsigned long> totient_bounded_orders(unsigned long bound);

/// Prime factorization of |n| (n != 0) by trial division.
std::vector<std::pair<Integer, unsigned>> factor_integer(const Integer& n);
/// Positive divisors of |n|, ascending.
std::vector<Integer> divisors(const Integer& n);
/// Squarefree m with n/m a positive square; sign(m) = sign(n).
Integer squarefree_part(const Integer& n);
/// Squarefree part of a nonzero rational (of num * den).
Integer squarefree_part(const Rational& r);
/// Whether r is the square of a rational, and its nonnegative root if so.
bool is_rational_square(const Rational& r, Rational* root = nullptr);

/// Distinct rational roots of a nonzero polynomial, ascending.
std::vector<Rational> rational_roots(const UniPoly& p);

struct PolyFactor {
    UniPoly factor;
    unsigned multiplicity = 1;

    friend bool operator==(const PolyFactor&, const PolyFactor&) = default;
};

/// Complete factorization over Q of a monic integer quartic into monic
/// irreducible factors (ordered by degree, then coefficients).
std::vector<PolyFactor> factor_quartic(const UniPoly& chi);
bool is_irreducible_quartic(const UniPoly& chi);

/// Monic polynomial whose roots are the n-th powers of the roots of chi,
/// computed as Res_z(chi(z), T - z^n).
UniPoly power_charpoly(const UniPoly& chi, unsigned n);

/// Decimal string for a rational ("p" or "p/q").
std::string to_string(const Rational& r);
/// Parses "p" or "p/q" with optional sign; rejects anything else.
Rational parse_rational(const std::string& text);

}  // namespace gl4
