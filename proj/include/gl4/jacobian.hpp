/**
 * @file jacobian.hpp
 * @brief Jacobian arithmetic in Mumford form (Cantor's algorithm).
 *
 * Cantor's algorithm wants an imaginary model Y^2 = g(X) with deg g = 5.
 * A curve y^2 = f(x) with a rational Weierstrass point (r, 0) gets one from
 * x = r + 1/X, Y = y X^3, so that g(X) = X^6 f(r + 1/X) and the point
 * (r, 0) goes to infinity. All divisors below live on that model; point()
 * accepts coordinates on the original curve.
 */
#pragma once

#include "gl4/curves.hpp"
#include "gl4/fqpoly.hpp"

#include <optional>
#include <random>

namespace gl4 {

/// [u, v]: u monic, deg v < deg u <= 2, u | v^2 - g.
struct MumfordDivisor {
    FqPoly u;
    FqPoly v;
    bool is_identity() const { return u.degree() == 0; }
    bool operator==(const MumfordDivisor& o) const { return u == o.u && v == o.v; }
    bool operator!=(const MumfordDivisor& o) const { return !(*this == o); }
    std::string to_string() const { return "[" + u.to_string() + ", " + v.to_string() + "]"; }
};

class Jacobian {
public:
    /// Jacobian of y^2 = f(x) over f's field, base point (base_root, 0).
    Jacobian(const FqPoly& f, const FqElem& base_root);
    /// Uses the least root of f in index order; throws DomainError if f has no root.
    static Jacobian of(const ReducedCurve& curve);

    const FiniteField& field() const { return g_.field(); }
    const FqPoly& original() const { return f_; }
    /// The quintic model g.
    const FqPoly& model() const { return g_; }
    const FqElem& base_root() const { return r_; }

    MumfordDivisor identity() const;
    bool is_valid(const MumfordDivisor& d) const;
    /// [P - W] for P = (x, y) on the original curve, x != base root.
    MumfordDivisor point(const FqElem& x, const FqElem& y) const;
    /// Points of the quintic model, as (X, Y).
    MumfordDivisor model_point(const FqElem& x, const FqElem& y) const;

    MumfordDivisor add(const MumfordDivisor& a, const MumfordDivisor& b) const;
    MumfordDivisor negate(const MumfordDivisor& d) const;
    MumfordDivisor scalar_mul(const MumfordDivisor& d, const Integer& n) const;

    /// Sum of two random points of the original curve (seeded by the caller).
    MumfordDivisor random_divisor(std::mt19937_64& rng) const;
    /// A random affine point of the original curve away from the base point.
    std::pair<FqElem, FqElem> random_point(std::mt19937_64& rng) const;

private:
    MumfordDivisor reduce(FqPoly u, FqPoly v) const;
    FqPoly f_;
    FqElem r_;
    FqPoly g_;
};

}  // namespace gl4
