#include "gl4/curves.hpp"

#include "gl4/symbolic.hpp"

#include <stdexcept>

namespace gl4 {

namespace {

const sym::FamilyPolynomials& generic_family() {
    static const sym::FamilyPolynomials fam = sym::family_polynomials();
    return fam;
}

QuadPoly product(const std::array<QuadPoly, 3>& p) { return p[0] * p[1] * p[2]; }

}  // namespace

// ---------------------------------------------------------------------------
// Genus2Curve / ReducedCurve

Genus2Curve::Genus2Curve(QuadPoly f) : f_(std::move(f)) {
    if (f_.degree() != 5 && f_.degree() != 6)
        throw DomainError("genus-2 model needs deg f in {5, 6}, got " + std::to_string(f_.degree()));
    if (discriminant(f_).is_zero()) throw DomainError("degenerate parameters: disc(f) = 0");
}

std::string Genus2Curve::to_string() const { return "y^2 = " + f_.to_string() + " over Q(sqrt(" + std::to_string(delta()) + "))"; }

ReducedCurve::ReducedCurve(FqPoly f) : f_(std::move(f)) {
    if (f_.degree() != 5 && f_.degree() != 6)
        throw DomainError("genus-2 model needs deg f in {5, 6}, got " + std::to_string(f_.degree()));
    if (!is_separable(f_)) throw DomainError("f is not separable");
}

// ---------------------------------------------------------------------------
// WeilPoly

WeilPoly::WeilPoly(Integer q, Integer a1, Integer a2) : q_(std::move(q)), a1_(std::move(a1)), a2_(std::move(a2)) {
    if (q_ < 3) throw DomainError("Weil polynomial needs q >= 3");
    const auto fac = factor_integer(q_);
    if (fac.size() != 1 || fac[0].first == 2) throw DomainError("q must be a power of an odd prime");
    if (a1_ * a1_ > 16 * q_) throw DomainError("Weil bound a1^2 <= 16q violated");
    if (abs(a2_) > 6 * q_) throw DomainError("Weil bound |a2| <= 6q violated");
    if (q_ + 1 - a1_ < 0) throw DomainError("q + 1 - a1 must be nonnegative");
}

Integer WeilPoly::characteristic() const { return factor_integer(q_)[0].first; }

UniPoly WeilPoly::charpoly() const {
    return UniPoly({Rational(q_ * q_), Rational(-q_ * a1_), Rational(a2_), Rational(-a1_), Rational(1)});
}

UniPoly WeilPoly::reciprocal() const { return charpoly().reversed(); }

Integer WeilPoly::group_order() const { return 1 - a1_ + a2_ - q_ * a1_ + q_ * q_; }

std::string WeilPoly::to_string() const {
    return "q=" + q_.get_str() + " a1=" + a1_.get_str() + " a2=" + a2_.get_str();
}

// ---------------------------------------------------------------------------
// Family

FamilyMember family_member(const Rational& a, const Rational& b, const Rational& c, long delta) {
    if (!is_valid_radicand(delta)) throw DomainError("radicand must be squarefree and not 0 or 1");
    const auto& fam = generic_family();
    FamilyMember m{a, b, c, delta};
    for (std::size_t j = 0; j < 3; ++j) {
        m.F[j] = sym::specialize(fam.F[j], a, b, c, delta);
        m.L[j] = sym::specialize(fam.L[j], a, b, c, delta);
    }
    return m;
}

Genus2Curve family_curve(const Rational& a, const Rational& b, const Rational& c, long delta) {
    return Genus2Curve(product(family_member(a, b, c, delta).F));
}

Genus2Curve tilde_curve(const Rational& a, const Rational& b, const Rational& c, long delta) {
    const QuadElem scale(Rational(2, 1) / delta, 0, delta);
    return Genus2Curve(product(family_member(a, b, c, delta).L) * scale);
}

Genus2Curve twist(const Genus2Curve& curve, const QuadElem& alpha) {
    if (alpha.is_zero()) throw DomainError("twist by zero");
    if (alpha.delta() != curve.delta()) throw DomainError("twist parameter lives in a different field");
    return Genus2Curve(curve.f() * alpha);
}

Genus2Curve example_curve() {
    const long d = 2;
    auto e = [d](Rational r, Rational s) { return QuadElem(std::move(r), std::move(s), d); };
    return Genus2Curve(QuadPoly({e(0, 0), e(0, -2), e(-6, -5), e(-24, -3), e(-21, Rational(-11, 2)),
                                 e(12, Rational(-33, 2)), e(18, -10)},
                                d));
}

std::optional<QuadElem> proportionality_factor(const Genus2Curve& c1, const Genus2Curve& c2) {
    if (c1.delta() != c2.delta() || c1.f().degree() != c2.f().degree()) return std::nullopt;
    const QuadElem lambda = c1.f().coefficients().back() / c2.f().coefficients().back();
    if (c2.f() * lambda != c1.f()) return std::nullopt;
    return lambda;
}

bool isomorphic_by_square(const Genus2Curve& c1, const Genus2Curve& c2) {
    const auto lambda = proportionality_factor(c1, c2);
    return lambda && square_root(*lambda).has_value();
}

// ---------------------------------------------------------------------------
// Reduction and counting

ReducedCurve reduce(const Genus2Curve& curve, std::uint32_t p, int label) {
    return reduce(curve, residue_field(curve.delta(), p, label));
}

FqPoly reduce_poly(const QuadPoly& f, const ResidueField& rf) {
    std::vector<FqElem> coeffs;
    for (const auto& c : f.coefficients()) coeffs.push_back(reduce_mod_prime(c, rf));
    return FqPoly(*rf.field, std::move(coeffs));
}

ReducedCurve reduce(const Genus2Curve& curve, const ResidueField& rf) {
    FqPoly f = reduce_poly(curve.f(), rf);
    if (f.degree() < 5) throw BadReduction(rf.p, "reduced polynomial has degree " + std::to_string(f.degree()));
    if (!is_separable(f)) throw BadReduction(rf.p, "reduced polynomial is not separable (disc = 0 mod p)");
    return ReducedCurve(std::move(f));
}

std::uint64_t count_points_over(const ReducedCurve& curve, const FiniteField& ext) {
    const FqPoly f = curve.field() == ext ? curve.f() : curve.f().embed(ext);
    std::uint64_t n = 0;
    for (std::uint64_t i = 0; i < ext.size(); ++i) {
        const FqElem y2 = f.eval(ext.from_index(i));
        if (y2.is_zero()) n += 1;
        else if (y2.is_square()) n += 2;
    }
    if (f.degree() == 5) n += 1;
    else if (f.leading().is_square()) n += 2;
    return n;
}

std::uint64_t count_points(const ReducedCurve& curve) { return count_points_over(curve, curve.field()); }

WeilPoly weil_poly(const ReducedCurve& curve) {
    const FiniteField& k = curve.field();
    const FiniteField& k2 = FiniteField::get(k.characteristic(), 2 * k.degree());
    const Integer q(static_cast<unsigned long>(k.size()));
    const Integer n1(static_cast<unsigned long>(count_points(curve)));
    const Integer n2(static_cast<unsigned long>(count_points_over(curve, k2)));
    const Integer a1 = q + 1 - n1;
    const Integer twice_a2 = a1 * a1 - (q * q + 1 - n2);
    if (!mpz_even_p(twice_a2.get_mpz_t()))
        throw std::logic_error("point counts give a non-integral a2 (" + n1.get_str() + ", " + n2.get_str() + ")");
    return WeilPoly(q, a1, twice_a2 / 2);
}

WeilPoly weil_poly(const Genus2Curve& curve, std::uint32_t p, int label) { return weil_poly(reduce(curve, p, label)); }

}  // namespace gl4
