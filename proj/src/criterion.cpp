#include "gl4/criterion.hpp"

#include <future>

namespace gl4 {

UniPoly f_resultant(const WeilPoly& w) {
    const Rational q(w.q()), a1(w.a1()), a2(w.a2());
    // z^4 P(1/z) = chi(z); z^4 P(T/z) has z-coefficients q^2 T^4, -q a1 T^3, a2 T^2, -a1 T, 1.
    BiPoly lhs{{UniPoly::constant(q * q), UniPoly::constant(-q * a1), UniPoly::constant(a2),
                UniPoly::constant(-a1), UniPoly::constant(1)}};
    BiPoly rhs{{UniPoly::monomial(q * q, 4), UniPoly::monomial(-q * a1, 3), UniPoly::monomial(a2, 2),
                UniPoly::monomial(-a1, 1), UniPoly::constant(1)}};
    return resultant_in_z(lhs, rhs);
}

StableIrreducibilityReport is_stably_irreducible(const WeilPoly& w) {
    StableIrreducibilityReport r{w, is_irreducible_quartic(w.charpoly()), f_resultant(w), {}, std::nullopt};
    if (!r.irreducible) return r;
    r.tested_orders = totient_bounded_orders(16);  // 4 g^2 with g = 2
    for (unsigned long t : r.tested_orders) {
        if (divides(cyclotomic(t), r.f_poly)) {
            r.failing_t = t;
            break;
        }
    }
    return r;
}

bool is_ordinary(const WeilPoly& w) { return !mpz_divisible_p(w.a2().get_mpz_t(), w.characteristic().get_mpz_t()); }

std::string to_string(Conclusion c) { return c == Conclusion::EndIsZ ? "EndIsZ" : "Inconclusive"; }

std::string to_string(EndAlgebra e) {
    switch (e) {
    case EndAlgebra::QsqrtMinus2: return "Q(sqrt(-2))";
    case EndAlgebra::QsqrtPlus2: return "Q(sqrt(2))";
    case EndAlgebra::NotCompletelyDefined: return "not completely defined";
    }
    return "?";
}

PrimeData analyze_prime(const Genus2Curve& curve, std::uint32_t p, int label) {
    const ResidueField rf = residue_field(curve.delta(), p, label);
    const WeilPoly w = weil_poly(reduce(curve, rf));
    PrimeData d{p, rf, w, is_ordinary(w), is_stably_irreducible(w), {}};
    if (d.stability.irreducible)
        d.subfields = quadratic_subfields(QuarticField(w.charpoly(), rf.describe()));
    return d;
}

namespace {

std::string failing_hypothesis(const PrimeData& d) {
    const std::string at = " at p = " + std::to_string(d.p);
    if (!d.stability.irreducible) return "Frobenius polynomial reducible over Q" + at;
    if (d.stability.failing_t)
        return "not stably irreducible" + at + " (Phi_" + std::to_string(*d.stability.failing_t) + " divides f(T))";
    if (!d.ordinary) return "not ordinary" + at + " (p divides a2)";
    return {};
}

}  // namespace

Certificate certify_trivial_endos(const Genus2Curve& curve, std::uint32_t p, std::uint32_t q, int label_p, int label_q) {
    if (p == q) throw DomainError("the two primes must be distinct");
    // Independent pipelines; the join below is deterministic.
    auto fut = std::async(std::launch::async, [&] { return analyze_prime(curve, q, label_q); });
    PrimeData first = analyze_prime(curve, p, label_p);
    PrimeData second = fut.get();

    Certificate cert{curve.to_string(), curve, std::move(first), std::move(second), false, Conclusion::Inconclusive, {},
                     std::nullopt};
    std::string reason = failing_hypothesis(cert.first);
    if (reason.empty()) reason = failing_hypothesis(cert.second);
    if (cert.first.stability.irreducible && cert.second.stability.irreducible) {
        cert.intersection_is_Q = true;
        for (const auto& m : cert.first.subfields)
            if (cert.second.subfields.count(m)) {
                cert.intersection_is_Q = false;
                if (reason.empty()) reason = "the quartic fields share the quadratic subfield Q(sqrt(" + m.get_str() + "))";
                break;
            }
    }
    if (reason.empty()) cert.conclusion = Conclusion::EndIsZ;
    cert.reason = reason;
    return cert;
}

EndAlgebra classify_end_algebra(long delta, const QuadElem& alpha) {
    if (!is_valid_radicand(delta)) throw DomainError("radicand must be squarefree and not 0 or 1");
    if (delta == -2) throw DomainError("Q(sqrt D, sqrt -2) has degree 2, not 4");
    if (alpha.delta() != delta) throw DomainError("alpha lives in a different quadratic field");
    switch (norm_class(alpha)) {
    case NormClass::MinusTwoSquare: return EndAlgebra::QsqrtMinus2;
    case NormClass::MinusTwoDeltaSquare: return EndAlgebra::QsqrtPlus2;
    case NormClass::Neither: break;
    }
    return EndAlgebra::NotCompletelyDefined;
}

int cocycle_value(long delta, const QuadElem& alpha) {
    if (alpha.delta() != delta) throw DomainError("alpha lives in a different quadratic field");
    switch (norm_class(alpha)) {
    case NormClass::MinusTwoSquare: return -2;
    case NormClass::MinusTwoDeltaSquare: return 2;
    case NormClass::Neither: break;
    }
    throw DomainError("Nm(alpha) lies in neither -2 Q^2 nor -2D Q^2");
}

Certificate genuinely_gl4_certificate(const Rational& a, const Rational& b, const Rational& c, long delta,
                                      const QuadElem& alpha, std::uint32_t p, std::uint32_t q, int label_p,
                                      int label_q) {
    const EndAlgebra end = classify_end_algebra(delta, alpha);
    if (end == EndAlgebra::NotCompletelyDefined)
        throw DomainError("Nm(alpha) lies in neither -2 Q^2 nor -2D Q^2: C_alpha is not completely defined over Q");
    const Genus2Curve curve = twist(family_curve(a, b, c, delta), alpha);
    Certificate cert = certify_trivial_endos(curve, p, q, label_p, label_q);
    cert.curve_description = "C_alpha for (a, b, c) = (" + to_string(a) + ", " + to_string(b) + ", " + to_string(c) +
                             "), D = " + std::to_string(delta) + ", alpha = " + alpha.to_string();
    cert.gl4 = GL4Block{a, b, c, delta, alpha, norm_class(alpha), cocycle_value(delta, alpha), end, true};
    return cert;
}

}  // namespace gl4
