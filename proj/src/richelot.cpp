#include "gl4/richelot.hpp"

#include <stdexcept>

namespace gl4 {

namespace {

ResidueField split_field(long delta, std::uint32_t p, int label) {
    ResidueField rf = residue_field(delta, p, label);
    if (rf.inert) throw BadReduction(p, "the Richelot check needs a prime that splits in Q(sqrt D)");
    return rf;
}

FqPoly embed_reduced(const QuadPoly& f, const ResidueField& rf, const FiniteField& ext) {
    return reduce_poly(f, rf).embed(ext);
}

}  // namespace

RichelotPair::RichelotPair(const Rational& a, const Rational& b, const Rational& c, long delta, std::uint32_t p, int label)
    : RichelotPair(family_member(a, b, c, delta), split_field(delta, p, label)) {}

RichelotPair::RichelotPair(const FamilyMember& m, const ResidueField& rf)
    : rf_(rf),
      curve_(reduce(family_curve(m.a, m.b, m.c, m.delta), rf)),
      tilde_(reduce(tilde_curve(m.a, m.b, m.c, m.delta), rf)),
      jac_(curve_.f(), rf.field->zero()),
      jac_t_(tilde_.f(), rf.field->zero()),
      ext_(&FiniteField::get(rf.p, 4)),
      F_{embed_reduced(m.F[0], rf, *ext_), embed_reduced(m.F[1], rf, *ext_), embed_reduced(m.F[2], rf, *ext_)},
      L_{embed_reduced(m.L[0], rf, *ext_), embed_reduced(m.L[1], rf, *ext_), embed_reduced(m.L[2], rf, *ext_)},
      jac_ext_(curve_.f().embed(*ext_), ext_->zero()),
      jac_t_ext_(tilde_.f().embed(*ext_), ext_->zero()) {}

std::optional<MumfordDivisor> RichelotPair::push_point(const FqElem& x0, const FqElem& y0, RichelotDirection dir) const {
    const bool fwd = dir == RichelotDirection::Forward;
    const auto& src = fwd ? F_ : L_;
    const auto& dst = fwd ? L_ : F_;
    const Jacobian& target = fwd ? jac_t_ext_ : jac_ext_;
    const FqElem alpha = src[0].eval(x0), beta = src[1].eval(x0);
    const FqPoly quad = dst[0] * alpha + dst[1] * beta;
    if (quad.degree() != 2) return std::nullopt;
    std::vector<FqElem> roots = roots_of_quadratic(quad);
    if (roots.empty()) throw std::logic_error("correspondence fibre not defined over F_{p^4}");
    if (roots.size() == 1) roots.push_back(roots[0]);

    MumfordDivisor acc = target.identity();
    if (y0.is_zero()) {
        // Fibre over a Weierstrass point: stable under the involution.
        if (roots[0] == roots[1]) return acc;
        for (const auto& t : roots) {
            if (!target.original().eval(t).is_zero()) return std::nullopt;
            if (!t.is_zero()) acc = target.add(acc, target.point(t, t.field().zero()));
        }
        return acc;
    }
    for (const auto& t : roots) {
        const FqElem lin = fwd ? x0 - t : t - x0;
        const FqElem s = alpha * dst[0].eval(t) * lin / y0;
        if (s * s != target.original().eval(t)) throw std::logic_error("correspondence image is off the target curve");
        // (0, 0) is the base point and contributes nothing.
        if (!t.is_zero()) acc = target.add(acc, target.point(t, s));
    }
    return acc;
}

std::optional<MumfordDivisor> RichelotPair::image(const MumfordDivisor& d, RichelotDirection dir) const {
    const bool fwd = dir == RichelotDirection::Forward;
    const Jacobian& source = fwd ? jac_ext_ : jac_t_ext_;
    const Jacobian& target_base = fwd ? jac_t_ : jac_;
    const Jacobian& target = fwd ? jac_t_ext_ : jac_ext_;
    if (d.is_identity()) return target_base.identity();
    if (d.u.degree() != 2) return std::nullopt;

    const FqPoly u = d.u.embed(*ext_), v = d.v.embed(*ext_);
    std::vector<FqElem> roots = roots_of_quadratic(u);
    if (roots.size() == 1) roots.push_back(roots[0]);
    MumfordDivisor acc = target.identity();
    for (const auto& big_x : roots) {
        if (big_x.is_zero()) return std::nullopt;
        const FqElem x = source.base_root() + big_x.inverse();
        const FqElem xi = big_x.inverse();
        const FqElem y = v.eval(big_x) * xi * xi * xi;
        auto img = push_point(x, y, dir);
        if (!img) return std::nullopt;
        acc = target.add(acc, *img);
    }
    const FiniteField& base = *rf_.field;
    if (!acc.u.coefficients_in(base) || !acc.v.coefficients_in(base))
        throw std::logic_error("image divisor is not defined over F_p");
    return MumfordDivisor{acc.u.restrict_to(base), acc.v.restrict_to(base)};
}

std::optional<MumfordDivisor> richelot_image(const RichelotPair& pair, const MumfordDivisor& d, RichelotDirection dir) {
    return pair.image(d, dir);
}

}  // namespace gl4
