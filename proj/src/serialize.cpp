#include "gl4/serialize.hpp"

namespace gl4 {

namespace {

Json integer_json(const Integer& n) {
    if (n.fits_slong_p()) return n.get_si();
    return n.get_str();
}

Json prime_json(const PrimeData& d) {
    Json j;
    j["p"] = d.p;
    j["residue_field"] = {{"inert", d.residue.inert},
                          {"label", d.residue.label},
                          {"q", d.residue.q()},
                          {"description", d.residue.describe()}};
    j["weil"] = to_json(d.weil);
    j["charpoly"] = to_json(d.weil.charpoly());
    j["group_order"] = d.weil.group_order().get_str();
    j["ordinary"] = d.ordinary;
    j["stable_irreducibility"] = to_json(d.stability);
    Json subs = Json::array();
    for (const auto& m : d.subfields) subs.push_back(integer_json(m));
    j["quadratic_subfields"] = subs;
    return j;
}

const Json& require(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw DomainError(std::string("curve JSON lacks \"") + key + "\"");
    return j.at(key);
}

}  // namespace

Json to_json(const UniPoly& p) {
    Json arr = Json::array();
    for (const auto& c : p.coefficients()) arr.push_back(to_string(c));
    return arr;
}

Json to_json(const WeilPoly& w) {
    return {{"q", integer_json(w.q())}, {"a1", integer_json(w.a1())}, {"a2", integer_json(w.a2())}};
}

Json to_json(const Genus2Curve& curve) {
    Json f = Json::array();
    for (const auto& c : curve.f().coefficients()) f.push_back(c.to_string());
    return {{"field", {{"type", "quadratic"}, {"delta", curve.delta()}}}, {"f", f}};
}

Json to_json(const ReducedCurve& curve) {
    const FiniteField& k = curve.field();
    Json f = Json::array();
    for (const auto& c : curve.f().coefficients()) {
        Json coords = Json::array();
        for (unsigned i = 0; i < k.degree(); ++i) coords.push_back(c.coords()[i]);
        f.push_back(coords);
    }
    return {{"field", {{"type", "finite"}, {"p", k.characteristic()}, {"d", k.degree()}}}, {"f", f}};
}

Json to_json(const StableIrreducibilityReport& r) {
    Json j;
    j["irreducible"] = r.irreducible;
    j["stable"] = r.stable();
    j["f"] = to_json(r.f_poly);
    j["tested_orders"] = r.tested_orders;
    j["failing_t"] = r.failing_t ? Json(*r.failing_t) : Json(nullptr);
    return j;
}

Json to_json(const Certificate& cert) {
    Json j;
    j["schema"] = kCertificateSchema;
    j["curve"] = {{"description", cert.curve_description}, {"equation", to_json(cert.curve)}};
    j["primes"] = Json::array({prime_json(cert.first), prime_json(cert.second)});
    j["intersection_is_Q"] = cert.intersection_is_Q;
    j["conclusion"] = to_string(cert.conclusion);
    j["reason"] = cert.reason;
    if (cert.gl4) {
        const GL4Block& g = *cert.gl4;
        j["gl4"] = {{"a", to_string(g.a)},
                    {"b", to_string(g.b)},
                    {"c", to_string(g.c)},
                    {"delta", g.delta},
                    {"alpha", g.alpha.to_string()},
                    {"norm", to_string(norm(g.alpha))},
                    {"norm_class", to_string(g.norm_class)},
                    {"cocycle", g.cocycle},
                    {"end_algebra", to_string(g.end_algebra)},
                    {"K_degree_four", g.degree_four},
                    {"genuinely_gl4", cert.conclusion == Conclusion::EndIsZ && g.degree_four}};
    } else {
        j["gl4"] = nullptr;
    }
    return j;
}

Genus2Curve curve_from_json(const Json& j) {
    const Json& field = require(j, "field");
    if (require(field, "type") != "quadratic") throw DomainError("expected a curve over a quadratic field");
    const Json& d = require(field, "delta");
    if (!d.is_number_integer()) throw DomainError("\"delta\" must be an integer");
    const long delta = d.get<long>();
    if (!is_valid_radicand(delta)) throw DomainError("invalid radicand " + std::to_string(delta));
    const Json& f = require(j, "f");
    if (!f.is_array()) throw DomainError("\"f\" must be an array");
    std::vector<QuadElem> coeffs;
    for (const auto& c : f) {
        if (!c.is_string()) throw DomainError("coefficients must be strings like \"a+b*sqrt(D)\"");
        coeffs.push_back(QuadElem::parse(c.get<std::string>(), delta));
    }
    return Genus2Curve(QuadPoly(std::move(coeffs), delta));
}

ReducedCurve reduced_curve_from_json(const Json& j) {
    const Json& field = require(j, "field");
    if (require(field, "type") != "finite") throw DomainError("expected a curve over a finite field");
    const auto p = require(field, "p").get<std::uint32_t>();
    const auto d = require(field, "d").get<unsigned>();
    const FiniteField& k = FiniteField::get(p, d);
    std::vector<FqElem> coeffs;
    for (const auto& c : require(j, "f")) {
        std::array<std::uint32_t, 4> coords{};
        if (!c.is_array() || c.size() != d) throw DomainError("each coefficient needs " + std::to_string(d) + " coordinates");
        for (unsigned i = 0; i < d; ++i) coords[i] = c[i].get<std::uint32_t>() % p;
        coeffs.push_back(k.from_coords(coords));
    }
    return ReducedCurve(FqPoly(k, std::move(coeffs)));
}

}  // namespace gl4
