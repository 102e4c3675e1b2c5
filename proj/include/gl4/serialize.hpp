/**
 * @file serialize.hpp
 * @brief JSON encodings for curves and certificates.
 *
 * Curves over Q(sqrt D):
 *   {"field": {"type": "quadratic", "delta": 2}, "f": ["c0", ..., "c6"]}
 * with coefficients in the "a+b*sqrt(D)" text format. Curves over F_{p^d}:
 *   {"field": {"type": "finite", "p": 5, "d": 2}, "f": [[x0, x1], ...]}
 * with each coefficient given by its d coordinates. Integers that can grow
 * (q, a1, a2, polynomial coefficients) are decimal strings except q, a1, a2
 * of a Weil polynomial, which are JSON numbers when they fit in 64 bits.
 */
#pragma once

#include "gl4/criterion.hpp"
#include "gl4/curves.hpp"

#include <json.hpp>

namespace gl4 {

using Json = nlohmann::ordered_json;

inline constexpr const char* kCertificateSchema = "gl4-cert/1";

Json to_json(const UniPoly& p);
Json to_json(const WeilPoly& w);
Json to_json(const Genus2Curve& curve);
Json to_json(const ReducedCurve& curve);
Json to_json(const StableIrreducibilityReport& r);
Json to_json(const Certificate& cert);

/// Parses a curve over Q(sqrt D); throws DomainError on malformed input.
Genus2Curve curve_from_json(const Json& j);
/// Parses a curve over a finite field.
ReducedCurve reduced_curve_from_json(const Json& j);

}  // namespace gl4
