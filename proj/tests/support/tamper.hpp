#pragma once

// Single-field corruptions of a certificate and the check each must trip.

#include <functional>
#include <string>
#include <vector>

#include "sl12/certificate.hpp"

namespace sl12::tamper {

struct Case {
  std::string field;
  std::string expected_check;
  std::function<void(Certificate&, const FieldSpec&)> apply;
};

inline FqElem bump(const BaseField& F, FqElem a) { return F.add(a, F.one()); }

inline std::vector<Case> cases() {
  return {
      {"schema_version", "schema_version", [](Certificate& c, const FieldSpec&) { c.schema_version = "sl12-generation-certificate/0"; }},
      {"p", "params", [](Certificate& c, const FieldSpec&) { c.p = 4; }},
      {"m", "params", [](Certificate& c, const FieldSpec&) { c.m += 1; }},
      {"q", "params", [](Certificate& c, const FieldSpec&) { c.q += 2; }},
      {"h", "h_irreducible",
       [](Certificate& c, const FieldSpec& s) {
         const auto& F = *s.prime_field;
         c.h = Poly({F.one(), F.zero(), F.one()});
       }},
      {"g", "g_irreducible", [](Certificate& c, const FieldSpec& s) { c.g = Poly::monomial(s.base->one(), 11); }},
      {"Q", "Q_value", [](Certificate& c, const FieldSpec&) { c.Q += 2; }},
      {"Q_halved", "Q_value", [](Certificate& c, const FieldSpec&) { c.Q_halved = !c.Q_halved; }},
      {"factored_Q", "Q_factorization", [](Certificate& c, const FieldSpec&) { c.factored_Q.factors.back().exponent += 1; }},
      {"omega", "omega_order",
       [](Certificate& c, const FieldSpec& s) {
         // raise omega to its smallest prime divisor of Q: a proper divisor order
         c.omega = s.ext->pow(c.omega, c.factored_Q.factors.front().prime);
       }},
      {"omega_mode", "omega_provenance", [](Certificate& c, const FieldSpec&) { c.omega_mode = OmegaMode::seeded(1); }},
      {"f", "f_rebuild",
       [](Certificate& c, const FieldSpec& s) {
         auto coeffs = c.f.coeffs();
         coeffs[0] = bump(*s.base, coeffs[0]);
         c.f = Poly(coeffs);
       }},
      {"alpha", "alpha_rebuild", [](Certificate& c, const FieldSpec& s) { c.alpha.values[4] = bump(*s.base, c.alpha.values[4]); }},
      {"x", "x_rebuild", [](Certificate& c, const FieldSpec& s) { c.x(3, 7) = bump(*s.base, c.x(3, 7)); }},
      {"y", "y_rebuild", [](Certificate& c, const FieldSpec& s) { c.y(0, 0) = bump(*s.base, c.y(0, 0)); }},
      {"z", "z_rebuild", [](Certificate& c, const FieldSpec& s) { c.z(11, 0) = bump(*s.base, c.z(11, 0)); }},
      {"irreducibility.y_stable", "report_irreducibility",
       [](Certificate& c, const FieldSpec&) { c.irreducibility.y_stable[2] = !c.irreducibility.y_stable[2]; }},
      {"generation.conclusion", "report_generation",
       [](Certificate& c, const FieldSpec&) { c.generation.conclusion = Conclusion::not_established; }},
      {"generation.checks", "report_generation",
       [](Certificate& c, const FieldSpec&) { c.generation.checks["det_x"] = false; }},
      {"assumption", "assumption", [](Certificate& c, const FieldSpec&) { c.assumption.citation = "none"; }},
  };
}

}  // namespace sl12::tamper
