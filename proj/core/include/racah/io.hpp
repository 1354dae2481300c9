#pragma once

#include <string>

#include "racah/phase.hpp"
#include "racah/weyl.hpp"

namespace racah {

/// Textual format: terms joined by " + ", each
///   coef * hbar^e * omega^e * mu^e * a1^e ... * x1^e * p2^e * r^e * V0^e
/// with integer exponents (^1 omitted), coefficient (a + b*i)/c (unit
/// coefficient omitted when other factors are present). Weyl expressions
/// print momentum factors rightmost, preserving normal order.
std::string to_string(const PhaseExpr& f);
std::string to_string(const WeylExpr& f);

PhaseExpr parse_phase(const std::string& s, const PhaseRing& ring);
WeylExpr parse_weyl(const std::string& s, const WeylRing& ring);

std::string to_string(const GRat& c);
std::string to_string(const ParamScalar& s);

}  // namespace racah
