#pragma once

#include <string>

#include "bjq/algebra/op_poly.hpp"

namespace bjq::algebra {

/// Normal-form text such as "X^2 P^2 - 2iħ X P - (2/3)ħ^2". Terms are listed
/// by total degree (high first), then X exponent (high first), then hbar
/// power (low first).
std::string to_string(const OpPoly& poly);
std::string to_string(const GaussianRational& c);

/// Accepts the output of to_string, plus "hbar" for ħ, optional '*'
/// separators and words that are not in normal order ("P X").
OpPoly parse_op_poly(const std::string& text);

}  // namespace bjq::algebra
