#pragma once

#include <string>
#include <utility>
#include <vector>

#include "planarlim/multiseries.hpp"

namespace planarlim {

using CoefficientTable = std::vector<std::pair<Partition, Rat>>;

/// Parses a monomial such as "a1^2*a4" (or "1" for the constant monomial).
Partition parse_monomial(const std::string& text);
/// Parses lines of the form "<p/q> <monomial>"; blank lines are ignored.
CoefficientTable parse_coefficient_table(const std::string& text);

/// The published low-weight coefficients of R, S and F0 (all terms of weight <= 10 that the
/// reference tables print), bundled from data/.
const CoefficientTable& reference_R();
const CoefficientTable& reference_S();
const CoefficientTable& reference_F0();

}  // namespace planarlim
