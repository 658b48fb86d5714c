#pragma once

#include <string>
#include <vector>

#include "addcomp/verifier.hpp"

namespace addcomp {

// Two stacked panels against log10(x): the normalized excess R(x) and the
// ratio A(x)B(x)/x. Output depends only on the reports.
std::string criterion_svg(const std::vector<CriterionReport>& reports);

}  // namespace addcomp
