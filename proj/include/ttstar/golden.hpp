#pragma once

#include <string>
#include <vector>

#include "ttstar/apoly.hpp"

namespace ttstar {

// Reads the bundled reference table for the metric expansion: CSV rows
// "n,a_exp,coeff" with '#' comments.  Returns F_0..F_max as polynomials.
std::vector<APoly> load_golden_table(const std::string& path);

}  // namespace ttstar
