#pragma once

#include <string>
#include <vector>

#include "xifeq/quadrature.hpp"

namespace xifeq {

// One check of the verification suite. Most checks require
// observed <= bound; a few (growth detection, off-zero discrimination)
// require observed >= bound and set require_at_least.
struct suite_check {
  int criterion = 0;  // 1-based group id, stable across runs
  std::string name;
  double observed = 0.0;
  double bound = 0.0;
  bool require_at_least = false;
  bool passed = false;
};

// Runs every identity check at its pinned tolerance: the kernel Mellin
// pair, kernel self-reciprocity, the Mellin-transform/xi identity, the
// equivalence of the two representations of f, the functional-equation and
// residue-shift residuals, the zero criterion at the first five zeros, the
// synthetic-kernel suite, and the growth-envelope diagnostic.
std::vector<suite_check> run_acceptance_suite(const quadrature_spec& spec);

}  // namespace xifeq
