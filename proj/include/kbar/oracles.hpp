#pragma once

#include <vector>

#include "kbar/quiver.hpp"

namespace kbar {

// Verification support, kept independent of the hom recursion it checks.

// Positive roots of the underlying diagram: vectors x > 0 with Tits form
// q(x) = sum x_v^2 - sum_{arrows} x_s x_t equal to 1, by bounded enumeration.
std::vector<Eigen::VectorXi> positive_roots(const Quiver& q);

// Explicit representation for a root: identity maps on the support for thin
// roots; the D_4-shaped root with a 2 at the branch vertex is built with
// pairwise distinct lines. Other thick roots are out of scope here.
struct QuiverRep {
  std::vector<int> dims;
  std::vector<IntMatrix> maps;  // aligned with q.arrows
};
QuiverRep indecomposable_rep(const Quiver& q, const Eigen::VectorXi& root);

// dim Hom by solving the commuting equations on explicit representations.
Index hom_oracle(const Quiver& q, const Eigen::VectorXi& m, const Eigen::VectorXi& n);

}  // namespace kbar
