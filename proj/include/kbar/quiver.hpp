#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kbar/zlinalg.hpp"

namespace kbar {

// Finite directed multigraph; vertices are 1..vertices, parallel arrows are
// repeated entries. Loops are rejected by the constructors used here.
struct Quiver {
  int vertices = 0;
  std::vector<std::pair<int, int>> arrows;
};

struct DynkinType {
  char family = 'A';  // 'A', 'D' or 'E'
  int rank = 1;

  friend bool operator==(const DynkinType&, const DynkinType&) = default;
};

// Text format: first non-comment line is the vertex count, every further
// line one arrow "s t". '#' starts a comment; blank lines and CRLF accepted.
Quiver parse_quiver(std::string_view text);

IntMatrix adjacency(const Quiver& q);

bool is_acyclic(const Quiver& q);

// C = sum_k B^k = (I - B)^{-1}; requires an acyclic quiver.
IntMatrix cartan(const Quiver& q);

// Phi = -C^{-1} C^T = -(I - B) C^T; requires an acyclic quiver.
IntMatrix coxeter(const Quiver& q);

// Grothendieck group of the cluster category of kQ, computed both as
// coker(B - B^T) and as coker(1 + Phi); the two routes must agree.
AbelianGroup kbar_hereditary(const Quiver& q);

struct ReductionStep {
  std::pair<int, int> arrow;  // endpoints in the labels of the quiver it was removed from
  bool source_arrow = false;  // false: sink-arrow
};

struct ReductionResult {
  Quiver reduced;               // relabeled 1..k, order preserving
  std::vector<ReductionStep> trace;
  std::vector<int> kept;        // original labels of the surviving vertices
};

// Removes one source-/sink-arrow together with both endpoints, choosing the
// lowest-numbered eligible arrow; nullopt when no arrow is eligible.
std::optional<ReductionResult> reduce_once(const Quiver& q);

// Iterates reduce_once to a fixed point. Trace entries use the labels of the
// original quiver.
ReductionResult reduce_source_sink(const Quiver& q);

// The witness quiver realizing Z^r + sum (Z/m_i)^2: alpha: v -> w, one arrow
// from w to each of r free vertices and to the head of each of s bundles of
// m_i parallel arrows. Requires m_i >= 1 and m_i | m_{i+1}.
Quiver build_example_family(int r, const std::vector<int>& m);

// Fixed orientations, all arrows toward the higher vertex index.
// A_n: chain 1 -> 2 -> ... -> n.
// D_n: fork tips 1, 2 into 3, then chain 3 -> 4 -> ... -> n.
// E_n: chain 1 -> ... -> n-1 with branch 3 -> n.
Quiver dynkin_quiver(DynkinType t);

// Classifies the underlying graph; nullopt if it is not a Dynkin tree.
std::optional<DynkinType> recognize_dynkin(const Quiver& q);

}  // namespace kbar
