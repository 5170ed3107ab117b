#pragma once

#include <vector>

#include "kbar/zlinalg.hpp"

namespace kbar {

// Indecomposable of the rank-q tube: top composition factor S_top, length
// len, factors S_top, S_top+1, ..., S_top+len-1 from top to socle.
// tau shifts the top down: tau M(i, l) = M(i-1, l).
struct TubeObj {
  int q = 1;
  int top = 0;
  int len = 1;

  friend bool operator==(const TubeObj&, const TubeObj&) = default;
};

TubeObj make_tube_obj(int q, int top, int len);  // validates and canonicalizes top
TubeObj tau_tube(TubeObj x);
TubeObj tau_inv_tube(TubeObj x);

// Hom dimension between the corresponding nilpotent representations of the
// cyclic quiver with q vertices, by exact linear solve.
Index hom_tube(const TubeObj& x, const TubeObj& y);

// Ext^1(X, Y) = Hom(Y, tau X) by Serre duality.
Index ext_tube(const TubeObj& x, const TubeObj& y);

// Hom in the cluster tube: Hom(X, Y) + Ext^1(X, tau^{-1} Y).
Index hom_cluster_tube(const TubeObj& x, const TubeObj& y);

// coker(1 + Phi) on K_0 of the tube (Phi the cyclic shift): Z for q even,
// Z/2 for q odd.
AbelianGroup kbar_tube(int q);

// lambda_S^{(q)}(X) = sum_{i<q} (-1)^i dim Hom_C(S, tau^i X) with S = (0, 1);
// q must be even.
Int lambda_even_tube(int q, const TubeObj& x);

// len(X) mod 2, cross-checked against the K-theoretic hom sum
// sum_j <a, [tau^j X]> mod 2 in K_0(coh X) of weight type (1, q); q odd.
int lambda_odd_tube(int q, const TubeObj& x);

// AR meshes tau Z -> middles -> Z for all Z of length <= max_len.
struct TubeMesh {
  TubeObj z;
  TubeObj tau_z;
  std::vector<TubeObj> middles;
};
std::vector<TubeMesh> tube_meshes(int q, int max_len);

}  // namespace kbar
