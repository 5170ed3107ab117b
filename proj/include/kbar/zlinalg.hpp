#pragma once

#include <string>
#include <utility>
#include <vector>

#include "kbar/int_matrix.hpp"

namespace kbar {

// Finitely generated abelian group in canonical form:
// Z^free_rank + sum Z/m_i with m_1 | m_2 | ... | m_k and every m_i >= 2.
// Two groups are isomorphic iff the fields are equal.
struct AbelianGroup {
  Index free_rank = 0;
  std::vector<Int> torsion;

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

std::string to_string(const AbelianGroup& g);

// Smith normal form U * A * V = S: U, V unimodular, S diagonal with
// nonnegative entries d_i satisfying d_i | d_{i+1}.
struct SnfResult {
  IntMatrix u;
  IntMatrix s;
  IntMatrix v;
};

// Congruence normal form of a skew-symmetric matrix:
// U^T * S * U = diag(0_{r x r}, [[0,m_1],[-m_1,0]], ..., [[0,m_s],[-m_s,0]])
// with m_1 | m_2 | ... | m_s.
struct SkewNormalForm {
  IntMatrix u;
  Index zero_block = 0;
  std::vector<Int> pair_invariants;
};

SnfResult snf(const IntMatrix& a);

// Cokernel of A viewed as a map Z^cols -> Z^rows.
AbelianGroup cokernel(const IntMatrix& a);

SkewNormalForm skew_normal_form(const IntMatrix& s);

// Columns of the result form a basis of { x : Ax = 0 } over GF(2).
GF2Matrix gf2_nullspace(const GF2Matrix& a);

bool groups_isomorphic(const AbelianGroup& g, const AbelianGroup& h);

Index integer_rank(const IntMatrix& a);

// Exact determinant by fraction-free (Bareiss) elimination.
Int determinant(const IntMatrix& a);

// Columns span ker(A) as a saturated sublattice of Z^cols.
IntMatrix kernel_basis(const IntMatrix& a);

// Inverse of a matrix with det +-1; throws std::invalid_argument otherwise.
IntMatrix unimodular_inverse(const IntMatrix& a);

// dim Hom between two representations of the quiver given by `arrows`
// (0-based endpoints, loops and parallel arrows allowed): the corank of the
// commuting-square system  phi_w M_alpha = N_alpha phi_v.
Index rep_hom_dim(const std::vector<std::pair<int, int>>& arrows,
                  const std::vector<int>& dims_m, const std::vector<IntMatrix>& maps_m,
                  const std::vector<int>& dims_n, const std::vector<IntMatrix>& maps_n);

}  // namespace kbar
