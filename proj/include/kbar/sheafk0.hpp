#pragma once

#include <string>
#include <utility>
#include <vector>

#include "kbar/zlinalg.hpp"

namespace kbar {

// Weight sequence, normalized: weights of 1 dropped, even weights first
// (descending), then odd weights (descending). The formulas below are
// invariant under padding with 1s, so the normal form carries no padding.
struct WeightSequence {
  std::vector<int> p;

  static WeightSequence of(std::vector<int> raw);
  static WeightSequence parse(const std::string& csv);  // "2,3,5"

  int arms() const { return static_cast<int>(p.size()); }
  int even_count() const;        // r
  long lcm() const;              // p = lcm(p_1, ..., p_t)
  Int discriminant() const;      // delta = p(t - 2 - sum 1/p_i), always integral
  std::string to_string() const;

  friend bool operator==(const WeightSequence&, const WeightSequence&) = default;
};

// Free presentation of K_0(coh X) on the basis
//   a, s0, s_i(j)  (i = 1..t, j = 0..p_i-2),
// the generator s_i(p_i - 1) being eliminated via sum_j s_i(j) = s0.
// euler is the Gram matrix of <.,.> (so <x,y> = x^T euler y) and cox is the
// Coxeter transformation; the constructor enforces det euler = +-1 and
// euler * cox = -euler^T exactly.
struct K0Lattice {
  WeightSequence weights;
  std::vector<std::string> labels;
  IntMatrix euler;
  IntMatrix cox;
  IntVector tau_orbit_a;  // sum_{j=0}^{p-1} Phi^j a
  long p = 1;
  Int delta;

  Index size() const { return euler.rows(); }
  Index idx_a() const { return 0; }
  Index idx_s0() const { return 1; }
  Index idx_s(int arm, int j) const;      // arm 1-based, 0 <= j <= p_i - 2
  IntVector unit(Index k) const;
  IntVector class_a() const { return unit(idx_a()); }
  IntVector class_s0() const { return unit(idx_s0()); }
  IntVector class_s(int arm, int j) const;  // j = p_i - 1 resolved via the relation
};

K0Lattice build_k0(const WeightSequence& w);

Int euler_pairing(const K0Lattice& l, const IntVector& x, const IntVector& y);
Int rank(const K0Lattice& l, const IntVector& x);    // <x, s0>
Int degree(const K0Lattice& l, const IntVector& x);
Rat slope(const K0Lattice& l, const IntVector& x);   // deg/rk, throws on rank 0

// Phi^p = I + delta * (column s0) * (rank row), as an exact matrix identity.
bool coxeter_power_check(const K0Lattice& l);

// <<e,x>> = sum_{j<p} <Phi^j e, x>; cross-checked against the closed form
// -(p/2) delta rk(e) rk(x) + det [[rk e, rk x], [deg e, deg x]]
// (both sides doubled when the first term is a half-integer).
Int averaged_euler(const K0Lattice& l, const IntVector& e, const IntVector& x);

// Grothendieck group of the cluster category of coh X with generator images:
// coker(1 + Phi) must match the closed form (Z^r for r >= 1 even weights,
// Z/2 + Z/2 otherwise), the presentation relations are checked in the
// quotient, and images are reported over the closed-form basis.
struct CanonicalKbar {
  AbelianGroup group;
  std::vector<std::string> basis;  // "a", "s2", ..., "sr"  or  "a", "s0"
  std::vector<std::pair<std::string, std::vector<Int>>> images;  // coordinates over basis
};

CanonicalKbar kbar_canonical(const WeightSequence& w);

// Columns: Z-basis of { y : Phi y = -y } as a saturated sublattice; every
// basis vector has rank 0 and degree 0.
IntMatrix minus_fixed_space(const K0Lattice& l);

struct LinearForm {
  std::string name;
  IntVector coeffs;   // evaluation: coeffs . x, reduced mod 2 when mod2
  bool mod2 = false;
};

Int evaluate(const LinearForm& f, const IntVector& x);

// r >= 1: <w~s1, ->, <h~s_i - h~s_1, -> (i = 2..r) as integer forms;
// r == 0: rk_2 and deg_2 as GF(2) forms. All returned forms kill im(1 + Phi)
// (exactly, resp. mod 2).
std::vector<LinearForm> dual_basis(const K0Lattice& l);

// Cartan matrix of the canonical algebra on 2 + sum (p_i - 1) vertices,
// basis ordered source, arm vertices, sink; unit upper triangular.
IntMatrix canonical_cartan(const WeightSequence& w);
IntMatrix canonical_coxeter(const WeightSequence& w);

// coker(1 + Phi_A) for the canonical algebra; the derived equivalence makes
// this an independent route to kbar_canonical(w).group.
AbelianGroup kbar_canonical_cartan_route(const WeightSequence& w);

}  // namespace kbar
