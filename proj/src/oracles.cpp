#include "kbar/oracles.hpp"

#include <stdexcept>

namespace kbar {

namespace {

int tits_form(const Quiver& q, const Eigen::VectorXi& x) {
  int v = 0;
  for (int i = 0; i < q.vertices; ++i) v += x(i) * x(i);
  for (const auto& [s, t] : q.arrows) v -= x(s - 1) * x(t - 1);
  return v;
}

}  // namespace

std::vector<Eigen::VectorXi> positive_roots(const Quiver& q) {
  const int n = q.vertices;
  std::vector<Eigen::VectorXi> roots;
  Eigen::VectorXi x = Eigen::VectorXi::Zero(n);
  const int bound = 6;  // covers every simply laced root coordinate
  for (;;) {
    int i = 0;
    while (i < n && x(i) == bound) x(i++) = 0;
    if (i == n) break;
    ++x(i);
    if (x.maxCoeff() > 0 && tits_form(q, x) == 1) roots.push_back(x);
  }
  return roots;
}

QuiverRep indecomposable_rep(const Quiver& q, const Eigen::VectorXi& root) {
  QuiverRep rep;
  rep.dims.assign(q.vertices, 0);
  for (int v = 0; v < q.vertices; ++v) rep.dims[v] = root(v);

  if (root.maxCoeff() == 1) {
    for (const auto& [s, t] : q.arrows) {
      IntMatrix m = IntMatrix::Zero(rep.dims[t - 1], rep.dims[s - 1]);
      if (rep.dims[s - 1] == 1 && rep.dims[t - 1] == 1) m(0, 0) = 1;
      rep.maps.push_back(std::move(m));
    }
    return rep;
  }

  // D_4-shaped root: a single 2 at a branch vertex, 1 on its three neighbors.
  int center = -1;
  for (int v = 0; v < q.vertices; ++v) {
    if (root(v) == 2 && center < 0)
      center = v;
    else if (root(v) > 1)
      center = -2;
  }
  if (center < 0) throw std::invalid_argument("indecomposable_rep: unsupported thick root");
  // Each incident arrow pins a line in k^2 (image if incoming, kernel if
  // outgoing); indecomposable iff the three lines are pairwise distinct.
  const long lines[3][2] = {{1, 0}, {0, 1}, {1, 1}};
  int seen = 0;
  for (const auto& [s, t] : q.arrows) {
    const bool into = (t - 1 == center && root(s - 1) == 1);
    const bool outof = (s - 1 == center && root(t - 1) == 1);
    IntMatrix m = IntMatrix::Zero(rep.dims[t - 1], rep.dims[s - 1]);
    if (into || outof) {
      if (seen >= 3) throw std::invalid_argument("indecomposable_rep: unsupported thick root");
      const long a = lines[seen][0], b = lines[seen][1];
      if (into) {  // image = span(a, b)
        m(0, 0) = a;
        m(1, 0) = b;
      } else {  // kernel = span(a, b)
        m(0, 0) = b;
        m(0, 1) = -a;
      }
      ++seen;
    }
    rep.maps.push_back(std::move(m));
  }
  if (seen != 3) throw std::invalid_argument("indecomposable_rep: unsupported thick root");
  return rep;
}

Index hom_oracle(const Quiver& q, const Eigen::VectorXi& m, const Eigen::VectorXi& n) {
  const QuiverRep rm = indecomposable_rep(q, m), rn = indecomposable_rep(q, n);
  std::vector<std::pair<int, int>> arrows;
  for (const auto& [s, t] : q.arrows) arrows.emplace_back(s - 1, t - 1);
  return rep_hom_dim(arrows, rm.dims, rm.maps, rn.dims, rn.maps);
}

}  // namespace kbar
