#include "kbar/tube.hpp"

#include <stdexcept>

#include "kbar/sheafk0.hpp"

namespace kbar {

namespace {

int mod_q(int a, int q) { return ((a % q) + q) % q; }

struct TubeRep {
  std::vector<int> dims;
  std::vector<IntMatrix> maps;  // per arrow v -> v+1 (mod q)
};

// Basis strand b_0..b_{len-1}, b_j at vertex top+j, mapped b_j -> b_{j+1}.
TubeRep tube_rep(const TubeObj& x) {
  TubeRep r;
  r.dims.assign(x.q, 0);
  std::vector<std::vector<int>> at_vertex(x.q);
  for (int j = 0; j < x.len; ++j) {
    const int v = mod_q(x.top + j, x.q);
    at_vertex[v].push_back(j);
    ++r.dims[v];
  }
  auto local_index = [&](int j) {
    const int v = mod_q(x.top + j, x.q);
    for (std::size_t k = 0; k < at_vertex[v].size(); ++k)
      if (at_vertex[v][k] == j) return static_cast<Index>(k);
    return Index(-1);
  };
  for (int v = 0; v < x.q; ++v) {
    const int w = mod_q(v + 1, x.q);
    IntMatrix map = IntMatrix::Zero(r.dims[w], r.dims[v]);
    for (int j : at_vertex[v])
      if (j + 1 < x.len) map(local_index(j + 1), local_index(j)) = 1;
    r.maps.push_back(std::move(map));
  }
  return r;
}

std::vector<std::pair<int, int>> cyclic_arrows(int q) {
  std::vector<std::pair<int, int>> arrows;
  for (int v = 0; v < q; ++v) arrows.emplace_back(v, (v + 1) % q);
  return arrows;
}

void check_rank(const TubeObj& x, const TubeObj& y) {
  if (x.q != y.q) throw std::invalid_argument("tube: rank mismatch");
}

}  // namespace

TubeObj make_tube_obj(int q, int top, int len) {
  if (q < 1) throw std::invalid_argument("tube: rank must be >= 1");
  if (len < 1) throw std::invalid_argument("tube: length must be >= 1");
  return TubeObj{q, mod_q(top, q), len};
}

TubeObj tau_tube(TubeObj x) { return TubeObj{x.q, mod_q(x.top - 1, x.q), x.len}; }

TubeObj tau_inv_tube(TubeObj x) { return TubeObj{x.q, mod_q(x.top + 1, x.q), x.len}; }

Index hom_tube(const TubeObj& x, const TubeObj& y) {
  check_rank(x, y);
  const TubeRep rx = tube_rep(x), ry = tube_rep(y);
  return rep_hom_dim(cyclic_arrows(x.q), rx.dims, rx.maps, ry.dims, ry.maps);
}

Index ext_tube(const TubeObj& x, const TubeObj& y) {
  check_rank(x, y);
  return hom_tube(y, tau_tube(x));
}

Index hom_cluster_tube(const TubeObj& x, const TubeObj& y) {
  check_rank(x, y);
  return hom_tube(x, y) + ext_tube(x, tau_inv_tube(y));
}

AbelianGroup kbar_tube(int q) {
  if (q < 1) throw std::invalid_argument("kbar_tube: rank must be >= 1");
  IntMatrix phi = IntMatrix::Zero(q, q);
  for (int j = 0; j < q; ++j) phi((j + 1) % q, j) = 1;  // Phi s(j) = s(j+1)
  const AbelianGroup g = cokernel(IntMatrix(IntMatrix::Identity(q, q) + phi));
  const AbelianGroup expected =
      (q % 2 == 0) ? AbelianGroup{1, {}} : AbelianGroup{0, {Int(2)}};
  if (g != expected) throw std::logic_error("kbar_tube: cokernel disagrees with the closed form");
  return g;
}

Int lambda_even_tube(int q, const TubeObj& x) {
  if (q < 2 || q % 2 != 0) throw std::invalid_argument("lambda_even_tube: q must be even");
  check_rank(TubeObj{q, 0, 1}, x);
  const TubeObj s = make_tube_obj(q, 0, 1);
  Int total = 0;
  TubeObj cur = x;
  for (int i = 0; i < q; ++i) {
    const Index h = hom_cluster_tube(s, cur);
    total += (i % 2 == 0) ? Int(h) : Int(-h);
    cur = tau_tube(cur);
  }
  return total;
}

int lambda_odd_tube(int q, const TubeObj& x) {
  if (q < 1 || q % 2 == 0) throw std::invalid_argument("lambda_odd_tube: q must be odd");
  check_rank(TubeObj{q, 0, 1}, x);
  const int value = x.len % 2;

  // K-theoretic route: sum_j <a, [tau^j X]> in K_0(coh X) of weight (1, q).
  const K0Lattice l = build_k0(WeightSequence::of({q}));
  auto class_of = [&](const TubeObj& m) {
    IntVector cls = IntVector::Zero(l.size());
    if (q == 1) {
      cls = Int(m.len) * l.class_s0();  // homogeneous tube: [M] = len * s0
    } else {
      for (int k = 0; k < m.len; ++k) cls += l.class_s(1, mod_q(m.top + k, q));
    }
    return cls;
  };
  Int hom_sum = 0;
  TubeObj cur = x;
  for (int j = 0; j < q; ++j) {
    hom_sum += euler_pairing(l, l.class_a(), class_of(cur));
    cur = tau_tube(cur);
  }
  if ((hom_sum - value) % 2 != 0)
    throw std::logic_error("lambda_odd_tube: K-theoretic cross-check failed");
  return value;
}

std::vector<TubeMesh> tube_meshes(int q, int max_len) {
  std::vector<TubeMesh> out;
  for (int top = 0; top < q; ++top)
    for (int len = 1; len <= max_len; ++len) {
      TubeMesh m;
      m.z = make_tube_obj(q, top, len);
      m.tau_z = tau_tube(m.z);
      m.middles.push_back(make_tube_obj(q, top - 1, len + 1));
      if (len > 1) m.middles.push_back(make_tube_obj(q, top, len - 1));
      out.push_back(std::move(m));
    }
  return out;
}

}  // namespace kbar
