#include "kbar/meshhom.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace kbar {

namespace {

int positive_root_count(DynkinType t) {
  switch (t.family) {
    case 'A':
      return t.rank * (t.rank + 1) / 2;
    case 'D':
      return t.rank * (t.rank - 1);
    default:
      return t.rank == 6 ? 36 : (t.rank == 7 ? 63 : 120);
  }
}

std::vector<int> topological_order(const Quiver& q) {
  std::vector<int> indeg(q.vertices + 1, 0), order;
  for (const auto& [s, t] : q.arrows) ++indeg[t];
  std::vector<int> stack;
  for (int v = q.vertices; v >= 1; --v)
    if (indeg[v] == 0) stack.push_back(v);
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (const auto& [s, t] : q.arrows)
      if (s == v && --indeg[t] == 0) stack.push_back(t);
  }
  return order;
}

// Positions of the projective slice in ZQ: k_v = k_w + 1 for every arrow
// v -> w, propagated over the tree and shifted to minimum 0.
std::vector<int> slice_positions(const Quiver& q) {
  const int n = q.vertices;
  std::vector<std::vector<std::pair<int, int>>> nb(n + 1);
  for (const auto& [s, t] : q.arrows) {
    nb[s].emplace_back(t, -1);
    nb[t].emplace_back(s, +1);
  }
  std::vector<int> k(n + 1, 0);
  std::vector<bool> seen(n + 1, false);
  std::vector<int> stack{1};
  seen[1] = true;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (const auto& [u, d] : nb[v])
      if (!seen[u]) {
        seen[u] = true;
        k[u] = k[v] + d;
        stack.push_back(u);
      }
  }
  int lo = 0;
  for (int v = 1; v <= n; ++v) lo = std::min(lo, k[v]);
  for (int v = 1; v <= n; ++v) k[v] -= lo;
  return k;
}

int euler_form(const Quiver& q, const Eigen::VectorXi& x, const Eigen::VectorXi& y) {
  int v = 0;
  for (int i = 0; i < q.vertices; ++i) v += x(i) * y(i);
  for (const auto& [s, t] : q.arrows) v -= x(s - 1) * y(t - 1);
  return v;
}

}  // namespace

ARData knit(const Quiver& q) {
  const auto type = recognize_dynkin(q);
  if (!type) throw std::invalid_argument("knit: quiver is not a Dynkin tree");

  ARData ar;
  ar.q = q;
  ar.type = *type;
  const int n = q.vertices;

  // dim P(v) = row v of the Cartan matrix, dim I(v) = column v.
  const IntMatrix c = cartan(q);
  std::vector<Eigen::VectorXi> proj_dim(n + 1), inj_dim(n + 1);
  for (int v = 1; v <= n; ++v) {
    Eigen::VectorXi pd(n), id(n);
    for (int u = 1; u <= n; ++u) {
      pd(u - 1) = to_int(c(v - 1, u - 1));
      id(u - 1) = to_int(c(u - 1, v - 1));
    }
    proj_dim[v] = pd;
    inj_dim[v] = id;
  }
  auto inj_vertex_of = [&](const Eigen::VectorXi& d) {
    for (int v = 1; v <= n; ++v)
      if (inj_dim[v] == d) return v;
    return 0;
  };

  const std::vector<int> topo = topological_order(q);
  const std::vector<int> height = slice_positions(q);

  ar.proj_of.assign(n + 1, -1);
  ar.inj_of.assign(n + 1, -1);
  std::map<std::pair<int, int>, int> grid;  // (level, vertex) -> module id

  auto add_module = [&](int level, int vertex, const Eigen::VectorXi& d, int pv) {
    const int id = ar.modules();
    ar.dim.push_back(d);
    ar.tau.push_back(-1);
    ar.tau_inv.push_back(-1);
    ar.proj_vertex.push_back(pv);
    const int iv = inj_vertex_of(d);
    ar.inj_vertex.push_back(iv);
    ar.mesh_preds.emplace_back();
    if (pv) ar.proj_of[pv] = id;
    if (iv) ar.inj_of[iv] = id;
    grid[{level, vertex}] = id;
    return id;
  };

  for (int v = 1; v <= n; ++v) add_module(height[v], v, proj_dim[v], v);

  int max_height = 0;
  for (int v = 1; v <= n; ++v) max_height = std::max(max_height, height[v]);

  for (int level = 0;; ++level) {
    bool produced = level < max_height;  // projectives above this level still pending
    for (int v : topo) {
      const int target = level + 1;
      if (target <= height[v]) continue;
      const auto below = grid.find({level, v});
      if (below == grid.end()) continue;
      const int m = below->second;
      if (ar.injective(m)) continue;
      // Mesh: dim tau^{-1}M = sum of existing middles minus dim M.
      Eigen::VectorXi d = -ar.dim[m];
      std::vector<int> middles;
      for (const auto& [s, t] : q.arrows) {
        if (t == v)
          if (auto it = grid.find({target, s}); it != grid.end()) {
            d += ar.dim[it->second];
            middles.push_back(it->second);
          }
        if (s == v)
          if (auto it = grid.find({level, t}); it != grid.end()) {
            d += ar.dim[it->second];
            middles.push_back(it->second);
          }
      }
      if (d.minCoeff() < 0 || d.maxCoeff() <= 0)
        throw std::logic_error("knit: mesh produced a non-root dimension vector");
      const int id = add_module(target, v, d, 0);
      ar.tau[id] = m;
      ar.tau_inv[m] = id;
      ar.mesh_preds[id] = std::move(middles);
      produced = true;
    }
    if (!produced) break;
  }

  if (ar.modules() != positive_root_count(ar.type))
    throw std::logic_error("knit: module count differs from the number of positive roots");
  for (int m = 0; m < ar.modules(); ++m)
    if ((ar.tau_inv[m] == -1) != ar.injective(m))
      throw std::logic_error("knit: tau^{-1} defined exactly off the injectives failed");

  // dim Hom(M, N) = <dim M, dim N> + dim Hom(N, tau M), tau(projective) = 0.
  const int total = ar.modules();
  ar.hom.assign(total, std::vector<int>(total, -1));
  auto hom_rec = [&](auto&& self, int m, int nn) -> int {
    int& memo = ar.hom[m][nn];
    if (memo >= 0) return memo;
    int v = euler_form(q, ar.dim[m], ar.dim[nn]);
    if (!ar.projective(m)) v += self(self, nn, ar.tau[m]);
    if (v < 0) throw std::logic_error("knit: negative hom dimension");
    return memo = v;
  };
  for (int m = 0; m < total; ++m)
    for (int nn = 0; nn < total; ++nn) hom_rec(hom_rec, m, nn);

  return ar;
}

int hom_mod(const ARData& ar, int m, int n) { return ar.hom[m][n]; }

int ext1_mod(const ARData& ar, int m, int n) {
  if (ar.projective(m)) return 0;
  return ar.hom[n][ar.tau[m]];
}

DObj tau_derived(const ARData& ar, DObj x) {
  if (ar.projective(x.module)) return {ar.inj_of[ar.proj_vertex[x.module]], x.shift - 1};
  return {ar.tau[x.module], x.shift};
}

DObj tau_inv_derived(const ARData& ar, DObj x) {
  if (ar.injective(x.module)) return {ar.proj_of[ar.inj_vertex[x.module]], x.shift + 1};
  return {ar.tau_inv[x.module], x.shift};
}

DObj tau_derived_pow(const ARData& ar, DObj x, int e) {
  for (; e > 0; --e) x = tau_derived(ar, x);
  for (; e < 0; ++e) x = tau_inv_derived(ar, x);
  return x;
}

DObj f_twist(const ARData& ar, DObj x, int e) {
  for (; e > 0; --e) x = tau_inv_derived(ar, {x.module, x.shift + 1});
  for (; e < 0; ++e) x = tau_derived(ar, {x.module, x.shift - 1});
  return x;
}

int hom_derived(const ARData& ar, DObj x, DObj y) {
  const int d = y.shift - x.shift;
  if (d == 0) return hom_mod(ar, x.module, y.module);
  if (d == 1) return ext1_mod(ar, x.module, y.module);
  return 0;
}

CObj normalize(const ARData& ar, DObj x) {
  while (x.shift > 1 || (x.shift == 1 && !ar.projective(x.module)))
    x = tau_derived(ar, {x.module, x.shift - 1});  // F^{-1}
  while (x.shift < 0) x = tau_inv_derived(ar, {x.module, x.shift + 1});  // F
  return CObj{x};
}

CObj tau_cluster(const ARData& ar, CObj x) { return normalize(ar, tau_derived(ar, x.rep)); }

int hom_cluster_window(const ARData& ar, CObj x, CObj y, int window) {
  int total = 0;
  for (int i = -window; i <= window; ++i) total += hom_derived(ar, x.rep, f_twist(ar, y.rep, i));
  return total;
}

int hom_cluster(const ARData& ar, CObj x, CObj y) { return hom_cluster_window(ar, x, y, 2); }

int coxeter_number(DynkinType t) {
  int m = 0;
  switch (t.family) {
    case 'A':
      m = t.rank + 1;
      break;
    case 'D':
      m = 2 * (t.rank - 1);
      break;
    default:
      m = t.rank == 6 ? 12 : (t.rank == 7 ? 18 : 30);
  }
  const IntMatrix phi = coxeter(dynkin_quiver(t));
  const IntMatrix id = IntMatrix::Identity(phi.rows(), phi.rows());
  IntMatrix pw = id;
  for (int k = 1; k <= m; ++k) {
    pw = pw * phi;
    const bool is_id = same_matrix(pw, id);
    if (is_id != (k == m))
      throw std::logic_error("coxeter_number: order of Phi differs from the table");
  }
  return m;
}

int lambda(const ARData& ar, CObj u, int q, CObj y) {
  if (q < 1) throw std::invalid_argument("lambda: q must be positive");
  int total = 0;
  CObj cur = y;
  for (int i = 0; i < q; ++i) {
    const int h = hom_cluster(ar, u, cur);
    total += (i % 2 == 0) ? h : -h;
    cur = tau_cluster(ar, cur);
  }
  return total;
}

std::vector<ClusterMesh> cluster_meshes(const ARData& ar) {
  std::vector<ClusterMesh> out;
  for (int m = 0; m < ar.modules(); ++m) {
    ClusterMesh mesh;
    mesh.z = {m, 0};
    if (!ar.projective(m)) {
      mesh.tau_z = {ar.tau[m], 0};
      for (int e : ar.mesh_preds[m]) mesh.middles.push_back({e, 0});
    } else {
      // Connecting mesh: I(v)[-1] -> rad P(v) + (I(v)/soc)[-1] -> P(v).
      const int v = ar.proj_vertex[m];
      mesh.tau_z = {ar.inj_of[v], -1};
      for (const auto& [s, t] : ar.q.arrows) {
        if (s == v) mesh.middles.push_back({ar.proj_of[t], 0});
        if (t == v) mesh.middles.push_back({ar.inj_of[s], -1});
      }
    }
    out.push_back(mesh);
    // The shifted copy (P(v), 1) completes the fundamental domain.
    if (ar.projective(m)) {
      ClusterMesh up;
      up.z = {m, 1};
      up.tau_z = {mesh.tau_z.module, mesh.tau_z.shift + 1};
      for (DObj mid : mesh.middles) up.middles.push_back({mid.module, mid.shift + 1});
      out.push_back(up);
    }
  }
  return out;
}

bool ar_triangle_additivity_check(const ARData& ar, CObj u, int q) {
  // Hypothesis: tau^q U is an F-twist of U.
  const DObj shifted = tau_derived_pow(ar, u.rep, q);
  bool twist = false;
  for (int e = -2 * q - 2; e <= 2 * q + 2 && !twist; ++e)
    twist = (f_twist(ar, u.rep, e) == shifted);
  if (!twist)
    throw std::invalid_argument("ar_triangle_additivity_check: tau^q U is not an F-twist of U");

  const bool mod2 = (q % 2 != 0);
  for (const ClusterMesh& mesh : cluster_meshes(ar)) {
    int val = lambda(ar, u, q, normalize(ar, mesh.tau_z)) + lambda(ar, u, q, normalize(ar, mesh.z));
    for (DObj mid : mesh.middles) val -= lambda(ar, u, q, normalize(ar, mid));
    if (mod2 ? (val % 2 != 0) : (val != 0)) return false;
  }
  return true;
}

std::vector<int> marked_vertices(DynkinType t) {
  switch (t.family) {
    case 'A':
      return {t.rank};
    case 'D':
      return {1, 2};
    default:
      if (t.rank == 7) return {6};
      throw std::invalid_argument("marked_vertices: only A_n, D_n and E_7 carry marked orbits");
  }
}

DynkinLambda dynkin_lambda_table(DynkinType t) {
  const bool supported =
      (t.family == 'A' && t.rank % 2 == 1) || t.family == 'D' || (t.family == 'E' && t.rank == 7);
  if (!supported)
    throw std::invalid_argument("dynkin_lambda_table: unsupported type (A_n odd, D_n, E_7 only)");

  const ARData ar = knit(dynkin_quiver(t));
  DynkinLambda out;
  out.type = t;
  out.coxeter = coxeter_number(t);
  out.marked = marked_vertices(t);
  const int q = out.coxeter + 2;

  std::vector<CObj> reps;
  for (int v : out.marked) reps.push_back(CObj{{ar.inj_of[v], 0}});

  const int k = static_cast<int>(reps.size());
  out.values.assign(k, std::vector<int>(k, 0));
  out.mu.assign(k, std::vector<std::vector<int>>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      out.values[i][j] = lambda(ar, reps[i], q, reps[j]);
      // mu_jj(M, N) = sum_{i<=m+1} (-1)^i dim Hom_D(M, tau^{i-jj} Sigma^jj N)
      for (int jj = 0; jj <= 3; ++jj) {
        int mu = 0;
        for (int ii = 0; ii <= out.coxeter + 1; ++ii) {
          const DObj y = tau_derived_pow(
              ar, {reps[j].rep.module, reps[j].rep.shift + jj}, ii - jj);
          const int h = hom_derived(ar, reps[i].rep, y);
          mu += (ii % 2 == 0) ? h : -h;
        }
        out.mu[i][j].push_back(mu);
      }
    }
  return out;
}

}  // namespace kbar
