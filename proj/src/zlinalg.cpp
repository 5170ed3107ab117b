#include "kbar/zlinalg.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace kbar {

namespace {

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

// Truncated quotient; remainder satisfies |a - q*b| < |b|.
Int quot(const Int& a, const Int& b) {
  Int q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

std::optional<std::pair<Index, Index>> min_abs_entry(const IntMatrix& m, Index t) {
  std::optional<std::pair<Index, Index>> best;
  Int best_abs = 0;
  for (Index i = t; i < m.rows(); ++i)
    for (Index j = t; j < m.cols(); ++j) {
      if (m(i, j) == 0) continue;
      Int a = abs_int(m(i, j));
      if (!best || a < best_abs) {
        best = {i, j};
        best_abs = a;
      }
    }
  return best;
}

}  // namespace

std::string to_string(const AbelianGroup& g) {
  std::ostringstream os;
  bool first = true;
  if (g.free_rank == 1) {
    os << "Z";
    first = false;
  } else if (g.free_rank > 1) {
    os << "Z^" << g.free_rank;
    first = false;
  }
  for (const Int& m : g.torsion) {
    if (!first) os << " + ";
    os << "Z/" << m.get_str();
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

SnfResult snf(const IntMatrix& a) {
  const Index n = a.rows(), m = a.cols();
  SnfResult r{IntMatrix::Identity(n, n), a, IntMatrix::Identity(m, m)};
  IntMatrix& s = r.s;
  const Index steps = std::min(n, m);

  for (Index t = 0; t < steps; ++t) {
    if (!min_abs_entry(s, t)) break;  // remaining block is zero
    for (;;) {
      auto piv = *min_abs_entry(s, t);
      if (piv.first != t) {
        s.row(t).swap(s.row(piv.first));
        r.u.row(t).swap(r.u.row(piv.first));
      }
      if (piv.second != t) {
        s.col(t).swap(s.col(piv.second));
        r.v.col(t).swap(r.v.col(piv.second));
      }
      // Clear column t below the pivot; remainders force a smaller pivot.
      bool clean = true;
      for (Index i = t + 1; i < n; ++i) {
        if (s(i, t) == 0) continue;
        Int q = quot(s(i, t), s(t, t));
        if (q != 0) {
          s.row(i) -= q * s.row(t);
          r.u.row(i) -= q * r.u.row(t);
        }
        if (s(i, t) != 0) clean = false;
      }
      if (!clean) continue;
      for (Index j = t + 1; j < m; ++j) {
        if (s(t, j) == 0) continue;
        Int q = quot(s(t, j), s(t, t));
        if (q != 0) {
          s.col(j) -= q * s.col(t);
          r.v.col(j) -= q * r.v.col(t);
        }
        if (s(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // Pivot must divide the remaining block for the divisibility chain.
      bool divides = true;
      for (Index i = t + 1; i < n && divides; ++i)
        for (Index j = t + 1; j < m && divides; ++j) {
          if (s(i, j) == 0) continue;
          if (!mpz_divisible_p(s(i, j).get_mpz_t(), s(t, t).get_mpz_t())) {
            s.row(t) += s.row(i);
            r.u.row(t) += r.u.row(i);
            divides = false;
          }
        }
      if (divides) break;
    }
    if (s(t, t) < 0) {
      s.row(t) = -s.row(t);
      r.u.row(t) = -r.u.row(t);
    }
  }
  return r;
}

AbelianGroup cokernel(const IntMatrix& a) {
  const SnfResult f = snf(a);
  AbelianGroup g;
  Index rank = 0;
  const Index steps = std::min(a.rows(), a.cols());
  for (Index t = 0; t < steps; ++t) {
    if (f.s(t, t) == 0) continue;
    ++rank;
    if (f.s(t, t) > 1) g.torsion.push_back(f.s(t, t));
  }
  g.free_rank = a.rows() - rank;
  return g;
}

SkewNormalForm skew_normal_form(const IntMatrix& in) {
  const Index n = in.rows();
  if (in.cols() != n) throw std::invalid_argument("skew_normal_form: matrix not square");
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      if (in(i, j) != -in(j, i))
        throw std::invalid_argument("skew_normal_form: matrix not skew-symmetric");

  IntMatrix m = in;
  IntMatrix u = IntMatrix::Identity(n, n);

  // Congruence column op (paired with the mirror row op keeps skewness).
  auto add_col = [&](Index dst, Index src, const Int& c) {
    m.col(dst) += c * m.col(src);
    m.row(dst) += c * m.row(src);
    u.col(dst) += c * u.col(src);
  };
  auto swap_cols = [&](Index i, Index j) {
    m.col(i).swap(m.col(j));
    m.row(i).swap(m.row(j));
    u.col(i).swap(u.col(j));
  };

  std::vector<Int> pairs;
  Index t = 0;
  while (t + 1 < n) {
    auto piv = min_abs_entry(m, t);
    if (!piv) break;
    auto [pi, pj] = *piv;  // off-diagonal since the diagonal of a skew matrix is zero
    if (pi != t) {
      swap_cols(t, pi);
      if (pj == t) pj = pi;
    }
    if (pj != t + 1) swap_cols(t + 1, pj);

    for (;;) {
      const Int p = m(t, t + 1);
      bool clean = true;
      // m(t,k) reduced with column t+1 (m(t,t+1) = p); m(t+1,t+1) = 0 keeps row t+1 intact.
      for (Index k = t + 2; k < n; ++k) {
        if (m(t, k) == 0) continue;
        add_col(k, t + 1, -quot(m(t, k), p));
        if (m(t, k) != 0) clean = false;
      }
      // m(t+1,k) reduced with column t (m(t+1,t) = -p).
      for (Index k = t + 2; k < n; ++k) {
        if (m(t + 1, k) == 0) continue;
        add_col(k, t, quot(m(t + 1, k), p));
        if (m(t + 1, k) != 0) clean = false;
      }
      if (!clean) {
        auto re = *min_abs_entry(m, t);
        Index i = re.first, j = re.second;
        if (i != t) {
          swap_cols(t, i);
          if (j == t) j = i;
        }
        if (j != t + 1) swap_cols(t + 1, j);
        continue;
      }
      // Pivot must divide the trailing block.
      bool divides = true;
      for (Index i = t + 2; i < n && divides; ++i)
        for (Index j = t + 2; j < n && divides; ++j) {
          if (m(i, j) == 0) continue;
          if (!mpz_divisible_p(m(i, j).get_mpz_t(), p.get_mpz_t())) {
            add_col(t, i, 1);
            divides = false;
          }
        }
      if (divides) break;
    }
    if (m(t, t + 1) < 0) swap_cols(t, t + 1);
    pairs.push_back(m(t, t + 1));
    t += 2;
  }

  // Zero block sits in rows/cols t..n-1; the convention puts it first.
  const Index r = n - t;
  std::vector<Index> order;
  order.reserve(n);
  for (Index i = t; i < n; ++i) order.push_back(i);
  for (Index i = 0; i < t; ++i) order.push_back(i);
  IntMatrix u2(n, n);
  for (Index j = 0; j < n; ++j) u2.col(j) = u.col(order[j]);

  return SkewNormalForm{std::move(u2), r, std::move(pairs)};
}

GF2Matrix gf2_nullspace(const GF2Matrix& a) {
  const Index n = a.rows(), m = a.cols();
  GF2Matrix w = a;
  std::vector<Index> pivot_col;
  Index row = 0;
  for (Index col = 0; col < m && row < n; ++col) {
    Index sel = -1;
    for (Index i = row; i < n; ++i)
      if (w(i, col) & 1) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != row) w.row(sel).swap(w.row(row));
    for (Index i = 0; i < n; ++i)
      if (i != row && (w(i, col) & 1))
        for (Index j = col; j < m; ++j) w(i, j) ^= w(row, j);
    pivot_col.push_back(col);
    ++row;
  }
  std::vector<Index> free_cols;
  {
    std::size_t k = 0;
    for (Index col = 0; col < m; ++col) {
      if (k < pivot_col.size() && pivot_col[k] == col)
        ++k;
      else
        free_cols.push_back(col);
    }
  }
  GF2Matrix basis = GF2Matrix::Zero(m, static_cast<Index>(free_cols.size()));
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    basis(free_cols[k], static_cast<Index>(k)) = 1;
    for (std::size_t r = 0; r < pivot_col.size(); ++r)
      basis(pivot_col[r], static_cast<Index>(k)) = w(static_cast<Index>(r), free_cols[k]) & 1;
  }
  return basis;
}

bool groups_isomorphic(const AbelianGroup& g, const AbelianGroup& h) { return g == h; }

Index integer_rank(const IntMatrix& a) {
  const SnfResult f = snf(a);
  Index rank = 0;
  const Index steps = std::min(a.rows(), a.cols());
  for (Index t = 0; t < steps; ++t)
    if (f.s(t, t) != 0) ++rank;
  return rank;
}

Int determinant(const IntMatrix& a) {
  const Index n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("determinant: matrix not square");
  if (n == 0) return 1;
  IntMatrix w = a;
  Int sign = 1, prev = 1;
  for (Index k = 0; k + 1 < n; ++k) {
    if (w(k, k) == 0) {
      Index sel = -1;
      for (Index i = k + 1; i < n; ++i)
        if (w(i, k) != 0) {
          sel = i;
          break;
        }
      if (sel < 0) return 0;
      w.row(k).swap(w.row(sel));
      sign = -sign;
    }
    for (Index i = k + 1; i < n; ++i)
      for (Index j = k + 1; j < n; ++j) {
        Int num = w(i, j) * w(k, k) - w(i, k) * w(k, j);
        mpz_divexact(w(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    prev = w(k, k);
  }
  return sign * w(n - 1, n - 1);
}

IntMatrix kernel_basis(const IntMatrix& a) {
  const SnfResult f = snf(a);
  Index rank = 0;
  const Index steps = std::min(a.rows(), a.cols());
  for (Index t = 0; t < steps; ++t)
    if (f.s(t, t) != 0) ++rank;
  return f.v.rightCols(a.cols() - rank);
}

IntMatrix unimodular_inverse(const IntMatrix& a) {
  const Index n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("unimodular_inverse: matrix not square");
  const SnfResult f = snf(a);
  for (Index t = 0; t < n; ++t)
    if (f.s(t, t) != 1) throw std::invalid_argument("unimodular_inverse: determinant is not +-1");
  return f.v * f.u;
}

Index rep_hom_dim(const std::vector<std::pair<int, int>>& arrows,
                  const std::vector<int>& dims_m, const std::vector<IntMatrix>& maps_m,
                  const std::vector<int>& dims_n, const std::vector<IntMatrix>& maps_n) {
  if (dims_m.size() != dims_n.size())
    throw std::invalid_argument("rep_hom_dim: vertex count mismatch");
  if (maps_m.size() != arrows.size() || maps_n.size() != arrows.size())
    throw std::invalid_argument("rep_hom_dim: arrow map count mismatch");
  const int nv = static_cast<int>(dims_m.size());

  // Unknowns: entries of phi_v (dims_n[v] x dims_m[v]), flattened per vertex.
  std::vector<Index> offset(nv + 1, 0);
  for (int v = 0; v < nv; ++v)
    offset[v + 1] = offset[v] + Index(dims_n[v]) * Index(dims_m[v]);
  const Index unknowns = offset[nv];

  Index rows = 0;
  for (const auto& [v, w] : arrows) rows += Index(dims_n[w]) * Index(dims_m[v]);
  IntMatrix sys = IntMatrix::Zero(rows, unknowns);

  Index row = 0;
  for (std::size_t e = 0; e < arrows.size(); ++e) {
    const auto [v, w] = arrows[e];
    const IntMatrix& ma = maps_m[e];  // dims_m[w] x dims_m[v]
    const IntMatrix& na = maps_n[e];  // dims_n[w] x dims_n[v]
    for (int r = 0; r < dims_n[w]; ++r)
      for (int c = 0; c < dims_m[v]; ++c) {
        // (phi_w * ma - na * phi_v)(r, c) = 0
        for (int k = 0; k < dims_m[w]; ++k)
          sys(row, offset[w] + Index(r) * dims_m[w] + k) += ma(k, c);
        for (int k = 0; k < dims_n[v]; ++k)
          sys(row, offset[v] + Index(k) * dims_m[v] + c) -= na(r, k);
        ++row;
      }
  }
  return unknowns - integer_rank(sys);
}

}  // namespace kbar
