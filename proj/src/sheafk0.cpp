#include "kbar/sheafk0.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace kbar {

WeightSequence WeightSequence::of(std::vector<int> raw) {
  for (int w : raw)
    if (w < 1) throw std::invalid_argument("weights must be positive");
  std::erase(raw, 1);
  std::vector<int> even, odd;
  for (int w : raw) (w % 2 == 0 ? even : odd).push_back(w);
  std::sort(even.rbegin(), even.rend());
  std::sort(odd.rbegin(), odd.rend());
  even.insert(even.end(), odd.begin(), odd.end());
  return WeightSequence{std::move(even)};
}

WeightSequence WeightSequence::parse(const std::string& csv) {
  std::vector<int> raw;
  std::string item;
  std::istringstream in(csv);
  while (std::getline(in, item, ',')) {
    std::size_t pos = 0;
    int w = 0;
    try {
      w = std::stoi(item, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("weights: expected comma-separated integers");
    }
    while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
    if (pos != item.size()) throw std::invalid_argument("weights: trailing junk in entry");
    raw.push_back(w);
  }
  if (raw.empty()) throw std::invalid_argument("weights: empty list");
  return of(std::move(raw));
}

int WeightSequence::even_count() const {
  return static_cast<int>(std::count_if(p.begin(), p.end(), [](int w) { return w % 2 == 0; }));
}

long WeightSequence::lcm() const {
  long l = 1;
  for (int w : p) l = std::lcm(l, static_cast<long>(w));
  return l;
}

Int WeightSequence::discriminant() const {
  const long l = lcm();
  Int d = Int(l) * (static_cast<int>(p.size()) - 2);
  for (int w : p) d -= Int(l / w);
  return d;
}

std::string WeightSequence::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
  os << ")";
  return os.str();
}

Index K0Lattice::idx_s(int arm, int j) const {
  Index k = 2;
  for (int i = 1; i < arm; ++i) k += weights.p[i - 1] - 1;
  return k + j;
}

IntVector K0Lattice::unit(Index k) const {
  IntVector v = IntVector::Zero(size());
  v(k) = 1;
  return v;
}

IntVector K0Lattice::class_s(int arm, int j) const {
  const int pi = weights.p[arm - 1];
  j = ((j % pi) + pi) % pi;
  if (j <= pi - 2) return unit(idx_s(arm, j));
  IntVector v = class_s0();  // s_i(p_i - 1) = s0 - sum_{j < p_i - 1} s_i(j)
  for (int k = 0; k <= pi - 2; ++k) v(idx_s(arm, k)) -= 1;
  return v;
}

K0Lattice build_k0(const WeightSequence& w) {
  K0Lattice l;
  l.weights = w;
  l.p = w.lcm();
  l.delta = w.discriminant();
  const int t = w.arms();

  Index n = 2;
  l.labels = {"a", "s0"};
  for (int i = 1; i <= t; ++i)
    for (int j = 0; j <= w.p[i - 1] - 2; ++j) {
      std::ostringstream os;
      os << "s" << i << "(" << j << ")";
      l.labels.push_back(os.str());
      ++n;
    }

  IntMatrix c = IntMatrix::Zero(n, n);
  c(0, 0) = 1;   // <a,a>, pinned by Serre duality from Phi a
  c(0, 1) = 1;   // <a,s0>: rk(L) = 1
  c(1, 0) = -1;  // <s0,a> = -<a, Phi s0> = -<a,s0>
  for (int i = 1; i <= t; ++i) {
    const int pi = w.p[i - 1];
    for (int mj = 0; mj <= pi - 2; ++mj) {
      const Index row = l.idx_s(i, mj);
      if (mj == 0) c(0, row) = 1;  // Hom(L, S_i) one-dimensional, tau-twists Hom-free
      // <s_i(j), a> = -delta_{j, p_i-1}: never hit on the reduced basis.
      for (int nj = 0; nj <= pi - 2; ++nj) {
        const Index col = l.idx_s(i, nj);
        if (nj == mj) c(row, col) = 1;
        if (nj == mj + 1) c(row, col) = -1;
      }
    }
  }

  l.euler = c;

  IntMatrix phi = IntMatrix::Zero(n, n);
  {
    // Phi a = a - sum_i s_i(0) + (t - 2) s0
    IntVector col = IntVector::Zero(n);
    col(0) = 1;
    col(1) = t - 2;
    for (int i = 1; i <= t; ++i)
      if (w.p[i - 1] >= 2) col(l.idx_s(i, 0)) -= 1;
    phi.col(0) = col;
  }
  phi(1, 1) = 1;  // Phi s0 = s0
  for (int i = 1; i <= t; ++i) {
    const int pi = w.p[i - 1];
    for (int j = 0; j <= pi - 2; ++j) phi.col(l.idx_s(i, j)) = l.class_s(i, j + 1);
  }

  l.cox = phi;

  const Int det = determinant(c);
  if (det != 1 && det != -1) throw std::logic_error("build_k0: Euler matrix not unimodular");
  if (!same_matrix(IntMatrix(c * phi), IntMatrix(-c.transpose())))
    throw std::logic_error("build_k0: Phi != -C^{-1} C^T");

  IntVector acc = l.class_a(), sum = IntVector::Zero(n);
  for (long j = 0; j < l.p; ++j) {
    sum += acc;
    acc = phi * acc;
  }
  l.tau_orbit_a = sum;
  return l;
}

Int euler_pairing(const K0Lattice& l, const IntVector& x, const IntVector& y) {
  return (x.transpose() * l.euler * y)(0, 0);
}

Int rank(const K0Lattice& l, const IntVector& x) { return euler_pairing(l, x, l.class_s0()); }

Int degree(const K0Lattice& l, const IntVector& x) {
  const Int rk = rank(l, x);
  return euler_pairing(l, l.tau_orbit_a, x) - rk * euler_pairing(l, l.tau_orbit_a, l.class_a());
}

Rat slope(const K0Lattice& l, const IntVector& x) {
  const Int rk = rank(l, x);
  if (rk == 0) throw std::invalid_argument("slope: class has rank zero");
  Rat mu(degree(l, x), rk);
  mu.canonicalize();
  return mu;
}

bool coxeter_power_check(const K0Lattice& l) {
  const Index n = l.size();
  IntMatrix pw = IntMatrix::Identity(n, n);
  for (long j = 0; j < l.p; ++j) pw = l.cox * pw;
  const IntVector rank_row = l.euler * l.class_s0();  // rk(x) = x . rank_row
  IntMatrix expected = IntMatrix::Identity(n, n);
  expected.row(l.idx_s0()) += l.delta * rank_row.transpose();
  return same_matrix(pw, expected);
}

Int averaged_euler(const K0Lattice& l, const IntVector& e, const IntVector& x) {
  Int direct = 0;
  IntVector acc = e;
  for (long j = 0; j < l.p; ++j) {
    direct += euler_pairing(l, acc, x);
    acc = l.cox * acc;
  }
  const Int rke = rank(l, e), rkx = rank(l, x);
  const Int dege = degree(l, e), degx = degree(l, x);
  const Int det2 = rke * degx - rkx * dege;
  const Int term = Int(l.p) * l.delta * rke * rkx;
  const bool ok = (term % 2 == 0) ? (direct == -term / 2 + det2) : (2 * direct == -term + 2 * det2);
  if (!ok) throw std::logic_error("averaged_euler: Riemann-Roch closed form disagrees");
  return direct;
}

namespace {

// Coordinates of classes in coker(A) read off the Smith normal form of A.
struct CokerMap {
  IntMatrix u;
  std::vector<Int> diag;
  std::vector<Index> free_idx;
  std::vector<Index> tors_idx;

  explicit CokerMap(const IntMatrix& a) {
    const SnfResult f = snf(a);
    u = f.u;
    const Index n = a.rows();
    diag.resize(n);
    for (Index i = 0; i < n; ++i) diag[i] = (i < f.s.cols()) ? f.s(i, i) : Int(0);
    for (Index i = 0; i < n; ++i) {
      if (diag[i] == 0)
        free_idx.push_back(i);
      else if (diag[i] > 1)
        tors_idx.push_back(i);
    }
  }

  std::vector<Int> free_coords(const IntVector& x) const {
    const IntVector y = u * x;
    std::vector<Int> out;
    for (Index i : free_idx) out.push_back(y(i));
    return out;
  }

  std::vector<Int> torsion_coords(const IntVector& x) const {
    const IntVector y = u * x;
    std::vector<Int> out;
    for (Index i : tors_idx) {
      Int r = y(i) % diag[i];
      if (r < 0) r += diag[i];
      out.push_back(r);
    }
    return out;
  }

  bool is_zero_class(const IntVector& x) const {
    const IntVector y = u * x;
    for (Index i = 0; i < static_cast<Index>(diag.size()); ++i) {
      if (diag[i] == 0) {
        if (y(i) != 0) return false;
      } else if (y(i) % diag[i] != 0) {
        return false;
      }
    }
    return true;
  }
};

}  // namespace

CanonicalKbar kbar_canonical(const WeightSequence& w) {
  const K0Lattice l = build_k0(w);
  const Index n = l.size();
  const IntMatrix one_plus_phi = IntMatrix::Identity(n, n) + l.cox;
  const AbelianGroup computed = cokernel(one_plus_phi);

  const int r = w.even_count();
  const AbelianGroup closed =
      (r >= 1) ? AbelianGroup{r, {}} : AbelianGroup{0, {Int(2), Int(2)}};
  if (computed != closed)
    throw std::logic_error("kbar_canonical: cokernel disagrees with the closed form");

  const CokerMap coker(one_plus_phi);
  const int t = w.arms();

  // Presentation relations must die in the quotient:
  //   2 s0 = 0,  2a = sum_i (s_i - s0),  s0 = ((1 - (-1)^{p_i})/2) s_i.
  {
    if (!coker.is_zero_class(IntVector(2 * l.class_s0())))
      throw std::logic_error("kbar_canonical: relation 2 s0 = 0 fails");
    IntVector rel = 2 * l.class_a();
    for (int i = 1; i <= t; ++i) rel -= l.class_s(i, 0) - l.class_s0();
    if (!coker.is_zero_class(rel))
      throw std::logic_error("kbar_canonical: relation 2a = sum(s_i - s0) fails");
    for (int i = 1; i <= t; ++i) {
      IntVector pr = l.class_s0();
      if (w.p[i - 1] % 2 == 1) pr -= l.class_s(i, 0);
      if (!coker.is_zero_class(pr))
        throw std::logic_error("kbar_canonical: parity relation fails");
    }
  }

  CanonicalKbar out;
  out.group = computed;

  std::vector<std::pair<std::string, IntVector>> generators;
  generators.emplace_back("a", l.class_a());
  generators.emplace_back("s0", l.class_s0());
  for (int i = 1; i <= t; ++i) {
    std::ostringstream os;
    os << "s" << i;
    generators.emplace_back(os.str(), l.class_s(i, 0));
  }

  if (r >= 1) {
    out.basis.push_back("a");
    for (int i = 2; i <= r; ++i) out.basis.push_back("s" + std::to_string(i));
    IntMatrix f(r, r);
    {
      auto put = [&](Index col, const IntVector& cls) {
        const auto coords = coker.free_coords(cls);
        for (int k = 0; k < r; ++k) f(k, col) = coords[k];
      };
      put(0, l.class_a());
      for (int i = 2; i <= r; ++i) put(i - 1, l.class_s(i, 0));
    }
    const Int det = determinant(f);
    if (det != 1 && det != -1)
      throw std::logic_error("kbar_canonical: a, s2..sr is not a basis of the free part");
    const IntMatrix finv = unimodular_inverse(f);
    for (const auto& [name, cls] : generators) {
      const auto coords = coker.free_coords(cls);
      IntVector cvec(r);
      for (int k = 0; k < r; ++k) cvec(k) = coords[k];
      const IntVector z = finv * cvec;
      out.images.emplace_back(name, std::vector<Int>(z.data(), z.data() + r));
    }
  } else {
    out.basis = {"a", "s0"};
    const auto ca = coker.torsion_coords(l.class_a());
    const auto cs = coker.torsion_coords(l.class_s0());
    // Invert the 2x2 coordinate matrix over GF(2).
    const int det2 =
        to_int(Int((ca[0] * cs[1] - ca[1] * cs[0]) % 2 != 0 ? 1 : 0));
    if (!det2) throw std::logic_error("kbar_canonical: a, s0 is not a GF(2) basis");
    auto solve = [&](const std::vector<Int>& c) {
      // x*ca + y*cs = c over GF(2)
      for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
          if ((x * ca[0] + y * cs[0] - c[0]) % 2 == 0 && (x * ca[1] + y * cs[1] - c[1]) % 2 == 0)
            return std::vector<Int>{Int(x), Int(y)};
      throw std::logic_error("kbar_canonical: GF(2) solve failed");
    };
    for (const auto& [name, cls] : generators)
      out.images.emplace_back(name, solve(coker.torsion_coords(cls)));
  }
  return out;
}

IntMatrix minus_fixed_space(const K0Lattice& l) {
  const Index n = l.size();
  const IntMatrix ker = kernel_basis(IntMatrix(IntMatrix::Identity(n, n) + l.cox));
  for (Index j = 0; j < ker.cols(); ++j) {
    const IntVector y = ker.col(j);
    if (rank(l, y) != 0 || degree(l, y) != 0)
      throw std::logic_error("minus_fixed_space: basis vector with nonzero rank or degree");
  }
  return ker;
}

Int evaluate(const LinearForm& f, const IntVector& x) {
  Int v = 0;
  for (Index i = 0; i < x.size(); ++i) v += f.coeffs(i) * x(i);
  if (f.mod2) {
    v %= 2;
    if (v < 0) v += 2;
  }
  return v;
}

std::vector<LinearForm> dual_basis(const K0Lattice& l) {
  const Index n = l.size();
  const IntMatrix one_plus_phi = IntMatrix::Identity(n, n) + l.cox;
  const int r = l.weights.even_count();
  std::vector<LinearForm> forms;

  auto check_kills = [&](const LinearForm& f) {
    const IntVector residue = one_plus_phi.transpose() * f.coeffs;
    for (Index i = 0; i < n; ++i) {
      const bool ok = f.mod2 ? (residue(i) % 2 == 0) : (residue(i) == 0);
      if (!ok) throw std::logic_error("dual_basis: form does not vanish on im(1 + Phi)");
    }
  };

  if (r >= 1) {
    auto wtilde = [&](int arm) {
      IntVector y = IntVector::Zero(n), acc = l.class_s(arm, 0);
      for (int j = 0; j < l.weights.p[arm - 1]; ++j) {
        y += (j % 2 == 0) ? acc : IntVector(-acc);
        acc = l.cox * acc;
      }
      return y;
    };
    auto htilde = [&](int arm) {
      IntVector y = IntVector::Zero(n), acc = l.class_s(arm, 0);
      for (int j = 0; j < l.weights.p[arm - 1] / 2; ++j) {
        y += acc;
        acc = l.cox * (l.cox * acc);
      }
      return y;
    };
    const IntVector w1 = wtilde(1);
    if (!is_zero_vector(IntVector(one_plus_phi * w1)))
      throw std::logic_error("dual_basis: (1 + Phi) w~s1 != 0");
    std::vector<IntVector> h(static_cast<std::size_t>(r) + 1);
    for (int i = 1; i <= r; ++i) {
      h[i] = htilde(i);
      if (!same_vector(IntVector(one_plus_phi * h[i]), l.class_s0()))
        throw std::logic_error("dual_basis: (1 + Phi) h~s_i != s0");
    }
    forms.push_back({"<w~s1,->", IntVector(l.euler.transpose() * w1), false});
    for (int i = 2; i <= r; ++i) {
      std::ostringstream os;
      os << "<h~s" << i << "-h~s1,->";
      forms.push_back({os.str(), IntVector(l.euler.transpose() * IntVector(h[i] - h[1])), false});
    }
  } else {
    const IntVector rk_coeffs = l.euler * l.class_s0();
    LinearForm rk2{"rk_2", rk_coeffs, true};
    const Int wa = euler_pairing(l, l.tau_orbit_a, l.class_a());
    LinearForm deg2{"deg_2",
                    IntVector(l.euler.transpose() * l.tau_orbit_a - wa * rk_coeffs), true};
    // deg_2(x) = <a,x>_2 + rk_2(x) on the generator classes a, s0, s_i(0)
    // (not coefficientwise: <a,->_2 alone does not descend to the quotient).
    std::vector<IntVector> gens{l.class_a(), l.class_s0()};
    for (int i = 1; i <= l.weights.arms(); ++i) gens.push_back(l.class_s(i, 0));
    for (const IntVector& g : gens) {
      const Int lhs = evaluate(deg2, g);
      const Int rhs = (euler_pairing(l, l.class_a(), g) + evaluate(rk2, g)) % 2;
      if ((lhs - rhs) % 2 != 0)
        throw std::logic_error("dual_basis: deg_2 != <a,->_2 + rk_2 on the generators");
    }
    forms.push_back(std::move(rk2));
    forms.push_back(std::move(deg2));
  }
  for (const auto& f : forms) check_kills(f);
  return forms;
}

IntMatrix canonical_cartan(const WeightSequence& w) {
  const int t = w.arms();
  Index n = 2;
  for (int i = 0; i < t; ++i) n += w.p[i] - 1;
  IntMatrix c = IntMatrix::Identity(n, n);
  const Index sink = n - 1;
  c(0, sink) = 2;  // t paths source -> sink minus t - 2 relations
  Index base = 1;
  for (int i = 0; i < t; ++i) {
    const Index len = w.p[i] - 1;
    for (Index j = 0; j < len; ++j) {
      c(0, base + j) = 1;
      c(base + j, sink) = 1;
      for (Index k = j + 1; k < len; ++k) c(base + j, base + k) = 1;
    }
    base += len;
  }
  return c;
}

IntMatrix canonical_coxeter(const WeightSequence& w) {
  const IntMatrix c = canonical_cartan(w);
  return IntMatrix(-(unimodular_inverse(c) * c.transpose()));
}

AbelianGroup kbar_canonical_cartan_route(const WeightSequence& w) {
  const IntMatrix phi = canonical_coxeter(w);
  return cokernel(IntMatrix(IntMatrix::Identity(phi.rows(), phi.rows()) + phi));
}

}  // namespace kbar
