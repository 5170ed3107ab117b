#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "kbar/meshhom.hpp"
#include "kbar/oracles.hpp"
#include "kbar/quiver.hpp"
#include "kbar/report.hpp"
#include "kbar/sheafk0.hpp"
#include "kbar/tube.hpp"
#include "kbar/verify.hpp"

namespace {

using namespace kbar;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void emit(const Report& r, bool json, const std::string& text) {
  if (json)
    std::cout << to_json(r).dump(2) << "\n";
  else
    std::cout << text;
}

nlohmann::json json_quiver(const Quiver& q) {
  nlohmann::json arrows = nlohmann::json::array();
  for (const auto& [s, t] : q.arrows) arrows.push_back({s, t});
  return {{"vertices", q.vertices}, {"arrows", arrows}};
}

int cmd_k0_quiver(const std::string& file, bool json, bool certificate) {
  const Quiver q = parse_quiver(slurp(file));
  Report r;
  r.command = "k0 quiver";
  r.group = kbar_hereditary(q);
  r.details["quiver"] = json_quiver(q);
  std::ostringstream os;
  os << "quiver: " << q.vertices << " vertices, " << q.arrows.size() << " arrows\n";
  if (certificate) {
    const IntMatrix b = adjacency(q);
    r.certificate = snf(IntMatrix(b - b.transpose()));
    os << "snf(B - B^T) = diag(";
    for (Index i = 0; i < r.certificate->s.rows(); ++i)
      os << (i ? "," : "") << r.certificate->s(i, i);
    os << ")\n";
  }
  os << "K0bar = " << to_string(*r.group) << "\n";
  emit(r, json, os.str());
  return 0;
}

int cmd_k0_canonical(const std::string& weights, bool json) {
  const WeightSequence w = WeightSequence::parse(weights);
  const CanonicalKbar k = kbar_canonical(w);
  const K0Lattice l = build_k0(w);
  const auto forms = dual_basis(l);

  Report r;
  r.command = "k0 canonical";
  r.group = k.group;
  r.details["weights"] = w.p;
  {
    nlohmann::json basis = nlohmann::json::array();
    for (const auto& b : k.basis) basis.push_back(b);
    r.details["basis"] = basis;
    nlohmann::json gens = nlohmann::json::object();
    for (const auto& [name, coords] : k.images) {
      nlohmann::json c = nlohmann::json::array();
      for (const Int& x : coords) c.push_back(json_int(x));
      gens[name] = c;
    }
    r.details["generators"] = gens;
    nlohmann::json fj = nlohmann::json::object();
    for (const auto& f : forms) {
      nlohmann::json c = nlohmann::json::array();
      for (Index i = 0; i < f.coeffs.size(); ++i)
        c.push_back(json_int(f.mod2 ? Int(((f.coeffs(i) % 2) + 2) % 2) : f.coeffs(i)));
      fj[f.name] = {{"mod2", f.mod2}, {"coeffs", c}};
    }
    r.details["forms"] = fj;
  }

  std::ostringstream os;
  os << "weights: " << w.to_string() << "   p = " << w.lcm() << "   delta = " << w.discriminant()
     << "\n";
  os << "K0bar = " << to_string(k.group) << "\n";
  os << "basis of K0bar:";
  for (const auto& b : k.basis) os << " " << b;
  os << "\ngenerator images:\n";
  for (const auto& [name, coords] : k.images) {
    os << "  " << name << " ->";
    for (const Int& x : coords) os << " " << x;
    os << "\n";
  }
  os << "dual basis:\n";
  for (const auto& f : forms) {
    os << "  " << f.name << (f.mod2 ? " (mod 2):" : ":");
    for (Index i = 0; i < f.coeffs.size(); ++i)
      os << " " << (f.mod2 ? Int(((f.coeffs(i) % 2) + 2) % 2) : f.coeffs(i));
    os << "\n";
  }
  emit(r, json, os.str());
  return 0;
}

int cmd_k0_tube(int q, bool json) {
  Report r;
  r.command = "k0 tube";
  r.group = kbar_tube(q);
  r.details["rank"] = q;
  std::ostringstream os;
  os << "cluster tube of rank " << q << "\nK0bar = " << to_string(*r.group) << "\n";
  emit(r, json, os.str());
  return 0;
}

int cmd_lambda_dynkin(const std::string& family, int n, bool json) {
  if (family.size() != 1 || (family != "A" && family != "D" && family != "E"))
    throw std::invalid_argument("family must be A, D or E");
  const DynkinLambda t = dynkin_lambda_table({family[0], n});

  Report r;
  r.command = "lambda dynkin";
  r.details["type"] = family + std::to_string(n);
  r.details["coxeter_number"] = t.coxeter;
  r.details["q"] = t.coxeter + 2;
  r.details["marked_vertices"] = t.marked;
  r.details["values"] = t.values;
  r.details["mu"] = t.mu;

  std::ostringstream os;
  os << family << n << ": Coxeter number m = " << t.coxeter << ", q = m + 2 = " << t.coxeter + 2
     << "\nmarked vertices:";
  for (int v : t.marked) os << " " << v;
  os << "\n";
  for (std::size_t i = 0; i < t.values.size(); ++i)
    for (std::size_t j = 0; j < t.values[i].size(); ++j) {
      os << "lambda_M" << i + 1 << "(M" << j + 1 << ") = " << t.values[i][j] << "   (mu_0..3 =";
      for (int m : t.mu[i][j]) os << " " << m;
      os << ")\n";
    }
  emit(r, json, os.str());
  return 0;
}

int cmd_lambda_tube(int q, bool json) {
  Report r;
  r.command = "lambda tube";
  r.details["rank"] = q;
  std::ostringstream os;
  os << "cluster tube of rank " << q << "\n";
  if (q >= 1 && q % 2 == 0) {
    const Int ls = lambda_even_tube(q, make_tube_obj(q, 0, 1));
    r.details["lambda_S"] = json_int(ls);
    os << "lambda_S(S) = " << ls << "\n";
  } else {
    const int ls = lambda_odd_tube(q, make_tube_obj(q, 0, 1));
    const int lm = lambda_odd_tube(q, make_tube_obj(q, 0, 2));
    r.details["lambda_S_mod2"] = ls;
    r.details["lambda_M02_mod2"] = lm;
    os << "lambda(pi S) = " << ls << " (mod 2)\nlambda(M(0,2)) = " << lm << " (mod 2)\n";
  }
  emit(r, json, os.str());
  return 0;
}

int cmd_reduce(const std::string& file, bool json) {
  const Quiver q = parse_quiver(slurp(file));
  const ReductionResult res = reduce_source_sink(q);

  Report r;
  r.command = "reduce";
  r.group = kbar_hereditary(q);
  r.details["quiver"] = json_quiver(q);
  r.details["reduced"] = json_quiver(res.reduced);
  r.details["kept_vertices"] = res.kept;
  {
    nlohmann::json steps = nlohmann::json::array();
    for (const auto& s : res.trace)
      steps.push_back({{"arrow", {s.arrow.first, s.arrow.second}},
                       {"kind", s.source_arrow ? "source" : "sink"}});
    r.details["trace"] = steps;
  }

  std::ostringstream os;
  for (const auto& s : res.trace)
    os << "remove " << (s.source_arrow ? "source" : "sink") << "-arrow " << s.arrow.first << " -> "
       << s.arrow.second << " with both endpoints\n";
  os << "reduced quiver: " << res.reduced.vertices << " vertices, " << res.reduced.arrows.size()
     << " arrows";
  if (!res.kept.empty()) {
    os << " (original labels:";
    for (int v : res.kept) os << " " << v;
    os << ")";
  }
  os << "\nK0bar = " << to_string(*r.group) << "\n";
  emit(r, json, os.str());
  return 0;
}

int cmd_verify(const std::string& scope_str, std::uint64_t seed) {
  const Scope scope = parse_scope(scope_str);
  const auto results = run_verification(scope, seed);
  bool all_pass = true;
  for (const auto& r : results) {
    std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << " " << r.name << " — " << r.detail
              << "\n";
    all_pass = all_pass && r.pass;
  }
  std::cout << (all_pass ? "all checks passed" : "CHECKS FAILED") << "\n";
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Grothendieck groups of cluster categories"};
  app.require_subcommand(1);

  bool json = false, certificate = false;
  std::string file, weights, family, scope = "all";
  int n = 0, tube_rank = 0;
  std::uint64_t seed = kDefaultSeed;

  auto* k0 = app.add_subcommand("k0", "Grothendieck group K0bar of a cluster category");
  k0->require_subcommand(1);
  auto* k0q = k0->add_subcommand("quiver", "for the path algebra of an acyclic quiver file");
  k0q->add_option("file", file, "quiver file")->required();
  k0q->add_flag("--json", json, "JSON output");
  k0q->add_flag("--certificate", certificate, "include the SNF transform U, S, V");
  auto* k0c = k0->add_subcommand("canonical", "for a canonical algebra / weighted projective line");
  k0c->add_option("weights", weights, "comma-separated weights, e.g. 2,3,5")->required();
  k0c->add_flag("--json", json, "JSON output");
  auto* k0t = k0->add_subcommand("tube", "for the cluster tube of rank Q");
  k0t->add_option("rank", tube_rank, "tube rank")->required();
  k0t->add_flag("--json", json, "JSON output");

  auto* la = app.add_subcommand("lambda", "additive functions on the cluster category");
  la->require_subcommand(1);
  auto* lad = la->add_subcommand("dynkin", "lambda values on the marked orbits");
  lad->add_option("family", family, "A, D or E")->required();
  lad->add_option("rank", n, "rank of the diagram")->required();
  lad->add_flag("--json", json, "JSON output");
  auto* lat = la->add_subcommand("tube", "lambda values on the cluster tube");
  lat->add_option("rank", tube_rank, "tube rank")->required();
  lat->add_flag("--json", json, "JSON output");

  auto* red = app.add_subcommand("reduce", "source-/sink-arrow reduction of a quiver file");
  red->add_option("file", file, "quiver file")->required();
  red->add_flag("--json", json, "JSON output");

  auto* ver = app.add_subcommand("verify", "run the paper-verification suite");
  ver->add_option("scope", scope, "all, hereditary, canonical, dynkin or tube")->required();
  ver->add_option("--seed", seed, "seed for the randomized property checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (k0q->parsed()) return cmd_k0_quiver(file, json, certificate);
    if (k0c->parsed()) return cmd_k0_canonical(weights, json);
    if (k0t->parsed()) return cmd_k0_tube(tube_rank, json);
    if (lad->parsed()) return cmd_lambda_dynkin(family, n, json);
    if (lat->parsed()) return cmd_lambda_tube(tube_rank, json);
    if (red->parsed()) return cmd_reduce(file, json);
    if (ver->parsed()) return cmd_verify(scope, seed);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
