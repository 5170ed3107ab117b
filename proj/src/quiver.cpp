#include "kbar/quiver.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace kbar {

namespace {

std::string trimmed(std::string s) {
  const char* ws = " \t\r";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

[[noreturn]] void parse_fail(int line, const std::string& what) {
  std::ostringstream os;
  os << "quiver parse error, line " << line << ": " << what;
  throw std::invalid_argument(os.str());
}

}  // namespace

Quiver parse_quiver(std::string_view text) {
  Quiver q;
  bool have_count = false;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const std::string line = trimmed(raw);
    if (line.empty()) continue;
    std::istringstream ls(line);
    if (!have_count) {
      int n = 0;
      std::string extra;
      if (!(ls >> n) || (ls >> extra) || n < 0) parse_fail(line_no, "expected vertex count");
      q.vertices = n;
      have_count = true;
      continue;
    }
    int s = 0, t = 0;
    std::string extra;
    if (!(ls >> s >> t) || (ls >> extra)) parse_fail(line_no, "expected arrow \"s t\"");
    if (s < 1 || s > q.vertices || t < 1 || t > q.vertices)
      parse_fail(line_no, "vertex index out of range");
    if (s == t) parse_fail(line_no, "loop arrow");
    q.arrows.emplace_back(s, t);
  }
  if (!have_count) parse_fail(line_no, "missing vertex count");
  return q;
}

IntMatrix adjacency(const Quiver& q) {
  IntMatrix b = IntMatrix::Zero(q.vertices, q.vertices);
  for (const auto& [s, t] : q.arrows) b(s - 1, t - 1) += 1;
  return b;
}

bool is_acyclic(const Quiver& q) {
  // Kahn's algorithm; parallel arrows count once per copy.
  std::vector<int> indeg(q.vertices + 1, 0);
  for (const auto& [s, t] : q.arrows) ++indeg[t];
  std::vector<int> stack;
  for (int v = 1; v <= q.vertices; ++v)
    if (indeg[v] == 0) stack.push_back(v);
  int seen = 0;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    ++seen;
    for (const auto& [s, t] : q.arrows)
      if (s == v && --indeg[t] == 0) stack.push_back(t);
  }
  return seen == q.vertices;
}

IntMatrix cartan(const Quiver& q) {
  if (!is_acyclic(q)) throw std::invalid_argument("cartan: quiver contains an oriented cycle");
  const Index n = q.vertices;
  const IntMatrix b = adjacency(q);
  IntMatrix c = IntMatrix::Identity(n, n);
  IntMatrix pw = IntMatrix::Identity(n, n);
  for (Index k = 1; k < n; ++k) {  // B is nilpotent: B^n = 0
    pw = pw * b;
    if (is_zero_matrix(pw)) break;
    c += pw;
  }
  return c;
}

IntMatrix coxeter(const Quiver& q) {
  const IntMatrix c = cartan(q);
  const IntMatrix cinv = IntMatrix::Identity(q.vertices, q.vertices) - adjacency(q);
  return IntMatrix(-(cinv * c.transpose()));
}

AbelianGroup kbar_hereditary(const Quiver& q) {
  const IntMatrix b = adjacency(q);
  const AbelianGroup via_adjacency = cokernel(IntMatrix(b - b.transpose()));
  const IntMatrix phi = coxeter(q);
  const AbelianGroup via_coxeter =
      cokernel(IntMatrix(IntMatrix::Identity(q.vertices, q.vertices) + phi));
  if (via_adjacency != via_coxeter)
    throw std::logic_error("kbar_hereditary: coker(B - B^T) and coker(1 + Phi) disagree");
  return via_adjacency;
}

namespace {

struct LiveQuiver {
  std::vector<int> labels;                    // original labels, ascending
  std::vector<std::pair<int, int>> arrows;    // original labels, original order

  bool alive(int v) const { return std::find(labels.begin(), labels.end(), v) != labels.end(); }
};

std::optional<ReductionStep> find_eligible(const LiveQuiver& lq) {
  std::map<int, int> outdeg, indeg;
  for (const auto& [s, t] : lq.arrows) {
    ++outdeg[s];
    ++indeg[t];
  }
  for (const auto& [s, t] : lq.arrows) {
    if (indeg[s] == 0 && outdeg[s] == 1) return ReductionStep{{s, t}, true};
    if (outdeg[t] == 0 && indeg[t] == 1) return ReductionStep{{s, t}, false};
  }
  return std::nullopt;
}

void remove_arrow_pair(LiveQuiver& lq, const ReductionStep& step) {
  const int v = step.arrow.first, w = step.arrow.second;
  std::erase_if(lq.labels, [&](int x) { return x == v || x == w; });
  std::erase_if(lq.arrows,
                [&](const std::pair<int, int>& a) {
                  return a.first == v || a.first == w || a.second == v || a.second == w;
                });
}

ReductionResult finish(const LiveQuiver& lq, std::vector<ReductionStep> trace) {
  std::map<int, int> relabel;
  for (std::size_t i = 0; i < lq.labels.size(); ++i) relabel[lq.labels[i]] = static_cast<int>(i) + 1;
  Quiver out;
  out.vertices = static_cast<int>(lq.labels.size());
  for (const auto& [s, t] : lq.arrows) out.arrows.emplace_back(relabel[s], relabel[t]);
  return ReductionResult{std::move(out), std::move(trace), lq.labels};
}

LiveQuiver live_of(const Quiver& q) {
  LiveQuiver lq;
  for (int v = 1; v <= q.vertices; ++v) lq.labels.push_back(v);
  lq.arrows = q.arrows;
  return lq;
}

}  // namespace

std::optional<ReductionResult> reduce_once(const Quiver& q) {
  LiveQuiver lq = live_of(q);
  auto step = find_eligible(lq);
  if (!step) return std::nullopt;
  remove_arrow_pair(lq, *step);
  return finish(lq, {*step});
}

ReductionResult reduce_source_sink(const Quiver& q) {
  LiveQuiver lq = live_of(q);
  std::vector<ReductionStep> trace;
  while (auto step = find_eligible(lq)) {
    remove_arrow_pair(lq, *step);
    trace.push_back(*step);
  }
  return finish(lq, std::move(trace));
}

Quiver build_example_family(int r, const std::vector<int>& m) {
  if (r < 0) throw std::invalid_argument("build_example_family: negative free rank");
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] < 1) throw std::invalid_argument("build_example_family: multiplicities must be >= 1");
    if (i + 1 < m.size() && m[i + 1] % m[i] != 0)
      throw std::invalid_argument("build_example_family: divisibility chain violated");
  }
  const int s = static_cast<int>(m.size());
  Quiver q;
  q.vertices = 2 + r + 2 * s;
  q.arrows.emplace_back(1, 2);  // alpha: v -> w
  for (int j = 0; j < r; ++j) q.arrows.emplace_back(2, 3 + j);
  for (int i = 0; i < s; ++i) {
    const int a = 3 + r + 2 * i, b = a + 1;
    q.arrows.emplace_back(2, a);
    for (int k = 0; k < m[i]; ++k) q.arrows.emplace_back(a, b);
  }
  return q;
}

Quiver dynkin_quiver(DynkinType t) {
  const bool valid = (t.family == 'A' && t.rank >= 1) || (t.family == 'D' && t.rank >= 4) ||
                     (t.family == 'E' && t.rank >= 6 && t.rank <= 8);
  if (!valid) throw std::invalid_argument("dynkin_quiver: invalid type/rank");
  Quiver q;
  q.vertices = t.rank;
  switch (t.family) {
    case 'A':
      for (int i = 1; i < t.rank; ++i) q.arrows.emplace_back(i, i + 1);
      break;
    case 'D':
      q.arrows.emplace_back(1, 3);
      q.arrows.emplace_back(2, 3);
      for (int i = 3; i < t.rank; ++i) q.arrows.emplace_back(i, i + 1);
      break;
    case 'E':
      for (int i = 1; i < t.rank - 1; ++i) q.arrows.emplace_back(i, i + 1);
      q.arrows.emplace_back(3, t.rank);
      break;
  }
  return q;
}

std::optional<DynkinType> recognize_dynkin(const Quiver& q) {
  const int n = q.vertices;
  if (n < 1) return std::nullopt;
  if (static_cast<int>(q.arrows.size()) != n - 1) return std::nullopt;
  // Simple graph check (no loops, no parallel/opposite pairs).
  std::vector<std::vector<int>> adj(n + 1);
  for (const auto& [s, t] : q.arrows) {
    if (s == t) return std::nullopt;
    for (int u : adj[s])
      if (u == t) return std::nullopt;
    adj[s].push_back(t);
    adj[t].push_back(s);
  }
  // Connected with n-1 edges => tree.
  std::vector<bool> seen(n + 1, false);
  std::vector<int> stack{1};
  seen[1] = true;
  int count = 0;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    ++count;
    for (int u : adj[v])
      if (!seen[u]) {
        seen[u] = true;
        stack.push_back(u);
      }
  }
  if (count != n) return std::nullopt;

  int branch = 0;
  for (int v = 1; v <= n; ++v) {
    if (adj[v].size() > 3) return std::nullopt;
    if (adj[v].size() == 3) {
      if (branch) return std::nullopt;
      branch = v;
    }
  }
  if (!branch) return DynkinType{'A', n};

  std::vector<int> arms;
  for (int first : adj[branch]) {
    int len = 1, prev = branch, cur = first;
    while (true) {
      int next = -1;
      for (int u : adj[cur])
        if (u != prev) next = u;
      if (next < 0) break;
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return DynkinType{'D', n};
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return DynkinType{'E', n};
  return std::nullopt;
}

}  // namespace kbar
