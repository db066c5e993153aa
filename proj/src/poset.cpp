#include "incmon/poset.hpp"

#include <algorithm>
#include <set>

#include "incmon/errors.hpp"

namespace incmon {

Poset Poset::build(const std::vector<std::string>& labels,
                   const std::vector<std::pair<int, int>>& covers) {
  const int n = static_cast<int>(labels.size());
  {
    std::set<std::string> seen;
    for (const auto& l : labels)
      require(seen.insert(l).second, "DuplicateLabel", "label '" + l + "' repeats");
  }
  for (const auto& [u, v] : covers)
    require(u >= 0 && u < n && v >= 0 && v < n, "IndexOutOfRange",
            "cover (" + std::to_string(u) + "," + std::to_string(v) + ") outside 0.." +
                std::to_string(n - 1));

  // Kahn's algorithm, always taking the smallest available input index so the
  // resulting extension is deterministic.
  std::vector<int> indegree(n, 0);
  std::vector<std::vector<int>> succ(n);
  for (const auto& [u, v] : covers) {
    succ[u].push_back(v);
    ++indegree[v];
  }
  std::vector<int> order;  // order[new] = old
  std::vector<char> placed(n, 0);
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int i = 0; i < n; ++i)
      if (!placed[i] && indegree[i] == 0) {
        pick = i;
        break;
      }
    require(pick >= 0, "CycleDetected", "cover relation contains a cycle");
    placed[pick] = 1;
    order.push_back(pick);
    for (int v : succ[pick]) --indegree[v];
  }
  std::vector<int> pos(n);  // pos[old] = new
  for (int i = 0; i < n; ++i) pos[order[i]] = i;

  Poset p;
  p.n_ = n;
  p.labels_.resize(n);
  for (int i = 0; i < n; ++i) p.labels_[i] = labels[order[i]];
  p.rel_.assign(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) p.rel_[static_cast<std::size_t>(i) * n + i] = 1;
  for (const auto& [u, v] : covers) p.rel_[static_cast<std::size_t>(pos[u]) * n + pos[v]] = 1;
  // Transitive closure; indices respect the extension so one forward sweep
  // per intermediate node suffices (Floyd-Warshall on booleans).
  for (int l = 0; l < n; ++l)
    for (int i = 0; i < n; ++i)
      if (p.leq(i, l))
        for (int j = 0; j < n; ++j)
          if (p.leq(l, j)) p.rel_[static_cast<std::size_t>(i) * n + j] = 1;
  return p;
}

std::vector<std::pair<int, int>> Poset::cover_relations() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      if (!strictly_less(i, j)) continue;
      bool direct = true;
      for (int l = i + 1; l < j && direct; ++l)
        if (strictly_less(i, l) && strictly_less(l, j)) direct = false;
      if (direct) out.emplace_back(i, j);
    }
  return out;  // already sorted lexicographically by the loop order
}

bool Poset::is_minimal(int i) const {
  for (int l = 0; l < n_; ++l)
    if (strictly_less(l, i)) return false;
  return true;
}

bool Poset::is_maximal(int i) const {
  for (int l = 0; l < n_; ++l)
    if (strictly_less(i, l)) return false;
  return true;
}

std::vector<int> Poset::minimal_elements() const {
  std::vector<int> out;
  for (int i = 0; i < n_; ++i)
    if (is_minimal(i)) out.push_back(i);
  return out;
}

std::vector<int> Poset::maximal_elements() const {
  std::vector<int> out;
  for (int i = 0; i < n_; ++i)
    if (is_maximal(i)) out.push_back(i);
  return out;
}

Poset Poset::dual() const {
  // New index i stands for old index n-1-i, which reverses the extension and
  // keeps the relation upper triangular.
  Poset p;
  p.n_ = n_;
  p.labels_.resize(n_);
  p.rel_.assign(static_cast<std::size_t>(n_) * n_, 0);
  for (int i = 0; i < n_; ++i) p.labels_[i] = labels_[n_ - 1 - i];
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (leq(n_ - 1 - j, n_ - 1 - i)) p.rel_[static_cast<std::size_t>(i) * n_ + j] = 1;
  return p;
}

Poset Poset::induced(const std::vector<int>& indices) const {
  Poset p;
  p.n_ = static_cast<int>(indices.size());
  for (std::size_t t = 0; t < indices.size(); ++t) {
    int i = indices[t];
    require(i >= 0 && i < n_, "IndexOutOfRange", "induced index outside the poset");
    require(t == 0 || indices[t - 1] < i, "IndexOutOfRange",
            "induced indices must be strictly ascending");
    p.labels_.push_back(labels_[i]);
  }
  p.rel_.assign(static_cast<std::size_t>(p.n_) * p.n_, 0);
  for (int a = 0; a < p.n_; ++a)
    for (int b = 0; b < p.n_; ++b)
      if (leq(indices[a], indices[b])) p.rel_[static_cast<std::size_t>(a) * p.n_ + b] = 1;
  return p;
}

std::string poset_tag_name(PosetTag tag) {
  switch (tag) {
    case PosetTag::chain: return "chain";
    case PosetTag::bipartite: return "bipartite";
    case PosetTag::complete_bipartite: return "complete_bipartite";
    case PosetTag::general: return "general";
  }
  return "general";
}

namespace {

// Every element minimal xor maximal, nothing isolated: the poset has height
// exactly one, so all intervals have at most two elements.
bool is_rank_one(const Poset& p) {
  if (p.size() == 0) return false;
  for (int i = 0; i < p.size(); ++i) {
    bool mn = p.is_minimal(i), mx = p.is_maximal(i);
    if (mn && mx) return false;  // isolated point
    if (!mn && !mx) return false;  // middle of a 3-chain
  }
  return true;
}

bool is_total_order(const Poset& p) {
  for (int i = 0; i < p.size(); ++i)
    for (int j = i + 1; j < p.size(); ++j)
      if (!p.leq(i, j)) return false;
  return true;
}

}  // namespace

PosetClass classify(const Poset& p) {
  const bool connected = component_index_sets(p).size() <= 1;
  if (connected && is_rank_one(p)) {
    auto mins = p.minimal_elements();
    auto maxs = p.maximal_elements();
    PosetClass c;
    c.k = static_cast<int>(mins.size());
    c.m = static_cast<int>(maxs.size());
    c.tag = PosetTag::bipartite;
    bool complete = true;
    for (int i : mins)
      for (int j : maxs)
        if (!p.leq(i, j)) complete = false;
    if (complete) c.tag = PosetTag::complete_bipartite;
    return c;
  }
  if (is_total_order(p)) return PosetClass{PosetTag::chain, 0, 0};
  return PosetClass{PosetTag::general, 0, 0};
}

bool is_antichain(const Poset& p, const IndexSet& s) {
  require(s.ambient() == p.size(), "IndexOutOfRange",
          "antichain ambient size differs from the poset size");
  const auto& m = s.members();
  for (std::size_t a = 0; a < m.size(); ++a)
    for (std::size_t b = a + 1; b < m.size(); ++b)
      if (p.leq(m[a] - 1, m[b] - 1) || p.leq(m[b] - 1, m[a] - 1)) return false;
  return true;
}

std::vector<std::vector<int>> component_index_sets(const Poset& p) {
  const int n = p.size();
  std::vector<int> comp(n, -1);
  int next = 0;
  for (int start = 0; start < n; ++start) {
    if (comp[start] >= 0) continue;
    std::vector<int> stack{start};
    comp[start] = next;
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      for (int j = 0; j < n; ++j)
        if (comp[j] < 0 && (p.leq(i, j) || p.leq(j, i))) {
          comp[j] = next;
          stack.push_back(j);
        }
    }
    ++next;
  }
  std::vector<std::vector<int>> out(next);
  for (int i = 0; i < n; ++i) out[comp[i]].push_back(i);
  return out;  // component ids follow smallest members; lists are ascending
}

std::vector<Poset> connected_components(const Poset& p) {
  std::vector<Poset> out;
  for (const auto& part : component_index_sets(p)) out.push_back(p.induced(part));
  return out;
}

Antichain::Antichain(const Poset& p, IndexSet members) : members_(std::move(members)) {
  require(is_antichain(p, members_), "NotAntichain",
          "members " + members_.str() + " are not pairwise incomparable");
}

Poset complete_bipartite_poset(int k, int m) {
  require(k >= 0 && m >= 0, "IndexOutOfRange", "negative part size");
  std::vector<std::string> labels;
  for (int i = 1; i <= k + m; ++i) labels.push_back("x" + std::to_string(i));
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < m; ++j) covers.emplace_back(i, k + j);
  return Poset::build(labels, covers);
}

Poset chain_poset(int n) {
  require(n >= 0, "IndexOutOfRange", "negative chain length");
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back("x" + std::to_string(i));
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i + 1 < n; ++i) covers.emplace_back(i, i + 1);
  return Poset::build(labels, covers);
}

}  // namespace incmon
