#pragma once

#include <string>
#include <utility>
#include <vector>

#include "incmon/index_set.hpp"

namespace incmon {

// Finite poset stored in a fixed linear extension: leq(i, j) implies i <= j,
// so incidence matrices over it are upper triangular by construction.
// Elements are 0-based internally; the 1-based views live in IndexSet.
class Poset {
 public:
  // Builds from labels and cover pairs (0-based label indices). Computes a
  // linear extension (Kahn's algorithm, smallest input index first), reindexes
  // along it and takes the reflexive-transitive closure.
  static Poset build(const std::vector<std::string>& labels,
                     const std::vector<std::pair<int, int>>& covers);

  int size() const { return n_; }
  bool leq(int i, int j) const { return rel_[static_cast<std::size_t>(i) * n_ + j]; }
  bool strictly_less(int i, int j) const { return i != j && leq(i, j); }
  const std::string& label(int i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }

  std::vector<std::pair<int, int>> cover_relations() const;  // Hasse edges, sorted
  bool is_minimal(int i) const;
  bool is_maximal(int i) const;
  std::vector<int> minimal_elements() const;
  std::vector<int> maximal_elements() const;

  Poset dual() const;
  Poset induced(const std::vector<int>& indices) const;  // ascending 0-based

  bool operator==(const Poset&) const = default;

 private:
  int n_ = 0;
  std::vector<std::string> labels_;
  std::vector<char> rel_;  // n*n closure, row-major

  Poset() = default;
};

enum class PosetTag { chain, bipartite, complete_bipartite, general };

struct PosetClass {
  PosetTag tag = PosetTag::general;
  int k = 0;  // number of minimal elements, set for the bipartite tags
  int m = 0;  // number of maximal elements

  bool operator==(const PosetClass&) const = default;
};

std::string poset_tag_name(PosetTag tag);

// Most specific matching shape, checked in the order complete_bipartite,
// bipartite, chain, general. The bipartite tags require a connected poset in
// which every element is minimal or maximal but not both (equivalently: all
// intervals have at most two elements and nothing is isolated).
PosetClass classify(const Poset& p);

bool is_antichain(const Poset& p, const IndexSet& s);

// Index partition of the comparability components, each ascending, ordered by
// smallest member.
std::vector<std::vector<int>> component_index_sets(const Poset& p);
std::vector<Poset> connected_components(const Poset& p);

// Validated antichain of a poset; construction checks pairwise
// incomparability of the members.
class Antichain {
 public:
  Antichain(const Poset& p, IndexSet members);
  const IndexSet& members() const { return members_; }

 private:
  IndexSet members_;
};

// The complete bipartite poset with k minimal and m maximal elements, every
// minimal below every maximal, labelled x1..x(k+m).
Poset complete_bipartite_poset(int k, int m);

// The chain x1 < x2 < ... < xn.
Poset chain_poset(int n);

}  // namespace incmon
