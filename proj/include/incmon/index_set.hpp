#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace incmon {

// Sorted subset of [n] = {1, ..., n}. Members are 1-based throughout; all the
// diagonal-pattern bookkeeping (idempotent components, cross-section lattice
// nodes, support sets) runs through this type.
class IndexSet {
 public:
  IndexSet() = default;
  IndexSet(int n, std::vector<int> members);  // sorts, rejects dups/out-of-range

  static IndexSet empty_set(int n) { return IndexSet(n, {}); }
  static IndexSet full_set(int n);
  static IndexSet range_set(int n, int lo, int hi);  // {lo, ..., hi}
  static IndexSet from_mask(int n, std::uint64_t mask);

  int ambient() const { return n_; }
  int size() const { return static_cast<int>(members_.size()); }
  bool empty() const { return members_.empty(); }
  bool contains(int i) const;
  const std::vector<int>& members() const { return members_; }

  IndexSet intersection(const IndexSet& other) const;
  IndexSet set_union(const IndexSet& other) const;
  IndexSet complement() const;
  bool subset_of(const IndexSet& other) const;

  std::uint64_t mask() const;  // bit i-1 set iff i is a member (needs n <= 64)
  std::string str() const;     // "{1,3}"

  bool operator==(const IndexSet&) const = default;

 private:
  int n_ = 0;
  std::vector<int> members_;

  void require_same_ambient(const IndexSet& other) const;
};

}  // namespace incmon
