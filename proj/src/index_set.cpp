#include "incmon/index_set.hpp"

#include <algorithm>

#include "incmon/errors.hpp"

namespace incmon {

IndexSet::IndexSet(int n, std::vector<int> members) : n_(n), members_(std::move(members)) {
  require(n >= 0, "IndexOutOfRange", "negative ambient size");
  std::sort(members_.begin(), members_.end());
  for (std::size_t i = 0; i < members_.size(); ++i) {
    require(members_[i] >= 1 && members_[i] <= n_, "IndexOutOfRange",
            "index " + std::to_string(members_[i]) + " outside [1," + std::to_string(n_) + "]");
    require(i == 0 || members_[i] != members_[i - 1], "IndexOutOfRange",
            "duplicate index " + std::to_string(members_[i]));
  }
}

IndexSet IndexSet::full_set(int n) { return range_set(n, 1, n); }

IndexSet IndexSet::range_set(int n, int lo, int hi) {
  std::vector<int> m;
  for (int i = lo; i <= hi; ++i) m.push_back(i);
  return IndexSet(n, std::move(m));
}

IndexSet IndexSet::from_mask(int n, std::uint64_t mask) {
  std::vector<int> m;
  for (int i = 1; i <= n; ++i)
    if (mask & (std::uint64_t{1} << (i - 1))) m.push_back(i);
  return IndexSet(n, std::move(m));
}

bool IndexSet::contains(int i) const {
  return std::binary_search(members_.begin(), members_.end(), i);
}

void IndexSet::require_same_ambient(const IndexSet& other) const {
  require(n_ == other.n_, "DimensionMismatch",
          "index sets over [" + std::to_string(n_) + "] and [" + std::to_string(other.n_) + "]");
}

IndexSet IndexSet::intersection(const IndexSet& other) const {
  require_same_ambient(other);
  std::vector<int> m;
  std::set_intersection(members_.begin(), members_.end(), other.members_.begin(),
                        other.members_.end(), std::back_inserter(m));
  return IndexSet(n_, std::move(m));
}

IndexSet IndexSet::set_union(const IndexSet& other) const {
  require_same_ambient(other);
  std::vector<int> m;
  std::set_union(members_.begin(), members_.end(), other.members_.begin(), other.members_.end(),
                 std::back_inserter(m));
  return IndexSet(n_, std::move(m));
}

IndexSet IndexSet::complement() const {
  std::vector<int> m;
  for (int i = 1; i <= n_; ++i)
    if (!contains(i)) m.push_back(i);
  return IndexSet(n_, std::move(m));
}

bool IndexSet::subset_of(const IndexSet& other) const {
  require_same_ambient(other);
  return std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                       members_.end());
}

std::uint64_t IndexSet::mask() const {
  require(n_ <= 64, "IndexOutOfRange", "mask needs ambient size <= 64");
  std::uint64_t m = 0;
  for (int i : members_) m |= std::uint64_t{1} << (i - 1);
  return m;
}

std::string IndexSet::str() const {
  std::string s = "{";
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(members_[i]);
  }
  return s + "}";
}

}  // namespace incmon
