#pragma once

// Strictly increasing multi-indices over the axes 1..n and the signatures of
// the permutations that sort (j, I) into increasing order.

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace gauss_hodge {

class MultiIndex {
 public:
  MultiIndex() = default;

  // Throws std::domain_error unless axes are strictly increasing in [1, dim].
  MultiIndex(int dim, std::vector<int> axes);

  int dim() const { return dim_; }
  int size() const { return static_cast<int>(axes_.size()); }
  bool empty() const { return axes_.empty(); }
  const std::vector<int>& axes() const { return axes_; }
  int operator[](int pos) const { return axes_[pos]; }
  bool contains(int axis) const;

  std::string to_string() const;

  friend bool operator==(const MultiIndex& a, const MultiIndex& b) {
    return a.axes_ == b.axes_;
  }
  friend std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b) {
    return a.axes_ <=> b.axes_;
  }

 private:
  int dim_ = 0;
  std::vector<int> axes_;
};

struct SignedIndex {
  int sign;
  MultiIndex index;
};

// All C(n, p) increasing indices of length p, lexicographic.
std::vector<MultiIndex> enumerate_indices(int n, int p);

// (jI)' with its signature; absent when j already occurs in I.
std::optional<SignedIndex> insert_axis(int axis, const MultiIndex& index);

// M^j with the signature of (j, M^j) -> M.  Throws std::domain_error if j is
// not in M.
SignedIndex remove_axis(int axis, const MultiIndex& index);

}  // namespace gauss_hodge
