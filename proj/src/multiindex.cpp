#include "gauss_hodge/multiindex.hpp"

#include <algorithm>
#include <stdexcept>

namespace gauss_hodge {

MultiIndex::MultiIndex(int dim, std::vector<int> axes) : dim_(dim), axes_(std::move(axes)) {
  if (dim < 0) throw std::domain_error("multi-index dimension must be non-negative");
  if (static_cast<int>(axes_.size()) > dim)
    throw std::domain_error("multi-index longer than its dimension");
  for (std::size_t i = 0; i < axes_.size(); ++i) {
    if (axes_[i] < 1 || axes_[i] > dim)
      throw std::domain_error("axis " + std::to_string(axes_[i]) + " outside [1, " +
                              std::to_string(dim) + "]");
    if (i > 0 && axes_[i - 1] >= axes_[i])
      throw std::domain_error("multi-index axes must be strictly increasing");
  }
}

bool MultiIndex::contains(int axis) const {
  return std::binary_search(axes_.begin(), axes_.end(), axis);
}

std::string MultiIndex::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < axes_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(axes_[i]);
  }
  return s + ")";
}

std::vector<MultiIndex> enumerate_indices(int n, int p) {
  if (n < 0 || p < 0 || p > n)
    throw std::domain_error("enumerate_indices needs 0 <= p <= n");
  std::vector<MultiIndex> out;
  std::vector<int> axes(p);
  for (int i = 0; i < p; ++i) axes[i] = i + 1;
  while (true) {
    out.emplace_back(n, axes);
    int pos = p - 1;
    while (pos >= 0 && axes[pos] == n - (p - 1 - pos)) --pos;
    if (pos < 0) break;
    ++axes[pos];
    for (int i = pos + 1; i < p; ++i) axes[i] = axes[i - 1] + 1;
  }
  return out;
}

std::optional<SignedIndex> insert_axis(int axis, const MultiIndex& index) {
  if (axis < 1 || axis > index.dim())
    throw std::domain_error("axis " + std::to_string(axis) + " outside [1, " +
                            std::to_string(index.dim()) + "]");
  const auto& axes = index.axes();
  auto it = std::lower_bound(axes.begin(), axes.end(), axis);
  if (it != axes.end() && *it == axis) return std::nullopt;
  // Moving j past every smaller entry costs one transposition each.
  const auto passed = it - axes.begin();
  std::vector<int> merged(axes.begin(), it);
  merged.push_back(axis);
  merged.insert(merged.end(), it, axes.end());
  return SignedIndex{passed % 2 == 0 ? 1 : -1, MultiIndex(index.dim(), std::move(merged))};
}

SignedIndex remove_axis(int axis, const MultiIndex& index) {
  const auto& axes = index.axes();
  auto it = std::lower_bound(axes.begin(), axes.end(), axis);
  if (it == axes.end() || *it != axis)
    throw std::domain_error("axis " + std::to_string(axis) + " not in " + index.to_string());
  const auto pos = it - axes.begin();
  std::vector<int> rest(axes.begin(), it);
  rest.insert(rest.end(), it + 1, axes.end());
  return SignedIndex{pos % 2 == 0 ? 1 : -1, MultiIndex(index.dim(), std::move(rest))};
}

}  // namespace gauss_hodge
