#include "ferrers/permutation.hpp"

#include <numeric>
#include <string>

#include "ferrers/error.hpp"

namespace ferrers {

bool is_permutation_of_one_to_n(std::span<const int> values) {
  const auto n = values.size();
  std::vector<bool> seen(n + 1, false);
  for (int v : values) {
    if (v < 1 || static_cast<std::size_t>(v) > n || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = true;
  }
  return true;
}

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  if (!is_permutation_of_one_to_n(values_)) {
    throw InvariantViolation("not a permutation of 1.." + std::to_string(values_.size()));
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::decreasing(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = n - i;
  return Permutation(std::move(v));
}

int Permutation::position_of(int v) const {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] == v) return static_cast<int>(i) + 1;
  }
  throw InvariantViolation("value " + std::to_string(v) + " not in permutation");
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) {
    inv[static_cast<std::size_t>(values_[i] - 1)] = static_cast<int>(i) + 1;
  }
  Permutation result;
  result.values_ = std::move(inv);
  return result;
}

bool Permutation::is_involution() const {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[static_cast<std::size_t>(values_[i] - 1)] != static_cast<int>(i) + 1) return false;
  }
  return true;
}

std::int64_t Permutation::inversions() const {
  std::int64_t count = 0;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    for (std::size_t j = i + 1; j < values_.size(); ++j) {
      if (values_[i] > values_[j]) ++count;
    }
  }
  return count;
}

}  // namespace ferrers
