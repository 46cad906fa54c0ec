#include "ferrers/patterns.hpp"

#include <algorithm>

#include "ferrers/error.hpp"

namespace ferrers {

PatternSet::PatternSet(std::vector<Permutation> patterns) : patterns_(std::move(patterns)) {
  if (patterns_.empty()) throw PreconditionError("pattern set is empty");
  for (const auto& tau : patterns_) {
    if (tau.empty()) throw PreconditionError("pattern of length 0");
  }
}

namespace {

// Depth-first search over increasing column tuples, extended one letter at a
// time while the prefix stays order-isomorphic to the pattern prefix.
class OccurrenceSearch {
 public:
  OccurrenceSearch(const Placement& p, const Permutation& tau, std::optional<std::size_t> limit,
                   bool collect)
      : p_(p), tau_(tau), limit_(limit), collect_(collect) {
    chosen_.reserve(static_cast<std::size_t>(tau.size()));
  }

  bool run() {
    if (tau_.size() > p_.size()) return false;
    return extend(1, 0);
  }

  std::vector<Occurrence> take() { return std::move(found_); }

 private:
  bool fits(int column, int depth) const {
    const int v = p_.perm()(column);
    const int t = tau_(depth + 1);
    for (int j = 0; j < depth; ++j) {
      const int earlier = p_.perm()(chosen_[static_cast<std::size_t>(j)]);
      if ((v > earlier) != (t > tau_(j + 1))) return false;
    }
    return true;
  }

  // Returns true to stop the search.
  bool extend(int from_column, int max_value) {
    const int depth = static_cast<int>(chosen_.size());
    const int k = tau_.size();
    if (depth == k) {
      if (collect_) {
        found_.push_back(chosen_);
        return limit_ && found_.size() >= *limit_;
      }
      return true;
    }
    const int n = p_.size();
    for (int column = from_column; column <= n - (k - depth) + 1; ++column) {
      const int top = std::max(max_value, p_.perm()(column));
      // Heights only shrink to the right, so the last column cannot reach top either.
      if (p_.board().height(column) < top) break;
      if (!fits(column, depth)) continue;
      chosen_.push_back(column);
      const bool stop = extend(column + 1, top);
      chosen_.pop_back();
      if (stop) return true;
    }
    return false;
  }

  const Placement& p_;
  const Permutation& tau_;
  std::optional<std::size_t> limit_;
  bool collect_;
  std::vector<int> chosen_;
  std::vector<Occurrence> found_;
};

}  // namespace

bool contains(const Placement& p, const Permutation& tau) {
  if (tau.empty()) return true;
  return OccurrenceSearch(p, tau, std::nullopt, false).run();
}

std::vector<Occurrence> find_occurrences(const Placement& p, const Permutation& tau,
                                         std::optional<std::size_t> limit) {
  if (limit && *limit == 0) return {};
  OccurrenceSearch search(p, tau, limit, true);
  search.run();
  return search.take();
}

bool avoids_all(const Placement& p, const PatternSet& patterns) {
  return std::none_of(patterns.begin(), patterns.end(),
                      [&](const Permutation& tau) { return contains(p, tau); });
}

Permutation decreasing_pattern(int k) { return Permutation::decreasing(k); }

Permutation shifted_pattern(int k) {
  std::vector<int> v;
  v.reserve(static_cast<std::size_t>(k));
  for (int i = k - 1; i >= 1; --i) v.push_back(i);
  v.push_back(k);
  return Permutation(std::move(v));
}

}  // namespace ferrers
