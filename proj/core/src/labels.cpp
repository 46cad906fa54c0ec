#include "ferrers/labels.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "ferrers/error.hpp"

namespace ferrers {

LabelSequence label_sequence(std::span<const int> word) {
  if (std::unordered_set<int>(word.begin(), word.end()).size() != word.size()) {
    throw InvariantViolation("label_sequence needs distinct letters");
  }
  const auto n = word.size();
  std::vector<int> labels(n, 1);
  for (std::size_t i = n; i-- > 0;) {
    int best = 0;
    for (std::size_t m = i + 1; m < n; ++m) {
      if (word[m] < word[i]) best = std::max(best, labels[m]);
    }
    labels[i] = best + 1;
  }
  return LabelSequence(std::move(labels));
}

namespace {

std::vector<int> successor_chain(const LabelSequence& labels, int start_position) {
  std::vector<int> chain{start_position};
  int position = start_position;
  for (int want = labels(position) - 1; want >= 1; --want) {
    int next = position + 1;
    while (labels(next) != want) ++next;  // exists by definition of labels
    chain.push_back(next);
    position = next;
  }
  return chain;
}

}  // namespace

std::vector<int> successor_sequence(std::span<const int> word, int start_position) {
  if (start_position < 1 || start_position > static_cast<int>(word.size())) {
    throw PreconditionError("start position " + std::to_string(start_position) + " out of range");
  }
  return successor_chain(label_sequence(word), start_position);
}

std::optional<std::vector<int>> word_a_sequence_by_labels(std::span<const int> word, int k) {
  const auto labels = label_sequence(word);
  for (int i = 1; i <= labels.size(); ++i) {
    if (labels(i) == k) return successor_chain(labels, i);
  }
  return std::nullopt;
}

}  // namespace ferrers
