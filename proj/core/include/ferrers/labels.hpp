#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace ferrers {

/// Per-position labels of a word with distinct letters: label i is the
/// length of the longest decreasing subsequence starting at position i.
class LabelSequence {
 public:
  LabelSequence() = default;
  explicit LabelSequence(std::vector<int> labels) : labels_(std::move(labels)) {}

  int size() const noexcept { return static_cast<int>(labels_.size()); }
  /// Label at 1-based position i.
  int operator()(int i) const { return labels_[static_cast<std::size_t>(i - 1)]; }
  std::span<const int> labels() const noexcept { return labels_; }

  bool operator==(const LabelSequence&) const = default;

 private:
  std::vector<int> labels_;
};

/// Labels via the right-to-left recurrence: the last letter gets 1, every
/// other letter gets 1 + the largest label among later smaller letters.
/// Throws InvariantViolation if letters repeat.
LabelSequence label_sequence(std::span<const int> word);

/// Successor sequence of the letter at 1-based `start_position`: repeatedly
/// take the leftmost later letter whose label is one less. Returns 1-based
/// positions, starting with `start_position` and ending at a label-1 letter.
std::vector<int> successor_sequence(std::span<const int> word, int start_position);

/// The A-sequence of length k of a word, through labels: the leftmost letter
/// with label k followed by its successor sequence. Absent when no label
/// reaches k. Only meaningful for words (square boards).
std::optional<std::vector<int>> word_a_sequence_by_labels(std::span<const int> word, int k);

}  // namespace ferrers
