#include "ferrers/text.hpp"

#include <cctype>
#include <charconv>
#include <string>
#include <vector>

#include "ferrers/error.hpp"

namespace ferrers {
namespace {

bool is_separator(char c) { return c == ',' || std::isspace(static_cast<unsigned char>(c)); }

std::vector<std::string_view> split_tokens(std::string_view text) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_separator(text[i])) ++i;
    const std::size_t start = i;
    while (i < text.size() && !is_separator(text[i])) ++i;
    if (i > start) tokens.push_back(text.substr(start, i - start));
  }
  return tokens;
}

int parse_int(std::string_view token, std::string_view what) {
  int value = 0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ParseError("invalid " + std::string(what) + " entry '" + std::string(token) + "'");
  }
  return value;
}

std::vector<int> parse_ints(std::string_view text, std::string_view what) {
  std::vector<int> values;
  for (auto token : split_tokens(text)) values.push_back(parse_int(token, what));
  return values;
}

template <class Range>
std::string join(const Range& values, std::string_view sep) {
  std::string out;
  bool first = true;
  for (int v : values) {
    if (!first) out += sep;
    out += std::to_string(v);
    first = false;
  }
  return out;
}

}  // namespace

Permutation parse_permutation(std::string_view text) {
  const auto tokens = split_tokens(text);
  std::vector<int> values;
  if (tokens.size() == 1 && tokens.front().size() > 1) {
    for (char c : tokens.front()) {
      if (c < '1' || c > '9') {
        throw ParseError("invalid compact permutation '" + std::string(tokens.front()) + "'");
      }
      values.push_back(c - '0');
    }
  } else {
    for (auto token : tokens) values.push_back(parse_int(token, "permutation"));
  }
  return Permutation(std::move(values));
}

Board parse_board(std::string_view text) { return Board(parse_ints(text, "board")); }

std::string format_permutation(const Permutation& p) { return join(p.values(), " "); }

std::string format_board(const Board& b) { return join(b.heights(), ","); }

}  // namespace ferrers
