#include "permmob/text.hpp"

#include <algorithm>
#include <charconv>

namespace permmob {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' ||
                        s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

std::vector<int> parse_int_list(std::string_view text, const char* what) {
  std::vector<int> out;
  text = trim(text);
  if (text.empty()) throw ParseError(std::string("empty ") + what);
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    const auto field = trim(text.substr(start, comma - start));
    int value = 0;
    const auto* end = field.data() + field.size();
    const auto [ptr, ec] = std::from_chars(field.data(), end, value);
    if (field.empty() || ec != std::errc{} || ptr != end)
      throw ParseError(std::string("malformed ") + what + ": '" + std::string(text) + "'");
    out.push_back(value);
    start = comma + 1;
  }
  return out;
}

}  // namespace

std::vector<int> parse_word(std::string_view text) {
  text = trim(text);
  if (text.find(',') != std::string_view::npos) return parse_int_list(text, "permutation");
  if (text.empty()) throw ParseError("empty permutation");
  std::vector<int> out;
  for (char c : text) {
    if (c < '0' || c > '9') throw ParseError("malformed permutation: '" + std::string(text) + "'");
    out.push_back(c - '0');
  }
  return out;
}

Permutation parse_permutation(std::string_view text) {
  auto word = parse_word(text);
  try {
    return Permutation(std::move(word));
  } catch (const std::invalid_argument& e) {
    throw ParseError("not a permutation of 1..n: '" + std::string(trim(text)) + "'");
  }
}

std::string to_string(const Permutation& p) {
  return to_marked_string(p, {});
}

std::string to_marked_string(const Permutation& p, const std::vector<int>& marked) {
  const bool compact = p.size() <= 9;
  std::string out;
  for (int i = 0; i < p.size(); ++i) {
    if (!compact && i > 0) out += ',';
    const bool mark = std::find(marked.begin(), marked.end(), i) != marked.end();
    if (mark) out += '[';
    out += std::to_string(p[i]);
    if (mark) out += ']';
  }
  return out;
}

std::vector<int> parse_positions(std::string_view text) {
  auto values = parse_int_list(text, "position list");
  for (int& v : values) {
    if (v < 1) throw ParseError("positions are one-based");
    --v;
  }
  std::sort(values.begin(), values.end());
  if (std::adjacent_find(values.begin(), values.end()) != values.end())
    throw ParseError("repeated position");
  return values;
}

std::string positions_to_string(const std::vector<int>& positions) {
  std::string out;
  for (std::size_t i = 0; i < positions.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(positions[i] + 1);
  }
  return out;
}

}  // namespace permmob
