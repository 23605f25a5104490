#pragma once

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "parking/errors.hpp"

namespace parking {

using Value = int;

/// A preference word p in [m]^n: car i (1-based) wants the spot labeled p(i).
///
/// Entries are stored 0-indexed but hold the 1-based labels used everywhere
/// in the external formats.
class PrefWord {
 public:
  PrefWord(std::vector<Value> prefs, Value max_label)
      : prefs_(std::move(prefs)), max_label_(max_label) {
    if (prefs_.empty()) throw invalid_input("word must have at least one entry");
    if (max_label_ < 1) throw invalid_input("max_label must be positive");
    for (std::size_t i = 0; i < prefs_.size(); ++i) {
      if (prefs_[i] < 1 || prefs_[i] > max_label_) {
        throw invalid_input("entry " + std::to_string(i + 1) + " = " +
                            std::to_string(prefs_[i]) + " outside [1, " +
                            std::to_string(max_label_) + "]");
      }
    }
  }

  /// Word whose domain bound is its own length, i.e. a candidate in [n]^n.
  static PrefWord square(std::vector<Value> prefs) {
    auto n = static_cast<Value>(prefs.size());
    return PrefWord(std::move(prefs), n);
  }

  std::size_t size() const noexcept { return prefs_.size(); }
  Value n() const noexcept { return static_cast<Value>(prefs_.size()); }
  Value max_label() const noexcept { return max_label_; }
  std::span<const Value> values() const noexcept { return prefs_; }

  Value operator[](std::size_t i) const noexcept { return prefs_[i]; }
  /// 1-based access matching the car numbering.
  Value car(std::size_t i) const { return prefs_.at(i - 1); }

  auto begin() const noexcept { return prefs_.begin(); }
  auto end() const noexcept { return prefs_.end(); }

  friend bool operator==(const PrefWord& a, const PrefWord& b) noexcept {
    return a.prefs_ == b.prefs_;
  }

 private:
  std::vector<Value> prefs_;
  Value max_label_;
};

/// Nondecreasing rearrangement of a word.
class SortedWord {
 public:
  explicit SortedWord(std::vector<Value> q) : q_(std::move(q)) {
    if (!std::is_sorted(q_.begin(), q_.end()))
      throw invalid_input("sorted word must be nondecreasing");
  }

  std::size_t size() const noexcept { return q_.size(); }
  std::span<const Value> values() const noexcept { return q_; }
  Value operator[](std::size_t i) const noexcept { return q_[i]; }
  auto begin() const noexcept { return q_.begin(); }
  auto end() const noexcept { return q_.end(); }

  friend bool operator==(const SortedWord&, const SortedWord&) = default;

 private:
  std::vector<Value> q_;
};

/// Parse a word literal: positive decimal integers separated by commas
/// and/or whitespace ("3,13,6" or "3 13 6").
inline std::vector<Value> parse_word(std::string_view text) {
  std::vector<Value> out;
  auto is_sep = [](char c) {
    return c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r';
  };
  std::size_t pos = 0;
  bool expect_value = true;
  while (pos < text.size()) {
    if (is_sep(text[pos])) {
      if (text[pos] == ',') {
        if (expect_value) throw invalid_input("empty entry in word literal");
        expect_value = true;
      }
      ++pos;
      continue;
    }
    Value v = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), v);
    if (ec != std::errc() || ptr == text.data() + pos)
      throw invalid_input("bad word literal near '" + std::string(text.substr(pos, 8)) + "'");
    if (v < 1) throw invalid_input("word entries must be positive");
    std::size_t next = static_cast<std::size_t>(ptr - text.data());
    if (next < text.size() && !is_sep(text[next]))
      throw invalid_input("bad word literal near '" + std::string(text.substr(pos, 8)) + "'");
    out.push_back(v);
    expect_value = false;
    pos = next;
  }
  if (out.empty()) throw invalid_input("empty word literal");
  if (expect_value) throw invalid_input("trailing comma in word literal");
  return out;
}

template <typename Range>
std::string format_word(const Range& values, std::string_view sep = ",") {
  std::string out;
  bool first = true;
  for (auto v : values) {
    if (!first) out += sep;
    out += std::to_string(v);
    first = false;
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const PrefWord& w) {
  return os << format_word(w);
}

inline std::ostream& operator<<(std::ostream& os, const SortedWord& q) {
  return os << format_word(q);
}

}  // namespace parking
