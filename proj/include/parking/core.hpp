#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "parking/errors.hpp"
#include "parking/word.hpp"

namespace parking {

inline SortedWord sorted_rearrangement(const PrefWord& w) {
  std::vector<Value> q(w.begin(), w.end());
  std::sort(q.begin(), q.end());
  return SortedWord(std::move(q));
}

namespace detail {

inline void require_entries_at_most_length(const PrefWord& w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] > w.n()) {
      throw invalid_input("entry " + std::to_string(i + 1) + " = " + std::to_string(w[i]) +
                          " exceeds word length " + std::to_string(w.n()));
    }
  }
}

}  // namespace detail

/// q_i <= i for every i, where q is the nondecreasing rearrangement.
inline bool is_parking_function(const PrefWord& w) {
  detail::require_entries_at_most_length(w);
  const auto q = sorted_rearrangement(w);
  for (std::size_t i = 0; i < q.size(); ++i)
    if (q[i] > static_cast<Value>(i + 1)) return false;
  return true;
}

/// q_1 <= 1 and q_i < i for every i > 1. The single word (1) is prime.
inline bool is_prime_parking_function(const PrefWord& w) {
  detail::require_entries_at_most_length(w);
  const auto q = sorted_rearrangement(w);
  if (q[0] > 1) return false;
  for (std::size_t i = 1; i < q.size(); ++i)
    if (q[i] >= static_cast<Value>(i + 1)) return false;
  return true;
}

/// Remove the first entry equal to 1. A prime parking function of length n
/// is exactly a parking function of length n-1 with this extra 1.
inline PrefWord strip_first_one(const PrefWord& w) {
  auto it = std::find(w.begin(), w.end(), 1);
  if (it == w.end()) throw domain_error("word has no entry equal to 1");
  if (w.size() < 2) throw domain_error("cannot strip the only entry of a length-1 word");
  std::vector<Value> rest(w.begin(), it);
  rest.insert(rest.end(), std::next(it), w.end());
  const Value bound = w.n() - 1;
  for (Value v : rest)
    if (v > bound)
      throw domain_error("stripped word has entry " + std::to_string(v) + " outside [1, " +
                         std::to_string(bound) + "]");
  return PrefWord(std::move(rest), bound);
}

}  // namespace parking
