#pragma once

// Exhaustive oracles over the word spaces [m]^n.
//
// Words are visited in odometer order (rightmost entry fastest). A word
// space of size m^n is split into contiguous index ranges that are scanned
// independently and summed, so any thread count gives the same answer.

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <future>
#include <limits>
#include <string>
#include <thread>
#include <vector>

#include "parking/core.hpp"
#include "parking/cycle_lemma.hpp"
#include "parking/errors.hpp"
#include "parking/street.hpp"
#include "parking/word.hpp"

namespace parking {

struct EnumerationOptions {
  unsigned threads = 1;
  /// Raises the upper size guard of an oracle; 0 keeps the default.
  Value max_n = 0;
};

struct CountReport {
  Value n = 0;
  std::uint64_t total_words = 0;
  std::uint64_t matching = 0;
  std::uint64_t formula_value = 0;
  bool agrees = false;
  double elapsed_seconds = 0.0;
};

/// Outcome of an exhaustive verification. `counterexample` names the first
/// offending word when `holds` is false.
struct Verdict {
  bool holds = false;
  std::uint64_t words_checked = 0;
  std::string counterexample;

  explicit operator bool() const noexcept { return holds; }
};

/// base^exp, throwing if the result does not fit in 64 bits. 0^0 = 1.
inline std::uint64_t checked_pow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base)
      throw guard_error("word space too large for 64-bit indexing");
    r *= base;
  }
  return r;
}

/// Odometer cursor over [m]^n.
class WordOdometer {
 public:
  WordOdometer(Value n, Value m, std::uint64_t start_index)
      : m_(m), digits_(static_cast<std::size_t>(n), 1) {
    for (std::size_t i = digits_.size(); i-- > 0 && start_index > 0;) {
      digits_[i] = static_cast<Value>(start_index % static_cast<std::uint64_t>(m)) + 1;
      start_index /= static_cast<std::uint64_t>(m);
    }
  }

  const std::vector<Value>& word() const noexcept { return digits_; }

  void advance() noexcept {
    for (std::size_t i = digits_.size(); i-- > 0;) {
      if (digits_[i] < m_) {
        ++digits_[i];
        return;
      }
      digits_[i] = 1;
    }
  }

 private:
  Value m_;
  std::vector<Value> digits_;
};

/// Odometer index of a word in [m]^n (inverse of WordOdometer's start).
inline std::uint64_t word_index(std::span<const Value> w, Value m) {
  std::uint64_t idx = 0;
  for (Value v : w) idx = idx * static_cast<std::uint64_t>(m) + static_cast<std::uint64_t>(v - 1);
  return idx;
}

namespace detail {

inline void check_guard(std::string_view what, Value n, Value lo, Value hi,
                        const EnumerationOptions& opts) {
  const Value upper = opts.max_n > 0 ? opts.max_n : hi;
  if (n < lo || n > upper) {
    throw guard_error(std::string(what) + ": n = " + std::to_string(n) + " outside [" +
                      std::to_string(lo) + ", " + std::to_string(upper) + "]");
  }
}

/// Split [0, total) into at most `threads` contiguous shards, run
/// `shard(begin, end)` on each, and hand the results back in shard order.
template <typename Result>
std::vector<Result> run_sharded(std::uint64_t total, unsigned threads,
                                const std::function<Result(std::uint64_t, std::uint64_t)>& shard) {
  const std::uint64_t parts = std::max<std::uint64_t>(1, std::min<std::uint64_t>(threads, total));
  std::vector<Result> out;
  if (parts == 1) {
    out.push_back(shard(0, total));
    return out;
  }
  std::vector<std::future<Result>> jobs;
  for (std::uint64_t p = 0; p < parts; ++p) {
    const std::uint64_t begin = total * p / parts;
    const std::uint64_t end = total * (p + 1) / parts;
    jobs.push_back(std::async(std::launch::async, shard, begin, end));
  }
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

template <typename Pred>
std::uint64_t count_matching(Value n, Value m, unsigned threads, Pred pred) {
  const std::uint64_t total = checked_pow(static_cast<std::uint64_t>(m), static_cast<unsigned>(n));
  auto parts = run_sharded<std::uint64_t>(
      total, threads, [&](std::uint64_t begin, std::uint64_t end) {
        WordOdometer odo(n, m, begin);
        std::uint64_t hits = 0;
        for (std::uint64_t i = begin; i < end; ++i, odo.advance())
          if (pred(PrefWord(odo.word(), m))) ++hits;
        return hits;
      });
  std::uint64_t sum = 0;
  for (auto p : parts) sum += p;
  return sum;
}

inline double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace detail

/// Scan [n]^n with is_parking_function; compare with (n+1)^(n-1).
inline CountReport count_parking_functions(Value n, const EnumerationOptions& opts = {}) {
  detail::check_guard("count_parking_functions", n, 1, 8, opts);
  const auto t0 = std::chrono::steady_clock::now();
  CountReport r;
  r.n = n;
  r.total_words = checked_pow(static_cast<std::uint64_t>(n), static_cast<unsigned>(n));
  r.matching = detail::count_matching(n, n, opts.threads,
                                      [](const PrefWord& w) { return is_parking_function(w); });
  r.formula_value = checked_pow(static_cast<std::uint64_t>(n + 1), static_cast<unsigned>(n - 1));
  r.agrees = r.matching == r.formula_value;
  r.elapsed_seconds = detail::seconds_since(t0);
  return r;
}

/// Scan [n-1]^n with is_prime_parking_function; compare with (n-1)^(n-1).
/// n = 1 reports the single word (1), matching 0^0 = 1.
inline CountReport count_prime_parking_functions(Value n, const EnumerationOptions& opts = {}) {
  detail::check_guard("count_prime_parking_functions", n, 1, 8, opts);
  const auto t0 = std::chrono::steady_clock::now();
  CountReport r;
  r.n = n;
  if (n == 1) {
    r.total_words = 1;
    r.matching = is_prime_parking_function(PrefWord({1}, 1)) ? 1 : 0;
  } else {
    r.total_words = checked_pow(static_cast<std::uint64_t>(n - 1), static_cast<unsigned>(n));
    r.matching = detail::count_matching(
        n, n - 1, opts.threads, [](const PrefWord& w) { return is_prime_parking_function(w); });
  }
  r.formula_value = checked_pow(static_cast<std::uint64_t>(n - 1), static_cast<unsigned>(n - 1));
  r.agrees = r.matching == r.formula_value;
  r.elapsed_seconds = detail::seconds_since(t0);
  return r;
}

/// Every a in [n-1]^n maps to a pair (k, b) with b prime, a recovered by
/// recompose, exactly one shift making a prime, and every pair in
/// [n-1] x PPF_n hit exactly once.
inline Verdict verify_bijection(Value n, const EnumerationOptions& opts = {}) {
  detail::check_guard("verify_bijection", n, 2, 6, opts);
  const Value m = n - 1;
  const std::uint64_t words = checked_pow(static_cast<std::uint64_t>(m), static_cast<unsigned>(n));
  const std::uint64_t cells = words * static_cast<std::uint64_t>(m);

  struct Shard {
    std::vector<std::uint32_t> hits;
    std::string bad;
  };
  auto shards = detail::run_sharded<Shard>(
      words, opts.threads, [&](std::uint64_t begin, std::uint64_t end) {
        Shard s;
        s.hits.assign(cells, 0);
        WordOdometer odo(n, m, begin);
        std::vector<Value> shifted(static_cast<std::size_t>(n));
        for (std::uint64_t i = begin; i < end && s.bad.empty(); ++i, odo.advance()) {
          const PrefWord a(odo.word(), m);
          const auto dec = decompose(a);
          auto fail = [&](const char* why) { s.bad = format_word(a) + ": " + why; };
          if (!is_prime_parking_function(dec.b)) { fail("b is not prime"); break; }
          if (!(recompose(dec.b, dec.k) == a)) { fail("recompose does not invert"); break; }
          for (std::size_t j = 0; j < a.size(); ++j) {
            if (detail::mod_floor(a[j] - dec.b[j] - dec.k + 1, m) != 0) {
              fail("congruence violated");
              break;
            }
          }
          if (!s.bad.empty()) break;
          Value prime_shifts = 0;
          Value found_k = 0;
          for (Value k = 1; k <= m; ++k) {
            for (std::size_t j = 0; j < a.size(); ++j)
              shifted[j] = static_cast<Value>(detail::mod_floor(a[j] - k, m) + 1);
            if (is_prime_parking_function(PrefWord(shifted, m))) {
              ++prime_shifts;
              found_k = k;
            }
          }
          if (prime_shifts != 1) { fail("shift making the word prime is not unique"); break; }
          if (found_k != dec.k) { fail("brute-force shift differs from decompose"); break; }
          ++s.hits[static_cast<std::uint64_t>(dec.k - 1) * words + word_index(dec.b.values(), m)];
        }
        return s;
      });

  Verdict v;
  v.words_checked = words;
  std::vector<std::uint32_t> hits(cells, 0);
  for (const auto& s : shards) {
    if (!s.bad.empty()) {
      v.counterexample = s.bad;
      return v;
    }
    for (std::uint64_t c = 0; c < cells; ++c) hits[c] += s.hits[c];
  }

  WordOdometer odo(n, m, 0);
  for (std::uint64_t bi = 0; bi < words; ++bi, odo.advance()) {
    const bool prime = is_prime_parking_function(PrefWord(odo.word(), m));
    for (Value k = 1; k <= m; ++k) {
      const auto h = hits[static_cast<std::uint64_t>(k - 1) * words + bi];
      if (h != (prime ? 1u : 0u)) {
        v.counterexample = "pair (k=" + std::to_string(k) + ", b=" + format_word(odo.word()) +
                           ") hit " + std::to_string(h) + " times";
        return v;
      }
    }
  }
  v.holds = true;
  return v;
}

/// Every a in [n-1]^n parks on exactly one rotated street, and its rotation
/// is the shift found by decompose.
inline Verdict verify_proposition(Value n, const EnumerationOptions& opts = {}) {
  detail::check_guard("verify_proposition", n, 2, 5, opts);
  const Value m = n - 1;
  const std::uint64_t words = checked_pow(static_cast<std::uint64_t>(m), static_cast<unsigned>(n));
  std::vector<StreetLabels> streets;
  for (Value k = 1; k <= m; ++k) streets.push_back(rotated_street(n, k));

  auto shards = detail::run_sharded<std::string>(
      words, opts.threads, [&](std::uint64_t begin, std::uint64_t end) {
        WordOdometer odo(n, m, begin);
        for (std::uint64_t i = begin; i < end; ++i, odo.advance()) {
          const PrefWord a(odo.word(), m);
          Value successes = 0;
          Value parked_k = 0;
          for (Value k = 1; k <= m; ++k) {
            if (simulate(a, streets[static_cast<std::size_t>(k - 1)]).success) {
              ++successes;
              parked_k = k;
            }
          }
          if (successes != 1)
            return format_word(a) + ": parks on " + std::to_string(successes) + " rotations";
          if (parked_k != decompose(a).k)
            return format_word(a) + ": parks with k=" + std::to_string(parked_k) +
                   " but decompose gives a different shift";
        }
        return std::string{};
      });

  Verdict v;
  v.words_checked = words;
  for (auto& s : shards) {
    if (!s.empty()) {
      v.counterexample = std::move(s);
      return v;
    }
  }
  v.holds = true;
  return v;
}

}  // namespace parking
