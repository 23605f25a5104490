#pragma once

// Cyclic-shift decomposition of words in [n-1]^n.
//
// Every a in [n-1]^n is, in exactly one way, a prime parking function b
// shifted cyclically by k-1 (mod n-1):  a_i = ((b_i + k - 2) mod (n-1)) + 1.
// The shift is located by scoring each position of the sorted word and
// taking the unique minimum.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "parking/core.hpp"
#include "parking/errors.hpp"
#include "parking/word.hpp"

namespace parking {

struct ScoreVector {
  std::vector<std::int64_t> s;
  /// 1-based index of the unique minimum of s.
  std::size_t argmin_d = 0;
};

struct Decomposition {
  Value k = 0;
  PrefWord b;
  /// 1-based position in the sorted source word whose value became k.
  std::size_t argmin_d = 0;
};

namespace detail {

inline void require_prime_domain(const PrefWord& a) {
  if (a.n() < 2) throw domain_error("cyclic decomposition needs n >= 2");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > a.n() - 1) {
      throw domain_error("entry " + std::to_string(i + 1) + " = " + std::to_string(a[i]) +
                         " outside [1, " + std::to_string(a.n() - 1) + "]");
    }
  }
}

// Least nonnegative residue.
inline std::int64_t mod_floor(std::int64_t x, std::int64_t m) {
  const std::int64_t r = x % m;
  return r < 0 ? r + m : r;
}

}  // namespace detail

/// s_i = sum(q) - n*q_i + (i-1)(n-1) for i = 1..n.
///
/// s_i is the total cyclic gap from q_i to every other entry, measured
/// forward around Z/(n-1). Two scores coincide only if
/// (n-1)(i-d) = n(q_i-q_d), which coprimality of n-1 and n rules out for
/// i != d, so the minimum is attained once.
inline ScoreVector scores(const SortedWord& q) {
  const auto n = static_cast<std::int64_t>(q.size());
  if (n < 2) throw domain_error("scores need n >= 2");
  for (Value v : q)
    if (v < 1 || v > n - 1) throw domain_error("sorted word entries must lie in [1, n-1]");

  const std::int64_t total = std::accumulate(q.begin(), q.end(), std::int64_t{0});
  ScoreVector out;
  out.s.resize(static_cast<std::size_t>(n));
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  bool tied = false;
  for (std::int64_t i = 0; i < n; ++i) {
    const std::int64_t s = total - n * q[static_cast<std::size_t>(i)] + i * (n - 1);
    out.s[static_cast<std::size_t>(i)] = s;
    if (s < best) {
      best = s;
      out.argmin_d = static_cast<std::size_t>(i + 1);
      tied = false;
    } else if (s == best) {
      tied = true;
    }
  }
  if (tied) throw std::logic_error("score minimum attained twice; input is not in [n-1]^n");
  return out;
}

/// a_i = ((b_i + k - 2) mod (n-1)) + 1.
inline PrefWord recompose(const PrefWord& b, Value k) {
  detail::require_prime_domain(b);
  const Value m = b.n() - 1;
  if (k < 1 || k > m)
    throw invalid_input("shift k = " + std::to_string(k) + " outside [1, " + std::to_string(m) + "]");
  std::vector<Value> a(b.size());
  for (std::size_t i = 0; i < b.size(); ++i)
    a[i] = static_cast<Value>(detail::mod_floor(b[i] + k - 2, m) + 1);
  return PrefWord(std::move(a), m);
}

/// Split a in [n-1]^n into its shift k and prime parking function b.
///
/// k is read off the sorted copy; the inverse shift b_i = ((a_i - k) mod (n-1)) + 1
/// is applied in the caller's original order.
inline Decomposition decompose(const PrefWord& a) {
  detail::require_prime_domain(a);
  const auto q = sorted_rearrangement(a);
  const auto sv = scores(q);
  const Value k = q[sv.argmin_d - 1];
  const Value m = a.n() - 1;
  std::vector<Value> b(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    b[i] = static_cast<Value>(detail::mod_floor(a[i] - k, m) + 1);
  return Decomposition{k, PrefWord(std::move(b), m), sv.argmin_d};
}

namespace detail {

// Unbiased draw from [0, bound) by rejection on the raw 64-bit stream, so
// the seed -> word mapping depends only on mt19937_64, which is fully
// specified by the standard.
inline std::uint64_t draw_below(std::mt19937_64& gen, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = gen();
  } while (x >= limit);
  return x % bound;
}

}  // namespace detail

/// `count` prime parking functions of length n, each exactly uniform.
///
/// A uniform a in [n-1]^n is pushed through decompose; since each prime b
/// has exactly n-1 preimages, the image is uniform on prime words.
inline std::vector<PrefWord> sample_primes(Value n, std::uint64_t seed, std::size_t count) {
  if (n < 2) throw domain_error("sampling prime parking functions needs n >= 2");
  std::mt19937_64 gen(seed);
  const auto m = static_cast<std::uint64_t>(n - 1);
  std::vector<PrefWord> out;
  out.reserve(count);
  std::vector<Value> a(static_cast<std::size_t>(n));
  for (std::size_t c = 0; c < count; ++c) {
    for (auto& v : a) v = static_cast<Value>(detail::draw_below(gen, m) + 1);
    out.push_back(decompose(PrefWord(a, n - 1)).b);
  }
  return out;
}

inline PrefWord sample_prime(Value n, std::uint64_t seed) {
  return std::move(sample_primes(n, seed, 1).front());
}

}  // namespace parking
