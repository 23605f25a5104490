#pragma once

// Regions of the Shi arrangement  x_i - x_j = k  (1 <= i < j <= n, k in {0,1})
// and their Pak-Stanley labels.
//
// A region is stored as its sign vector: one '+' or '-' per hyperplane in
// lexicographic (i, j, k) order, '+' meaning x_i - x_j > k. Regions are
// found by breadth-first search from the base chamber
//     x_1 > x_2 > ... > x_n,  x_1 - x_n < 1,
// flipping one sign at a time and keeping the flips that stay feasible.
// Crossing x_i = x_j away from the base adds 1 to label coordinate i;
// crossing x_i = x_j + 1 adds 1 to coordinate j.
//
// Every region contains the direction (1, ..., 1), so boundedness is taken
// modulo that line.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "parking/core.hpp"
#include "parking/enumeration.hpp"
#include "parking/errors.hpp"
#include "parking/rational_system.hpp"
#include "parking/word.hpp"

namespace parking {

struct Hyperplane {
  Value i = 0;  // 1-based, i < j
  Value j = 0;
  Value k = 0;  // 0 or 1

  friend auto operator<=>(const Hyperplane&, const Hyperplane&) = default;
};

inline std::vector<Hyperplane> hyperplanes(Value n) {
  if (n < 2) throw invalid_input("the Shi arrangement needs n >= 2");
  std::vector<Hyperplane> out;
  for (Value i = 1; i <= n; ++i)
    for (Value j = i + 1; j <= n; ++j)
      for (Value k = 0; k <= 1; ++k) out.push_back({i, j, k});
  return out;
}

inline std::size_t hyperplane_count(Value n) {
  return static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1);
}

class SignVector {
 public:
  SignVector(Value n, std::string signs) : n_(n), signs_(std::move(signs)) {
    if (n_ < 2) throw invalid_input("the Shi arrangement needs n >= 2");
    if (signs_.size() != hyperplane_count(n_))
      throw invalid_input("sign vector for n = " + std::to_string(n_) + " needs " +
                          std::to_string(hyperplane_count(n_)) + " entries");
    for (char c : signs_)
      if (c != '+' && c != '-') throw invalid_input("sign vector entries must be '+' or '-'");
  }

  Value n() const noexcept { return n_; }
  std::size_t size() const noexcept { return signs_.size(); }
  const std::string& str() const noexcept { return signs_; }
  /// True when x_i - x_j > k on this side of hyperplane `h`.
  bool positive(std::size_t h) const noexcept { return signs_[h] == '+'; }

  SignVector flipped(std::size_t h) const {
    SignVector out = *this;
    out.signs_[h] = positive(h) ? '-' : '+';
    return out;
  }

  friend bool operator==(const SignVector&, const SignVector&) = default;
  friend auto operator<=>(const SignVector& a, const SignVector& b) { return a.signs_ <=> b.signs_; }

 private:
  Value n_;
  std::string signs_;
};

inline std::ostream& operator<<(std::ostream& os, const SignVector& sv) { return os << sv.str(); }

struct Region {
  SignVector sign_vector;
  std::vector<Value> label;
  bool bounded = false;
  std::size_t bfs_depth = 0;
};

/// The open polyhedron cut out by a sign vector, as strict inequalities.
inline LinearSystem region_system(const SignVector& sv) {
  const Value n = sv.n();
  LinearSystem sys(static_cast<std::size_t>(n));
  const auto hs = hyperplanes(n);
  for (std::size_t h = 0; h < hs.size(); ++h) {
    std::vector<Rational> a(static_cast<std::size_t>(n), Rational(0));
    const auto xi = static_cast<std::size_t>(hs[h].i - 1);
    const auto xj = static_cast<std::size_t>(hs[h].j - 1);
    if (sv.positive(h)) {
      a[xi] = 1;
      a[xj] = -1;
      sys.add_greater(std::move(a), Rational(hs[h].k));
    } else {
      a[xi] = -1;
      a[xj] = 1;
      sys.add_greater(std::move(a), Rational(-hs[h].k));
    }
  }
  return sys;
}

/// An interior point of the region, if it is nonempty.
inline std::optional<RationalPoint> region_witness(const SignVector& sv) {
  return find_point(region_system(sv));
}

inline bool is_feasible(const SignVector& sv) { return region_witness(sv).has_value(); }

/// x_1 > ... > x_n with every pairwise gap below 1.
inline SignVector base_region(Value n) {
  const auto hs = hyperplanes(n);
  std::string s;
  for (const auto& h : hs) s += h.k == 0 ? '+' : '-';
  return SignVector(n, std::move(s));
}

/// Bounded modulo the all-equal line: the recession cone
/// { d : a.d >= 0 for every row a.x > b } contains only multiples of (1,...,1).
/// Tested by asking, for each ordered pair (i, j), whether the cone meets
/// d_i - d_j = 1.
inline bool is_bounded(const SignVector& sv) {
  const auto region = region_system(sv);
  const auto dim = region.dim();
  LinearSystem cone(dim);
  for (const auto& r : region.rows()) cone.add_at_least(r.coeffs, Rational(0));
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      if (i == j) continue;
      LinearSystem probe = cone;
      std::vector<Rational> e(dim, Rational(0));
      e[i] = 1;
      e[j] = -1;
      probe.add_equal(std::move(e), Rational(1));
      if (is_feasible(probe)) return false;
    }
  }
  return true;
}

inline bool is_bounded(const Region& r) { return is_bounded(r.sign_vector); }

/// Pak-Stanley label recomputed from the hyperplanes separating `sv` from
/// the base region, independent of any search path.
inline std::vector<Value> label_from_separating(const SignVector& sv) {
  const Value n = sv.n();
  const auto base = base_region(n);
  const auto hs = hyperplanes(n);
  std::vector<Value> label(static_cast<std::size_t>(n), 1);
  for (std::size_t h = 0; h < hs.size(); ++h) {
    if (sv.positive(h) == base.positive(h)) continue;
    const Value coord = hs[h].k == 0 ? hs[h].i : hs[h].j;
    ++label[static_cast<std::size_t>(coord - 1)];
  }
  return label;
}

inline std::size_t separating_count(const SignVector& a, const SignVector& b) {
  std::size_t d = 0;
  for (std::size_t h = 0; h < a.size(); ++h) d += a.positive(h) != b.positive(h);
  return d;
}

/// All regions, in BFS order from the base region. Each BFS level is sorted
/// by sign vector before it is expanded, so the listing is reproducible.
inline std::vector<Region> enumerate_regions(Value n, const EnumerationOptions& opts = {}) {
  detail::check_guard("enumerate_regions", n, 2, 5, opts);
  const auto hs = hyperplanes(n);
  const auto base = base_region(n);
  if (!is_feasible(base)) throw std::logic_error("base region is empty");

  std::vector<Region> regions;
  std::unordered_set<std::string> seen;
  regions.push_back({base, std::vector<Value>(static_cast<std::size_t>(n), 1), false, 0});
  seen.insert(base.str());

  std::size_t level_begin = 0;
  std::size_t depth = 0;
  while (level_begin < regions.size()) {
    const std::size_t level_end = regions.size();

    struct Candidate {
      std::size_t parent;
      std::size_t hyperplane;
      SignVector sv;
    };
    std::vector<Candidate> candidates;
    std::unordered_set<std::string> proposed;
    for (std::size_t r = level_begin; r < level_end; ++r) {
      for (std::size_t h = 0; h < hs.size(); ++h) {
        auto sv = regions[r].sign_vector.flipped(h);
        if (seen.count(sv.str()) || !proposed.insert(sv.str()).second) continue;
        candidates.push_back({r, h, std::move(sv)});
      }
    }

    auto feasible_parts = detail::run_sharded<std::vector<char>>(
        candidates.size(), opts.threads, [&](std::uint64_t b, std::uint64_t e) {
          std::vector<char> ok;
          for (auto c = b; c < e; ++c) ok.push_back(is_feasible(candidates[c].sv) ? 1 : 0);
          return ok;
        });
    std::vector<char> feasible;
    for (auto& p : feasible_parts) feasible.insert(feasible.end(), p.begin(), p.end());

    std::vector<Region> next;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      if (!feasible[c]) continue;
      const auto& cand = candidates[c];
      const auto& parent = regions[cand.parent];
      if (parent.sign_vector.positive(cand.hyperplane) != base.positive(cand.hyperplane))
        throw std::logic_error("BFS edge crosses back toward the base region");
      const auto& h = hs[cand.hyperplane];
      auto label = parent.label;
      ++label[static_cast<std::size_t>((h.k == 0 ? h.i : h.j) - 1)];
      next.push_back({cand.sv, std::move(label), false, depth + 1});
    }
    std::sort(next.begin(), next.end(),
              [](const Region& a, const Region& b) { return a.sign_vector < b.sign_vector; });
    for (auto& r : next) {
      seen.insert(r.sign_vector.str());
      regions.push_back(std::move(r));
    }
    level_begin = level_end;
    ++depth;
  }

  auto bounded_parts = detail::run_sharded<std::vector<char>>(
      regions.size(), opts.threads, [&](std::uint64_t b, std::uint64_t e) {
        std::vector<char> out;
        for (auto r = b; r < e; ++r) out.push_back(is_bounded(regions[r].sign_vector) ? 1 : 0);
        return out;
      });
  std::size_t r = 0;
  for (const auto& part : bounded_parts)
    for (char flag : part) regions[r++].bounded = flag != 0;
  return regions;
}

/// Labels are distinct, the labels are exactly the parking functions of
/// length n, and the labels of bounded regions are exactly the prime ones.
inline Verdict verify_pak_stanley(Value n, const EnumerationOptions& opts = {}) {
  detail::check_guard("verify_pak_stanley", n, 2, 5, opts);
  const auto regions = enumerate_regions(n, opts);
  Verdict v;
  v.words_checked = regions.size();

  std::set<std::vector<Value>> labels, bounded_labels;
  for (const auto& r : regions) {
    if (!labels.insert(r.label).second) {
      v.counterexample = "label " + format_word(r.label) + " appears twice";
      return v;
    }
    if (r.bounded) bounded_labels.insert(r.label);
  }

  std::set<std::vector<Value>> pf, ppf;
  WordOdometer odo(n, n, 0);
  const auto total = checked_pow(static_cast<std::uint64_t>(n), static_cast<unsigned>(n));
  for (std::uint64_t i = 0; i < total; ++i, odo.advance()) {
    const auto w = PrefWord::square(odo.word());
    if (is_parking_function(w)) pf.insert(odo.word());
    if (is_prime_parking_function(w)) ppf.insert(odo.word());
  }
  if (labels != pf) {
    v.counterexample = "region labels differ from the parking functions";
    return v;
  }
  if (bounded_labels != ppf) {
    v.counterexample = "bounded-region labels differ from the prime parking functions";
    return v;
  }
  v.holds = true;
  return v;
}

}  // namespace parking
