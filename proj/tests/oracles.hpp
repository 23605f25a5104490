#pragma once

// Reference implementations used only by the tests. Each one takes a
// different route from the library code it is compared against.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace oracle {

// Parking by literal probing: scan forward one spot at a time.
// Returns the position -> car table, or nullopt if some car drives off.
inline std::optional<std::vector<int>> park(const std::vector<int>& prefs,
                                            const std::vector<int>& labels) {
  std::vector<int> occupant(labels.size(), 0);
  for (std::size_t car = 0; car < prefs.size(); ++car) {
    std::size_t spot = 0;
    while (spot < labels.size() && labels[spot] != prefs[car]) ++spot;
    while (spot < labels.size() && occupant[spot] != 0) ++spot;
    if (spot == labels.size()) return std::nullopt;
    occupant[spot] = static_cast<int>(car + 1);
  }
  return occupant;
}

// Scores as explicit sums of forward cyclic gaps:
// s_i = sum_{j>i} (q_j - q_i) + sum_{j<i} (q_j - q_i + n - 1).
inline std::vector<std::int64_t> scores_by_gaps(const std::vector<int>& q) {
  const auto n = static_cast<std::int64_t>(q.size());
  std::vector<std::int64_t> s(q.size(), 0);
  for (std::size_t i = 0; i < q.size(); ++i) {
    for (std::size_t j = 0; j < q.size(); ++j) {
      if (j > i) s[i] += q[j] - q[i];
      if (j < i) s[i] += q[j] - q[i] + n - 1;
    }
  }
  return s;
}

// Count of entries <= v for each v; a word is parking iff it has at least
// v entries <= v for each v in [n] (the counting form of the criterion).
inline bool parking_by_counts(const std::vector<int>& w) {
  const int n = static_cast<int>(w.size());
  for (int v = 1; v <= n; ++v) {
    if (std::count_if(w.begin(), w.end(), [v](int x) { return x <= v; }) < v) return false;
  }
  return true;
}

// Prime iff at least v+1 entries are <= v for each v in [n-1], plus one 1.
inline bool prime_by_counts(const std::vector<int>& w) {
  const int n = static_cast<int>(w.size());
  if (std::count(w.begin(), w.end(), 1) < 1) return false;
  for (int v = 1; v < n; ++v) {
    if (std::count_if(w.begin(), w.end(), [v](int x) { return x <= v; }) < v + 1) return false;
  }
  return true;
}

// The shifts k in [n-1] for which ((a_i - k) mod (n-1)) + 1 is prime.
inline std::vector<int> prime_shifts(const std::vector<int>& a) {
  const int m = static_cast<int>(a.size()) - 1;
  std::vector<int> ks;
  for (int k = 1; k <= m; ++k) {
    std::vector<int> b(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) b[i] = ((a[i] - k) % m + m) % m + 1;
    if (prime_by_counts(b)) ks.push_back(k);
  }
  return ks;
}

// Strict/non-strict difference constraints decided by shortest paths over
// (weight, strict) pairs. Constraint  x_i - x_j >= c  (or > c) is the
// bound  x_j - x_i <= -c  (or < -c), an edge i -> j.
struct DifferenceConstraint {
  int i;
  int j;
  int c;
  bool strict;
};

inline bool difference_feasible(int dim, const std::vector<DifferenceConstraint>& rows) {
  struct Bound {
    long w;
    bool strict;
    bool inf;
  };
  auto tighter = [](const Bound& a, const Bound& b) {
    if (a.inf) return false;
    if (b.inf) return true;
    return a.w < b.w || (a.w == b.w && a.strict && !b.strict);
  };
  std::vector<std::vector<Bound>> d(dim, std::vector<Bound>(dim, Bound{0, false, true}));
  for (int v = 0; v < dim; ++v) d[v][v] = {0, false, false};
  for (const auto& r : rows) {
    Bound e{-r.c, r.strict, false};
    if (tighter(e, d[r.i][r.j])) d[r.i][r.j] = e;
  }
  for (int m = 0; m < dim; ++m)
    for (int a = 0; a < dim; ++a)
      for (int b = 0; b < dim; ++b) {
        if (d[a][m].inf || d[m][b].inf) continue;
        Bound via{d[a][m].w + d[m][b].w, d[a][m].strict || d[m][b].strict, false};
        if (tighter(via, d[a][b])) d[a][b] = via;
      }
  for (int v = 0; v < dim; ++v)
    if (d[v][v].w < 0 || (d[v][v].w == 0 && d[v][v].strict)) return false;
  return true;
}

inline std::vector<int> random_word(std::mt19937& gen, int n, int max_label) {
  std::uniform_int_distribution<int> dist(1, max_label);
  std::vector<int> w(static_cast<std::size_t>(n));
  for (auto& v : w) v = dist(gen);
  return w;
}

}  // namespace oracle
