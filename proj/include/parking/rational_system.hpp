#pragma once

// Exact feasibility of mixed strict / non-strict linear inequality systems
// by Fourier-Motzkin elimination over the rationals.
//
// Each row reads  coeffs . x  >  rhs   (strict)
//             or  coeffs . x  >= rhs   (non-strict).
// Eliminating a variable combines every lower bound with every upper bound;
// the combination is strict when either parent is. This is exact for mixed
// systems, and the per-stage systems are kept so a witness point can be
// recovered by back-substitution.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace parking {

using Rational = boost::multiprecision::cpp_rational;
using RationalPoint = std::vector<Rational>;

struct LinearConstraint {
  std::vector<Rational> coeffs;
  Rational rhs;
  bool strict = true;

  bool satisfied_by(const RationalPoint& x) const {
    Rational lhs = 0;
    for (std::size_t v = 0; v < coeffs.size(); ++v) lhs += coeffs[v] * x[v];
    return strict ? lhs > rhs : lhs >= rhs;
  }
};

class LinearSystem {
 public:
  explicit LinearSystem(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<LinearConstraint>& rows() const noexcept { return rows_; }

  void add(LinearConstraint c) {
    if (c.coeffs.size() != dim_) throw std::invalid_argument("constraint dimension mismatch");
    rows_.push_back(std::move(c));
  }
  void add_greater(std::vector<Rational> coeffs, Rational rhs) {
    add({std::move(coeffs), std::move(rhs), true});
  }
  void add_at_least(std::vector<Rational> coeffs, Rational rhs) {
    add({std::move(coeffs), std::move(rhs), false});
  }
  void add_equal(std::vector<Rational> coeffs, Rational rhs) {
    std::vector<Rational> neg(coeffs.size());
    for (std::size_t v = 0; v < coeffs.size(); ++v) neg[v] = -coeffs[v];
    add_at_least(std::move(coeffs), rhs);
    add_at_least(std::move(neg), -rhs);
  }

  bool satisfied_by(const RationalPoint& x) const {
    for (const auto& r : rows_)
      if (!r.satisfied_by(x)) return false;
    return true;
  }

 private:
  std::size_t dim_;
  std::vector<LinearConstraint> rows_;
};

namespace detail {

// Scales each row so its first nonzero coefficient is +-1 and keeps only
// the tightest row per direction. Rows with no variables are checked
// outright; returns false if one of them is violated.
inline bool normalize_rows(std::vector<LinearConstraint>& rows) {
  std::map<std::vector<Rational>, std::pair<Rational, bool>> tightest;
  for (auto& r : rows) {
    std::size_t lead = 0;
    while (lead < r.coeffs.size() && r.coeffs[lead] == 0) ++lead;
    if (lead == r.coeffs.size()) {
      const bool ok = r.strict ? Rational(0) > r.rhs : Rational(0) >= r.rhs;
      if (!ok) return false;
      continue;
    }
    const Rational scale = abs(r.coeffs[lead]);
    if (scale != 1) {
      for (auto& c : r.coeffs) c /= scale;
      r.rhs /= scale;
    }
    auto [it, inserted] = tightest.try_emplace(std::move(r.coeffs), r.rhs, r.strict);
    if (!inserted) {
      auto& [rhs, strict] = it->second;
      if (r.rhs > rhs || (r.rhs == rhs && r.strict && !strict)) {
        rhs = r.rhs;
        strict = r.strict;
      }
    }
  }
  rows.clear();
  for (auto& [coeffs, bound] : tightest) rows.push_back({coeffs, bound.first, bound.second});
  return true;
}

}  // namespace detail

/// A point satisfying every row of `sys`, or nullopt if none exists.
inline std::optional<RationalPoint> find_point(const LinearSystem& sys) {
  const std::size_t dim = sys.dim();
  // stages[v] holds the rows over variables 0..v, before v is eliminated.
  std::vector<std::vector<LinearConstraint>> stages(dim);
  std::vector<LinearConstraint> rows = sys.rows();
  if (!detail::normalize_rows(rows)) return std::nullopt;

  for (std::size_t v = dim; v-- > 0;) {
    stages[v] = rows;
    std::vector<LinearConstraint> lower, upper, next;
    for (auto& r : rows) {
      if (r.coeffs[v] > 0) lower.push_back(std::move(r));
      else if (r.coeffs[v] < 0) upper.push_back(std::move(r));
      else next.push_back(std::move(r));
    }
    for (const auto& lo : lower) {
      for (const auto& up : upper) {
        const Rational a = lo.coeffs[v];
        const Rational b = -up.coeffs[v];
        LinearConstraint c;
        c.coeffs.resize(dim);
        for (std::size_t u = 0; u < dim; ++u) c.coeffs[u] = b * lo.coeffs[u] + a * up.coeffs[u];
        c.coeffs[v] = 0;
        c.rhs = b * lo.rhs + a * up.rhs;
        c.strict = lo.strict || up.strict;
        next.push_back(std::move(c));
      }
    }
    if (!detail::normalize_rows(next)) return std::nullopt;
    rows = std::move(next);
  }

  RationalPoint x(dim, Rational(0));
  for (std::size_t v = 0; v < dim; ++v) {
    std::optional<std::pair<Rational, bool>> lo, hi;
    for (const auto& r : stages[v]) {
      const Rational& c = r.coeffs[v];
      if (c == 0) continue;
      Rational rest = r.rhs;
      for (std::size_t u = 0; u < v; ++u) rest -= r.coeffs[u] * x[u];
      const Rational bound = rest / c;
      if (c > 0) {
        if (!lo || bound > lo->first || (bound == lo->first && r.strict))
          lo = std::pair{bound, r.strict};
      } else {
        if (!hi || bound < hi->first || (bound == hi->first && r.strict))
          hi = std::pair{bound, r.strict};
      }
    }
    if (lo && hi) {
      if (lo->first < hi->first) x[v] = (lo->first + hi->first) / 2;
      else if (lo->first == hi->first && !lo->second && !hi->second) x[v] = lo->first;
      else throw std::logic_error("back-substitution met an empty interval");
    } else if (lo) {
      x[v] = lo->second ? lo->first + 1 : lo->first;
    } else if (hi) {
      x[v] = hi->second ? hi->first - 1 : hi->first;
    }
  }
  return x;
}

inline bool is_feasible(const LinearSystem& sys) { return find_point(sys).has_value(); }

}  // namespace parking
