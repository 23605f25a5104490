#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "parking/errors.hpp"
#include "parking/word.hpp"

namespace parking {

/// Labels painted on the spots of a one-way street, one per physical
/// position 1..n. Several positions may share a label.
class StreetLabels {
 public:
  explicit StreetLabels(std::vector<Value> labels) : labels_(std::move(labels)) {
    if (labels_.empty()) throw invalid_input("street must have at least one spot");
    for (Value v : labels_)
      if (v < 1) throw invalid_input("street labels must be positive");
  }

  std::size_t size() const noexcept { return labels_.size(); }
  std::span<const Value> labels() const noexcept { return labels_; }
  Value operator[](std::size_t position) const noexcept { return labels_[position]; }

  friend bool operator==(const StreetLabels&, const StreetLabels&) = default;

 private:
  std::vector<Value> labels_;
};

/// Spots labeled 1, 2, ..., n.
inline StreetLabels standard_street(Value n) {
  if (n < 1) throw invalid_input("street length must be positive");
  std::vector<Value> labels(static_cast<std::size_t>(n));
  std::iota(labels.begin(), labels.end(), 1);
  return StreetLabels(std::move(labels));
}

/// Spots labeled k, k, k+1, ..., n-1, 1, 2, ..., k-1.
inline StreetLabels rotated_street(Value n, Value k) {
  if (n < 2) throw invalid_input("rotated street needs at least two spots");
  if (k < 1 || k > n - 1)
    throw invalid_input("rotation k = " + std::to_string(k) + " outside [1, " +
                        std::to_string(n - 1) + "]");
  std::vector<Value> labels;
  labels.reserve(static_cast<std::size_t>(n));
  labels.push_back(k);
  for (Value v = k; v <= n - 1; ++v) labels.push_back(v);
  for (Value v = 1; v < k; ++v) labels.push_back(v);
  return StreetLabels(std::move(labels));
}

/// Spots labeled 1, 1, 2, ..., n-1.
inline StreetLabels prime_street(Value n) { return rotated_street(n, 1); }

struct ParkOutcome {
  bool success = false;
  /// assignment[p] is the 1-based car parked at position p+1; empty on failure.
  std::vector<Value> assignment;
  /// Smallest 1-based car index that left the street.
  std::optional<Value> failed_car;
};

/// Run the parking process: cars arrive in order 1..n, each heads for the
/// leftmost spot carrying its preferred label and takes the first free spot
/// at or after it. The first car that drives off the end stops the run.
inline ParkOutcome simulate(const PrefWord& w, const StreetLabels& street) {
  if (street.size() != w.size()) {
    throw invalid_input("street has " + std::to_string(street.size()) + " spots but word has " +
                        std::to_string(w.size()) + " cars");
  }
  const std::size_t n = street.size();

  std::unordered_map<Value, std::size_t> leftmost;
  for (std::size_t p = n; p-- > 0;) leftmost[street[p]] = p;

  // next_free[p] = smallest free position >= p, with n meaning "off the end".
  // Path-halving keeps probe chains short.
  std::vector<std::size_t> next_free(n + 1);
  std::iota(next_free.begin(), next_free.end(), std::size_t{0});
  auto find_free = [&](std::size_t p) {
    while (next_free[p] != p) {
      next_free[p] = next_free[next_free[p]];
      p = next_free[p];
    }
    return p;
  };

  ParkOutcome out;
  out.assignment.assign(n, 0);
  for (std::size_t car = 0; car < n; ++car) {
    auto it = leftmost.find(w[car]);
    if (it == leftmost.end()) {
      throw invalid_input("car " + std::to_string(car + 1) + " prefers label " +
                          std::to_string(w[car]) + " which is not on the street");
    }
    const std::size_t spot = find_free(it->second);
    if (spot == n) {
      out.assignment.clear();
      out.failed_car = static_cast<Value>(car + 1);
      return out;
    }
    out.assignment[spot] = static_cast<Value>(car + 1);
    next_free[spot] = spot + 1;
  }
  out.success = true;
  return out;
}

/// Two-row picture of a parked street: car numbers above spot labels,
/// right-aligned in equal-width columns. Empty spots show '.'.
inline std::string render_street(const ParkOutcome& outcome, const StreetLabels& street) {
  const std::size_t n = street.size();
  std::vector<std::string> cars(n, "."), labels(n);
  std::size_t width = 1;
  for (std::size_t p = 0; p < n; ++p) {
    if (p < outcome.assignment.size() && outcome.assignment[p] != 0)
      cars[p] = std::to_string(outcome.assignment[p]);
    labels[p] = std::to_string(street[p]);
    width = std::max({width, cars[p].size(), labels[p].size()});
  }
  auto row = [&](const std::vector<std::string>& cells) {
    std::string line;
    for (std::size_t p = 0; p < n; ++p) {
      if (p > 0) line += ' ';
      line.append(width - cells[p].size(), ' ');
      line += cells[p];
    }
    return line + '\n';
  };
  return row(cars) + row(labels);
}

}  // namespace parking
