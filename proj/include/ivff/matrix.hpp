#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ivff/core.hpp"

namespace ivff {

/// One decision maker's judgments: alternatives x criteria, row-major.
class DecisionMatrix {
 public:
  static DecisionMatrix make(std::string dm_id, std::size_t alternatives,
                             std::size_t criteria, std::vector<Ivffn> cells);

  const std::string& dm_id() const { return dm_id_; }
  std::size_t alternatives() const { return alternatives_; }
  std::size_t criteria() const { return criteria_; }

  const Ivffn& at(std::size_t alternative, std::size_t criterion) const {
    return cells_[alternative * criteria_ + criterion];
  }
  const std::vector<Ivffn>& cells() const { return cells_; }

  /// Copy with a subset of alternatives, preserving their relative order.
  DecisionMatrix select_alternatives(const std::vector<std::size_t>& keep) const;

 private:
  std::string dm_id_;
  std::size_t alternatives_ = 0;
  std::size_t criteria_ = 0;
  std::vector<Ivffn> cells_;
};

/// Nonnegative criterion weights summing to 1.
class WeightVector {
 public:
  WeightVector() = default;

  /// Validates nonnegativity and a unit sum within 1e-9.
  static WeightVector make(std::vector<double> weights);
  static WeightVector uniform(std::size_t n);

  std::size_t size() const { return w_.size(); }
  double operator[](std::size_t i) const { return w_[i]; }
  const std::vector<double>& values() const { return w_; }

  auto begin() const { return w_.begin(); }
  auto end() const { return w_.end(); }

 private:
  std::vector<double> w_;
};

}  // namespace ivff
