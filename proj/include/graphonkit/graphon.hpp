#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "graphonkit/errors.hpp"

namespace graphonkit {

inline constexpr double kInfiniteMass = std::numeric_limits<double>::infinity();

// A step graphon: k blocks of strictly positive mass, a symmetric k x k
// value matrix, and the mass of the ambient space on which the graphon is
// zero outside the listed blocks. ambient_mass == kInfiniteMass stands for
// an infinite ambient space (e.g. all of R+ with Lebesgue measure).
//
// Immutable after construction; all operations below are pure.
class StepGraphon {
 public:
  StepGraphon() : ambient_mass_(0.0) {}  // the zero graphon on an empty space

  StepGraphon(std::vector<double> weights, std::vector<double> values, double ambient_mass)
      : weights_(std::move(weights)), values_(std::move(values)), ambient_mass_(ambient_mass) {
    validate();
  }

  std::size_t block_count() const { return weights_.size(); }
  const std::vector<double>& weights() const { return weights_; }
  const std::vector<double>& values() const { return values_; }
  double ambient_mass() const { return ambient_mass_; }

  double value(std::size_t i, std::size_t j) const { return values_[i * block_count() + j]; }
  double weight(std::size_t i) const { return weights_[i]; }

  double support_mass() const {
    double m = 0.0;
    for (double w : weights_) m += w;
    return m;
  }

  bool is_zero() const {
    for (double v : values_)
      if (v != 0.0) return false;
    return true;
  }

 private:
  void validate() const {
    const std::size_t k = weights_.size();
    if (values_.size() != k * k)
      throw graphon_error(errc::asymmetric_values,
                          "values matrix must be " + std::to_string(k) + "x" + std::to_string(k));
    for (double w : weights_)
      if (!(w > 0.0) || !std::isfinite(w))
        throw graphon_error(errc::nonpositive_weight, "block weights must be strictly positive");
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j)
        if (values_[i * k + j] != values_[j * k + i])
          throw graphon_error(errc::asymmetric_values,
                              "values[" + std::to_string(i) + "][" + std::to_string(j) +
                                  "] != values[" + std::to_string(j) + "][" + std::to_string(i) + "]");
    for (double v : values_)
      if (!std::isfinite(v))
        throw graphon_error(errc::value_out_of_range, "values must be finite");
    double m = 0.0;
    for (double w : weights_) m += w;
    // relative slack: k weights summing to the ambient mass can overshoot
    // it by a few ulps (e.g. m blocks of weight 1/m on a probability space)
    if (ambient_mass_ < m * (1.0 - 1e-12))
      throw graphon_error(errc::ambient_too_small, "ambient_mass smaller than total block mass");
  }

  std::vector<double> weights_;
  std::vector<double> values_;  // row-major k*k
  double ambient_mass_;
};

inline StepGraphon new_step_graphon(std::vector<double> weights, std::vector<double> values,
                                    double ambient_mass = kInfiniteMass) {
  return StepGraphon(std::move(weights), std::move(values), ambient_mass);
}

inline StepGraphon new_step_graphon(std::vector<double> weights,
                                    const std::vector<std::vector<double>>& values,
                                    double ambient_mass = kInfiniteMass) {
  const std::size_t k = weights.size();
  std::vector<double> flat;
  flat.reserve(k * k);
  if (values.size() != k)
    throw graphon_error(errc::asymmetric_values, "values matrix must have one row per block");
  for (const auto& row : values) {
    if (row.size() != k)
      throw graphon_error(errc::asymmetric_values, "values matrix must be square");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return StepGraphon(std::move(weights), std::move(flat), ambient_mass);
}

// Appends one zero-valued block of mass extra_mass. extra_mass == kInfiniteMass
// raises ambient_mass to infinity instead of adding a block.
inline StepGraphon trivial_extension(const StepGraphon& w, double extra_mass) {
  if (extra_mass < 0.0) throw graphon_error(errc::nonpositive_weight, "extra_mass must be >= 0");
  if (extra_mass == kInfiniteMass)
    return StepGraphon(w.weights(), w.values(), kInfiniteMass);
  if (extra_mass == 0.0) return w;
  const std::size_t k = w.block_count();
  std::vector<double> weights = w.weights();
  weights.push_back(extra_mass);
  std::vector<double> values((k + 1) * (k + 1), 0.0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) values[i * (k + 1) + j] = w.value(i, j);
  double ambient = w.ambient_mass();
  if (ambient != kInfiniteMass) ambient = std::max(ambient, w.support_mass() + extra_mass);
  return StepGraphon(std::move(weights), std::move(values), ambient);
}

namespace detail {

// Kahan-compensated accumulator: constructions with millions of cells (e.g.
// deep gallery graphons) need better than naive-summation accuracy.
struct kahan_sum {
  double s = 0.0, c = 0.0;
  void add(double term) {
    const double t = s + term;
    if (std::abs(s) >= std::abs(term))
      c += (s - t) + term;
    else
      c += (term - t) + s;
    s = t;
  }
  double value() const { return s + c; }
};

}  // namespace detail

inline double integral(const StepGraphon& w) {
  const std::size_t k = w.block_count();
  detail::kahan_sum s;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) s.add(w.weight(i) * (w.weight(j) * w.value(i, j)));
  return s.value();
}

inline double l1_norm(const StepGraphon& w) {
  const std::size_t k = w.block_count();
  detail::kahan_sum s;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      s.add(w.weight(i) * (w.weight(j) * std::abs(w.value(i, j))));
  return s.value();
}

inline double lp_norm(const StepGraphon& w, double p) {
  if (!(p >= 1.0)) throw graphon_error(errc::invalid_p, "p must be >= 1");
  if (p == 1.0) return l1_norm(w);
  const std::size_t k = w.block_count();
  detail::kahan_sum s;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      s.add(w.weight(i) * (w.weight(j) * std::pow(std::abs(w.value(i, j)), p)));
  return std::pow(s.value(), 1.0 / p);
}

inline double sup_norm(const StepGraphon& w) {
  double s = 0.0;
  for (double v : w.values()) s = std::max(s, std::abs(v));
  return s;
}

// Per-block degrees D_i = sum_j w_j V_ij.
inline std::vector<double> degree_vector(const StepGraphon& w) {
  const std::size_t k = w.block_count();
  std::vector<double> d(k, 0.0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) d[i] += w.weight(j) * w.value(i, j);
  return d;
}

}  // namespace graphonkit
