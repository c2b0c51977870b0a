#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <vector>

#include "graphonkit/cutnorm.hpp"
#include "graphonkit/errors.hpp"
#include "graphonkit/graphon.hpp"

namespace graphonkit {

// W^(u): the same function with the underlying measure scaled by u^{1/2},
// so the L1 norm scales by u.
inline StepGraphon stretch(const StepGraphon& w, double u) {
  if (!(u > 0.0)) throw graphon_error(errc::nonpositive_u, "stretch factor must be > 0");
  const double f = std::sqrt(u);
  std::vector<double> weights = w.weights();
  for (double& x : weights) x *= f;
  double ambient = w.ambient_mass();
  if (ambient != kInfiniteMass) {
    ambient *= f;
    // rounding can push the scaled weight sum one ulp above the scaled
    // ambient; widen the ambient rather than reject a valid graphon
    double sum = 0.0;
    for (double x : weights) sum += x;
    ambient = std::max(ambient, sum);
  }
  return StepGraphon(std::move(weights), w.values(), ambient);
}

// W^s = W^(1/||W||_1), so ||W^s||_1 = 1; the zero graphon maps to itself.
inline StepGraphon normalize(const StepGraphon& w) {
  const double norm = l1_norm(w);
  if (norm == 0.0) return StepGraphon({}, {}, w.ambient_mass());
  return stretch(w, 1.0 / norm);
}

// Entropy of a [0,1]-valued graphon; the off-support part contributes
// h(0) = 0, so the sum over listed blocks is the whole integral.
inline double entropy(const StepGraphon& w) {
  for (double v : w.values())
    if (v < 0.0 || v > 1.0)
      throw graphon_error(errc::value_out_of_range, "entropy requires values in [0,1]");
  auto h = [](double p) {
    if (p <= 0.0 || p >= 1.0) return 0.0;
    return -p * std::log(p) - (1.0 - p) * std::log(1.0 - p);
  };
  const std::size_t k = w.block_count();
  double s = 0.0;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) s += w.weight(i) * w.weight(j) * h(w.value(i, j));
  return s;
}

struct UiProfile {
  double sup_l1 = 0.0;   // sup over the family of ||F||_1        (UI1)
  double sup_tail = 0.0;  // sup over the family of int_{|F|>B}|F| (UI2 at level B)
};

inline UiProfile ui_profile(const std::vector<StepGraphon>& family, double b) {
  if (!(b > 0.0)) throw graphon_error(errc::invalid_p, "level B must be > 0");
  UiProfile prof;
  for (const auto& w : family) {
    prof.sup_l1 = std::max(prof.sup_l1, l1_norm(w));
    const std::size_t k = w.block_count();
    double tail = 0.0;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        const double v = w.value(i, j);
        if (std::abs(v) > b) tail += w.weight(i) * w.weight(j) * std::abs(v);
      }
    prof.sup_tail = std::max(prof.sup_tail, tail);
  }
  return prof;
}

enum class tail_norm { l1, cut };

struct TailMassResult {
  double value = 0.0;
  bool exact = true;  // false: greedy-by-degree upper bound
  std::vector<std::uint8_t> kept;  // the minimizing block set U
};

namespace detail {

inline double tail_for_subset(const StepGraphon& w, const std::vector<std::uint8_t>& keep,
                              tail_norm norm, std::size_t cut_cap) {
  const std::size_t k = w.block_count();
  if (norm == tail_norm::l1) {
    double s = 0.0;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        if (!(keep[i] && keep[j])) s += w.weight(i) * w.weight(j) * std::abs(w.value(i, j));
    return s;
  }
  // cut norm of W - W*1_{UxU}
  std::vector<double> values = w.values();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (keep[i] && keep[j]) values[i * k + j] = 0.0;
  StepGraphon rest(w.weights(), std::move(values), w.ambient_mass());
  if (k <= cut_cap) return cut_norm_exact(rest).value;
  return l1_norm(rest);  // safe upper bound when exact cut norm is out of range
}

}  // namespace detail

// min over unions U of whole blocks with mass(U) <= M of ||W - W*1_{UxU}||.
// Exact by subset enumeration when feasible (L1: k <= 20; cut: k <= 12),
// greedy-by-degree otherwise (an upper bound on the block-granular optimum).
inline TailMassResult regular_tail_mass(const StepGraphon& w, double m, tail_norm norm) {
  if (!(m > 0.0)) throw graphon_error(errc::invalid_p, "mass budget M must be > 0");
  const std::size_t k = w.block_count();
  TailMassResult res;
  res.kept.assign(k, 0);
  const std::size_t enum_cap = norm == tail_norm::l1 ? 20 : 12;

  if (k <= enum_cap) {
    double best = std::numeric_limits<double>::infinity();
    std::vector<std::uint8_t> keep(k), best_keep(k, 0);
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << k); ++mask) {
      double mass = 0.0;
      for (std::size_t i = 0; i < k; ++i) {
        keep[i] = (mask >> i) & 1;
        if (keep[i]) mass += w.weight(i);
      }
      if (mass > m * (1.0 + 1e-12)) continue;
      const double t = detail::tail_for_subset(w, keep, norm, kExactBlocksDefault);
      if (t < best) {
        best = t;
        best_keep = keep;
      }
    }
    res.value = best;
    res.kept = best_keep;
    res.exact = true;
    return res;
  }

  // greedy: add blocks by descending |degree| while the budget allows
  std::vector<double> score(k, 0.0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) score[i] += w.weight(j) * std::abs(w.value(i, j));
  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return score[a] > score[b]; });
  double mass = 0.0;
  for (std::size_t i : order)
    if (mass + w.weight(i) <= m * (1.0 + 1e-12)) {
      res.kept[i] = 1;
      mass += w.weight(i);
    }
  res.value = detail::tail_for_subset(w, res.kept, norm, kExactBlocksDefault);
  res.exact = false;
  return res;
}

struct BoundedApproxResult {
  double value = 0.0;
  bool exact = true;  // false: L1 upper bound (k beyond exact cut-norm range)
};

// Cut norm of W - W*1_{|W| <= B}: the cost of truncating at level B.
inline BoundedApproxResult bounded_approx_error(const StepGraphon& w, double b,
                                                std::size_t k_exact = kExactBlocksDefault) {
  if (!(b > 0.0)) throw graphon_error(errc::invalid_p, "level B must be > 0");
  const std::size_t k = w.block_count();
  std::vector<double> values(k * k, 0.0);
  for (std::size_t i = 0; i < k * k; ++i)
    if (std::abs(w.values()[i]) > b) values[i] = w.values()[i];
  StepGraphon excess(w.weights(), std::move(values), w.ambient_mass());
  BoundedApproxResult res;
  if (k <= k_exact) {
    res.value = cut_norm_exact(excess, k_exact).value;
    res.exact = true;
  } else {
    res.value = l1_norm(excess);
    res.exact = false;
  }
  return res;
}

}  // namespace graphonkit
