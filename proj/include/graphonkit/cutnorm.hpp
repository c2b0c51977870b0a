#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <thread>
#include <type_traits>
#include <vector>

#include "graphonkit/errors.hpp"
#include "graphonkit/graphon.hpp"
#include "graphonkit/rng.hpp"

namespace graphonkit {

enum class bound_kind { exact, lower_witness, certified_upper };

inline const char* to_string(bound_kind k) {
  switch (k) {
    case bound_kind::exact: return "EXACT";
    case bound_kind::lower_witness: return "LOWER_WITNESS";
    case bound_kind::certified_upper: return "CERTIFIED_UPPER";
  }
  return "?";
}

struct CutNormResult {
  double value = 0.0;
  std::vector<std::uint8_t> witness_x, witness_y;  // 0/1 block indicators
  bound_kind kind = bound_kind::exact;
  std::string certificate_note;
};

inline constexpr std::size_t kExactBlocksDefault = 24;

// sum_{i in x, j in y} w_i w_j V_ij, compensated, fixed (i,j) order.
// Witness re-evaluation in tests goes through this same routine.
inline double bilinear_form(const StepGraphon& f, const std::vector<std::uint8_t>& x,
                            const std::vector<std::uint8_t>& y) {
  const std::size_t k = f.block_count();
  double s = 0.0, c = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    if (!x[i]) continue;
    for (std::size_t j = 0; j < k; ++j) {
      if (!y[j]) continue;
      const double term = f.weight(i) * (f.weight(j) * f.value(i, j));
      const double t = s + term;
      if (std::abs(s) >= std::abs(term))
        c += (s - t) + term;
      else
        c += (term - t) + s;
      s = t;
    }
  }
  return s + c;
}

namespace detail {

template <class T>
struct basic_cut_result {
  T value{};
  std::vector<std::uint8_t> x, y;
};

// max over x in {0,1}^k of sum_j max(0, (x^T A)_j), walking x in Gray-code
// order with incremental row updates: O(2^k * k) arithmetic.
// `negate` runs the same maximization on -A.
template <class T>
basic_cut_result<T> max_positive_form(const std::vector<T>& a, std::size_t k, bool negate) {
  basic_cut_result<T> best;
  best.x.assign(k, 0);
  best.y.assign(k, 0);
  best.value = T(0);
  if (k == 0) return best;

  std::vector<T> s(k, T(0));
  [[maybe_unused]] std::vector<double> comp;  // Kahan compensation, floating only
  if constexpr (std::is_floating_point_v<T>) comp.assign(k, 0.0);

  std::vector<std::uint8_t> x(k, 0);
  T best_val = T(0);
  std::vector<std::uint8_t> best_x = x;

  const std::uint64_t n = std::uint64_t(1) << k;
  for (std::uint64_t g = 1; g < n; ++g) {
    const int i = std::countr_zero(g);
    const bool now_in = !x[i];
    x[i] = now_in ? 1 : 0;
    for (std::size_t j = 0; j < k; ++j) {
      T delta = a[std::size_t(i) * k + j];
      if (negate) delta = -delta;
      if (!now_in) delta = -delta;
      if constexpr (std::is_floating_point_v<T>) {
        const T t = s[j] + delta;
        if (std::abs(s[j]) >= std::abs(delta))
          comp[j] += (s[j] - t) + delta;
        else
          comp[j] += (delta - t) + s[j];
        s[j] = t;
      } else {
        s[j] += delta;
      }
    }
    T obj = T(0);
    for (std::size_t j = 0; j < k; ++j) {
      T sj = s[j];
      if constexpr (std::is_floating_point_v<T>) sj += comp[j];
      if (sj > T(0)) obj += sj;
    }
    if (obj > best_val) {
      best_val = obj;
      best_x = x;
    }
  }

  // recompute the column sums at best_x from scratch; derive y
  std::vector<T> col(k, T(0));
  for (std::size_t i = 0; i < k; ++i) {
    if (!best_x[i]) continue;
    for (std::size_t j = 0; j < k; ++j) {
      T v = a[i * k + j];
      if (negate) v = -v;
      col[j] += v;
    }
  }
  best.x = best_x;
  T val = T(0);
  for (std::size_t j = 0; j < k; ++j) {
    if (col[j] > T(0)) {
      best.y[j] = 1;
      val += col[j];
    }
  }
  best.value = val;
  return best;
}

// Exact cut norm of the scaled matrix A_ij = w_i w_j V_ij over block subsets.
template <class T>
basic_cut_result<T> cut_norm_matrix_exact(const std::vector<T>& a, std::size_t k) {
  auto pos = max_positive_form(a, k, false);
  auto neg = max_positive_form(a, k, true);
  return neg.value > pos.value ? neg : pos;
}

inline std::vector<double> scaled_matrix(const StepGraphon& f) {
  const std::size_t k = f.block_count();
  std::vector<double> a(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      a[i * k + j] = f.weight(i) * (f.weight(j) * f.value(i, j));
  return a;
}

}  // namespace detail

// Exact cut norm by Gray-code enumeration of row subsets; requires
// block_count <= k_exact. The reported value is the bilinear form
// re-evaluated at the returned witnesses.
inline CutNormResult cut_norm_exact(const StepGraphon& f,
                                    std::size_t k_exact = kExactBlocksDefault) {
  const std::size_t k = f.block_count();
  if (k > k_exact)
    throw graphon_error(errc::too_many_blocks,
                        std::to_string(k) + " blocks exceeds exact-enumeration cap " +
                            std::to_string(k_exact));
  CutNormResult r;
  r.kind = bound_kind::exact;
  if (k == 0) {
    return r;
  }
  const auto a = detail::scaled_matrix(f);
  const auto pos = detail::max_positive_form(a, k, false);
  const auto neg = detail::max_positive_form(a, k, true);
  const double vp = std::abs(bilinear_form(f, pos.x, pos.y));
  const double vn = std::abs(bilinear_form(f, neg.x, neg.y));
  if (vn > vp) {
    r.value = vn;
    r.witness_x = neg.x;
    r.witness_y = neg.y;
  } else {
    r.value = vp;
    r.witness_x = pos.x;
    r.witness_y = pos.y;
  }
  return r;
}

// One alternating-maximization ascent from the given start; returns a fixed
// point of the row/column best-response map. Coordinates with zero marginal
// gain are set to 0 (deterministic tie-break).
namespace detail {
inline double alternate_ascent(const std::vector<double>& a, std::size_t k, int sign,
                               std::vector<std::uint8_t>& x, std::vector<std::uint8_t>& y) {
  double prev = -1.0;
  for (int it = 0; it < 200; ++it) {
    // best y given x
    for (std::size_t j = 0; j < k; ++j) {
      double s = 0.0;
      for (std::size_t i = 0; i < k; ++i)
        if (x[i]) s += sign * a[i * k + j];
      y[j] = s > 0.0 ? 1 : 0;
    }
    // best x given y
    double obj = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
      double s = 0.0;
      for (std::size_t j = 0; j < k; ++j)
        if (y[j]) s += sign * a[i * k + j];
      x[i] = s > 0.0 ? 1 : 0;
      if (s > 0.0) obj += s;
    }
    if (obj <= prev) return obj;
    prev = obj;
  }
  return prev;
}
}  // namespace detail

// Seeded multistart alternating maximization; kind LOWER_WITNESS.
// Deterministic for fixed (seed, restarts) regardless of thread count:
// each restart has its own derived stream and the reduction is an
// order-independent (value, restart-index) max.
inline CutNormResult cut_norm_heuristic(const StepGraphon& f, int restarts, std::uint64_t seed,
                                        int threads = 1) {
  if (restarts < 1) restarts = 1;
  const std::size_t k = f.block_count();
  CutNormResult r;
  r.kind = bound_kind::lower_witness;
  r.witness_x.assign(k, 0);
  r.witness_y.assign(k, 0);
  if (k == 0) return r;
  const auto a = detail::scaled_matrix(f);

  struct restart_result {
    double value = -1.0;
    std::vector<std::uint8_t> x, y;
  };
  std::vector<restart_result> results(static_cast<std::size_t>(restarts));

  auto run_restart = [&](int idx) {
    stream_rng rng(stream_rng::derive(seed, {std::uint64_t(idx)}));
    std::vector<std::uint8_t> x(k), y(k, 0);
    restart_result best;
    for (int sign : {+1, -1}) {
      for (std::size_t i = 0; i < k; ++i) x[i] = rng.bernoulli(0.5) ? 1 : 0;
      detail::alternate_ascent(a, k, sign, x, y);
      const double v = std::abs(bilinear_form(f, x, y));
      if (v > best.value) {
        best.value = v;
        best.x = x;
        best.y = y;
      }
    }
    results[static_cast<std::size_t>(idx)] = std::move(best);
  };

  if (threads <= 1 || restarts == 1) {
    for (int i = 0; i < restarts; ++i) run_restart(i);
  } else {
    std::vector<std::thread> pool;
    const int nt = std::min(threads, restarts);
    for (int t = 0; t < nt; ++t)
      pool.emplace_back([&, t] {
        for (int i = t; i < restarts; i += nt) run_restart(i);
      });
    for (auto& th : pool) th.join();
  }

  int best_idx = 0;
  for (int i = 1; i < restarts; ++i)
    if (results[std::size_t(i)].value > results[std::size_t(best_idx)].value) best_idx = i;
  r.value = results[std::size_t(best_idx)].value;
  if (r.value < 0.0) r.value = 0.0;
  if (!results[std::size_t(best_idx)].x.empty()) {
    r.witness_x = results[std::size_t(best_idx)].x;
    r.witness_y = results[std::size_t(best_idx)].y;
  }
  return r;
}

// For nonnegative graphons the cut norm equals the L1 norm (witnessed by the
// full space on both sides).
inline double cut_norm_nonneg(const StepGraphon& f) {
  for (double v : f.values())
    if (v < 0.0) throw graphon_error(errc::negative_value, "cut_norm_nonneg requires F >= 0");
  return l1_norm(f);
}

}  // namespace graphonkit
