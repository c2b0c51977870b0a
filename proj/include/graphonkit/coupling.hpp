#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "graphonkit/errors.hpp"
#include "graphonkit/graphon.hpp"

namespace graphonkit {

inline constexpr double kMarginalRelTol = 1e-12;

// Coupling measure of two block-weight vectors: a nonnegative matrix with
// prescribed row and column sums (an element of the transportation polytope).
struct Coupling {
  std::size_t rows = 0, cols = 0;
  std::vector<double> matrix;  // row-major rows*cols
  std::vector<double> row_marginals, col_marginals;

  double at(std::size_t i, std::size_t j) const { return matrix[i * cols + j]; }

  double total_mass() const {
    double s = 0.0;
    for (double v : matrix) s += v;
    return s;
  }

  void validate(double rel_tol = kMarginalRelTol) const {
    for (double v : matrix)
      if (v < 0.0) throw graphon_error(errc::marginal_mismatch, "coupling entries must be >= 0");
    for (std::size_t i = 0; i < rows; ++i) {
      double s = 0.0;
      for (std::size_t j = 0; j < cols; ++j) s += at(i, j);
      const double target = row_marginals[i];
      if (std::abs(s - target) > rel_tol * std::max(1.0, std::abs(target)))
        throw graphon_error(errc::marginal_mismatch,
                            "row " + std::to_string(i) + " sum deviates from marginal");
    }
    for (std::size_t j = 0; j < cols; ++j) {
      double s = 0.0;
      for (std::size_t i = 0; i < rows; ++i) s += at(i, j);
      const double target = col_marginals[j];
      if (std::abs(s - target) > rel_tol * std::max(1.0, std::abs(target)))
        throw graphon_error(errc::marginal_mismatch,
                            "column " + std::to_string(j) + " sum deviates from marginal");
    }
  }
};

inline Coupling identity_coupling(const std::vector<double>& weights) {
  Coupling c;
  c.rows = c.cols = weights.size();
  c.row_marginals = c.col_marginals = weights;
  c.matrix.assign(c.rows * c.cols, 0.0);
  for (std::size_t i = 0; i < c.rows; ++i) c.matrix[i * c.cols + i] = weights[i];
  return c;
}

// Realizes W1^{pi1} - W2^{pi2} on the product partition {(i,j) : C_ij > 0}
// so cut-norm code for step graphons applies directly. Rows/columns of C
// beyond the block count of W1/W2 are trivial-extension zero blocks.
inline StepGraphon refine_difference(const StepGraphon& w1, const StepGraphon& w2,
                                     const Coupling& c) {
  const std::size_t k1 = w1.block_count(), k2 = w2.block_count();
  // rows/cols beyond the block counts are zero blocks of a trivial extension
  if (c.rows < k1 || c.cols < k2)
    throw graphon_error(errc::marginal_mismatch, "coupling shape incompatible with graphons");
  for (std::size_t i = 0; i < k1; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < c.cols; ++j) s += c.at(i, j);
    if (std::abs(s - w1.weight(i)) > kMarginalRelTol * std::max(1.0, w1.weight(i)))
      throw graphon_error(errc::marginal_mismatch, "row marginal does not match W1 weights");
  }
  for (std::size_t j = 0; j < k2; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < c.rows; ++i) s += c.at(i, j);
    if (std::abs(s - w2.weight(j)) > kMarginalRelTol * std::max(1.0, w2.weight(j)))
      throw graphon_error(errc::marginal_mismatch, "column marginal does not match W2 weights");
  }

  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i < c.rows; ++i)
    for (std::size_t j = 0; j < c.cols; ++j)
      if (c.at(i, j) > 0.0) cells.emplace_back(i, j);

  const std::size_t k = cells.size();
  std::vector<double> weights(k), values(k * k);
  for (std::size_t a = 0; a < k; ++a) weights[a] = c.at(cells[a].first, cells[a].second);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      const auto [i, j] = cells[a];
      const auto [ip, jp] = cells[b];
      const double v1 = (i < k1 && ip < k1) ? w1.value(i, ip) : 0.0;
      const double v2 = (j < k2 && jp < k2) ? w2.value(j, jp) : 0.0;
      values[a * k + b] = v1 - v2;
    }
  }
  double total = 0.0;
  for (double w : weights) total += w;
  return StepGraphon(std::move(weights), std::move(values), total);
}

// --- transportation LP -------------------------------------------------
//
// min sum c_ij X_ij over the transportation polytope with row sums r and
// column sums s (sum r == sum s). Classic transportation simplex: northwest
// corner start, tree potentials, Bland entering rule (first negative reduced
// cost) for termination and determinism.

namespace detail {

struct transport_state {
  std::size_t m, n;
  std::vector<double> x;
  std::vector<std::uint8_t> basic;
};

inline transport_state northwest_corner(const std::vector<double>& r,
                                        const std::vector<double>& s) {
  transport_state st;
  st.m = r.size();
  st.n = s.size();
  st.x.assign(st.m * st.n, 0.0);
  st.basic.assign(st.m * st.n, 0);
  std::vector<double> rr = r, ss = s;
  std::size_t i = 0, j = 0;
  while (i < st.m && j < st.n) {
    const double q = std::min(rr[i], ss[j]);
    st.x[i * st.n + j] = q;
    st.basic[i * st.n + j] = 1;
    rr[i] -= q;
    ss[j] -= q;
    if (i + 1 == st.m && j + 1 == st.n) break;
    // advance along the exhausted dimension; keep degenerate basics so the
    // basis stays a spanning tree with m+n-1 cells
    if (rr[i] <= ss[j] && i + 1 < st.m)
      ++i;
    else
      ++j;
  }
  return st;
}

}  // namespace detail

inline double transport_lp(const std::vector<double>& cost, const std::vector<double>& r,
                           const std::vector<double>& s, std::vector<double>& plan) {
  const std::size_t m = r.size(), n = s.size();
  if (m == 0 || n == 0) {
    plan.clear();
    return 0.0;
  }
  auto st = detail::northwest_corner(r, s);
  double cmax = 1.0;
  for (double c : cost) cmax = std::max(cmax, std::abs(c));
  const double eps = 1e-12 * cmax;

  std::vector<double> u(m), v(n);
  std::vector<std::uint8_t> udone(m), vdone(n);
  const std::size_t max_iter = 2000 * (m + n) + 1000;

  for (std::size_t iter = 0; iter < max_iter; ++iter) {
    // potentials from the basis tree
    std::fill(udone.begin(), udone.end(), 0);
    std::fill(vdone.begin(), vdone.end(), 0);
    u[0] = 0.0;
    udone[0] = 1;
    bool progress = true;
    while (progress) {
      progress = false;
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          if (!st.basic[i * n + j]) continue;
          if (udone[i] && !vdone[j]) {
            v[j] = cost[i * n + j] - u[i];
            vdone[j] = 1;
            progress = true;
          } else if (vdone[j] && !udone[i]) {
            u[i] = cost[i * n + j] - v[j];
            udone[i] = 1;
            progress = true;
          }
        }
    }

    // Bland: first cell with negative reduced cost
    std::size_t ei = m, ej = n;
    for (std::size_t i = 0; i < m && ei == m; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (st.basic[i * n + j]) continue;
        if (cost[i * n + j] - u[i] - v[j] < -eps) {
          ei = i;
          ej = j;
          break;
        }
      }
    if (ei == m) break;  // optimal

    // find the unique basis-tree path from row ei to column ej
    // nodes: rows 0..m-1, cols m..m+n-1
    std::vector<int> parent(m + n, -1);
    std::deque<std::size_t> queue{ei};
    std::vector<std::uint8_t> seen(m + n, 0);
    seen[ei] = 1;
    while (!queue.empty()) {
      const std::size_t node = queue.front();
      queue.pop_front();
      if (node == m + ej) break;
      if (node < m) {
        for (std::size_t j = 0; j < n; ++j)
          if (st.basic[node * n + j] && !seen[m + j]) {
            seen[m + j] = 1;
            parent[m + j] = static_cast<int>(node);
            queue.push_back(m + j);
          }
      } else {
        const std::size_t j = node - m;
        for (std::size_t i = 0; i < m; ++i)
          if (st.basic[i * n + j] && !seen[i]) {
            seen[i] = 1;
            parent[i] = static_cast<int>(node);
            queue.push_back(i);
          }
      }
    }

    // cycle: entering cell + alternating path cells
    std::vector<std::pair<std::size_t, std::size_t>> minus, plus;
    plus.emplace_back(ei, ej);
    std::size_t node = m + ej;
    bool take_minus = true;
    while (node != ei) {
      const std::size_t p = static_cast<std::size_t>(parent[node]);
      const std::size_t i = node < m ? node : p;
      const std::size_t j = node < m ? p - m : node - m;
      (take_minus ? minus : plus).emplace_back(i, j);
      take_minus = !take_minus;
      node = p;
    }

    double theta = std::numeric_limits<double>::infinity();
    std::pair<std::size_t, std::size_t> leaving{m, n};
    for (const auto& [i, j] : minus) {
      const double q = st.x[i * n + j];
      if (q < theta - 1e-300 || (q <= theta && std::make_pair(i, j) < leaving)) {
        theta = q;
        leaving = {i, j};
      }
    }
    for (const auto& [i, j] : plus) st.x[i * n + j] += theta;
    for (const auto& [i, j] : minus) st.x[i * n + j] -= theta;
    st.x[leaving.first * n + leaving.second] = 0.0;
    st.basic[leaving.first * n + leaving.second] = 0;
    st.basic[ei * n + ej] = 1;
  }

  plan = st.x;
  double obj = 0.0;
  for (std::size_t i = 0; i < m * n; ++i) obj += cost[i] * plan[i];
  return obj;
}

}  // namespace graphonkit
