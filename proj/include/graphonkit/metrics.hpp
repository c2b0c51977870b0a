#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "graphonkit/coupling.hpp"
#include "graphonkit/cutnorm.hpp"
#include "graphonkit/errors.hpp"
#include "graphonkit/graphon.hpp"
#include "graphonkit/ops.hpp"
#include "graphonkit/rng.hpp"

namespace graphonkit {

enum class dist_mode { permutation_exhaustive, alternating_lp, both, forced_identity };
enum class dist_metric { cut, l1, lp };

enum class estimate_kind { exact, upper, bracket };

inline const char* to_string(estimate_kind k) {
  switch (k) {
    case estimate_kind::exact: return "EXACT";
    case estimate_kind::upper: return "UPPER";
    case estimate_kind::bracket: return "BRACKET";
  }
  return "?";
}

struct MetricEstimate {
  double value = 0.0;
  estimate_kind kind = estimate_kind::upper;
  double lower = 0.0;  // |int W1 - int W2|, a bound on the true distance
  Coupling coupling;
  std::string method;
};

// |int(W1) - int(W2)|: take T = U = the whole space in the cut-norm supremum.
inline double integral_lower_bound(const StepGraphon& w1, const StepGraphon& w2) {
  return std::abs(integral(w1) - integral(w2));
}

// Step (ii) of the metric definitions: extend both graphons by one zero
// block so both support masses equal m1 + m2. Excess zero-zero coupling
// mass contributes nothing to any objective (both values vanish there), so
// the common mass m1 + m2 never changes the infimum.
inline std::tuple<StepGraphon, StepGraphon, double> equalize_masses(const StepGraphon& w1,
                                                                   const StepGraphon& w2) {
  const double m1 = w1.support_mass(), m2 = w2.support_mass();
  return {trivial_extension(w1, m2), trivial_extension(w2, m1), m1 + m2};
}

inline constexpr int kDefaultRestarts = 16;
inline constexpr int kMaxOuterIterations = 200;
inline constexpr double kImprovementTol = 1e-10;
inline constexpr std::size_t kPermutationBlockCap = 9;

namespace detail {

struct objective_eval {
  double value = 0.0;
  bool certified = true;  // false when an inner heuristic cut norm was used
  CutNormResult cut;      // populated for the cut metric
};

// Objective at a fixed coupling: the requested norm of the refined
// difference graphon (cut norm, L1, or L^p).
inline objective_eval coupling_objective(const StepGraphon& w1, const StepGraphon& w2,
                                         const Coupling& c, dist_metric metric, double p,
                                         std::uint64_t seed) {
  StepGraphon diff = refine_difference(w1, w2, c);
  objective_eval ev;
  switch (metric) {
    case dist_metric::cut:
      if (diff.block_count() <= kExactBlocksDefault) {
        ev.cut = cut_norm_exact(diff);
        ev.value = ev.cut.value;
      } else {
        ev.cut = cut_norm_heuristic(diff, 8, seed);
        ev.value = ev.cut.value;
        ev.certified = false;
      }
      break;
    case dist_metric::l1:
      ev.value = l1_norm(diff);
      break;
    case dist_metric::lp:
      ev.value = lp_norm(diff, p);
      break;
  }
  return ev;
}

inline bool uniform_weight(const StepGraphon& w, double& unit) {
  if (w.block_count() == 0) return true;
  unit = w.weight(0);
  for (double x : w.weights())
    if (std::abs(x - unit) > 1e-12 * std::max(1.0, unit)) return false;
  return true;
}

struct extended_blocks {
  std::vector<std::size_t> src;  // index into the original graphon, or npos for a zero block
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

// Exhaustive minimum over permutation couplings of n uniform blocks per
// side (original blocks plus the equalization mass split into unit blocks).
// Permutations that only differ by reshuffling the right-hand zero blocks
// are enumerated once (canonical representative filter).
inline MetricEstimate permutation_exhaustive(const StepGraphon& w1, const StepGraphon& w2,
                                             dist_metric metric, double p) {
  double u1 = 0.0, u2 = 0.0;
  if (!uniform_weight(w1, u1) || !uniform_weight(w2, u2) ||
      (w1.block_count() > 0 && w2.block_count() > 0 &&
       std::abs(u1 - u2) > 1e-12 * std::max(1.0, u1)))
    throw graphon_error(errc::mode_unsupported,
                        "permutation mode requires equal uniform block weights");
  const std::size_t k1 = w1.block_count(), k2 = w2.block_count();
  const double unit = k1 > 0 ? u1 : u2;
  const std::size_t n = k1 + k2;
  if (n == 0) {
    MetricEstimate est;
    est.kind = estimate_kind::exact;
    est.method = "perm";
    return est;
  }
  if (n > kPermutationBlockCap)
    throw graphon_error(errc::mode_unsupported,
                        "permutation mode caps at " + std::to_string(kPermutationBlockCap) +
                            " blocks after equalization");

  // left blocks: k1 real + k2 zero; right blocks: k2 real + k1 zero
  auto left_value = [&](std::size_t a, std::size_t b) {
    return (a < k1 && b < k1) ? w1.value(a, b) : 0.0;
  };
  auto right_value = [&](std::size_t a, std::size_t b) {
    return (a < k2 && b < k2) ? w2.value(a, b) : 0.0;
  };

  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<double> a(n * n);
  double best = std::numeric_limits<double>::infinity();
  std::vector<std::size_t> best_perm;
  const double unit2 = unit * unit;

  do {
    // canonical filter: right-hand zero blocks (indices >= k2) appear in
    // increasing order along the left index
    std::size_t last_zero_target = 0;
    bool canonical = true;
    for (std::size_t i = 0; i < n; ++i)
      if (perm[i] >= k2) {
        if (perm[i] < last_zero_target) {
          canonical = false;
          break;
        }
        last_zero_target = perm[i];
      }
    if (!canonical) continue;

    double val = 0.0;
    if (metric == dist_metric::cut) {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          a[i * n + j] = unit2 * (left_value(i, j) - right_value(perm[i], perm[j]));
      val = detail::cut_norm_matrix_exact(a, n).value;
    } else {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          const double d = std::abs(left_value(i, j) - right_value(perm[i], perm[j]));
          val += unit2 * (metric == dist_metric::l1 ? d : std::pow(d, p));
        }
      if (metric == dist_metric::lp) val = std::pow(val, 1.0 / p);
    }
    if (val < best) {
      best = val;
      best_perm = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  MetricEstimate est;
  est.value = best;
  est.method = "perm";
  est.coupling.rows = n;
  est.coupling.cols = n;
  est.coupling.matrix.assign(n * n, 0.0);
  est.coupling.row_marginals.assign(n, unit);
  est.coupling.col_marginals.assign(n, unit);
  for (std::size_t i = 0; i < n; ++i) est.coupling.matrix[i * n + best_perm[i]] = unit;
  return est;
}

// Folds a coupling on unit blocks (k1 real + k2 zero rows, k2 real + k1
// zero columns) down to the mass-equalized shape, merging all zero blocks
// into the single trivial-extension row/column. Merged blocks all carry
// value 0, so the refined difference -- and every objective -- is unchanged.
inline Coupling aggregate_to_extension(const Coupling& c, std::size_t k1, std::size_t k2,
                                       const StepGraphon& e1, const StepGraphon& e2) {
  Coupling out;
  out.rows = e1.block_count();
  out.cols = e2.block_count();
  out.row_marginals = e1.weights();
  out.col_marginals = e2.weights();
  out.matrix.assign(out.rows * out.cols, 0.0);
  for (std::size_t i = 0; i < c.rows; ++i) {
    const std::size_t ri = i < k1 ? i : out.rows - 1;
    for (std::size_t j = 0; j < c.cols; ++j) {
      const std::size_t cj = j < k2 ? j : out.cols - 1;
      out.matrix[ri * out.cols + cj] += c.at(i, j);
    }
  }
  return out;
}

}  // namespace detail

struct distance_options {
  dist_mode mode = dist_mode::both;
  int restarts = kDefaultRestarts;
  std::uint64_t seed = 0;
  int threads = 1;
  bool allow_signed = false;  // delta_p only
  // extra starting couplings for the alternating optimizer (on the
  // mass-equalized pair, shape (k1+1) x (k2+1) or k1 x k2 when no
  // extension block was added)
  std::vector<Coupling> extra_starts;
};

namespace detail {

// Alternating minimization over the transportation polytope. For the cut
// metric: exact cut norm at the current coupling, freeze its witnesses,
// the witness integral is bilinear in the coupling, solve the induced
// transportation LP, accept on true improvement. For L1/Lp the p-th power
// objective itself is bilinear in the two coupling copies.
inline MetricEstimate alternating_lp(const StepGraphon& w1, const StepGraphon& w2,
                                     dist_metric metric, double p,
                                     const distance_options& opt) {
  const std::size_t k1 = w1.block_count(), k2 = w2.block_count();
  const std::vector<double>& r = w1.weights();
  const std::vector<double>& c = w2.weights();
  const std::size_t m = k1, n = k2;

  MetricEstimate best;
  best.value = std::numeric_limits<double>::infinity();
  best.method = "altlp";

  auto make_coupling = [&](std::vector<double> plan) {
    Coupling cp;
    cp.rows = m;
    cp.cols = n;
    cp.matrix = std::move(plan);
    cp.row_marginals = r;
    cp.col_marginals = c;
    return cp;
  };

  // pairwise difference powers d[(i,j),(i',j')] = |V1_ii' - V2_jj'|^p,
  // used by the L1/Lp bilinear objective
  std::vector<double> dpow;
  if (metric != dist_metric::cut) {
    dpow.assign(m * n * m * n, 0.0);
    const double pe = metric == dist_metric::l1 ? 1.0 : p;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t ip = 0; ip < m; ++ip)
          for (std::size_t jp = 0; jp < n; ++jp) {
            const double d = std::abs(w1.value(i, ip) - w2.value(j, jp));
            dpow[((i * n + j) * m + ip) * n + jp] = pe == 1.0 ? d : std::pow(d, pe);
          }
  }

  struct start_outcome {
    double value = std::numeric_limits<double>::infinity();
    Coupling coupling;
    bool certified = true;
  };

  auto optimize_from = [&](Coupling cur, std::uint64_t restart_seed) {
    start_outcome out;
    auto ev = coupling_objective(w1, w2, cur, metric, p, restart_seed);
    double cur_val = ev.value;
    if (!ev.certified) out.certified = false;

    for (int iter = 0; iter < kMaxOuterIterations; ++iter) {
      std::vector<double> cost(m * n, 0.0);
      if (metric == dist_metric::cut) {
        // witness cells of the refined difference, in the same order as
        // refine_difference enumerates the support of `cur`
        std::vector<std::size_t> cell_i, cell_j;
        for (std::size_t i = 0; i < m; ++i)
          for (std::size_t j = 0; j < n; ++j)
            if (cur.at(i, j) > 0.0) {
              cell_i.push_back(i);
              cell_j.push_back(j);
            }
        // signed witness integral to pick the direction to shrink
        double signed_int = 0.0;
        for (std::size_t a = 0; a < cell_i.size(); ++a) {
          if (!ev.cut.witness_x[a]) continue;
          for (std::size_t b = 0; b < cell_i.size(); ++b) {
            if (!ev.cut.witness_y[b]) continue;
            signed_int += cur.at(cell_i[a], cell_j[a]) * cur.at(cell_i[b], cell_j[b]) *
                          (w1.value(cell_i[a], cell_i[b]) - w2.value(cell_j[a], cell_j[b]));
          }
        }
        const double sgn = signed_int >= 0.0 ? 1.0 : -1.0;
        for (std::size_t a = 0; a < cell_i.size(); ++a) {
          if (!ev.cut.witness_x[a]) continue;
          double s = 0.0;
          for (std::size_t b = 0; b < cell_i.size(); ++b) {
            if (!ev.cut.witness_y[b]) continue;
            s += cur.at(cell_i[b], cell_j[b]) *
                 (w1.value(cell_i[a], cell_i[b]) - w2.value(cell_j[a], cell_j[b]));
          }
          cost[cell_i[a] * n + cell_j[a]] = sgn * s;
        }
      } else {
        for (std::size_t i = 0; i < m; ++i)
          for (std::size_t j = 0; j < n; ++j) {
            double s = 0.0;
            for (std::size_t ip = 0; ip < m; ++ip)
              for (std::size_t jp = 0; jp < n; ++jp)
                s += cur.at(ip, jp) * dpow[((i * n + j) * m + ip) * n + jp];
            cost[i * n + j] = s;
          }
      }

      std::vector<double> plan;
      transport_lp(cost, r, c, plan);
      Coupling cand = make_coupling(std::move(plan));
      auto cand_ev = coupling_objective(w1, w2, cand, metric, p, restart_seed);
      if (!cand_ev.certified) out.certified = false;
      if (cand_ev.value < cur_val - kImprovementTol) {
        cur = std::move(cand);
        ev = std::move(cand_ev);
        cur_val = ev.value;
      } else {
        break;
      }
    }
    out.value = cur_val;
    out.coupling = std::move(cur);
    return out;
  };

  std::vector<Coupling> starts;
  // canonical start: the diagonal coupling when the two weight vectors
  // agree, otherwise the independence (product) coupling
  {
    bool same = m == n;
    for (std::size_t i = 0; same && i < m; ++i)
      if (std::abs(r[i] - c[i]) > 1e-12 * std::max(1.0, r[i])) same = false;
    if (same && m > 0) {
      starts.push_back(identity_coupling(r));
      starts.back().col_marginals = c;
    } else if (m > 0 && n > 0) {
      Coupling ind;
      ind.rows = m;
      ind.cols = n;
      ind.row_marginals = r;
      ind.col_marginals = c;
      double total = 0.0;
      for (double x : r) total += x;
      ind.matrix.resize(m * n);
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) ind.matrix[i * n + j] = r[i] * c[j] / total;
      starts.push_back(std::move(ind));
    }
  }
  for (const auto& extra : opt.extra_starts) starts.push_back(extra);
  const std::size_t fixed_starts = starts.size();
  const int restarts = std::max(1, opt.restarts);
  for (int t = 0; t < restarts; ++t) {
    // random transportation-polytope vertex via an LP with random costs
    stream_rng rng(opt.seed, {0x72657374ULL, std::uint64_t(t)});
    std::vector<double> cost(m * n);
    for (double& x : cost) x = rng.uniform();
    std::vector<double> plan;
    if (m > 0 && n > 0) {
      transport_lp(cost, r, c, plan);
      starts.push_back(make_coupling(std::move(plan)));
    }
  }

  if (starts.empty()) {  // both graphons empty
    MetricEstimate est;
    est.kind = estimate_kind::exact;
    est.method = "altlp";
    return est;
  }

  std::vector<start_outcome> outcomes(starts.size());
  auto run_start = [&](std::size_t idx) {
    outcomes[idx] = optimize_from(starts[idx], stream_rng::derive(opt.seed, {idx}));
  };
  if (opt.threads <= 1 || starts.size() == 1) {
    for (std::size_t i = 0; i < starts.size(); ++i) run_start(i);
  } else {
    std::vector<std::thread> pool;
    const std::size_t nt = std::min<std::size_t>(std::size_t(opt.threads), starts.size());
    for (std::size_t t = 0; t < nt; ++t)
      pool.emplace_back([&, t] {
        for (std::size_t i = t; i < starts.size(); i += nt) run_start(i);
      });
    for (auto& th : pool) th.join();
  }

  std::size_t best_idx = 0;
  bool certified = outcomes[0].certified;
  for (std::size_t i = 1; i < outcomes.size(); ++i) {
    certified = certified && outcomes[i].certified;
    if (outcomes[i].value < outcomes[best_idx].value) best_idx = i;
  }
  best.value = outcomes[best_idx].value;
  best.coupling = std::move(outcomes[best_idx].coupling);
  best.kind = certified ? estimate_kind::upper : estimate_kind::bracket;
  (void)fixed_starts;
  return best;
}

inline MetricEstimate distance_impl(const StepGraphon& w1, const StepGraphon& w2,
                                    dist_metric metric, double p, const distance_options& opt) {
  if (metric == dist_metric::lp) {
    if (!(p > 1.0)) throw graphon_error(errc::invalid_p, "delta_p requires p > 1");
    if (!opt.allow_signed) {
      for (double v : w1.values())
        if (v < 0.0)
          throw graphon_error(errc::negative_graphon,
                              "delta_p requires nonnegative graphons (use allow_signed to "
                              "compute the non-invariant quantity)");
      for (double v : w2.values())
        if (v < 0.0)
          throw graphon_error(errc::negative_graphon,
                              "delta_p requires nonnegative graphons (use allow_signed to "
                              "compute the non-invariant quantity)");
    }
  }

  // |int W1 - int W2| bounds the cut distance (take T = U = everything) and
  // hence delta_1, but not delta_p: the p-norm of the refined difference can
  // drop below the integral gap (mass spreading), so the bracket is reported
  // as 0 there.
  const double lower = metric == dist_metric::lp ? 0.0 : integral_lower_bound(w1, w2);

  if (opt.mode == dist_mode::forced_identity) {
    // no extension: identity coupling on matching block structures
    if (w1.block_count() != w2.block_count())
      throw graphon_error(errc::mode_unsupported, "identity mode requires equal block counts");
    for (std::size_t i = 0; i < w1.block_count(); ++i)
      if (std::abs(w1.weight(i) - w2.weight(i)) > 1e-12 * std::max(1.0, w1.weight(i)))
        throw graphon_error(errc::mode_unsupported, "identity mode requires equal weights");
    Coupling id = identity_coupling(w1.weights());
    auto ev = detail::coupling_objective(w1, w2, id, metric, p, opt.seed);
    MetricEstimate est;
    est.value = ev.value;
    est.lower = lower;
    est.coupling = std::move(id);
    est.kind = ev.certified ? estimate_kind::upper : estimate_kind::bracket;
    est.method = "identity";
    if (est.value <= est.lower + 1e-12 && est.kind == estimate_kind::upper)
      est.kind = estimate_kind::exact;
    return est;
  }

  auto [e1, e2, common] = equalize_masses(w1, w2);
  (void)common;

  std::optional<MetricEstimate> perm, alt;
  if (opt.mode == dist_mode::permutation_exhaustive || opt.mode == dist_mode::both) {
    bool applicable = true;
    if (opt.mode == dist_mode::both) {
      double u1 = 0.0, u2 = 0.0;
      applicable = detail::uniform_weight(w1, u1) && detail::uniform_weight(w2, u2) &&
                   (w1.block_count() == 0 || w2.block_count() == 0 ||
                    std::abs(u1 - u2) <= 1e-12 * std::max(1.0, u1)) &&
                   w1.block_count() + w2.block_count() <= kPermutationBlockCap;
    }
    if (applicable) perm = detail::permutation_exhaustive(w1, w2, metric, p);
  }
  if (opt.mode == dist_mode::alternating_lp || opt.mode == dist_mode::both) {
    distance_options o = opt;
    if (perm)  // hand the LP the best permutation, folded onto the extended shape
      o.extra_starts.push_back(detail::aggregate_to_extension(
          perm->coupling, w1.block_count(), w2.block_count(), e1, e2));
    alt = detail::alternating_lp(e1, e2, metric, p, o);
  }

  MetricEstimate est;
  if (perm && (!alt || perm->value <= alt->value))
    est = std::move(*perm);
  else
    est = std::move(*alt);
  est.lower = lower;
  if (est.value < est.lower) est.value = est.lower;  // bracket closed up to roundoff
  if (est.value <= est.lower + 1e-12 && est.kind != estimate_kind::bracket)
    est.kind = estimate_kind::exact;
  if (metric == dist_metric::lp && opt.allow_signed) est.method += " NONMETRIC";
  return est;
}

}  // namespace detail

inline MetricEstimate cut_distance(const StepGraphon& w1, const StepGraphon& w2,
                                   const distance_options& opt = {}) {
  return detail::distance_impl(w1, w2, dist_metric::cut, 0.0, opt);
}

inline MetricEstimate delta_1(const StepGraphon& w1, const StepGraphon& w2,
                              const distance_options& opt = {}) {
  MetricEstimate est = detail::distance_impl(w1, w2, dist_metric::l1, 1.0, opt);
  // per-coupling sanity: the cut norm of the same refined difference can
  // never exceed its L1 norm
  if (est.coupling.rows > 0) {
    // extra rows/columns of the coupling are treated as zero blocks
    StepGraphon d = refine_difference(w1, w2, est.coupling);
    if (d.block_count() <= kExactBlocksDefault) {
      const double cut = cut_norm_exact(d).value;
      if (cut > est.value + 1e-9)
        throw std::logic_error("internal: cut norm exceeded L1 norm on a shared coupling");
    }
  }
  return est;
}

inline MetricEstimate delta_p(const StepGraphon& w1, const StepGraphon& w2, double p,
                              const distance_options& opt = {}) {
  return detail::distance_impl(w1, w2, dist_metric::lp, p, opt);
}

// delta^s: the chosen metric applied to the L1-normalized graphons.
inline MetricEstimate stretched_distance(const StepGraphon& w1, const StepGraphon& w2,
                                         dist_metric metric, double p = 2.0,
                                         const distance_options& opt = {}) {
  StepGraphon s1 = normalize(w1), s2 = normalize(w2);
  // Stretches of one another normalize to the same step graphon; when the
  // normalized forms coincide within the coupling tolerance the identity
  // coupling witnesses distance 0 and no optimization is needed.
  if (s1.block_count() == s2.block_count()) {
    bool same = s1.values() == s2.values();
    for (std::size_t i = 0; same && i < s1.block_count(); ++i)
      if (std::abs(s1.weight(i) - s2.weight(i)) > 1e-12 * std::max(1.0, s1.weight(i)))
        same = false;
    if (same) {
      MetricEstimate est;
      est.kind = estimate_kind::exact;
      est.coupling = identity_coupling(s1.weights());
      est.coupling.col_marginals = s2.weights();
      est.method = "canonical-identity";
      return est;
    }
  }
  switch (metric) {
    case dist_metric::cut: return cut_distance(s1, s2, opt);
    case dist_metric::l1: return delta_1(s1, s2, opt);
    case dist_metric::lp: return delta_p(s1, s2, p, opt);
  }
  throw graphon_error(errc::mode_unsupported, "unknown metric");
}

}  // namespace graphonkit
