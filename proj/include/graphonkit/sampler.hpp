#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "graphonkit/errors.hpp"
#include "graphonkit/graphon.hpp"
#include "graphonkit/metrics.hpp"
#include "graphonkit/ops.hpp"
#include "graphonkit/rng.hpp"

namespace graphonkit {

// Poisson random graph grown from a [0,1]-valued step graphon: vertices are
// points of a Poisson process with intensity Leb x mu on [0,t] x S, edges
// drawn independently with probability W(x_u, x_v). Off-support vertices are
// almost surely permanently isolated and never materialized.
struct SampledGraph {
  struct Vertex {
    double birth_time = 0.0;
    std::size_t block = 0;
  };
  std::vector<Vertex> vertices;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // u < v, lexicographic
  double t = 0.0;

  std::size_t vertex_count() const { return vertices.size(); }
  std::size_t edge_count() const { return edges.size(); }
};

inline SampledGraph sample_tilde_graph(const StepGraphon& w, double t, std::uint64_t seed) {
  if (!(t > 0.0)) throw graphon_error(errc::invalid_p, "time horizon t must be > 0");
  for (double v : w.values())
    if (v < 0.0 || v > 1.0)
      throw graphon_error(errc::value_out_of_range, "sampling requires values in [0,1]");
  if (!std::isfinite(w.support_mass()))
    throw graphon_error(errc::infinite_support, "support mass must be finite");

  SampledGraph g;
  g.t = t;
  const std::size_t k = w.block_count();
  for (std::size_t i = 0; i < k; ++i) {
    stream_rng rng(seed, {0x76657274ULL /* "vert" */, std::uint64_t(i)});
    const int count = rng.poisson(t * w.weight(i));
    for (int c = 0; c < count; ++c) g.vertices.push_back({t * rng.uniform(), i});
  }
  stream_rng edge_rng(seed, {0x65646765ULL /* "edge" */});
  const std::size_t n = g.vertices.size();
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) {
      const double p = w.value(g.vertices[u].block, g.vertices[v].block);
      if (edge_rng.bernoulli(p)) g.edges.emplace_back(u, v);
    }
  return g;
}

// Induced subgraph on the non-isolated vertices, order preserved; the edge
// set is unchanged up to relabeling.
inline SampledGraph drop_isolated(const SampledGraph& g) {
  std::vector<std::uint8_t> keep(g.vertices.size(), 0);
  for (const auto& [u, v] : g.edges) keep[u] = keep[v] = 1;
  std::vector<std::size_t> new_index(g.vertices.size(), 0);
  SampledGraph out;
  out.t = g.t;
  for (std::size_t i = 0; i < g.vertices.size(); ++i)
    if (keep[i]) {
      new_index[i] = out.vertices.size();
      out.vertices.push_back(g.vertices[i]);
    }
  out.edges.reserve(g.edges.size());
  for (const auto& [u, v] : g.edges) out.edges.emplace_back(new_index[u], new_index[v]);
  return out;
}

// Plain edge-list graph, the CLI text format: first line "n m", then m lines
// "u v" with 0-based endpoints.
struct EdgeListGraph {
  std::size_t n = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

enum class graphon_mode { probability, counting };

// W_G on n uniform blocks: PROBABILITY puts each vertex mass 1/n on a
// probability space, COUNTING puts each vertex mass 1 with the counting
// measure on an infinite ambient space. Values are the 0/1 adjacency.
inline StepGraphon graph_to_graphon(const EdgeListGraph& g, graphon_mode mode) {
  const std::size_t n = g.n;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  std::vector<double> values(n * n, 0.0);
  for (auto [u, v] : g.edges) {
    if (u >= n || v >= n)
      throw graphon_error(errc::parse_error, "edge endpoint out of range");
    if (u == v) throw graphon_error(errc::self_loop, "self-loop in graph");
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second)
      throw graphon_error(errc::duplicate_edge, "duplicate edge in graph");
    values[u * n + v] = values[v * n + u] = 1.0;
  }
  if (n == 0) return StepGraphon();
  const double unit = mode == graphon_mode::probability ? 1.0 / static_cast<double>(n) : 1.0;
  const double ambient = mode == graphon_mode::probability ? 1.0 : kInfiniteMass;
  return StepGraphon(std::vector<double>(n, unit), std::move(values), ambient);
}

inline EdgeListGraph to_edge_list(const SampledGraph& g) {
  return {g.vertices.size(), g.edges};
}

// --- time-stretch invariance check -------------------------------------
//
// The processes tilde G_t(W^(u)) and tilde G_{sqrt(u) t}(W) have the same
// distribution. Compares vertex- and edge-count samples from the two
// parameterizations with a two-sample Kolmogorov-Smirnov test.
struct InvarianceReport {
  double ks_vertex = 0.0, ks_edge = 0.0;
  double threshold = 0.0;  // KS rejection threshold at the chosen level
  double mean_vertex_a = 0.0, mean_vertex_b = 0.0;
  double mean_edge_a = 0.0, mean_edge_b = 0.0;
  bool pass = true;
};

namespace detail {

// sup_x |F1(x) - F2(x)| for two integer samples
inline double ks_statistic(std::vector<double> a, std::vector<double> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  double d = 0.0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= x) ++i;
    while (j < b.size() && b[j] <= x) ++j;
    const double f1 = static_cast<double>(i) / static_cast<double>(a.size());
    const double f2 = static_cast<double>(j) / static_cast<double>(b.size());
    d = std::max(d, std::abs(f1 - f2));
  }
  return d;
}

}  // namespace detail

inline InvarianceReport stretch_time_invariance_check(const StepGraphon& w, double u, double t,
                                                      int runs, std::uint64_t seed,
                                                      double alpha = 0.01) {
  if (runs < 2) throw graphon_error(errc::invalid_p, "need at least 2 runs");
  const StepGraphon wu = stretch(w, u);
  const double t2 = std::sqrt(u) * t;
  std::vector<double> va, vb, ea, eb;
  va.reserve(runs);
  for (int r = 0; r < runs; ++r) {
    const auto ga = sample_tilde_graph(wu, t, stream_rng::derive(seed, {0xA, std::uint64_t(r)}));
    const auto gb = sample_tilde_graph(w, t2, stream_rng::derive(seed, {0xB, std::uint64_t(r)}));
    va.push_back(static_cast<double>(ga.vertex_count()));
    vb.push_back(static_cast<double>(gb.vertex_count()));
    ea.push_back(static_cast<double>(ga.edge_count()));
    eb.push_back(static_cast<double>(gb.edge_count()));
  }
  InvarianceReport rep;
  auto mean = [](const std::vector<double>& x) {
    double s = 0.0;
    for (double v : x) s += v;
    return s / static_cast<double>(x.size());
  };
  rep.mean_vertex_a = mean(va);
  rep.mean_vertex_b = mean(vb);
  rep.mean_edge_a = mean(ea);
  rep.mean_edge_b = mean(eb);
  rep.ks_vertex = detail::ks_statistic(va, vb);
  rep.ks_edge = detail::ks_statistic(ea, eb);
  // two-sample KS: reject when D > c(alpha) * sqrt((n+m)/(n m)); for
  // discrete data the test is conservative
  const double c = std::sqrt(-std::log(alpha / 2.0) / 2.0);
  const double nm = static_cast<double>(runs);
  rep.threshold = c * std::sqrt((nm + nm) / (nm * nm));
  rep.pass = rep.ks_vertex <= rep.threshold && rep.ks_edge <= rep.threshold;
  return rep;
}

// --- empirical convergence experiment ----------------------------------

inline constexpr std::size_t kCoarsenBlocks = 12;

namespace detail {

// check W_{G_t} (counting measure) coarsened by grouping vertices by the
// block that generated them (further merged to <= max_blocks groups when
// the graphon has more blocks); values are adjacency averages over groups.
inline StepGraphon coarsened_counting_graphon(const SampledGraph& g, std::size_t source_blocks,
                                              std::size_t max_blocks = kCoarsenBlocks) {
  const std::size_t groups_wanted = std::min(std::max<std::size_t>(source_blocks, 1), max_blocks);
  auto group_of = [&](std::size_t block) {
    return source_blocks <= max_blocks ? block : block * groups_wanted / source_blocks;
  };
  std::vector<double> count(groups_wanted, 0.0);
  for (const auto& v : g.vertices) count[group_of(v.block)] += 1.0;
  std::vector<std::size_t> dense(groups_wanted, 0);
  std::vector<double> weights;
  for (std::size_t gi = 0; gi < groups_wanted; ++gi)
    if (count[gi] > 0.0) {
      dense[gi] = weights.size();
      weights.push_back(count[gi]);
    }
  const std::size_t k = weights.size();
  std::vector<double> values(k * k, 0.0);
  for (const auto& [u, v] : g.edges) {
    const std::size_t a = dense[group_of(g.vertices[u].block)];
    const std::size_t b = dense[group_of(g.vertices[v].block)];
    values[a * k + b] += 1.0;
    values[b * k + a] += 1.0;
  }
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) values[a * k + b] /= weights[a] * weights[b];
  return StepGraphon(std::move(weights), std::move(values), kInfiniteMass);
}

}  // namespace detail

struct ConvergencePoint {
  double t = 0.0;
  std::vector<double> estimates;  // one stretched-distance estimate per run
  double median = 0.0;
};

// For each horizon t: sample G_t, coarsen check W_{G_t}, and report the
// stretched cut-distance estimate to W (an upper bound of unquantified
// looseness; the experiment checks a trend, not a rate).
inline std::vector<ConvergencePoint> convergence_series(const StepGraphon& w,
                                                        const std::vector<double>& t_grid,
                                                        int runs, std::uint64_t seed,
                                                        int threads = 1) {
  if (t_grid.size() < 2) throw graphon_error(errc::invalid_p, "need at least 2 grid points");
  for (std::size_t i = 1; i < t_grid.size(); ++i)
    if (!(t_grid[i] > t_grid[i - 1]))
      throw graphon_error(errc::invalid_p, "t_grid must be strictly increasing");
  if (runs < 1) throw graphon_error(errc::invalid_p, "need at least 1 run");

  std::vector<ConvergencePoint> series;
  distance_options opt;
  opt.mode = dist_mode::alternating_lp;
  opt.restarts = 4;
  opt.threads = threads;
  for (std::size_t ti = 0; ti < t_grid.size(); ++ti) {
    ConvergencePoint pt;
    pt.t = t_grid[ti];
    for (int r = 0; r < runs; ++r) {
      const std::uint64_t run_seed = stream_rng::derive(seed, {ti, std::uint64_t(r)});
      const SampledGraph g = drop_isolated(sample_tilde_graph(w, pt.t, run_seed));
      double est = 0.0;
      if (g.vertex_count() == 0) {
        // empty sample: distance between normalize(0) and normalize(W)
        est = stretched_distance(StepGraphon(), w, dist_metric::cut, 2.0, opt).value;
      } else {
        const StepGraphon coarse = detail::coarsened_counting_graphon(g, w.block_count());
        opt.seed = run_seed;
        est = stretched_distance(coarse, w, dist_metric::cut, 2.0, opt).value;
      }
      pt.estimates.push_back(est);
    }
    std::vector<double> sorted = pt.estimates;
    std::sort(sorted.begin(), sorted.end());
    const std::size_t n = sorted.size();
    pt.median = n % 2 ? sorted[n / 2] : 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);
    series.push_back(std::move(pt));
  }
  return series;
}

}  // namespace graphonkit
