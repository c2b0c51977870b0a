#pragma once

// Shared test utilities: random instance generators and an independent
// brute-force cut-norm oracle in exact rational arithmetic.

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "graphonkit/graphonkit.hpp"

namespace gktest {

using rational = boost::multiprecision::cpp_rational;

// Naive cut norm: enumerate all 4^k (T, U) block-subset pairs and take the
// largest |sum_{i in T, j in U} w_i w_j V_ij|. Independent of the Gray-code
// kernel: nested loops, exact arithmetic, no incremental updates.
inline rational naive_cut_norm(const std::vector<rational>& weights,
                               const std::vector<rational>& values) {
  const std::size_t k = weights.size();
  rational best = 0;
  for (std::uint64_t tm = 0; tm < (std::uint64_t(1) << k); ++tm)
    for (std::uint64_t um = 0; um < (std::uint64_t(1) << k); ++um) {
      rational s = 0;
      for (std::size_t i = 0; i < k; ++i) {
        if (!((tm >> i) & 1)) continue;
        for (std::size_t j = 0; j < k; ++j) {
          if (!((um >> j) & 1)) continue;
          s += weights[i] * weights[j] * values[i * k + j];
        }
      }
      if (s < 0) s = -s;
      if (s > best) best = s;
    }
  return best;
}

// Random integer-valued step graphon: weights in {1..4}, values in {-5..5}.
inline graphonkit::StepGraphon random_integer_graphon(graphonkit::stream_rng& rng, std::size_t k) {
  std::vector<double> w(k), v(k * k);
  for (std::size_t i = 0; i < k; ++i) w[i] = 1.0 + static_cast<double>(rng.below(4));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) {
      const double x = static_cast<double>(rng.below(11)) - 5.0;
      v[i * k + j] = v[j * k + i] = x;
    }
  return graphonkit::StepGraphon(std::move(w), std::move(v), graphonkit::kInfiniteMass);
}

// Random real-valued step graphon; nonneg = true restricts values to [0, 2].
inline graphonkit::StepGraphon random_graphon(graphonkit::stream_rng& rng, std::size_t k,
                                              bool nonneg = false) {
  std::vector<double> w(k), v(k * k);
  for (std::size_t i = 0; i < k; ++i) w[i] = 0.25 + 2.0 * rng.uniform();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) {
      const double x = nonneg ? 2.0 * rng.uniform() : 4.0 * rng.uniform() - 2.0;
      v[i * k + j] = v[j * k + i] = x;
    }
  return graphonkit::StepGraphon(std::move(w), std::move(v), graphonkit::kInfiniteMass);
}

// Random graphon on k uniform blocks of the given unit mass.
inline graphonkit::StepGraphon random_uniform_graphon(graphonkit::stream_rng& rng, std::size_t k,
                                                      double unit, bool nonneg = false) {
  std::vector<double> v(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) {
      const double x = nonneg ? 2.0 * rng.uniform() : 4.0 * rng.uniform() - 2.0;
      v[i * k + j] = v[j * k + i] = x;
    }
  return graphonkit::StepGraphon(std::vector<double>(k, unit), std::move(v),
                                 graphonkit::kInfiniteMass);
}

// Random simple graph on n vertices with edge probability p.
inline graphonkit::EdgeListGraph random_graph(graphonkit::stream_rng& rng, std::size_t n,
                                              double p) {
  graphonkit::EdgeListGraph g;
  g.n = n;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (rng.bernoulli(p)) g.edges.emplace_back(u, v);
  return g;
}

}  // namespace gktest
