#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "graphonkit/errors.hpp"

namespace graphonkit {

// Expander-mixing certificate: for a simple graph G on N vertices viewed as
// a graphon on N uniform blocks of total mass 1, every block-subset integral
// of W_G - p is bounded by |x^T (A - pJ) y| / N^2 <= ||A - pJ||_2 * N / N^2,
// so ||W_G - p||_cut <= lambda_max / N with lambda_max the largest absolute
// eigenvalue of A - pJ. Certified upper bound without 2^N enumeration.
inline double mixing_certificate(const std::vector<std::uint8_t>& adjacency, std::size_t n,
                                 double p) {
  if (adjacency.size() != n * n)
    throw graphon_error(errc::not_symmetric, "adjacency must be n x n");
  if (!(p >= 0.0 && p <= 1.0)) throw graphon_error(errc::bad_density, "p must lie in [0,1]");
  for (std::size_t i = 0; i < n; ++i) {
    if (adjacency[i * n + i] != 0)
      throw graphon_error(errc::not_symmetric, "adjacency must have zero diagonal");
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::uint8_t a = adjacency[i * n + j], b = adjacency[j * n + i];
      if (a != b) throw graphon_error(errc::not_symmetric, "adjacency must be symmetric");
      if (a > 1) throw graphon_error(errc::not_symmetric, "adjacency must be 0/1");
    }
  }
  if (n == 0) return 0.0;
  Eigen::MatrixXd m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          static_cast<double>(adjacency[i * n + j]) - p;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  double lambda = 0.0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) lambda = std::max(lambda, std::abs(ev[i]));
  return lambda / static_cast<double>(n);
}

// Same bound for an arbitrary symmetric deviation matrix D on N uniform
// blocks of total mass 1: cut norm <= ||D||_2 / N.
inline double spectral_cut_bound(const std::vector<double>& d, std::size_t n) {
  if (n == 0) return 0.0;
  Eigen::MatrixXd m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = d[i * n + j];
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  double lambda = 0.0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) lambda = std::max(lambda, std::abs(ev[i]));
  return lambda / static_cast<double>(n);
}

}  // namespace graphonkit
