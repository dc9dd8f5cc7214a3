#ifndef HYPERSPECTRA_SPECTRAL_HPP
#define HYPERSPECTRA_SPECTRAL_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "hyperspectra/errors.hpp"
#include "hyperspectra/hypergraph.hpp"

namespace hyperspectra {

/// (Ax)_i for the adjacency tensor of g.
///
/// The tensor has entry 1/(k-1)! on every ordering of an edge, so the (k-1)!
/// orderings of e \ {i} in the contraction collapse to one plain product:
/// (Ax)_i = sum over edges e containing i of prod_{j in e, j != i} x_j.
inline std::vector<double> apply_adjacency(const UniformHypergraph& g, std::span<const double> x) {
  if (x.size() != g.n()) {
    throw InputError("apply_adjacency: vector length " + std::to_string(x.size()) + " != n=" +
                     std::to_string(g.n()));
  }
  std::vector<double> y(g.n(), 0.0);
  for (const Edge& e : g.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      double p = 1.0;
      for (std::size_t j = 0; j < e.size(); ++j) {
        if (j != i) p *= x[e[j]];
      }
      y[e[i]] += p;
    }
  }
  return y;
}

struct EigenPair {
  double rho = 0.0;
  std::vector<double> x;
  double residual = 0.0;  // max_i |(Ax)_i - rho x_i^{k-1}|
  std::size_t iterations = 0;
  double lambda_min = 0.0;
  double lambda_max = 0.0;
  bool brackets_monotone = true;  // lambda_min never fell, lambda_max never rose
};

struct PowerOptions {
  double tol = 1e-10;
  std::size_t max_iter = 100000;
  // Per-iteration hook: (iteration, lambda_min, lambda_max).
  std::function<void(std::size_t, double, double)> observer;
};

/// Rounding slack allowed when asserting bracket monotonicity.
inline double bracket_slack(double lambda) { return 64.0 * std::numeric_limits<double>::epsilon() * lambda; }

/// Spectral radius and principal eigenvector by power iteration for
/// nonnegative tensors. Maintains the Collatz-Wielandt brackets
///   lambda_min = min_i (Ax)_i / x_i^{k-1},  lambda_max = max_i (Ax)_i / x_i^{k-1}
/// and stops once lambda_max - lambda_min <= tol. x is kept normalized to
/// sum x_i^k = 1 and rho is reported as the bracket midpoint.
inline EigenPair spectral_radius(const UniformHypergraph& g, const PowerOptions& opts = {}) {
  if (g.num_edges() == 0) throw InputError("spectral_radius: hypergraph has no edges");
  if (!is_connected(g)) throw InputError("spectral_radius: hypergraph is not connected");
  if (!(opts.tol > 0.0)) throw InputError("spectral_radius: tolerance must be positive");

  const std::size_t n = g.n();
  const int k = g.k();
  const double inv_k = 1.0 / static_cast<double>(k);
  const double inv_km1 = 1.0 / static_cast<double>(k - 1);

  auto normalize = [&](std::vector<double>& v) {
    double s = 0.0;
    for (double t : v) s += std::pow(t, k);
    const double scale = std::pow(s, inv_k);
    for (double& t : v) t /= scale;
  };

  EigenPair out;
  out.x.assign(n, 1.0);
  normalize(out.x);

  double prev_min = 0.0;
  double prev_max = std::numeric_limits<double>::infinity();
  for (std::size_t it = 0; it <= opts.max_iter; ++it) {
    std::vector<double> ax = apply_adjacency(g, out.x);
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double ratio = ax[i] / std::pow(out.x[i], k - 1);
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
    }
    if (lo < prev_min - bracket_slack(prev_min) || hi > prev_max + bracket_slack(hi)) {
      out.brackets_monotone = false;
    }
    prev_min = std::max(prev_min, lo);
    prev_max = std::min(prev_max, hi);
    if (opts.observer) opts.observer(it, lo, hi);
    out.lambda_min = lo;
    out.lambda_max = hi;
    out.iterations = it;
    if (hi - lo <= opts.tol) {
      out.rho = 0.5 * (lo + hi);
      double r = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        r = std::max(r, std::abs(ax[i] - out.rho * std::pow(out.x[i], k - 1)));
      }
      out.residual = r;
      return out;
    }
    if (it == opts.max_iter) break;
    for (std::size_t i = 0; i < n; ++i) out.x[i] = std::pow(ax[i], inv_km1);
    normalize(out.x);
  }
  throw ConvergenceError("spectral_radius: no convergence after " + std::to_string(opts.max_iter) +
                             " iterations (brackets " + std::to_string(out.lambda_min) + ", " +
                             std::to_string(out.lambda_max) + ")",
                         out.lambda_min, out.lambda_max);
}

inline EigenPair spectral_radius(const UniformHypergraph& g, double tol, std::size_t max_iter = 100000) {
  PowerOptions opts;
  opts.tol = tol;
  opts.max_iter = max_iter;
  return spectral_radius(g, opts);
}

}  // namespace hyperspectra

#endif  // HYPERSPECTRA_SPECTRAL_HPP
