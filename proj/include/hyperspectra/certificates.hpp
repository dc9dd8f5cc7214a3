#ifndef HYPERSPECTRA_CERTIFICATES_HPP
#define HYPERSPECTRA_CERTIFICATES_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "hyperspectra/bisection.hpp"
#include "hyperspectra/errors.hpp"
#include "hyperspectra/families.hpp"
#include "hyperspectra/hypergraph.hpp"

namespace hyperspectra {

/// |V| x |E| weights, positive exactly on incidences. Stored per edge in the
/// host's sorted vertex order; unset incidences hold NaN.
class WeightedIncidenceMatrix {
 public:
  explicit WeightedIncidenceMatrix(UniformHypergraph host) : host_(std::move(host)) {
    weights_.resize(host_.num_edges());
    for (EdgeIndex e = 0; e < host_.num_edges(); ++e) {
      weights_[e].assign(host_.edge(e).size(), std::numeric_limits<double>::quiet_NaN());
    }
  }

  const UniformHypergraph& host() const noexcept { return host_; }

  void set(Vertex v, EdgeIndex e, double w) {
    if (!(w > 0.0) || !std::isfinite(w)) {
      throw InputError("incidence weight must be positive and finite, got " + std::to_string(w));
    }
    weights_.at(e)[slot(v, e)] = w;
  }

  /// B(v, e); zero when v is not in e.
  double at(Vertex v, EdgeIndex e) const {
    const Edge& ed = host_.edge(e);
    auto it = std::lower_bound(ed.begin(), ed.end(), v);
    if (it == ed.end() || *it != v) return 0.0;
    return weights_[e][static_cast<std::size_t>(it - ed.begin())];
  }

  bool complete() const {
    for (const auto& row : weights_) {
      for (double w : row) {
        if (std::isnan(w)) return false;
      }
    }
    return true;
  }

  double vertex_sum(Vertex v) const {
    double s = 0.0;
    for (EdgeIndex e : host_.incident(v)) s += at(v, e);
    return s;
  }

  double edge_product(EdgeIndex e) const {
    double p = 1.0;
    for (double w : weights_.at(e)) p *= w;
    return p;
  }

  /// (v, e, w) for every incidence, sorted by (v, e).
  std::vector<std::tuple<Vertex, EdgeIndex, double>> entries() const {
    std::vector<std::tuple<Vertex, EdgeIndex, double>> out;
    for (Vertex v = 0; v < host_.n(); ++v) {
      for (EdgeIndex e : host_.incident(v)) out.emplace_back(v, e, at(v, e));
    }
    return out;
  }

 private:
  std::size_t slot(Vertex v, EdgeIndex e) const {
    const Edge& ed = host_.edge(e);
    auto it = std::lower_bound(ed.begin(), ed.end(), v);
    if (it == ed.end() || *it != v) {
      throw InputError("vertex " + std::to_string(v) + " is not incident with edge " + std::to_string(e));
    }
    return static_cast<std::size_t>(it - ed.begin());
  }

  UniformHypergraph host_;
  std::vector<std::vector<double>> weights_;
};

/// Every vertex sum is 1 and every edge product is alpha, within tol.
inline bool check_alpha_normal(const WeightedIncidenceMatrix& b, double alpha, double tol) {
  if (!b.complete()) return false;
  const auto& g = b.host();
  for (Vertex v = 0; v < g.n(); ++v) {
    if (std::abs(b.vertex_sum(v) - 1.0) > tol) return false;
  }
  for (EdgeIndex e = 0; e < g.num_edges(); ++e) {
    if (std::abs(b.edge_product(e) - alpha) > tol) return false;
  }
  return true;
}

/// Product of B(v_i, e_i) / B(v_{i-1}, e_i) around the unique incidence cycle
/// equals 1. The C_2 incidence cycle u1 e1 u2 e2 u1 counts as a cycle here.
inline bool check_consistency(const WeightedIncidenceMatrix& b, double tol) {
  const auto cycle = unique_cycle(b.host());
  if (!cycle) return true;
  const std::size_t l = cycle->length();
  double product = 1.0;
  for (std::size_t i = 0; i < l; ++i) {
    const Vertex prev = cycle->vertices[i];
    const Vertex next = cycle->vertices[(i + 1) % l];
    const EdgeIndex e = cycle->edges[i];
    product *= b.at(next, e) / b.at(prev, e);
  }
  return std::abs(product - 1.0) <= tol;
}

enum class Subnormality { NotSubnormal, Subnormal, StrictlySubnormal };

inline std::string to_string(Subnormality s) {
  switch (s) {
    case Subnormality::NotSubnormal: return "not-subnormal";
    case Subnormality::Subnormal: return "subnormal";
    case Subnormality::StrictlySubnormal: return "strictly-subnormal";
  }
  return "?";
}

/// Vertex sums <= 1 and edge products >= alpha (within tol). Strict when at
/// least one of those inequalities holds by more than tol.
inline Subnormality check_alpha_subnormal(const WeightedIncidenceMatrix& b, double alpha, double tol) {
  if (!b.complete()) return Subnormality::NotSubnormal;
  const auto& g = b.host();
  bool strict = false;
  for (Vertex v = 0; v < g.n(); ++v) {
    const double s = b.vertex_sum(v);
    if (s > 1.0 + tol) return Subnormality::NotSubnormal;
    if (s < 1.0 - tol) strict = true;
  }
  for (EdgeIndex e = 0; e < g.num_edges(); ++e) {
    const double p = b.edge_product(e);
    if (p < alpha - tol) return Subnormality::NotSubnormal;
    if (p > alpha + tol) strict = true;
  }
  return strict ? Subnormality::StrictlySubnormal : Subnormality::Subnormal;
}

/// rho = alpha^{-1/k} for a consistently alpha-normal connected hypergraph.
inline double rho_from_alpha(double alpha, int k) {
  if (!(alpha > 0.0) || alpha > 1.0) throw InputError("rho_from_alpha: alpha must lie in (0, 1]");
  if (k < 2) throw InputError("rho_from_alpha: k must be at least 2");
  return std::pow(alpha, -1.0 / static_cast<double>(k));
}

struct WeightOverride {
  std::string vertex;
  std::string edge;
  double value;
};

/// The shared weight table used by every certificate:
///   explicit override for (vertex, edge)                 -> given value
///   hub vertex on a star branch g<i>                     -> alpha / (1-alpha)^{k-1}
///   core vertex                                          -> 1
///   attachment vertex of a pendent edge                  -> alpha
///   degree-2 vertex on a non-pendent edge                -> 1 - alpha
/// Incidences not covered by any rule are an error.
inline WeightedIncidenceMatrix assign_weights(const LabeledHypergraph& h, double alpha, const std::string& hub,
                                              const std::vector<WeightOverride>& overrides) {
  const auto& g = h.graph;
  const int k = g.k();
  WeightedIncidenceMatrix b(g);
  std::map<std::pair<Vertex, EdgeIndex>, double> fixed;
  for (const auto& o : overrides) fixed[{h.vertex(o.vertex), h.edge(o.edge)}] = o.value;
  const Vertex no_hub = std::numeric_limits<Vertex>::max();
  const Vertex hub_vertex = hub.empty() ? no_hub : h.vertex(hub);
  const double star_weight = alpha / std::pow(1.0 - alpha, k - 1);
  for (const auto& [ename, e] : h.edge_labels) {
    const bool star_edge = ename.size() > 1 && ename[0] == 'g' &&
                           std::all_of(ename.begin() + 1, ename.end(), [](char c) { return c >= '0' && c <= '9'; });
    const bool pendent = is_pendent_edge(g, e);
    for (Vertex v : g.edge(e)) {
      double w;
      if (auto it = fixed.find({v, e}); it != fixed.end()) {
        w = it->second;
      } else if (star_edge && v == hub_vertex) {
        w = star_weight;
      } else if (g.degree(v) == 1) {
        w = 1.0;
      } else if (pendent) {
        w = alpha;
      } else if (g.degree(v) == 2) {
        w = 1.0 - alpha;
      } else {
        throw SolverError("no weight rule for vertex '" + h.vertex_names[v] + "' on edge '" + ename + "'");
      }
      b.set(v, e, w);
    }
  }
  return b;
}

struct CertificateTolerances {
  double alpha = 1e-13;  // bisection width on alpha
  double check = 1e-10;  // alpha-normal / consistency self-check
};

/// A solved consistent alpha-normal certificate for one of A, D, L, I.
struct CertificateSolution {
  Family family;
  int m;
  int k;
  double alpha;
  double rho;
  std::vector<std::pair<std::string, double>> params;
  LabeledHypergraph host;
  WeightedIncidenceMatrix matrix;
  double max_equation_residual;

  double param(std::string_view name) const {
    for (const auto& [n, v] : params) {
      if (n == name) return v;
    }
    throw InputError("no parameter '" + std::string(name) + "'");
  }
};

namespace detail {

inline constexpr double kAlphaLo = 1e-9;
inline constexpr double kAlphaHi = 1.0 - 1e-9;

inline double star_weight(double alpha, int k) { return alpha / std::pow(1.0 - alpha, k - 1); }

struct ASystem {
  double x0, y0, c0, d0;
  bool feasible;
};

// Inner solve of y0 + alpha + d0 = 1, the v3 vertex sum and the cycle ratio
// equation for fixed alpha. d0 ranges over (alpha / (K (1-alpha)), 1 - alpha)
// where K = (1-alpha)^{k-2}; the ratio residual is increasing there.
inline ASystem solve_a_inner(double alpha, int k) {
  const double K = std::pow(1.0 - alpha, k - 2);
  const double lower = alpha / (K * (1.0 - alpha));
  const double upper = 1.0 - alpha;
  if (!(lower < upper)) return {0, 0, 0, 0, false};
  auto pieces = [&](double d0) {
    const double y0 = 1.0 - alpha - d0;
    const double x0 = alpha / (y0 * K);
    const double c0 = alpha / (K * (1.0 - alpha - alpha / (d0 * K)));
    return ASystem{x0, y0, c0, d0, true};
  };
  auto ratio = [&](double d0) {
    const ASystem s = pieces(d0);
    return s.x0 * d0 * d0 - s.y0 * s.c0 * s.c0;
  };
  const double d0 = bisect(ratio, lower, upper, 0.0, "A inner system");
  return pieces(d0);
}

inline double a_residual(double alpha, int m, int k) {
  const ASystem s = solve_a_inner(alpha, k);
  if (!s.feasible) return std::numeric_limits<double>::infinity();
  return s.x0 + alpha + s.c0 + (m - 3) * star_weight(alpha, k) - 1.0;
}

inline double d_residual(double alpha, int m, int k) {
  const double c1 = std::sqrt(alpha);
  const double y2 = 1.0 - c1;
  const double x2 = alpha / (y2 * std::pow(1.0 - alpha, k - 2));
  return 2.0 * x2 + alpha + (m - 2) * star_weight(alpha, k) - 1.0;
}

inline double l_residual(double alpha, int m, int k) {
  const double x4 = 2.0 * alpha / std::pow(1.0 - alpha, k - 1);
  return 2.0 * x4 + alpha + (m - 2) * star_weight(alpha, k) - 1.0;
}

struct ISystem {
  double x6, y6, c3, d3, b;
};

inline ISystem i_chain(double alpha, int k) {
  const double root = std::pow(1.0 - alpha, 0.5 * k - 1.0);
  const double d3 = root / (1.0 + root);
  const double y6 = 1.0 / (1.0 + root);
  const double b = alpha / (d3 * d3);
  return {b * y6, y6, b * d3, d3, b};
}

inline double i_residual(double alpha, int m, int k) {
  return (m - 1) * star_weight(alpha, k) - (1.0 - i_chain(alpha, k).b);
}

inline void require_m(Family f, int m, int k) {
  if (k < 3) throw InputError("certificates require k >= 3");
  int lo = 0;
  switch (f) {
    case Family::A: lo = 3; break;
    case Family::D:
    case Family::L: lo = 2; break;
    case Family::I: lo = 1; break;
    default: throw InputError("family " + to_string(f) + " has no normal certificate");
  }
  if (m < lo) {
    throw InputError("family " + to_string(f) + " requires m >= " + std::to_string(lo) + ", got " +
                     std::to_string(m));
  }
}

inline double max_abs(std::initializer_list<double> xs) {
  double r = 0.0;
  for (double x : xs) r = std::max(r, std::abs(x));
  return r;
}

}  // namespace detail

/// Solves the family's certificate system for alpha by bisection on a single
/// scalar residual, assembles the full weighted incidence matrix and
/// self-checks it (alpha-normal and consistent). Throws SolverError if the
/// check fails.
inline CertificateSolution solve_certificate(Family family, int m, int k, const CertificateTolerances& tol = {}) {
  detail::require_m(family, m, k);
  auto residual = [&](double a) {
    switch (family) {
      case Family::A: return detail::a_residual(a, m, k);
      case Family::D: return detail::d_residual(a, m, k);
      case Family::L: return detail::l_residual(a, m, k);
      default: return detail::i_residual(a, m, k);
    }
  };
  const double alpha =
      bisect(residual, detail::kAlphaLo, detail::kAlphaHi, tol.alpha, "certificate " + to_string(family));
  const double K = std::pow(1.0 - alpha, k - 2);
  const double T = detail::star_weight(alpha, k);
  LabeledHypergraph host = build_family(family, m, k);
  std::vector<std::pair<std::string, double>> params;
  std::vector<WeightOverride> ov;
  std::string hub;
  double eq_residual = 0.0;

  switch (family) {
    case Family::A: {
      const auto s = detail::solve_a_inner(alpha, k);
      if (!s.feasible) throw SolverError("certificate A: alpha left the feasible region");
      params = {{"x0", s.x0}, {"y0", s.y0}, {"c0", s.c0}, {"d0", s.d0}};
      const double v3e3 = alpha / (s.c0 * K);
      const double v3e2 = alpha / (s.d0 * K);
      ov = {{"v1", "e1", s.x0}, {"v2", "e1", s.y0}, {"v1", "e3", s.c0},
            {"v2", "e2", s.d0}, {"v3", "e3", v3e3}, {"v3", "e2", v3e2}};
      hub = "v1";
      eq_residual = detail::max_abs({s.x0 + alpha + s.c0 + (m - 3) * T - 1.0, s.y0 + alpha + s.d0 - 1.0,
                                     v3e3 + v3e2 + alpha - 1.0, s.x0 * s.y0 * K - alpha,
                                     (s.x0 / s.y0) * (s.d0 * s.d0) / (s.c0 * s.c0) - 1.0});
      break;
    }
    case Family::D: {
      const double c1 = std::sqrt(alpha);
      const double y2 = 1.0 - c1;
      const double x2 = alpha / (y2 * K);
      params = {{"x2", x2}, {"y2", y2}, {"c1", c1}};
      ov = {{"v1", "e1", x2}, {"v1", "e3", x2}, {"v2", "e1", y2}, {"v3", "e3", y2}, {"v2", "e2", c1}, {"v3", "e2", c1}};
      hub = "v1";
      eq_residual = detail::max_abs(
          {y2 + c1 - 1.0, 2.0 * x2 + alpha + (m - 2) * T - 1.0, x2 * y2 * K - alpha, c1 * c1 - alpha});
      break;
    }
    case Family::L: {
      const double y4 = 0.5 * (1.0 - alpha);
      const double x4 = alpha / (y4 * K);
      params = {{"x4", x4}, {"y4", y4}};
      ov = {{"u1", "et1", x4}, {"u1", "et2", x4}, {"u2", "et1", y4}, {"u2", "et2", y4}};
      hub = "u1";
      eq_residual =
          detail::max_abs({2.0 * x4 + alpha + (m - 2) * T - 1.0, 2.0 * y4 + alpha - 1.0, x4 * y4 * K - alpha});
      break;
    }
    default: {
      const auto s = detail::i_chain(alpha, k);
      params = {{"x6", s.x6}, {"y6", s.y6}, {"c3", s.c3}, {"d3", s.d3}, {"b", s.b}};
      ov = {{"u1", "et2", s.x6}, {"u2", "et2", s.y6}, {"u1", "et1", s.c3}, {"u2", "et1", s.d3}};
      hub = "u1";
      eq_residual = detail::max_abs({s.x6 + s.c3 + (m - 1) * T - 1.0, s.y6 + s.d3 - 1.0, s.c3 * s.d3 - alpha,
                                     s.x6 * s.y6 * K - alpha, (s.x6 * s.d3) / (s.y6 * s.c3) - 1.0});
      break;
    }
  }
  for (const auto& [name, value] : params) {
    if (!(value > 0.0 && value < 1.0) && name != "b") {
      throw SolverError("certificate " + to_string(family) + ": parameter " + name + " = " +
                        std::to_string(value) + " outside (0, 1)");
    }
  }
  WeightedIncidenceMatrix matrix = assign_weights(host, alpha, hub, ov);
  if (!check_alpha_normal(matrix, alpha, tol.check)) {
    throw SolverError("certificate " + to_string(family) + ": solved matrix is not alpha-normal");
  }
  if (!check_consistency(matrix, tol.check)) {
    throw SolverError("certificate " + to_string(family) + ": solved matrix is not consistent");
  }
  return CertificateSolution{family,        m,     k,     alpha, rho_from_alpha(alpha, k), std::move(params),
                             std::move(host), std::move(matrix), eq_residual};
}

enum class WitnessPair { BUnderA, AUnderD, IUnderL, JUnderI };

inline std::string to_string(WitnessPair p) {
  switch (p) {
    case WitnessPair::BUnderA: return "B-under-A";
    case WitnessPair::AUnderD: return "A-under-D";
    case WitnessPair::IUnderL: return "I-under-L";
    case WitnessPair::JUnderI: return "J-under-I";
  }
  return "?";
}

inline WitnessPair parse_witness_pair(std::string_view s) {
  for (auto p : {WitnessPair::BUnderA, WitnessPair::AUnderD, WitnessPair::IUnderL, WitnessPair::JUnderI}) {
    if (to_string(p) == s) return p;
  }
  throw InputError("unknown witness pair '" + std::string(s) + "'");
}

/// Smallest m for which the pair's construction is claimed strictly subnormal.
inline int witness_min_m(WitnessPair p) {
  switch (p) {
    case WitnessPair::BUnderA: return 3;
    case WitnessPair::AUnderD: return 9;
    case WitnessPair::IUnderL:
    case WitnessPair::JUnderI: return 2;
  }
  return 0;
}

/// Comparator family (normal certificate) and dominated family of a pair.
inline std::pair<Family, Family> witness_families(WitnessPair p) {
  switch (p) {
    case WitnessPair::BUnderA: return {Family::A, Family::B};
    case WitnessPair::AUnderD: return {Family::D, Family::A};
    case WitnessPair::IUnderL: return {Family::L, Family::I};
    case WitnessPair::JUnderI: return {Family::I, Family::J};
  }
  return {Family::A, Family::B};
}

/// Weighted incidence matrix on the dominated family built from the
/// comparator's alpha, showing it strictly alpha-subnormal.
struct SubnormalWitness {
  WitnessPair pair;
  int m;
  int k;
  double alpha;
  std::vector<std::pair<std::string, double>> params;
  LabeledHypergraph host;
  WeightedIncidenceMatrix matrix;
  Subnormality status;
  double slack;
};

/// Builds the witness without checking strictness; the caller inspects
/// `status` and `slack`. Used to report pairs outside their proven range.
inline SubnormalWitness build_subnormal_witness(WitnessPair pair, int m, int k, const CertificateTolerances& tol = {}) {
  if (k < 3) throw InputError("witnesses require k >= 3");
  auto [comparator, dominated] = witness_families(pair);
  detail::require_m(comparator, m, k);
  if (m < min_size(dominated)) throw InputError("witness: m out of range for the dominated family");
  const CertificateSolution sol = solve_certificate(comparator, m, k, tol);
  const double alpha = sol.alpha;
  const double K = std::pow(1.0 - alpha, k - 2);
  const double T = detail::star_weight(alpha, k);
  LabeledHypergraph host = build_family(dominated, m, k);
  std::vector<std::pair<std::string, double>> params;
  std::vector<WeightOverride> ov;
  std::string hub;

  auto positive = [&](const char* name, double v) {
    if (!(v > 0.0)) {
      throw CertificateError("witness " + to_string(pair) + ": entry " + name + " = " + std::to_string(v) +
                             " is not positive");
    }
  };

  switch (pair) {
    case WitnessPair::BUnderA: {
      const double c0 = sol.param("c0"), d0 = sol.param("d0");
      const double x1 = 1.0 - c0 - (m - 2) * T;
      const double y1 = 1.0 - d0;
      positive("x1", x1);
      positive("y1", y1);
      params = {{"x1", x1}, {"y1", y1}, {"c0", c0}, {"d0", d0}};
      ov = {{"v1", "e1", x1}, {"v2", "e1", y1},         {"v1", "e3", c0},
            {"v2", "e2", d0}, {"v3", "e3", alpha / (c0 * K)}, {"v3", "e2", alpha / (d0 * K)}};
      hub = "v1";
      break;
    }
    case WitnessPair::AUnderD: {
      const double c2 = std::sqrt(alpha / K);
      const double y3 = 1.0 - alpha - c2;
      positive("y3", y3);
      const double x3 = alpha / (y3 * K);
      params = {{"x3", x3}, {"y3", y3}, {"c2", c2}};
      ov = {{"v1", "e1", x3}, {"v1", "e3", x3}, {"v2", "e1", y3}, {"v3", "e3", y3}, {"v2", "e2", c2}, {"v3", "e2", c2}};
      hub = "v1";
      break;
    }
    case WitnessPair::IUnderL: {
      const double x4 = sol.param("x4"), y4 = sol.param("y4");
      const double x5 = 1.0 - x4 - (m - 1) * T;
      const double y5 = 1.0 - y4;
      positive("x5", x5);
      params = {{"x4", x4}, {"y4", y4}, {"x5", x5}, {"y5", y5}};
      ov = {{"u1", "et1", x5}, {"u2", "et1", y5}, {"u1", "et2", x4}, {"u2", "et2", y4}};
      hub = "u1";
      break;
    }
    case WitnessPair::JUnderI: {
      const double c3 = sol.param("c3"), d3 = sol.param("d3");
      const double x7 = 1.0 - c3;
      const double y7 = 1.0 - d3;
      const double hub_share = 1.0 - alpha - (m - 1) * T;
      positive("x7", x7);
      positive("y7", y7);
      positive("B(u2_1, et2)", hub_share);
      params = {{"x7", x7}, {"y7", y7}, {"c3", c3}, {"d3", d3}, {"B(u2_1,et2)", hub_share}};
      ov = {{"u2", "et2", x7}, {"u1", "et2", y7}, {"u2", "et1", c3}, {"u1", "et1", d3}, {"u2_1", "et2", hub_share}};
      hub = "u2_1";
      break;
    }
  }
  WeightedIncidenceMatrix matrix = assign_weights(host, alpha, hub, ov);
  double slack = 0.0;
  switch (pair) {
    case WitnessPair::BUnderA: slack = matrix.edge_product(host.edge("e1")) - alpha; break;
    case WitnessPair::AUnderD: slack = 1.0 - matrix.vertex_sum(host.vertex("v1")); break;
    case WitnessPair::IUnderL: slack = matrix.edge_product(host.edge("et1")) - alpha; break;
    case WitnessPair::JUnderI: slack = matrix.edge_product(host.edge("et2")) - alpha; break;
  }
  const Subnormality status = check_alpha_subnormal(matrix, alpha, tol.check);
  return SubnormalWitness{pair, m, k, alpha, std::move(params), std::move(host), std::move(matrix), status, slack};
}

/// Builds the witness and requires it to be strictly subnormal with positive
/// slack; anything else is a CertificateError.
inline SubnormalWitness subnormal_witness(WitnessPair pair, int m, int k, const CertificateTolerances& tol = {}) {
  if (m < witness_min_m(pair)) {
    throw InputError("witness " + to_string(pair) + " requires m >= " + std::to_string(witness_min_m(pair)));
  }
  SubnormalWitness w = build_subnormal_witness(pair, m, k, tol);
  if (!(w.slack > 0.0)) {
    throw CertificateError("witness " + to_string(pair) + ": nonpositive slack " + std::to_string(w.slack));
  }
  if (w.status != Subnormality::StrictlySubnormal) {
    throw CertificateError("witness " + to_string(pair) + ": matrix is " + to_string(w.status));
  }
  return w;
}

}  // namespace hyperspectra

#endif  // HYPERSPECTRA_CERTIFICATES_HPP
