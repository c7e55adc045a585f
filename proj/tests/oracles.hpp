#pragma once

// Independent reference computations for tests. Nothing here calls the
// Held-Karp table, the partition classes or the kernel dispatch.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "mdroute/generators.hpp"
#include "mdroute/metric.hpp"

namespace mdroute::oracle {

/// Plain-loop Euclidean / line / matrix distance.
inline double distance(const MetricSpace& s, const Point& a, const Point& b) {
  if (s.kind() == SpaceKind::explicit_matrix) return s.matrix()[a.index() * s.dim() + b.index()];
  double acc = 0.0;
  for (std::size_t d = 0; d < a.coords().size(); ++d) acc += (a.coords()[d] - b.coords()[d]) * (a.coords()[d] - b.coords()[d]);
  return std::sqrt(acc);
}

/// n! enumeration of depot-anchored tours.
inline double brute_force_tsp(const MetricSpace& s, const Point& depot, const std::vector<Point>& pts) {
  if (pts.empty()) return 0.0;
  std::vector<std::size_t> perm(pts.size());
  std::iota(perm.begin(), perm.end(), 0);
  double best = std::numeric_limits<double>::infinity();
  do {
    double len = distance(s, depot, pts[perm[0]]);
    for (std::size_t i = 1; i < perm.size(); ++i) len += distance(s, pts[perm[i - 1]], pts[perm[i]]);
    len += distance(s, pts[perm.back()], depot);
    best = std::min(best, len);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

/// m^n assignments, each scored with brute_force_tsp.
inline double brute_force_opt(const MetricSpace& s, const std::vector<Point>& depots, const std::vector<Point>& reqs) {
  const std::size_t m = depots.size();
  const std::size_t n = reqs.size();
  std::vector<std::size_t> a(n, 0);
  double best = std::numeric_limits<double>::infinity();
  while (true) {
    double total = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      std::vector<Point> mine;
      for (std::size_t j = 0; j < n; ++j) {
        if (a[j] == i) mine.push_back(reqs[j]);
      }
      total += brute_force_tsp(s, depots[i], mine);
    }
    best = std::min(best, total);
    std::size_t j = 0;
    while (j < n && ++a[j] == m) a[j++] = 0;
    if (j == n) break;
  }
  return best;
}

/// Level partition membership straight from the disk definitions, over
/// depots already padded to 2^k + 1 entries. Returns the virtual index.
inline std::size_t level_reference(const MetricSpace& s, const std::vector<Point>& x, double lambda, const Point& p) {
  const std::size_t top = x.size() - 1;
  std::size_t k = 0;
  while ((std::size_t{1} << k) < top) ++k;
  auto d = [&](const Point& a, const Point& b) { return distance(s, a, b); };
  auto in_tau = [&](std::size_t i) {
    if (i == 0) return true;
    if (i == top) return d(p, x[top]) <= lambda * d(x[0], x[top]) + 1e-9;
    std::size_t l = 0;
    while ((i >> l & 1) == 0) ++l;
    const std::size_t lo = i - (std::size_t{1} << l), hi = i + (std::size_t{1} << l);
    return d(p, x[lo]) <= d(x[lo], x[i]) + lambda * d(x[hi], x[i]) + 1e-9 &&
           d(p, x[hi]) <= d(x[hi], x[i]) + lambda * d(x[lo], x[i]) + 1e-9;
  };
  // Levels 0..k-1 are the odd multiples of 2^l, then {2^k}, then {0}.
  for (std::size_t l = 0; l < k; ++l) {
    for (std::size_t i = std::size_t{1} << l; i < top; i += std::size_t{2} << l) {
      if (in_tau(i)) return i;
    }
  }
  if (in_tau(top)) return top;
  return 0;
}

/// Shortest-path closure of a random complete graph on n nodes.
inline MetricSpace random_closure_metric(std::size_t n, Rng& rng) {
  std::vector<double> w(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) w[i * n + j] = w[j * n + i] = rng.uniform(0.5, 10.0);
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) w[i * n + j] = std::min(w[i * n + j], w[i * n + k] + w[k * n + j]);
    }
  }
  return MetricSpace::explicit_matrix(n, std::move(w));
}

}  // namespace mdroute::oracle
