#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "mdroute/metric.hpp"

namespace mdroute {

/// Closed tour depot -> requests[order[0]] -> ... -> requests[order.back()] -> depot.
struct Tour {
  Point depot;
  std::vector<std::size_t> order;
  double length = 0.0;
};

struct TspOptions {
  /// Largest request count accepted by the exact oracle.
  std::size_t exact_cap = 16;
  /// 2-opt sweep limit for the heuristic.
  std::size_t max_sweeps = 10000;
};

/// Pairwise distances between the depot (node 0) and the requests (nodes 1..n).
class DistanceMatrix {
 public:
  DistanceMatrix(const MetricSpace& space, const Point& depot, std::span<const Point> requests);

  std::size_t nodes() const noexcept { return nodes_; }
  double operator()(std::size_t a, std::size_t b) const noexcept { return d_[a * nodes_ + b]; }
  std::span<const double> row(std::size_t a) const noexcept { return {d_.data() + a * nodes_, nodes_}; }

 private:
  std::size_t nodes_;
  std::vector<double> d_;
};

/// Held-Karp table over a request list: for every subset S (bitmask) and
/// every j in S, the shortest depot-anchored path covering S that ends at j.
/// One build answers TSP lengths for all 2^n subsets.
class SubsetTourTable {
 public:
  /// Throws CapacityError when requests.size() > exact_cap.
  SubsetTourTable(const MetricSpace& space, const Point& depot, std::span<const Point> requests,
                  std::size_t exact_cap = TspOptions{}.exact_cap);

  std::size_t size() const noexcept { return n_; }
  /// Optimal closed-tour length over the requests in `mask`; 0 for the empty set.
  double tour_length(std::uint32_t mask) const;
  /// Lexicographically smallest visit order among optimal tours of `mask`
  /// (ties within kGeomTol). Indices refer to the full request list.
  std::vector<std::size_t> tour_order(std::uint32_t mask) const;

 private:
  double path(std::uint32_t mask, std::size_t end) const noexcept { return path_[std::size_t{mask} * n_ + end]; }

  std::size_t n_;
  std::vector<double> from_depot_;
  std::vector<double> between_;  // n x n
  std::vector<double> path_;     // 2^n x n, +inf off-support
  std::vector<double> closed_;   // 2^n
};

/// Exact depot-anchored TSP (Held-Karp). Ties go to the lexicographically
/// smallest visit order.
Tour tsp_exact(const MetricSpace& space, const Point& depot, std::span<const Point> requests,
               const TspOptions& options = {});

/// Nearest neighbour construction then first-improvement 2-opt.
Tour tsp_heuristic(const MetricSpace& space, const Point& depot, std::span<const Point> requests,
                   const TspOptions& options = {});

/// Recomputes a tour's length from scratch; InputError on a bad index.
double tour_length(const MetricSpace& space, const Tour& tour, std::span<const Point> requests);

}  // namespace mdroute
