#include "mdroute/tsp.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>

#include "mdroute/error.hpp"
#include "mdroute/simd/kernels.hpp"

namespace mdroute {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

DistanceMatrix::DistanceMatrix(const MetricSpace& space, const Point& depot, std::span<const Point> requests)
    : nodes_(requests.size() + 1), d_(nodes_ * nodes_, 0.0) {
  auto node = [&](std::size_t a) -> const Point& { return a == 0 ? depot : requests[a - 1]; };
  space.check(depot);
  for (const auto& p : requests) space.check(p);

  if (space.kind() == SpaceKind::euclidean) {
    simd::PointBlock block(space.dim(), nodes_);
    for (std::size_t a = 0; a < nodes_; ++a) block.set(a, node(a).coords());
    std::vector<double> sq(nodes_);
    for (std::size_t a = 0; a < nodes_; ++a) {
      simd::squared_distances(node(a).coords(), block, sq);
      for (std::size_t b = 0; b < nodes_; ++b) d_[a * nodes_ + b] = std::sqrt(sq[b]);
    }
    return;
  }
  for (std::size_t a = 0; a < nodes_; ++a) {
    for (std::size_t b = 0; b < nodes_; ++b) d_[a * nodes_ + b] = space.dist(node(a), node(b));
  }
}

SubsetTourTable::SubsetTourTable(const MetricSpace& space, const Point& depot, std::span<const Point> requests,
                                 std::size_t exact_cap)
    : n_(requests.size()) {
  if (n_ > exact_cap || n_ > 24) {
    throw CapacityError("exact TSP limited to " + std::to_string(std::min<std::size_t>(exact_cap, 24)) +
                        " requests, got " + std::to_string(n_) + "; use the heuristic oracle");
  }
  const DistanceMatrix dm(space, depot, requests);
  from_depot_.resize(n_);
  between_.resize(n_ * n_);
  for (std::size_t a = 0; a < n_; ++a) {
    from_depot_[a] = dm(0, a + 1);
    for (std::size_t b = 0; b < n_; ++b) between_[a * n_ + b] = dm(a + 1, b + 1);
  }

  const std::size_t subsets = std::size_t{1} << n_;
  path_.assign(subsets * n_, kInf);
  closed_.assign(subsets, 0.0);
  if (n_ == 0) return;

  const auto& kernels = simd::active();
  for (std::size_t j = 0; j < n_; ++j) path_[(std::size_t{1} << j) * n_ + j] = from_depot_[j];
  for (std::size_t s = 1; s < subsets; ++s) {
    double* row = path_.data() + s * n_;
    if (std::popcount(s) >= 2) {
      for (std::size_t j = 0; j < n_; ++j) {
        if (!(s >> j & 1)) continue;
        const std::size_t prev = s ^ (std::size_t{1} << j);
        row[j] = kernels.min_plus(path_.data() + prev * n_, between_.data() + j * n_, n_);
      }
    }
    closed_[s] = kernels.min_plus(row, from_depot_.data(), n_);
  }
}

double SubsetTourTable::tour_length(std::uint32_t mask) const {
  if (n_ < 32 && (mask >> n_) != 0) throw InputError("subset mask out of range");
  return closed_[mask];
}

std::vector<std::size_t> SubsetTourTable::tour_order(std::uint32_t mask) const {
  std::vector<std::size_t> order;
  if (mask == 0) return order;
  const double best = tour_length(mask);

  // path(S, j) doubles as the cost of leaving j, covering S \ {j} and
  // returning to the depot, so a forward greedy scan yields the
  // lexicographically smallest optimal order.
  std::uint32_t remaining = mask;
  std::size_t current = 0;
  double budget = best;
  bool at_depot = true;
  while (remaining) {
    bool found = false;
    for (std::size_t k = 0; k < n_ && !found; ++k) {
      if (!(remaining >> k & 1)) continue;
      const double step = at_depot ? from_depot_[k] : between_[current * n_ + k];
      const double rest = path(remaining, k);
      if (step + rest <= budget + kGeomTol) {
        order.push_back(k);
        budget = rest;
        remaining &= ~(std::uint32_t{1} << k);
        current = k;
        at_depot = false;
        found = true;
      }
    }
    if (!found) throw Error("Held-Karp reconstruction failed");  // unreachable for a consistent table
  }
  return order;
}

double tour_length(const MetricSpace& space, const Tour& tour, std::span<const Point> requests) {
  double len = 0.0;
  const Point* prev = &tour.depot;
  for (std::size_t idx : tour.order) {
    if (idx >= requests.size()) throw InputError("tour index " + std::to_string(idx) + " out of range");
    len += space.dist(*prev, requests[idx]);
    prev = &requests[idx];
  }
  if (!tour.order.empty()) len += space.dist(*prev, tour.depot);
  return len;
}

Tour tsp_exact(const MetricSpace& space, const Point& depot, std::span<const Point> requests,
               const TspOptions& options) {
  Tour tour{depot, {}, 0.0};
  if (requests.empty()) {
    space.check(depot);
    return tour;
  }
  const SubsetTourTable table(space, depot, requests, options.exact_cap);
  const auto full = static_cast<std::uint32_t>((std::uint64_t{1} << requests.size()) - 1);
  tour.order = table.tour_order(full);
  tour.length = tour_length(space, tour, requests);
  return tour;
}

Tour tsp_heuristic(const MetricSpace& space, const Point& depot, std::span<const Point> requests,
                   const TspOptions& options) {
  Tour tour{depot, {}, 0.0};
  const std::size_t n = requests.size();
  if (n == 0) {
    space.check(depot);
    return tour;
  }
  const DistanceMatrix dm(space, depot, requests);

  // seq[0] is the depot node; the tour closes back to it.
  std::vector<std::size_t> seq{0};
  std::vector<bool> used(n + 1, false);
  used[0] = true;
  for (std::size_t step = 0; step < n; ++step) {
    const std::size_t from = seq.back();
    std::size_t best = 0;
    double best_d = kInf;
    for (std::size_t b = 1; b <= n; ++b) {
      if (!used[b] && dm(from, b) < best_d) {
        best_d = dm(from, b);
        best = b;
      }
    }
    used[best] = true;
    seq.push_back(best);
  }

  auto succ = [&](std::size_t pos) { return pos + 1 <= n ? seq[pos + 1] : seq[0]; };
  for (std::size_t sweep = 0; sweep < options.max_sweeps; ++sweep) {
    bool improved = false;
    for (std::size_t i = 1; i < n; ++i) {
      for (std::size_t j = i + 1; j <= n; ++j) {
        const double delta =
            dm(seq[i - 1], seq[j]) + dm(seq[i], succ(j)) - dm(seq[i - 1], seq[i]) - dm(seq[j], succ(j));
        if (delta < -1e-12) {
          std::reverse(seq.begin() + static_cast<std::ptrdiff_t>(i), seq.begin() + static_cast<std::ptrdiff_t>(j) + 1);
          improved = true;
        }
      }
    }
    if (!improved) break;
  }

  for (std::size_t pos = 1; pos <= n; ++pos) tour.order.push_back(seq[pos] - 1);
  tour.length = tour_length(space, tour, requests);
  return tour;
}

}  // namespace mdroute
