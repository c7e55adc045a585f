#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace mdroute {

/// Absolute tolerance for every geometric equality and closed-ball test.
inline constexpr double kGeomTol = 1e-9;

enum class SpaceKind { euclidean, line, explicit_matrix };

std::string to_string(SpaceKind kind);
SpaceKind space_kind_from_string(const std::string& name);

/// A location in a metric space. Euclidean points carry `dim` coordinates,
/// line points one coordinate, explicit points a node index into the matrix.
class Point {
 public:
  Point() = default;

  static Point euclidean(std::vector<double> coords);
  static Point on_line(double x);
  static Point node(std::size_t index);

  SpaceKind kind() const noexcept { return kind_; }
  std::span<const double> coords() const noexcept { return coords_; }
  double x() const { return coords_.at(0); }
  std::size_t index() const noexcept { return index_; }

  friend bool operator==(const Point&, const Point&) = default;

 private:
  SpaceKind kind_ = SpaceKind::line;
  std::vector<double> coords_;
  std::size_t index_ = 0;
};

std::string to_string(const Point& p);

/// Distance structure with value semantics. The explicit matrix is shared
/// between copies and never mutated after construction.
class MetricSpace {
 public:
  static MetricSpace euclidean(std::size_t dim);
  static MetricSpace line();
  /// Row-major n x n matrix. Not validated here; see validate_metric().
  static MetricSpace explicit_matrix(std::size_t n, std::vector<double> entries);

  SpaceKind kind() const noexcept { return kind_; }
  /// Ambient dimension for euclidean, 1 for line, node count for explicit.
  std::size_t dim() const noexcept { return dim_; }
  bool is_geodesic() const noexcept { return kind_ != SpaceKind::explicit_matrix; }

  std::span<const double> matrix() const;
  double entry(std::size_t i, std::size_t j) const;

  /// Throws InputError if p does not belong to this space.
  void check(const Point& p) const;
  bool contains(const Point& p) const noexcept;

  double dist(const Point& p, const Point& q) const;

  /// Point at fraction s of the straight segment p -> q. Euclidean and line only.
  Point interpolate(const Point& p, const Point& q, double s) const;

  friend bool operator==(const MetricSpace& a, const MetricSpace& b);

 private:
  SpaceKind kind_ = SpaceKind::line;
  std::size_t dim_ = 1;
  std::shared_ptr<const std::vector<double>> matrix_;
};

inline double dist(const MetricSpace& space, const Point& p, const Point& q) {
  return space.dist(p, q);
}

enum class ViolationKind { nonfinite, negative, diagonal, identity, symmetry, triangle };

std::string to_string(ViolationKind kind);

struct MetricViolation {
  ViolationKind kind;
  std::size_t i = 0, j = 0, k = 0;
};

struct MetricReport {
  std::size_t total_violations = 0;
  /// First few violations in scan order (capped at kMaxRecorded).
  std::vector<MetricViolation> violations;

  static constexpr std::size_t kMaxRecorded = 64;

  bool ok() const noexcept { return total_violations == 0; }
  std::string describe() const;
};

/// Exhaustive axiom check for explicit matrices (all pairs and triples).
/// Euclidean and line spaces hold the axioms by construction and only get
/// structural checks.
MetricReport validate_metric(const MetricSpace& space);

}  // namespace mdroute
