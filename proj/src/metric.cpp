#include "mdroute/metric.hpp"

#include <cmath>
#include <sstream>

#include "mdroute/error.hpp"

namespace mdroute {

std::string to_string(SpaceKind kind) {
  switch (kind) {
    case SpaceKind::euclidean: return "euclidean";
    case SpaceKind::line: return "line";
    case SpaceKind::explicit_matrix: return "explicit";
  }
  return "unknown";
}

SpaceKind space_kind_from_string(const std::string& name) {
  if (name == "euclidean") return SpaceKind::euclidean;
  if (name == "line") return SpaceKind::line;
  if (name == "explicit") return SpaceKind::explicit_matrix;
  throw InputError("unknown space kind '" + name + "'");
}

Point Point::euclidean(std::vector<double> coords) {
  if (coords.empty()) throw InputError("euclidean point needs at least one coordinate");
  Point p;
  p.kind_ = SpaceKind::euclidean;
  p.coords_ = std::move(coords);
  return p;
}

Point Point::on_line(double x) {
  Point p;
  p.kind_ = SpaceKind::line;
  p.coords_ = {x};
  return p;
}

Point Point::node(std::size_t index) {
  Point p;
  p.kind_ = SpaceKind::explicit_matrix;
  p.index_ = index;
  return p;
}

std::string to_string(const Point& p) {
  std::ostringstream os;
  os.precision(17);
  if (p.kind() == SpaceKind::explicit_matrix) {
    os << "#" << p.index();
    return os.str();
  }
  os << "(";
  for (std::size_t i = 0; i < p.coords().size(); ++i) {
    if (i) os << ", ";
    os << p.coords()[i];
  }
  os << ")";
  return os.str();
}

MetricSpace MetricSpace::euclidean(std::size_t dim) {
  if (dim == 0) throw InputError("euclidean space needs dim >= 1");
  MetricSpace s;
  s.kind_ = SpaceKind::euclidean;
  s.dim_ = dim;
  return s;
}

MetricSpace MetricSpace::line() { return MetricSpace{}; }

MetricSpace MetricSpace::explicit_matrix(std::size_t n, std::vector<double> entries) {
  if (n == 0) throw InputError("explicit metric needs at least one point");
  if (entries.size() != n * n) {
    throw InputError("explicit metric expects " + std::to_string(n * n) + " entries, got " +
                     std::to_string(entries.size()));
  }
  MetricSpace s;
  s.kind_ = SpaceKind::explicit_matrix;
  s.dim_ = n;
  s.matrix_ = std::make_shared<const std::vector<double>>(std::move(entries));
  return s;
}

std::span<const double> MetricSpace::matrix() const {
  if (!matrix_) return {};
  return *matrix_;
}

double MetricSpace::entry(std::size_t i, std::size_t j) const {
  if (kind_ != SpaceKind::explicit_matrix) throw UnsupportedError("entry() on a non-explicit space");
  if (i >= dim_ || j >= dim_) throw InputError("matrix index out of range");
  return (*matrix_)[i * dim_ + j];
}

bool MetricSpace::contains(const Point& p) const noexcept {
  if (p.kind() != kind_) return false;
  switch (kind_) {
    case SpaceKind::euclidean: return p.coords().size() == dim_;
    case SpaceKind::line: return p.coords().size() == 1;
    case SpaceKind::explicit_matrix: return p.index() < dim_;
  }
  return false;
}

void MetricSpace::check(const Point& p) const {
  if (contains(p)) return;
  if (p.kind() != kind_) {
    throw InputError("point " + to_string(p) + " is a " + to_string(p.kind()) + " point, space is " +
                     to_string(kind_));
  }
  if (kind_ == SpaceKind::explicit_matrix) {
    throw InputError("node index " + std::to_string(p.index()) + " out of range for " +
                     std::to_string(dim_) + "-point metric");
  }
  throw InputError("point " + to_string(p) + " has " + std::to_string(p.coords().size()) +
                   " coordinates, space dimension is " + std::to_string(dim_));
}

double MetricSpace::dist(const Point& p, const Point& q) const {
  check(p);
  check(q);
  switch (kind_) {
    case SpaceKind::line: return std::abs(p.x() - q.x());
    case SpaceKind::euclidean: {
      double acc = 0.0;
      const auto a = p.coords();
      const auto b = q.coords();
      for (std::size_t d = 0; d < dim_; ++d) {
        const double diff = b[d] - a[d];
        acc += diff * diff;
      }
      return std::sqrt(acc);
    }
    case SpaceKind::explicit_matrix: return (*matrix_)[p.index() * dim_ + q.index()];
  }
  return 0.0;
}

Point MetricSpace::interpolate(const Point& p, const Point& q, double s) const {
  if (kind_ == SpaceKind::explicit_matrix) {
    throw UnsupportedError("interpolate: explicit matrix spaces have no canonical geodesic");
  }
  check(p);
  check(q);
  if (!(s >= 0.0 && s <= 1.0)) throw InputError("interpolate: fraction must lie in [0, 1]");
  if (s == 0.0 || p == q) return p;
  if (s == 1.0) return q;
  if (kind_ == SpaceKind::line) return Point::on_line(p.x() + s * (q.x() - p.x()));
  std::vector<double> out(dim_);
  for (std::size_t d = 0; d < dim_; ++d) out[d] = p.coords()[d] + s * (q.coords()[d] - p.coords()[d]);
  return Point::euclidean(std::move(out));
}

bool operator==(const MetricSpace& a, const MetricSpace& b) {
  if (a.kind_ != b.kind_ || a.dim_ != b.dim_) return false;
  if (a.kind_ != SpaceKind::explicit_matrix) return true;
  return a.matrix_ == b.matrix_ || *a.matrix_ == *b.matrix_;
}

std::string to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::nonfinite: return "nonfinite";
    case ViolationKind::negative: return "negative";
    case ViolationKind::diagonal: return "diagonal";
    case ViolationKind::identity: return "identity";
    case ViolationKind::symmetry: return "symmetry";
    case ViolationKind::triangle: return "triangle";
  }
  return "unknown";
}

std::string MetricReport::describe() const {
  if (ok()) return "ok";
  std::ostringstream os;
  os << total_violations << " metric violation(s)";
  for (const auto& v : violations) {
    os << "\n  " << to_string(v.kind) << " at (" << v.i << "," << v.j;
    if (v.kind == ViolationKind::triangle) os << "," << v.k;
    os << ")";
  }
  if (violations.size() < total_violations) os << "\n  ...";
  return os.str();
}

namespace {

void record(MetricReport& report, MetricViolation v) {
  ++report.total_violations;
  if (report.violations.size() < MetricReport::kMaxRecorded) report.violations.push_back(v);
}

}  // namespace

MetricReport validate_metric(const MetricSpace& space) {
  MetricReport report;
  if (space.kind() != SpaceKind::explicit_matrix) return report;

  const std::size_t n = space.dim();
  const auto m = space.matrix();
  auto at = [&](std::size_t i, std::size_t j) { return m[i * n + j]; };

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double v = at(i, j);
      if (!std::isfinite(v)) {
        record(report, {ViolationKind::nonfinite, i, j});
      } else if (v < 0.0) {
        record(report, {ViolationKind::negative, i, j});
      } else if (i == j && v != 0.0) {
        record(report, {ViolationKind::diagonal, i, j});
      } else if (i < j) {
        if (v == 0.0) record(report, {ViolationKind::identity, i, j});
        if (std::abs(v - at(j, i)) > kGeomTol) record(report, {ViolationKind::symmetry, i, j});
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        if (at(i, k) > at(i, j) + at(j, k) + kGeomTol) record(report, {ViolationKind::triangle, i, j, k});
      }
    }
  }
  return report;
}

}  // namespace mdroute
