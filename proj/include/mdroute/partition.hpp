#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "mdroute/instance.hpp"
#include "mdroute/simd/kernels.hpp"

namespace mdroute {

enum class SchemeKind { voronoi, level, local };

std::string to_string(SchemeKind kind);
SchemeKind scheme_from_string(const std::string& name);

/// A static partition of the whole space into one region per server, built
/// from depot locations alone. assign() is total and deterministic and
/// returns a 0-based server index.
class PartitionScheme {
 public:
  virtual ~PartitionScheme() = default;

  virtual SchemeKind kind() const noexcept = 0;
  virtual std::size_t assign(const Point& p) const = 0;

  const DepotConfig& depots() const noexcept { return depots_; }
  std::size_t servers() const noexcept { return depots_.size(); }

 protected:
  explicit PartitionScheme(DepotConfig depots);

  DepotConfig depots_;
};

/// Nearest depot; ties within kGeomTol go to the lowest index.
class VoronoiPartition final : public PartitionScheme {
 public:
  explicit VoronoiPartition(DepotConfig depots);

  SchemeKind kind() const noexcept override { return SchemeKind::voronoi; }
  std::size_t assign(const Point& p) const override;

 private:
  simd::PointBlock block_;  // euclidean depots, SoA
};

/// Closed ball d(p, center) <= radius.
struct Disk {
  std::size_t center;  // virtual index
  double radius;
};

/// Dyadic level structure over 2^k + 1 virtual indices 0..2^k. Indices past
/// m-1 are virtual copies of the last depot.
struct LevelTable {
  std::size_t k = 0;
  double lambda = 0.75;
  /// level_of[i] = l with i in N_l.
  std::vector<std::size_t> level_of;
  /// by_level[l] = indices in N_l, increasing; l = 0..k+1.
  std::vector<std::vector<std::size_t>> by_level;
  /// tau[i] = disks whose intersection is tau_i; empty for i = 0 (whole space).
  std::vector<std::vector<Disk>> tau;
  /// server_of[i] = real 0-based server behind virtual index i.
  std::vector<std::size_t> server_of;

  std::size_t virtual_count() const noexcept { return server_of.size(); }
  std::size_t padding() const noexcept;
};

/// Builds the level table. Depots must be collinear in the given order:
/// d(x_i,x_j) + d(x_j,x_k) = d(x_i,x_k) within kGeomTol for all i < j < k,
/// otherwise PreconditionError. lambda must lie in (1/2, 1).
LevelTable level_build(const DepotConfig& depots, double lambda = 0.75);

/// Hierarchical partition for depots on a line. A point goes to the first
/// index, scanning levels upward and indices upward within a level, whose
/// region tau_i contains it.
class LevelPartition final : public PartitionScheme {
 public:
  explicit LevelPartition(DepotConfig depots, double lambda = 0.75);

  SchemeKind kind() const noexcept override { return SchemeKind::level; }
  std::size_t assign(const Point& p) const override;
  /// Virtual index (before mapping padding copies to the last server).
  std::size_t assign_virtual(const Point& p) const;
  bool in_tau(std::size_t virtual_index, const Point& p) const;

  const LevelTable& table() const noexcept { return table_; }
  const Point& virtual_depot(std::size_t i) const { return depots_.depot(table_.server_of.at(i)); }

 private:
  LevelTable table_;
};

/// Open balls of radius (min depot distance)/4 around servers 0..m-2; the
/// remainder belongs to server m-1.
class LocalPartition final : public PartitionScheme {
 public:
  explicit LocalPartition(DepotConfig depots, double radius_divisor = 4.0);

  SchemeKind kind() const noexcept override { return SchemeKind::local; }
  std::size_t assign(const Point& p) const override;
  double radius() const noexcept { return radius_; }

 private:
  double radius_;
};

struct SchemeOptions {
  double lambda = 0.75;
  double local_radius_divisor = 4.0;
};

std::unique_ptr<PartitionScheme> make_scheme(SchemeKind kind, const DepotConfig& depots,
                                             const SchemeOptions& options = {});

/// S_i = requests falling in region i, as indices into `requests`.
std::vector<std::vector<std::size_t>> assign_all(const PartitionScheme& scheme, std::span<const Point> requests);
std::vector<std::vector<std::size_t>> assign_all(const PartitionScheme& scheme, const OfflineInstance& inst);

}  // namespace mdroute
