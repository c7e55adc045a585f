#pragma once

// Line-oriented instance files:
//
//   mdroute-instance 1
//   family line_voronoi                  (optional)
//   space euclidean 2 | space line | space explicit <N>
//   matrix                               (explicit only, then N rows of N reals)
//   depots <M>                           (then M rows of coordinates)
//   requests <N>                         (then N rows of coordinates)
//   release_dates <N>                    (optional; one real per row)
//
// Explicit-space points are 0-based node indices. '#' starts a comment.
// Reals are written with 17 significant digits so a save/load round trip
// reproduces every coordinate exactly.

#include <filesystem>
#include <iosfwd>
#include <string>
#include <variant>

#include "mdroute/instance.hpp"

namespace mdroute {

using AnyInstance = std::variant<OfflineInstance, OnlineInstance>;

void write_instance(std::ostream& out, const OfflineInstance& inst);
void write_instance(std::ostream& out, const OnlineInstance& inst);

/// Parses and validates. ParseError carries the line; ValidationError covers
/// semantic problems (duplicate depots, unsorted release dates, bad metric).
AnyInstance read_instance(std::istream& in, const std::string& source = "<stream>");

AnyInstance load_instance(const std::filesystem::path& path);
void save_instance(const OfflineInstance& inst, const std::filesystem::path& path);
void save_instance(const OnlineInstance& inst, const std::filesystem::path& path);

/// Offline view of either kind (release dates dropped).
OfflineInstance as_offline(const AnyInstance& inst);

std::string format_real(double v);

}  // namespace mdroute
