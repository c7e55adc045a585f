#include "mdroute/instance_io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

#include "mdroute/error.hpp"

namespace mdroute {

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

constexpr const char* kMagic = "mdroute-instance";

void write_point(std::ostream& out, const Point& p) {
  if (p.kind() == SpaceKind::explicit_matrix) {
    out << p.index() << '\n';
    return;
  }
  const auto c = p.coords();
  for (std::size_t d = 0; d < c.size(); ++d) out << (d ? " " : "") << format_real(c[d]);
  out << '\n';
}

void write_header(std::ostream& out, const DepotConfig& cfg, const std::string& family) {
  out << kMagic << " 1\n";
  if (!family.empty()) out << "family " << family << '\n';
  const auto& s = cfg.space;
  switch (s.kind()) {
    case SpaceKind::euclidean: out << "space euclidean " << s.dim() << '\n'; break;
    case SpaceKind::line: out << "space line\n"; break;
    case SpaceKind::explicit_matrix: {
      out << "space explicit " << s.dim() << "\nmatrix\n";
      const auto m = s.matrix();
      for (std::size_t i = 0; i < s.dim(); ++i) {
        for (std::size_t j = 0; j < s.dim(); ++j) out << (j ? " " : "") << format_real(m[i * s.dim() + j]);
        out << '\n';
      }
      break;
    }
  }
  out << "depots " << cfg.size() << '\n';
  for (const auto& x : cfg.depots) write_point(out, x);
}

class LineReader {
 public:
  LineReader(std::istream& in, std::string source) : in_(in), source_(std::move(source)) {}

  // Next non-blank, comment-stripped line split into tokens; nullopt at EOF.
  std::optional<std::vector<std::string>> next() {
    std::string raw;
    while (std::getline(in_, raw)) {
      ++line_;
      if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
      std::istringstream ss(raw);
      std::vector<std::string> tokens;
      for (std::string t; ss >> t;) tokens.push_back(t);
      if (!tokens.empty()) return tokens;
    }
    return std::nullopt;
  }

  std::vector<std::string> require(const std::string& what) {
    auto t = next();
    if (!t) fail("unexpected end of file, expected " + what);
    return *t;
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(source_, line_, what); }

  double real(const std::string& tok, const std::string& field) const {
    double v = 0.0;
    const auto* end = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(tok.data(), end, v);
    if (ec != std::errc() || ptr != end) fail(field + ": '" + tok + "' is not a real number");
    return v;
  }

  std::size_t count(const std::string& tok, const std::string& field) const {
    std::size_t v = 0;
    const auto* end = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(tok.data(), end, v);
    if (ec != std::errc() || ptr != end) fail(field + ": '" + tok + "' is not a nonnegative integer");
    return v;
  }

 private:
  std::istream& in_;
  std::string source_;
  std::size_t line_ = 0;
};

Point read_point(LineReader& r, const MetricSpace& space, const std::string& field) {
  auto t = r.require(field);
  switch (space.kind()) {
    case SpaceKind::line:
      if (t.size() != 1) r.fail(field + ": expected 1 coordinate, got " + std::to_string(t.size()));
      return Point::on_line(r.real(t[0], field));
    case SpaceKind::explicit_matrix:
      if (t.size() != 1) r.fail(field + ": expected a node index");
      return Point::node(r.count(t[0], field));
    case SpaceKind::euclidean: {
      if (t.size() != space.dim()) {
        r.fail(field + ": expected " + std::to_string(space.dim()) + " coordinates, got " + std::to_string(t.size()));
      }
      std::vector<double> c;
      for (std::size_t d = 0; d < t.size(); ++d) c.push_back(r.real(t[d], field + " coordinate " + std::to_string(d + 1)));
      return Point::euclidean(std::move(c));
    }
  }
  r.fail(field + ": unknown space");
}

}  // namespace

void write_instance(std::ostream& out, const OfflineInstance& inst) {
  write_header(out, inst.depots, inst.family);
  out << "requests " << inst.requests.size() << '\n';
  for (const auto& p : inst.requests) write_point(out, p);
}

void write_instance(std::ostream& out, const OnlineInstance& inst) {
  write_instance(out, locations(inst));
  out << "release_dates " << inst.requests.size() << '\n';
  for (const auto& r : inst.requests) out << format_real(r.release) << '\n';
}

AnyInstance read_instance(std::istream& in, const std::string& source) {
  LineReader r(in, source);
  auto t = r.require("header");
  if (t.size() != 2 || t[0] != kMagic || t[1] != "1") r.fail(std::string("expected '") + kMagic + " 1' header");

  std::string family;
  t = r.require("space");
  if (t[0] == "family") {
    if (t.size() != 2) r.fail("family: expected one name");
    family = t[1];
    t = r.require("space");
  }
  if (t[0] != "space" || t.size() < 2) r.fail("expected 'space <kind> [dim]'");

  std::optional<MetricSpace> space;
  if (t[1] == "line") {
    if (t.size() != 2) r.fail("space line takes no dimension");
    space = MetricSpace::line();
  } else if (t[1] == "euclidean") {
    if (t.size() != 3) r.fail("space euclidean needs a dimension");
    const auto dim = r.count(t[2], "space dim");
    if (dim == 0) r.fail("space dim must be >= 1");
    space = MetricSpace::euclidean(dim);
  } else if (t[1] == "explicit") {
    if (t.size() != 3) r.fail("space explicit needs a point count");
    const auto n = r.count(t[2], "space size");
    if (n == 0) r.fail("space size must be >= 1");
    auto m = r.require("matrix");
    if (m.size() != 1 || m[0] != "matrix") r.fail("expected 'matrix'");
    std::vector<double> entries;
    entries.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      auto row = r.require("matrix row " + std::to_string(i + 1));
      if (row.size() != n) r.fail("matrix row " + std::to_string(i + 1) + ": expected " + std::to_string(n) + " entries");
      for (std::size_t j = 0; j < n; ++j) {
        entries.push_back(r.real(row[j], "matrix[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) + "]"));
      }
    }
    space = MetricSpace::explicit_matrix(n, std::move(entries));
  } else {
    r.fail("unknown space kind '" + t[1] + "'");
  }

  t = r.require("depots");
  if (t.size() != 2 || t[0] != "depots") r.fail("expected 'depots <count>'");
  DepotConfig cfg{*space, {}};
  const auto m = r.count(t[1], "depot count");
  for (std::size_t i = 0; i < m; ++i) cfg.depots.push_back(read_point(r, *space, "depot " + std::to_string(i + 1)));

  t = r.require("requests");
  if (t.size() != 2 || t[0] != "requests") r.fail("expected 'requests <count>'");
  OfflineInstance off{std::move(cfg), {}, family};
  const auto n = r.count(t[1], "request count");
  for (std::size_t j = 0; j < n; ++j) off.requests.push_back(read_point(r, *space, "request " + std::to_string(j + 1)));

  auto rd = r.next();
  if (!rd) {
    validate(off);
    return off;
  }
  if (rd->size() != 2 || (*rd)[0] != "release_dates") r.fail("expected 'release_dates <count>' or end of file");
  if (r.count((*rd)[1], "release date count") != n) r.fail("release_dates count must equal the request count");
  OnlineInstance on{off.depots, {}, family};
  for (std::size_t j = 0; j < n; ++j) {
    auto row = r.require("release date " + std::to_string(j + 1));
    if (row.size() != 1) r.fail("release date " + std::to_string(j + 1) + ": expected one real");
    on.requests.push_back({r.real(row[0], "release date " + std::to_string(j + 1)), off.requests[j]});
  }
  if (r.next()) r.fail("trailing content after release_dates");
  validate(on);
  return on;
}

AnyInstance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open instance file " + path.string());
  return read_instance(in, path.string());
}

namespace {

template <class Inst>
void save_impl(const Inst& inst, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write instance file " + path.string());
  write_instance(out, inst);
  if (!out) throw InputError("write failed for " + path.string());
}

}  // namespace

void save_instance(const OfflineInstance& inst, const std::filesystem::path& path) { save_impl(inst, path); }
void save_instance(const OnlineInstance& inst, const std::filesystem::path& path) { save_impl(inst, path); }

OfflineInstance as_offline(const AnyInstance& inst) {
  if (const auto* on = std::get_if<OnlineInstance>(&inst)) return locations(*on);
  return std::get<OfflineInstance>(inst);
}

}  // namespace mdroute
