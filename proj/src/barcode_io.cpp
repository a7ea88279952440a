#include "pmod/barcode_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace pmod {

using nlohmann::json;

namespace {

json point_to_json(const grid_point& p) {
  json a = json::array();
  for (coord_t x : p.xs) a.push_back(x);
  return a;
}

grid_point point_from_json(const json& a, std::size_t dim) {
  if (!a.is_array() || a.size() != dim) throw io_error("point has wrong arity");
  grid_point p(std::vector<coord_t>(dim, 0));
  for (std::size_t i = 0; i < dim; ++i) {
    if (!a[i].is_number_integer()) throw io_error("point coordinates must be integers");
    p.xs[i] = a[i].get<coord_t>();
  }
  return p;
}

json points_to_json(const std::vector<grid_point>& pts) {
  json a = json::array();
  for (const auto& p : pts) a.push_back(point_to_json(p));
  return a;
}

std::vector<grid_point> points_from_json(const json& a, std::size_t dim) {
  if (!a.is_array()) throw io_error("expected an array of points");
  std::vector<grid_point> out;
  out.reserve(a.size());
  for (const auto& e : a) out.push_back(point_from_json(e, dim));
  return out;
}

json rational_to_json(const rational& r) { return json::array({r.num, r.den}); }

rational rational_from_json(const json& a) {
  if (!a.is_array() || a.size() != 2 || !a[0].is_number_integer() || !a[1].is_number_integer())
    throw io_error("rationals are [numerator, denominator] pairs");
  rational r{a[0].get<coord_t>(), a[1].get<coord_t>()};
  if (r.den <= 0) throw io_error("rational denominator must be positive");
  return r;
}

json spec_to_json(const interval_spec& spec) {
  json o = json::object();
  if (const auto* s = std::get_if<points_spec>(&spec)) {
    o["points"] = points_to_json(s->points);
  } else if (const auto* s = std::get_if<rect_spec>(&spec)) {
    o["rect"] = json::array({point_to_json(s->lo), point_to_json(s->hi)});
  } else if (const auto* s = std::get_if<upperset_spec>(&spec)) {
    o["upperset"] = {{"generators", points_to_json(s->generators)},
                     {"window", json::array({point_to_json(s->window_lo),
                                             point_to_json(s->window_hi)})}};
  } else if (const auto* s = std::get_if<downset_spec>(&spec)) {
    o["downset"] = {{"generators", points_to_json(s->generators)},
                    {"window", json::array({point_to_json(s->window_lo),
                                            point_to_json(s->window_hi)})}};
  } else if (const auto* s = std::get_if<polygon_spec>(&spec)) {
    json verts = json::array();
    for (const auto& [x, y] : s->vertices)
      verts.push_back(json::array({rational_to_json(x), rational_to_json(y)}));
    o["polygon"] = {{"vertices", verts}, {"scale", s->scale}};
  }
  return o;
}

interval_spec spec_from_json(const json& o, std::size_t dim) {
  if (!o.is_object() || o.size() != 1) throw io_error("interval spec must have exactly one key");
  if (o.contains("points")) return points_spec{points_from_json(o["points"], dim)};
  if (o.contains("rect")) {
    const json& a = o["rect"];
    if (!a.is_array() || a.size() != 2) throw io_error("rect is [lo, hi]");
    return rect_spec{point_from_json(a[0], dim), point_from_json(a[1], dim)};
  }
  if (o.contains("upperset") || o.contains("downset")) {
    bool upper = o.contains("upperset");
    const json& body = upper ? o["upperset"] : o["downset"];
    if (!body.contains("generators") || !body.contains("window"))
      throw io_error("generated set needs generators and window");
    const json& w = body["window"];
    if (!w.is_array() || w.size() != 2) throw io_error("window is [lo, hi]");
    auto gens = points_from_json(body["generators"], dim);
    auto lo = point_from_json(w[0], dim);
    auto hi = point_from_json(w[1], dim);
    if (upper) return upperset_spec{std::move(gens), std::move(lo), std::move(hi)};
    return downset_spec{std::move(gens), std::move(lo), std::move(hi)};
  }
  if (o.contains("polygon")) {
    const json& body = o["polygon"];
    if (!body.contains("vertices") || !body.contains("scale"))
      throw io_error("polygon needs vertices and scale");
    polygon_spec s;
    for (const auto& v : body["vertices"]) {
      if (!v.is_array() || v.size() != 2) throw io_error("polygon vertex is [x, y]");
      s.vertices.emplace_back(rational_from_json(v[0]), rational_from_json(v[1]));
    }
    s.scale = body["scale"].get<coord_t>();
    return s;
  }
  throw io_error("unknown interval spec kind");
}

}  // namespace

interval_set materialize(const interval_spec& spec, std::size_t dim) {
  if (const auto* s = std::get_if<points_spec>(&spec))
    return interval_set::validate(dim, s->points);
  if (const auto* s = std::get_if<rect_spec>(&spec)) return make_rect(s->lo, s->hi);
  if (const auto* s = std::get_if<upperset_spec>(&spec))
    return make_upperset_in_window(s->generators, s->window_lo, s->window_hi);
  if (const auto* s = std::get_if<downset_spec>(&spec))
    return make_downset_in_window(s->generators, s->window_lo, s->window_hi);
  const auto& s = std::get<polygon_spec>(spec);
  if (dim != 2) throw io_error("polygon specs require dimension 2");
  return rasterize_convex_polygon(s.vertices, s.scale);
}

barcode materialize(const module_entry& entry, std::size_t dim) {
  barcode out;
  out.reserve(entry.intervals.size());
  for (const auto& spec : entry.intervals) out.push_back(materialize(spec, dim));
  return out;
}

barcode_file parse_barcode_file(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::exception& e) {
    throw io_error(std::string("invalid JSON: ") + e.what());
  }
  if (!root.is_object()) throw io_error("top level must be an object");
  barcode_file file;
  if (!root.contains("version") || !root["version"].is_number_integer())
    throw io_error("missing integer field: version");
  file.version = root["version"].get<int>();
  if (file.version != 1) throw io_error("unsupported file version");
  if (!root.contains("dim") || !root["dim"].is_number_integer())
    throw io_error("missing integer field: dim");
  long dim = root["dim"].get<long>();
  if (dim < 1) throw io_error("dim must be >= 1");
  file.dim = static_cast<std::size_t>(dim);
  if (!root.contains("modules") || !root["modules"].is_array())
    throw io_error("missing array field: modules");
  for (const auto& m : root["modules"]) {
    if (!m.is_object() || !m.contains("name") || !m["name"].is_string() ||
        !m.contains("intervals") || !m["intervals"].is_array())
      throw io_error("module needs a name and an interval list");
    module_entry entry;
    entry.name = m["name"].get<std::string>();
    for (const auto& spec : m["intervals"])
      entry.intervals.push_back(spec_from_json(spec, file.dim));
    file.modules.push_back(std::move(entry));
  }
  return file;
}

std::string print_barcode_file(const barcode_file& file) {
  json root;
  root["version"] = file.version;
  root["dim"] = file.dim;
  json mods = json::array();
  for (const auto& m : file.modules) {
    json specs = json::array();
    for (const auto& spec : m.intervals) specs.push_back(spec_to_json(spec));
    mods.push_back({{"name", m.name}, {"intervals", specs}});
  }
  root["modules"] = mods;
  return root.dump(2) + "\n";
}

barcode_file load_barcode_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_barcode_file(buf.str());
}

void save_barcode_file(const barcode_file& file, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw io_error("cannot write " + path);
  out << print_barcode_file(file);
}

const module_entry& select_module(const barcode_file& file, const std::string& name) {
  if (file.modules.empty()) throw io_error("file contains no modules");
  if (name.empty()) return file.modules.front();
  for (const auto& m : file.modules)
    if (m.name == name) return m;
  throw io_error("no module named '" + name + "'");
}

}  // namespace pmod
