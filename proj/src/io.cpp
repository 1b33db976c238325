#include "cluster_forge/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "cluster_forge/errors.hpp"

namespace cluster_forge {

namespace {

using nlohmann::json;

const json& require(const json& j, const char* key, const std::string& path) {
  if (!j.is_object()) throw SceneError(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw SceneError(path + "/" + key, "missing required field");
  return *it;
}

double number(const json& j, const std::string& path) {
  if (!j.is_number()) throw SceneError(path, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw SceneError(path, "number is not finite");
  return v;
}

double positive(const json& j, const std::string& path) {
  const double v = number(j, path);
  if (!(v > 0.0)) throw SceneError(path, "must be positive");
  return v;
}

int positive_int(const json& j, const std::string& path) {
  if (!j.is_number_integer() || j.get<long long>() < 1 || j.get<long long>() > 1'000'000) {
    throw SceneError(path, "expected a positive integer");
  }
  return j.get<int>();
}

double number_or(const json& j, const char* key, double fallback, const std::string& path) {
  auto it = j.find(key);
  return it == j.end() ? fallback : number(*it, path + "/" + key);
}

Point point(const json& j, std::size_t d, const std::string& path) {
  if (d == 1 && j.is_number()) return Point{number(j, path)};
  if (!j.is_array()) throw SceneError(path, "expected a coordinate array");
  if (j.size() != d) {
    throw SceneError(path, fmt::format("expected {} coordinates, got {}", d, j.size()));
  }
  std::vector<double> c;
  for (std::size_t i = 0; i < d; ++i) c.push_back(number(j[i], fmt::format("{}/{}", path, i)));
  return Point(std::move(c));
}

std::vector<Point> point_list(const json& j, std::size_t d, const std::string& path) {
  if (!j.is_array()) throw SceneError(path, "expected an array of points");
  std::vector<Point> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(point(j[i], d, fmt::format("{}/{}", path, i)));
  return out;
}

Box box(const json& j, std::size_t d, const std::string& path) {
  Box b{point(require(j, "lo", path), d, path + "/lo"), point(require(j, "hi", path), d, path + "/hi")};
  for (std::size_t i = 0; i < d; ++i) {
    if (b.hi[i] < b.lo[i]) throw SceneError(path, "hi is below lo");
  }
  return b;
}

template <typename F>
auto as_scene_error(const std::string& path, F&& body) -> decltype(body()) {
  try {
    return body();
  } catch (const InputError& e) {
    throw SceneError(path, e.what());
  }
}

Metric metric(const json& j, const std::string& path) {
  if (!j.is_string()) throw SceneError(path, "expected a metric name");
  return as_scene_error(path, [&] { return metric_from_string(j.get<std::string>()); });
}

std::vector<Point> expand_points(const json& spec, double resolution, std::size_t d,
                                 const std::string& where) {
  if (!spec.is_object() || spec.size() != 1) {
    throw SceneError(where, "set spec must be an object with exactly one of points, interval, "
                            "grid, union");
  }
  const auto first = spec.begin();
  const std::string kind = first.key();
  const json& body = first.value();
  const std::string path = where + "/" + kind;
  if (kind == "points") return point_list(body, d, path);
  if (kind == "interval") {
    const Box b = box(body, d, path);
    return as_scene_error(path, [&] { return box_lattice(b, resolution); });
  }
  if (kind == "grid") {
    const Box b = box(body, d, path);
    const double step = positive(require(body, "step", path), path + "/step");
    return as_scene_error(path, [&] { return box_lattice(b, step); });
  }
  if (kind == "union") {
    if (!body.is_array() || body.empty()) throw SceneError(path, "expected a nonempty array");
    std::vector<Point> out;
    for (std::size_t i = 0; i < body.size(); ++i) {
      auto part = expand_points(body[i], resolution, d, fmt::format("{}/{}", path, i));
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  throw SceneError(where, "unknown set spec kind '" + kind + "'");
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

void append_point(std::string& out, const Point& p) {
  out += '[';
  for (std::size_t i = 0; i < p.dimension(); ++i) {
    if (i) out += ',';
    out += format_double(p[i]);
  }
  out += ']';
}

template <typename Json>
void dump_value(const Json& j, int indent, int depth, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent * (depth + 1)), ' ');
  const std::string close_pad(static_cast<std::size_t>(indent * depth), ' ');
  switch (j.type()) {
    case Json::value_t::number_float:
      out += format_double(j.template get<double>());
      return;
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += pad + Json(it.key()).dump() + ": ";
        dump_value(it.value(), indent, depth + 1, out);
      }
      out += "\n" + close_pad + "}";
      return;
    }
    case Json::value_t::array: {
      const bool flat = std::none_of(j.begin(), j.end(), [](const Json& e) {
        return e.is_object() || (e.is_array() && !e.empty());
      });
      if (flat) {
        out += '[';
        for (std::size_t i = 0; i < j.size(); ++i) {
          if (i) out += ", ";
          dump_value(j[i], indent, depth + 1, out);
        }
        out += ']';
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ",\n";
        out += pad;
        dump_value(j[i], indent, depth + 1, out);
      }
      out += "\n" + close_pad + "]";
      return;
    }
    default:
      out += j.dump();
  }
}

}  // namespace

std::string format_double(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

SampledSet expand_set_spec(const json& spec, double resolution, std::size_t dimension,
                           const std::string& where) {
  std::vector<Point> pts = expand_points(spec, resolution, dimension, where);
  if (pts.empty()) throw SceneError(where, "set spec expands to no points");
  return SampledSet::deduplicated(std::move(pts), resolution);
}

Scene parse_scene(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const auto [line, col] = line_column(text, e.byte);
    throw SceneError("", fmt::format("parse error at line {}, column {}: {}", line, col, e.what()));
  }
  if (!doc.is_object()) throw SceneError("", "scene must be a JSON object");

  Scene scene;
  const int dim = positive_int(require(doc, "dimension", ""), "/dimension");
  const std::size_t d = static_cast<std::size_t>(dim);
  scene.dimension = d;
  if (auto it = doc.find("metric"); it != doc.end()) scene.metric = metric(*it, "/metric");
  const Metric m = scene.metric;
  scene.x_box = box(require(doc, "x_box", ""), d, "/x_box");
  scene.x_resolution = doc.contains("x_resolution")
                           ? positive(doc["x_resolution"], "/x_resolution")
                           : scene.x_resolution;
  const double dedup = number_or(doc, "dedup_tolerance", 1e-12, "");

  // L
  const json& l = require(doc, "L", "");
  if (l.contains("box")) {
    const Box b = box(l["box"], d, "/L/box");
    const double step = positive(require(l, "step", "/L"), "/L/step");
    scene.boundary = SetOracle::from_box(b, step, m);
  } else if (l.contains("points")) {
    const double res = positive(require(l, "resolution", "/L"), "/L/resolution");
    auto pts = point_list(l["points"], d, "/L/points");
    scene.boundary = as_scene_error("/L/points", [&] { return SetOracle(SampledSet(std::move(pts), res), m); });
  } else {
    throw SceneError("/L", "expected either box+step or points+resolution");
  }
  const SampledSet& l_sample = scene.boundary.sample();
  if (l_sample.empty()) throw SceneError("/L", "boundary sample is empty");

  // Values
  const json& vs = require(doc, "value_space", "");
  const json& vs_lo = require(vs, "lo", "/value_space");
  const std::size_t dv = vs_lo.is_array() ? vs_lo.size() : 1;
  if (dv == 0) throw SceneError("/value_space/lo", "value space needs at least one coordinate");
  const Box value_space = box(vs, dv, "/value_space");
  const double value_res = positive(require(doc, "value_resolution", ""), "/value_resolution");
  const double y_step = doc.contains("y_dense_step") ? positive(doc["y_dense_step"], "/y_dense_step")
                                                      : value_res / 2.0;
  scene.y_dense = ValueGrid(value_space, y_step);

  // Phi
  const json& phi = require(doc, "phi", "");
  std::vector<Point> keys;
  std::vector<SampledSet> values;
  if (phi.contains("constant")) {
    const SampledSet v = expand_set_spec(phi["constant"], value_res, dv, "/phi/constant");
    keys = l_sample.points();
    values.assign(keys.size(), v);
  } else if (phi.contains("entries")) {
    const json& entries = phi["entries"];
    if (!entries.is_array()) throw SceneError("/phi/entries", "expected an array");
    for (std::size_t i = 0; i < entries.size(); ++i) {
      const std::string path = fmt::format("/phi/entries/{}", i);
      Point key = point(require(entries[i], "key", path), d, path + "/key");
      // Snap keys written in decimal onto the generated L sample.
      for (const Point& a : l_sample.points()) {
        if (dist(a, key, Metric::kChebyshev) <= dedup) {
          key = a;
          break;
        }
      }
      keys.push_back(std::move(key));
      values.push_back(expand_set_spec(require(entries[i], "value", path), value_res, dv, path + "/value"));
    }
  } else {
    throw SceneError("/phi", "expected either constant or entries");
  }
  scene.phi = as_scene_error("/phi", [&] {
    return MultifunctionTable(std::move(keys), std::move(values), value_space, value_res);
  });

  // D
  if (auto it = doc.find("D"); it != doc.end() && !(it->is_string() && *it == "free")) {
    const json& dj = *it;
    if (!dj.is_object()) throw SceneError("/D", "expected \"free\" or an object");
    std::vector<Point> pts;
    double res = 0.0;
    if (dj.contains("grid")) {
      const json& g = dj["grid"];
      const Box b = box(g, d, "/D/grid");
      const double step = positive(require(g, "step", "/D/grid"), "/D/grid/step");
      pts = as_scene_error("/D/grid", [&] { return box_lattice(b, step); });
      res = step;
      bool exclude = true;
      if (auto e = dj.find("exclude_L"); e != dj.end()) {
        if (!e->is_boolean()) throw SceneError("/D/exclude_L", "expected a boolean");
        exclude = e->get<bool>();
      }
      if (exclude) {
        std::erase_if(pts, [&](const Point& p) {
          return !(scene.boundary.distance(p) > 0.0) || l_sample.contains(p);
        });
      }
    } else if (dj.contains("points")) {
      pts = point_list(dj["points"], d, "/D/points");
    } else {
      throw SceneError("/D", "expected grid or points");
    }
    if (dj.contains("resolution")) res = positive(dj["resolution"], "/D/resolution");
    if (!(res > 0.0)) throw SceneError("/D/resolution", "missing required field");
    scene.domain = as_scene_error("/D", [&] { return SampledSet(std::move(pts), res); });
  }

  if (auto it = doc.find("depths"); it != doc.end()) {
    if (it->contains("n_max")) scene.depths.n_max = positive_int((*it)["n_max"], "/depths/n_max");
    if (it->contains("k_max")) scene.depths.k_max = positive_int((*it)["k_max"], "/depths/k_max");
    if (it->contains("K")) scene.depths.K = positive_int((*it)["K"], "/depths/K");
  }
  if (auto it = doc.find("seed"); it != doc.end()) {
    if (!it->is_number_integer()) throw SceneError("/seed", "expected an integer");
    scene.seed = it->get<std::uint64_t>();
  }
  if (auto it = doc.find("usc"); it != doc.end()) {
    if (it->contains("delta")) scene.usc.delta = positive((*it)["delta"], "/usc/delta");
    if (it->contains("epsilon")) scene.usc.eps = positive((*it)["epsilon"], "/usc/epsilon");
  }
  if (auto it = doc.find("verify"); it != doc.end()) {
    const json& v = *it;
    VerifyConfig& vc = scene.verify;
    if (v.contains("delta_min")) vc.delta_min = positive(v["delta_min"], "/verify/delta_min");
    if (v.contains("steps")) vc.steps = positive_int(v["steps"], "/verify/steps");
    if (v.contains("mode")) {
      if (!v["mode"].is_string()) throw SceneError("/verify/mode", "expected a string");
      vc.mode = as_scene_error("/verify/mode",
                               [&] { return match_mode_from_string(v["mode"].get<std::string>()); });
    }
    if (v.contains("probe_set")) {
      const json& ps = v["probe_set"];
      if (ps == "keys") {
        vc.probe_set = ProbeSet::kKeys;
      } else if (ps == "anchors") {
        vc.probe_set = ProbeSet::kAnchors;
      } else {
        throw SceneError("/verify/probe_set", "expected \"keys\" or \"anchors\"");
      }
    }
    if (v.contains("probes")) {
      vc.probes = static_cast<std::size_t>(positive_int(v["probes"], "/verify/probes"));
    }
    if (v.contains("tol")) {
      const double tol = number(v["tol"], "/verify/tol");
      if (tol < 0.0) throw SceneError("/verify/tol", "must be nonnegative");
      vc.tol = tol;
    }
  }
  return scene;
}

Scene load_scene(const std::filesystem::path& path) {
  return parse_scene(read_file(path));
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t v) { return fmt::format("{:016x}", v); }

std::string function_to_jsonl(const FunctionSample& f) {
  std::string out;
  for (const auto& p : f.pairs()) {
    out += "{\"x\":";
    append_point(out, p.x);
    out += ",\"y\":";
    append_point(out, p.y);
    if (p.provenance) {
      const Provenance& pv = *p.provenance;
      out += fmt::format(",\"prov\":{{\"source\":\"{}\",\"layer\":{},\"anchor\":", to_string(pv.source),
                         pv.layer);
      append_point(out, pv.anchor);
      out += fmt::format(",\"k\":{}}}", pv.k);
    }
    out += "}\n";
  }
  return out;
}

FunctionSample function_from_jsonl(std::string_view text) {
  std::vector<FunctionPair> pairs;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    auto fail = [&](const std::string& msg) {
      return InputError(fmt::format("function sample line {}: {}", line_no, msg));
    };
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      throw fail(e.what());
    }
    auto coords = [&](const json& a, const char* what) {
      if (!a.is_array()) throw fail(std::string(what) + " must be an array");
      std::vector<double> c;
      for (const auto& v : a) {
        if (!v.is_number()) throw fail(std::string(what) + " has a non-numeric coordinate");
        c.push_back(v.get<double>());
      }
      try {
        return Point(std::move(c));
      } catch (const InputError& e) {
        throw fail(e.what());
      }
    };
    if (!j.is_object() || !j.contains("x") || !j.contains("y")) throw fail("expected x and y");
    FunctionPair pair{coords(j["x"], "x"), coords(j["y"], "y"), std::nullopt};
    if (auto it = j.find("prov"); it != j.end()) {
      const json& pv = *it;
      if (!pv.is_object() || !pv.contains("source") || !pv.contains("layer") ||
          !pv.contains("anchor") || !pv.contains("k") || !pv["source"].is_string() ||
          !pv["layer"].is_number_integer() || !pv["k"].is_number_integer()) {
        throw fail("malformed provenance");
      }
      Provenance p;
      try {
        p.source = source_from_string(pv["source"].get<std::string>());
      } catch (const InputError& e) {
        throw fail(e.what());
      }
      p.layer = pv["layer"].get<int>();
      p.k = pv["k"].get<int>();
      p.anchor = coords(pv["anchor"], "anchor");
      pair.provenance = std::move(p);
    }
    pairs.push_back(std::move(pair));
  }
  return FunctionSample(std::move(pairs));
}

std::string dump_json(const nlohmann::ordered_json& j, int indent) {
  std::string out;
  dump_value(j, indent, 0, out);
  out += '\n';
  return out;
}

}  // namespace cluster_forge
