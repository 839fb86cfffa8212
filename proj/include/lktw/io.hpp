#pragma once

// JSON curve and field files, and the named presets the command-line tool
// can build without any input file.
//
// Curve file:
//   { "space": "s3", "kind": "samples",
//     "parametrization": "arclength" | "uniform", "period": 6.283...,
//     "samples": [[...], ...], "normal": [[...], ...], "width": 0.3,
//     "second": [[...], ...] }
//   { "space": "s3", "kind": "preset",
//     "preset": { "name": "hopf-ribbon", "n": 256, "eps": 0.3, "seed": 1 } }
//
// Field file:
//   { "space": "r3", "kind": "samples", "points": [...], "vectors": [...],
//     "weights": [...], "divergence_free": true, "exclusion_radius": 0.05 }
//   { "space": "s3", "kind": "preset", "preset": { "name": "hopf-field" } }
//
// Numbers are written in the shortest form that reads back to the same double.

#include <Eigen/Core>

#include <cstdint>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "lktw/curves.hpp"
#include "lktw/errors.hpp"
#include "lktw/fields.hpp"
#include "lktw/geometry.hpp"
#include "lktw/presets.hpp"
#include "lktw/samplers.hpp"

namespace lktw::io {

using json = nlohmann::json;

/// Parameters shared by every preset; each preset reads the ones it needs.
struct PresetParams {
  std::string name;
  int n = 256;
  double eps = 0.3;
  std::uint64_t seed = 1;
  int turns = 1;
  double radius = 1.0;
};

struct PresetInfo {
  std::string name;
  std::string spaces;
  std::string kind;
  std::string description;
};

inline const std::vector<PresetInfo>& preset_catalog() {
  static const std::vector<PresetInfo> c{
      {"great-circle", "s3", "curve", "great circle (cos s, sin s, 0, 0)"},
      {"hopf-pair", "s3", "pair", "two orthogonal Hopf fibres, linking number 1"},
      {"hopf-pair-reversed", "s3", "pair", "hopf-pair with the second fibre reversed"},
      {"hopf-ribbon", "s3", "ribbon", "great circle with the left-invariant normal (0, 0, cos s, sin s)"},
      {"split-pair", "r3 s3 h3", "pair", "two small separated circles, linking number 0"},
      {"h3-circle-ribbon", "h3", "ribbon", "circle (sqrt 2, cos s, sin s, 0) with a normal turning once"},
      {"r3-circle-ribbon", "r3", "ribbon", "unit circle with a normal turning `turns` times"},
      {"random-ribbon", "r3 s3 h3", "ribbon", "random smooth ribbon from `seed`"},
      {"hopf-field", "s3", "field", "unit Hopf field i x on a 24 x 48 x 48 Hopf-coordinate grid of S3"},
      {"random-ball", "r3 s3 h3", "field", "random divergence-free field on the ball of radius `radius`"},
  };
  return c;
}

inline const PresetInfo& find_preset(const std::string& name) {
  for (const auto& p : preset_catalog())
    if (p.name == name) return p;
  throw input_error("unknown preset '" + name + "' (see `presets list`)");
}

/// Native space of a preset that lives in one space only.
inline std::optional<Space> preset_space(const std::string& name) {
  const auto& p = find_preset(name);
  if (p.spaces.size() == 2) return parse_space(p.spaces);
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Plain JSON helpers.

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw input_error("'" + path + "' is not valid JSON: " + e.what());
  }
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw input_error("cannot write '" + path + "'");
  out << text;
  if (!out) throw input_error("failed writing '" + path + "'");
}

inline void write_json_file(const std::string& path, const json& j) { write_text_file(path, j.dump(1) + "\n"); }

namespace io_detail {

template <class T>
T get(const json& j, const char* key, const char* what) {
  if (!j.contains(key)) throw input_error(std::string(what) + ": missing field '" + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw input_error(std::string(what) + ": field '" + key + "' has the wrong type");
  }
}

template <class T>
T get_or(const json& j, const char* key, T fallback, const char* what) {
  return j.contains(key) ? get<T>(j, key, what) : fallback;
}

template <Model M>
PointList<M> vectors_from(const json& arr, const char* what) {
  if (!arr.is_array()) throw input_error(std::string(what) + " must be an array of vectors");
  PointList<M> out;
  out.reserve(arr.size());
  for (const auto& row : arr) {
    if (!row.is_array()) throw input_error(std::string(what) + " must be an array of vectors");
    if (static_cast<int>(row.size()) != M::dim)
      throw dimension_error(std::string(what) + ": expected " + std::to_string(M::dim) + "-vectors for space " +
                            std::string(to_string(M::space)) + ", got length " + std::to_string(row.size()));
    vec_t<M> v;
    for (int k = 0; k < M::dim; ++k) {
      if (!row[k].is_number()) throw input_error(std::string(what) + ": vector entries must be numbers");
      v[k] = row[k].get<double>();
    }
    if (!v.allFinite()) throw input_error(std::string(what) + ": non-finite entry");
    out.push_back(v);
  }
  return out;
}

template <Model M>
json vectors_to(const PointList<M>& v) {
  json arr = json::array();
  for (const auto& p : v) {
    json row = json::array();
    for (int k = 0; k < M::dim; ++k) row.push_back(p[k]);
    arr.push_back(std::move(row));
  }
  return arr;
}

inline PresetParams preset_params(const json& p) {
  PresetParams r;
  r.name = get<std::string>(p, "name", "preset");
  r.n = get_or<int>(p, "n", r.n, "preset");
  r.eps = get_or<double>(p, "eps", r.eps, "preset");
  r.seed = get_or<std::uint64_t>(p, "seed", r.seed, "preset");
  r.turns = get_or<int>(p, "turns", r.turns, "preset");
  r.radius = get_or<double>(p, "radius", r.radius, "preset");
  return r;
}

}  // namespace io_detail

/// Space named in a curve or field file; presets may omit it.
inline Space file_space(const json& j) {
  if (!j.is_object()) throw input_error("file must contain a JSON object");
  if (j.contains("space")) return parse_space(io_detail::get<std::string>(j, "space", "file"));
  if (j.contains("preset") && j["preset"].is_object() && j["preset"].contains("name"))
    if (auto s = preset_space(io_detail::get<std::string>(j["preset"], "name", "preset"))) return *s;
  throw input_error("file: missing field 'space'");
}

// ---------------------------------------------------------------------------
// Curves.

/// One or two closed curves, with an optional ribbon on the first.
template <Model M>
struct CurveData {
  std::vector<ClosedCurve<M>> curves;
  std::optional<Ribbon<M>> ribbon;

  const Ribbon<M>& require_ribbon() const {
    if (!ribbon) throw input_error("input has no normal field: a ribbon is required");
    return *ribbon;
  }
  std::pair<ClosedCurve<M>, ClosedCurve<M>> require_pair() const {
    if (curves.size() < 2) throw input_error("input holds a single curve: two are required");
    return {curves[0], curves[1]};
  }
};

template <Model M>
CurveData<M> make_curve_preset(const PresetParams& p) {
  const PresetInfo& info = find_preset(p.name);
  if (info.kind == "field") throw input_error("preset '" + p.name + "' is a field, not a curve");
  if (info.spaces.find(std::string(to_string(M::space))) == std::string::npos)
    throw input_error("preset '" + p.name + "' is not defined on " + std::string(to_string(M::space)));
  CurveData<M> d;
  auto set_ribbon = [&](Ribbon<M> r) {
    d.curves.push_back(r.base());
    d.ribbon = std::move(r);
  };
  if (p.name == "split-pair") {
    auto [a, b] = presets::split_pair<M>(p.n);
    d.curves = {a, b};
  } else if (p.name == "random-ribbon") {
    presets::RandomRibbonOptions opt;
    opt.width = p.eps;
    set_ribbon(presets::random_ribbon<M>(p.seed, p.n, opt));
  } else if constexpr (M::space == Space::Sphere3) {
    if (p.name == "great-circle") {
      d.curves = {presets::great_circle(p.n)};
    } else if (p.name == "hopf-pair" || p.name == "hopf-pair-reversed") {
      auto [a, b] = p.name == "hopf-pair" ? presets::hopf_pair(p.n) : presets::hopf_pair_reversed(p.n);
      d.curves = {a, b};
    } else if (p.name == "hopf-ribbon") {
      set_ribbon(presets::hopf_ribbon(p.n, p.eps));
    }
  } else if constexpr (M::space == Space::Hyperbolic3) {
    if (p.name == "h3-circle-ribbon") set_ribbon(presets::h3_circle_ribbon(p.n, p.eps));
  } else {
    if (p.name == "r3-circle-ribbon") set_ribbon(presets::r3_circle_ribbon(p.n, p.eps, p.turns));
  }
  if (d.curves.empty()) throw input_error("preset '" + p.name + "' is not available here");
  // A ribbon's edge is the natural second curve for linking.
  if (d.ribbon && d.curves.size() == 1) d.curves.push_back(d.ribbon->edge());
  return d;
}

/// Builds the curves of a curve file. `eps`, when set, overrides the width.
template <Model M>
CurveData<M> curves_from_json(const json& j, std::optional<double> eps = std::nullopt) {
  const char* what = "curve file";
  const std::string kind = io_detail::get_or<std::string>(j, "kind", "samples", what);
  if (kind == "preset") {
    if (!j.contains("preset") || !j["preset"].is_object()) throw input_error("curve file: 'preset' must be an object");
    PresetParams p = io_detail::preset_params(j["preset"]);
    if (eps) p.eps = *eps;
    return make_curve_preset<M>(p);
  }
  if (kind != "samples") throw input_error("curve file: kind must be 'samples' or 'preset'");
  const std::string param = io_detail::get_or<std::string>(j, "parametrization", "arclength", what);
  if (param != "arclength" && param != "uniform")
    throw input_error("curve file: parametrization must be 'arclength' or 'uniform'");
  if (!j.contains("samples")) throw input_error("curve file: missing field 'samples'");
  auto build = [&](const PointList<M>& pts) {
    if (param == "uniform") {
      const double period = io_detail::get_or<double>(j, "period", 2 * std::numbers::pi, what);
      for (const auto& p : pts) curve_detail::accept_point<M>(p);
      return ClosedCurve<M>::from_parametrization(pts, period);
    }
    return ClosedCurve<M>::from_samples(pts);
  };
  CurveData<M> d;
  const PointList<M> pts = io_detail::vectors_from<M>(j["samples"], "samples");
  d.curves.push_back(build(pts));
  if (j.contains("normal")) {
    if (param != "uniform")
      throw input_error("curve file: a normal field needs parametrization 'uniform' (samples are kept as given)");
    PointList<M> v = io_detail::vectors_from<M>(j["normal"], "normal");
    if (v.size() != pts.size()) throw dimension_error("curve file: normal and samples differ in length");
    const double width = eps ? *eps : io_detail::get_or<double>(j, "width", 0.3, what);
    d.ribbon = Ribbon<M>(NormalField<M>(d.curves[0], std::move(v)), width);
  }
  if (j.contains("second")) {
    d.curves.push_back(build(io_detail::vectors_from<M>(j["second"], "second")));
  } else if (d.ribbon) {
    d.curves.push_back(d.ribbon->edge());
  }
  return d;
}

/// Curve file for a constructed curve; reading it back gives the same samples.
template <Model M>
json curve_to_json(const ClosedCurve<M>& c, const NormalField<M>* normal = nullptr,
                   std::optional<double> width = std::nullopt, const ClosedCurve<M>* second = nullptr) {
  json j;
  j["space"] = std::string(to_string(M::space));
  j["kind"] = "samples";
  j["parametrization"] = "uniform";
  j["period"] = c.period();
  j["samples"] = io_detail::vectors_to<M>(c.points());
  if (normal) j["normal"] = io_detail::vectors_to<M>(normal->vectors());
  if (width) j["width"] = *width;
  if (second) j["second"] = io_detail::vectors_to<M>(second->points());
  return j;
}

template <Model M>
json ribbon_to_json(const Ribbon<M>& r) {
  return curve_to_json<M>(r.base(), &r.normal(), r.width());
}

// ---------------------------------------------------------------------------
// Fields.

template <Model M>
FieldSample<M> make_field_preset(const PresetParams& p) {
  const PresetInfo& info = find_preset(p.name);
  if (info.kind != "field") throw input_error("preset '" + p.name + "' is a curve, not a field");
  if (p.name == "hopf-field") {
    if constexpr (M::space == Space::Sphere3) {
      auto h = samplers::hopf_grid(24, 48, 48);
      auto f = h.sample.with_vectors(samplers::hopf_field(h.sample, samplers::HopfSide::Left));
      f.divergence_free = true;
      return f;
    }
    throw input_error("preset 'hopf-field' is defined on s3 only");
  }
  auto g = samplers::ball_grid<M>(p.radius);
  auto f = g.with_vectors(samplers::random_ball_field<M>(g, p.radius, p.seed));
  f.divergence_free = M::space == Space::Euclidean;
  return f;
}

template <Model M>
FieldSample<M> field_from_json(const json& j) {
  const char* what = "field file";
  const std::string kind = io_detail::get_or<std::string>(j, "kind", "samples", what);
  if (kind == "preset") {
    if (!j.contains("preset") || !j["preset"].is_object()) throw input_error("field file: 'preset' must be an object");
    return make_field_preset<M>(io_detail::preset_params(j["preset"]));
  }
  if (kind != "samples") throw input_error("field file: kind must be 'samples' or 'preset'");
  FieldSample<M> f;
  if (!j.contains("points") || !j.contains("vectors") || !j.contains("weights"))
    throw input_error("field file needs 'points', 'vectors' and 'weights'");
  f.points = io_detail::vectors_from<M>(j["points"], "points");
  f.vectors = io_detail::vectors_from<M>(j["vectors"], "vectors");
  f.weights = io_detail::get<std::vector<double>>(j, "weights", what);
  f.divergence_free = io_detail::get_or<bool>(j, "divergence_free", false, what);
  f.exclusion_radius = io_detail::get_or<double>(j, "exclusion_radius", 0.0, what);
  if (f.vectors.size() != f.points.size() || f.weights.size() != f.points.size())
    throw dimension_error("field file: points, vectors and weights differ in length");
  f.normalize();
  return f;
}

template <Model M>
json field_to_json(const FieldSample<M>& f) {
  json j;
  j["space"] = std::string(to_string(M::space));
  j["kind"] = "samples";
  j["points"] = io_detail::vectors_to<M>(f.points);
  j["vectors"] = io_detail::vectors_to<M>(f.vectors);
  j["weights"] = f.weights;
  j["divergence_free"] = f.divergence_free;
  j["exclusion_radius"] = f.exclusion_radius;
  return j;
}

}  // namespace lktw::io
