// lktw: command-line driver for the linking, twisting, writhing, helicity and
// Biot-Savart computations.
//
// Exit codes: 0 success, 2 invalid input, 3 failed geometric precondition or
// unsupported format.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "lktw/lktw.hpp"

namespace {

using lktw::io::json;

struct Options {
  std::vector<std::string> files;
  std::string preset;
  std::string space;
  std::string format = "parallel";
  int n = 256;
  std::optional<double> eps;
  std::uint64_t seed = 1;
  int turns = 1;
  double radius = 1.0;
  int threads = 1;
  double tolerance = 1e-6;
  std::string out;
};

void add_common(CLI::App* cmd, Options& o, bool files = true) {
  if (files) cmd->add_option("files", o.files, "Input JSON file(s)");
  cmd->add_option("--preset", o.preset, "Built-in preset instead of a file (see `presets list`)");
  cmd->add_option("--space", o.space, "Space for presets defined on several spaces: r3, s3 or h3");
  cmd->add_option("--format", o.format, "Transport format: parallel or left")->capture_default_str();
  cmd->add_option("--n", o.n, "Quadrature nodes per curve and preset sample count")->capture_default_str();
  cmd->add_option("--eps", o.eps, "Ribbon width");
  cmd->add_option("--seed", o.seed, "Seed for random presets")->capture_default_str();
  cmd->add_option("--turns", o.turns, "Normal turns for r3-circle-ribbon")->capture_default_str();
  cmd->add_option("--radius", o.radius, "Ball radius for random-ball")->capture_default_str();
  cmd->add_option("--threads", o.threads, "Worker threads (0 = all)")->capture_default_str();
  cmd->add_option("--out", o.out, "Also write the result as JSON to this path");
}

lktw::QuadratureConfig config(const Options& o) {
  lktw::QuadratureConfig c;
  c.n_outer = c.n_inner = o.n;
  c.threads = o.threads;
  c.tolerance = o.tolerance;
  c.validate();
  return c;
}

json preset_json(const Options& o) {
  json p{{"name", o.preset}, {"n", o.n}, {"seed", o.seed}, {"turns", o.turns}, {"radius", o.radius}};
  if (o.eps) p["eps"] = *o.eps;
  json j{{"kind", "preset"}, {"preset", p}};
  if (!o.space.empty()) j["space"] = o.space;
  return j;
}

/// The input documents: the preset, or each file.
std::vector<json> inputs(const Options& o, std::size_t max_files) {
  if (!o.preset.empty()) {
    if (!o.files.empty()) throw lktw::input_error("give either input files or --preset, not both");
    return {preset_json(o)};
  }
  if (o.files.empty()) throw lktw::input_error("no input: give a JSON file or --preset");
  if (o.files.size() > max_files) throw lktw::input_error("too many input files");
  std::vector<json> docs;
  for (const auto& f : o.files) docs.push_back(lktw::io::read_json_file(f));
  return docs;
}

lktw::Space common_space(const std::vector<json>& docs) {
  const lktw::Space s = lktw::io::file_space(docs.front());
  for (const auto& d : docs)
    if (lktw::io::file_space(d) != s) throw lktw::geometry_error("input curves live in different spaces");
  return s;
}

void emit(const Options& o, const json& report) {
  if (!o.out.empty()) lktw::io::write_json_file(o.out, report);
}

void print_value(const char* name, double v) { std::printf("%s = %.6f\n", name, v); }

// ---------------------------------------------------------------------------

int cmd_link(const Options& o) {
  const auto docs = inputs(o, 2);
  const lktw::Space s = common_space(docs);
  const lktw::Format f = lktw::parse_format(o.format);
  const auto cfg = config(o);
  return lktw::visit_space(s, [&]<class M>(M) {
    std::pair<lktw::ClosedCurve<M>, lktw::ClosedCurve<M>> pair;
    if (docs.size() == 2) {
      pair = {lktw::io::curves_from_json<M>(docs[0], o.eps).curves.at(0),
              lktw::io::curves_from_json<M>(docs[1], o.eps).curves.at(0)};
    } else {
      pair = lktw::io::curves_from_json<M>(docs[0], o.eps).require_pair();
    }
    const double lk = lktw::linking_number(pair.first, pair.second, f, cfg);
    const long r = std::lround(lk);
    print_value("Lk", lk);
    std::printf("Lk (rounded) = %ld\n", r);
    std::printf("|Lk - rounded| = %.3e\n", std::abs(lk - r));
    std::printf("nodes = %d x %d, format = %s, space = %s\n", cfg.n_outer, cfg.n_inner,
                std::string(lktw::to_string(f)).c_str(), std::string(lktw::to_string(s)).c_str());
    emit(o, {{"lk", lk}, {"lk_rounded", r}, {"format", lktw::to_string(f)}, {"space", lktw::to_string(s)},
             {"n", cfg.n_outer}});
    return 0;
  });
}

int cmd_writhe(const Options& o) {
  const auto docs = inputs(o, 1);
  const lktw::Space s = common_space(docs);
  const lktw::Format f = lktw::parse_format(o.format);
  const auto cfg = config(o);
  return lktw::visit_space(s, [&]<class M>(M) {
    const auto d = lktw::io::curves_from_json<M>(docs[0], o.eps);
    const double wr = lktw::writhe(d.curves.at(0), f, cfg);
    print_value("Wr", wr);
    print_value("length", d.curves[0].length());
    emit(o, {{"wr", wr}, {"length", d.curves[0].length()}, {"format", lktw::to_string(f)}});
    return 0;
  });
}

int cmd_twist(const Options& o) {
  const auto docs = inputs(o, 1);
  const lktw::Space s = common_space(docs);
  const lktw::Format f = lktw::parse_format(o.format);
  const auto cfg = config(o);
  return lktw::visit_space(s, [&]<class M>(M) {
    const auto d = lktw::io::curves_from_json<M>(docs[0], o.eps);
    const double tw = lktw::twist(d.require_ribbon().normal(), f, cfg);
    print_value("Tw", tw);
    emit(o, {{"tw", tw}, {"format", lktw::to_string(f)}});
    return 0;
  });
}

int cmd_ltw(const Options& o) {
  const auto docs = inputs(o, 1);
  const lktw::Space s = common_space(docs);
  const lktw::Format f = lktw::parse_format(o.format);
  const auto cfg = config(o);
  return lktw::visit_space(s, [&]<class M>(M) {
    const auto d = lktw::io::curves_from_json<M>(docs[0], o.eps);
    const auto r = lktw::ltw_verify(d.require_ribbon(), f, cfg);
    print_value("Lk", r.lk);
    std::printf("Lk (rounded) = %ld\n", r.lk_rounded);
    print_value("Tw", r.tw);
    print_value("Wr", r.wr);
    std::printf("residual = %.3e\n", r.residual);
    print_value("length", r.length);
    std::printf("width = %g, nodes = %d, format = %s\n", d.ribbon->width(), cfg.n_outer,
                std::string(lktw::to_string(f)).c_str());
    emit(o, {{"lk", r.lk}, {"lk_rounded", r.lk_rounded}, {"tw", r.tw}, {"wr", r.wr}, {"residual", r.residual},
             {"length", r.length}, {"format", lktw::to_string(f)}});
    return 0;
  });
}

int cmd_helicity(const Options& o) {
  const auto docs = inputs(o, 1);
  const lktw::Space s = common_space(docs);
  const lktw::Format f = lktw::parse_format(o.format);
  return lktw::visit_space(s, [&]<class M>(M) {
    const auto field = lktw::io::field_from_json<M>(docs[0]);
    const double h = lktw::helicity(field, f, o.threads);
    const double e = lktw::energy(field);
    const double vol = lktw::compensated_sum(field.weights);
    const double R = lktw::equivalent_ball_radius(s, vol);
    const double N = lktw::bound_N(s, R);
    print_value("H", h);
    print_value("energy", e);
    print_value("volume", vol);
    print_value("R", R);
    print_value("N(R)", N);
    print_value("N(R) * energy", N * e);
    std::printf("bound holds = %s\n", std::abs(h) <= N * e ? "yes" : "no");
    emit(o, {{"helicity", h}, {"energy", e}, {"volume", vol}, {"radius", R}, {"N", N}});
    return 0;
  });
}

int cmd_bs(const Options& o, const std::vector<double>& at) {
  const auto docs = inputs(o, 1);
  const lktw::Space s = common_space(docs);
  return lktw::visit_space(s, [&]<class M>(M) {
    const auto field = lktw::io::field_from_json<M>(docs[0]);
    if (static_cast<int>(at.size()) != M::dim)
      throw lktw::dimension_error("--at needs " + std::to_string(M::dim) + " coordinates");
    lktw::vec_t<M> y;
    for (int k = 0; k < M::dim; ++k) y[k] = at[k];
    if (M::membership_defect(y) > 1e-6) throw lktw::geometry_error("--at is not a point of the space");
    const auto b = lktw::biot_savart_at(field, y);
    std::printf("BS = (");
    for (int k = 0; k < M::dim; ++k) std::printf(k ? ", %.9g" : "%.9g", b[k]);
    std::printf(")\n|BS| = %.9g\n", M::norm(b));
    emit(o, {{"bs", std::vector<double>(b.data(), b.data() + M::dim)}});
    return 0;
  });
}

int cmd_bound(const std::string& space, std::optional<double> radius, std::optional<double> volume, bool sweep,
              int steps, const std::string& out) {
  if (sweep) {
    if (steps < 2) throw lktw::input_error("--steps must be at least 2");
    std::string csv = "R,N_r3,N_s3,N_h3\n";
    char line[160];
    for (int i = 1; i <= steps; ++i) {
      const double R = std::numbers::pi * i / steps;
      std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g,%.17g\n", R, lktw::bound_N(lktw::Space::Euclidean, R),
                    lktw::bound_N(lktw::Space::Sphere3, R), lktw::bound_N(lktw::Space::Hyperbolic3, R));
      csv += line;
    }
    if (out.empty()) {
      std::fputs(csv.c_str(), stdout);
    } else {
      lktw::io::write_text_file(out, csv);
    }
    return 0;
  }
  if (space.empty()) throw lktw::input_error("--space is required unless --sweep is given");
  if (radius.has_value() == volume.has_value()) throw lktw::input_error("give exactly one of --radius and --volume");
  const lktw::Space s = lktw::parse_space(space);
  const double R = radius ? *radius : lktw::equivalent_ball_radius(s, *volume);
  const double N = lktw::bound_N(s, R);
  std::printf("space = %s\n", space.c_str());
  std::printf("R = %.10g\n", R);
  std::printf("N(R) = %.10g\n", N);
  std::printf("1/N(R) = %.10g\n", 1.0 / N);
  if (!out.empty()) lktw::io::write_json_file(out, {{"space", space}, {"R", R}, {"N", N}, {"curl_bound", 1.0 / N}});
  return 0;
}

int cmd_presets_list() {
  std::printf("%-20s %-10s %-7s %s\n", "name", "spaces", "kind", "description");
  for (const auto& p : lktw::io::preset_catalog())
    std::printf("%-20s %-10s %-7s %s\n", p.name.c_str(), p.spaces.c_str(), p.kind.c_str(), p.description.c_str());
  return 0;
}

int cmd_presets_export(const Options& o) {
  const json doc = preset_json(o);
  const lktw::Space s = lktw::io::file_space(doc);
  const bool is_field = lktw::io::find_preset(o.preset).kind == "field";
  const json j = lktw::visit_space(s, [&]<class M>(M) -> json {
    if (is_field) return lktw::io::field_to_json(lktw::io::field_from_json<M>(doc));
    const auto d = lktw::io::curves_from_json<M>(doc, o.eps);
    if (d.ribbon) return lktw::io::ribbon_to_json(*d.ribbon);
    return lktw::io::curve_to_json<M>(d.curves[0], nullptr, std::nullopt, d.curves.size() > 1 ? &d.curves[1] : nullptr);
  });
  if (o.out.empty()) {
    std::cout << j.dump(1) << "\n";
  } else {
    lktw::io::write_json_file(o.out, j);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Linking, twisting, writhing and helicity integrals on R3, S3 and H3"};
  app.require_subcommand(1);

  Options o;
  auto* link = app.add_subcommand("link", "Linking number of two closed curves");
  add_common(link, o);
  auto* writhe = app.add_subcommand("writhe", "Writhe of a closed curve");
  add_common(writhe, o);
  writhe->add_option("--tol", o.tolerance, "Target accuracy; below 1e-4 Richardson extrapolation is used")
      ->capture_default_str();
  auto* twist = app.add_subcommand("twist", "Twist of a ribbon's normal field");
  add_common(twist, o);
  auto* ltw = app.add_subcommand("ltw-verify", "Lk, Tw, Wr of a ribbon and the residual Lk - Tw - Wr");
  add_common(ltw, o);
  ltw->add_option("--tol", o.tolerance, "Writhe target accuracy")->capture_default_str();
  auto* hel = app.add_subcommand("helicity", "Helicity, energy and the bound N(R) * energy of a field");
  add_common(hel, o);
  auto* bs = app.add_subcommand("bs-eval", "Biot-Savart field of a sampled field at a point");
  add_common(bs, o);
  std::vector<double> at;
  bs->add_option("--at", at, "Evaluation point, comma separated")->delimiter(',')->required();

  auto* bound = app.add_subcommand("bound", "The bound N(R) for a ball radius or a volume");
  std::string b_space, b_out;
  std::optional<double> b_radius, b_volume;
  bool b_sweep = false;
  int b_steps = 64;
  bound->add_option("--space", b_space, "r3, s3 or h3");
  bound->add_option("--radius", b_radius, "Ball radius");
  bound->add_option("--volume", b_volume, "Domain volume; the radius of the ball with this volume is used");
  bound->add_flag("--sweep", b_sweep, "CSV of N(R) for R in (0, pi] in all three spaces");
  bound->add_option("--steps", b_steps, "Sweep rows")->capture_default_str();
  bound->add_option("--out", b_out, "Write the result (CSV for --sweep) to this path");

  auto* pre = app.add_subcommand("presets", "Built-in curves, ribbons and fields");
  pre->require_subcommand(1);
  pre->add_subcommand("list", "List the presets");
  auto* pexp = pre->add_subcommand("export", "Write a preset as a JSON input file");
  Options eo;
  add_common(pexp, eo, false);
  pexp->get_option("--preset")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (link->parsed()) return cmd_link(o);
    if (writhe->parsed()) return cmd_writhe(o);
    if (twist->parsed()) return cmd_twist(o);
    if (ltw->parsed()) return cmd_ltw(o);
    if (hel->parsed()) return cmd_helicity(o);
    if (bs->parsed()) return cmd_bs(o, at);
    if (bound->parsed()) return cmd_bound(b_space, b_radius, b_volume, b_sweep, b_steps, b_out);
    if (pexp->parsed()) return cmd_presets_export(eo);
    return cmd_presets_list();
  } catch (const lktw::input_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const lktw::error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return 1;
  }
}
