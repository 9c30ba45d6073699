// Experiment driver for the toric patch kernel: samples patches, runs the
// IPF blending solver, certifies injectivity, builds regular
// triangulations, and sweeps toric degenerations. All outputs are
// deterministic; CSV numbers carry 17 significant digits.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "toric/toric.hpp"

namespace fs = std::filesystem;
using namespace toric;

namespace {

struct ExperimentSpec {
  std::string config_path;
  std::string controls_path;
  std::string weights_path;
  std::string lifting_path;
  std::string projection_path;
  std::string out_dir = ".";
  int grid = 0;  // 0 = per-dimension default: 201 (d=1), 101 (d=2), 21 (d=3)
  double tol = 1e-9;
  std::vector<double> t_values;
  long seed = 0;  // reserved for randomized workflows; outputs are grid-based
  std::string schedule = "theorem";
};

WeightVector weights_or_ones(const ExperimentSpec& opt, std::size_t n) {
  if (opt.weights_path.empty()) return WeightVector::ones(n);
  WeightVector w = load_weights(opt.weights_path);
  if (w.size() != n) throw ParseError("weights length does not match configuration");
  return w;
}

int grid_for(const ExperimentSpec& opt, int dim) {
  if (opt.grid > 0) return opt.grid;
  return dim == 1 ? 201 : dim == 2 ? 101 : 21;
}

std::string out_path(const ExperimentSpec& opt, const std::string& name) {
  fs::create_directories(opt.out_dir);
  return (fs::path(opt.out_dir) / name).string();
}

std::vector<Vec> grid_points(const PointConfig& config, const Polytope& poly,
                             int per_axis, bool interior_only) {
  auto pts = toric::detail::domain_grid(config, poly, per_axis);
  if (!interior_only) return pts;
  double scale = 1.0;
  for (const auto& p : config.points)
    for (double c : p) scale = std::max(scale, std::abs(c));
  std::vector<Vec> out;
  for (auto& x : pts) {
    bool ok = true;
    for (std::size_t i = 0; i < poly.facets.size() && ok; ++i)
      if (poly.eval(i, x) < 1e-6 * scale) ok = false;
    if (ok) out.push_back(std::move(x));
  }
  return out;
}

int run_sample(const ExperimentSpec& opt) {
  const PointConfig config = load_config(opt.config_path);
  const ControlPoints controls = load_controls(opt.controls_path);
  const Polytope poly = convex_hull(config);
  const WeightVector w = weights_or_ones(opt, config.points.size());
  std::vector<std::string> header;
  for (int j = 1; j <= config.dim; ++j) header.push_back("x_" + std::to_string(j));
  for (int j = 1; j <= controls.ambient_dim; ++j) header.push_back("F_" + std::to_string(j));
  std::vector<std::vector<CsvCell>> rows;
  for (const auto& x : grid_points(config, poly, grid_for(opt, config.dim), false)) {
    std::vector<CsvCell> row;
    for (double c : x) row.emplace_back(c);
    for (double c : patch_eval(config, poly, w, controls, x)) row.emplace_back(c);
    rows.push_back(std::move(row));
  }
  const std::string path = out_path(opt, "sample.csv");
  write_csv(path, header, rows);
  std::cout << "sample: " << rows.size() << " rows -> " << path << "\n";
  return 0;
}

int run_blend(const ExperimentSpec& opt) {
  const PointConfig config = load_config(opt.config_path);
  const Polytope poly = convex_hull(config);
  const WeightVector w = weights_or_ones(opt, config.points.size());
  std::vector<std::string> header;
  for (int j = 1; j <= config.dim; ++j) header.push_back("x_" + std::to_string(j));
  for (std::size_t a = 0; a < config.points.size(); ++a)
    header.push_back("z_" + std::to_string(a));
  std::vector<std::vector<CsvCell>> rows;
  for (const auto& x : grid_points(config, poly, grid_for(opt, config.dim), false)) {
    std::vector<CsvCell> row;
    for (double c : x) row.emplace_back(c);
    for (double c : blend(config, poly, w, x)) row.emplace_back(c);
    rows.push_back(std::move(row));
  }
  const std::string path = out_path(opt, "blend.csv");
  write_csv(path, header, rows);
  std::cout << "blend: " << rows.size() << " rows -> " << path << "\n";
  return 0;
}

int run_ipf(const ExperimentSpec& opt) {
  const PointConfig config = load_config(opt.config_path);
  const Polytope poly = convex_hull(config);
  const WeightVector w = weights_or_ones(opt, config.points.size());
  const HomogenizedConfig h = homogenize(config);
  std::vector<std::string> header;
  for (int j = 1; j <= config.dim; ++j) header.push_back("y_" + std::to_string(j));
  header.push_back("iterations");
  header.push_back("error");
  for (std::size_t a = 0; a < config.points.size(); ++a)
    header.push_back("z_" + std::to_string(a));
  std::vector<std::vector<CsvCell>> rows;
  long worst = 0;
  for (const auto& y : grid_points(config, poly, grid_for(opt, config.dim), true)) {
    const IpfResult r = ipf_solve(h, w, y, opt.tol, 100000);
    worst = std::max(worst, r.iterations);
    std::vector<CsvCell> row;
    for (double c : y) row.emplace_back(c);
    row.emplace_back(r.iterations);
    row.emplace_back(r.final_error);
    for (double c : r.p) row.emplace_back(c);
    rows.push_back(std::move(row));
  }
  const std::string path = out_path(opt, "ipf.csv");
  write_csv(path, header, rows);
  std::cout << "ipf: " << rows.size() << " interior points, max iterations "
            << worst << " -> " << path << "\n";
  return 0;
}

int run_check_injective(const ExperimentSpec& opt) {
  const PointConfig config = load_config(opt.config_path);
  const ControlPoints controls = load_controls(opt.controls_path);
  CompatibilityVerdict v;
  bool projected = false;
  if (!opt.projection_path.empty()) {
    const AffineMap proj = load_projection(opt.projection_path);
    v = projected_injectivity(config, controls, proj);
    projected = true;
  } else {
    if (controls.ambient_dim != config.dim)
      throw ParseError("control points must live in R^d; pass --projection for embedded patches");
    v = certify_all_weights_injective(config, controls.b);
  }
  switch (v.status) {
    case CompatStatus::Compatible:
      std::cout << "Compatible (global sign " << (v.global_sign > 0 ? "+1" : "-1")
                << "): certified injective for all weights\n";
      return 0;
    case CompatStatus::Incompatible: {
      auto fmt = [](const std::vector<int>& s) {
        std::string out = "{";
        for (std::size_t i = 0; i < s.size(); ++i)
          out += (i ? "," : "") + std::to_string(s[i]);
        return out + "}";
      };
      if (projected)
        std::cout << "Incompatible: certificate inconclusive for this projection; witness "
                  << fmt(v.witness_I) << " vs " << fmt(v.witness_J) << "\n";
      else
        std::cout << "Incompatible: some weight vector yields a non-injective patch; witness "
                  << fmt(v.witness_I) << " vs " << fmt(v.witness_J) << "\n";
      return 2;
    }
    case CompatStatus::AllDegenerate:
      std::cout << "AllDegenerate: every orientation product vanishes; certificate inconclusive\n";
      return 3;
  }
  return 65;
}

int run_triangulate(const ExperimentSpec& opt) {
  const PointConfig config = load_config(opt.config_path);
  LiftingFunction lambda = load_lifting(opt.lifting_path);
  Triangulation t;
  bool perturbed = false;
  try {
    t = regular_triangulation(config, lambda);
  } catch (const NonGenericLifting&) {
    lambda = perturb_lifting(lambda, config);
    t = regular_triangulation(config, lambda);
    perturbed = true;
  }
  const std::string text = triangulation_to_text(t);
  const std::string path = out_path(opt, "triangulation.txt");
  std::ofstream out(path);
  out << text << "\n";
  std::cout << "triangulate: " << t.simplices.size() << " simplices"
            << (perturbed ? " (lifting perturbed for genericity)" : "") << " "
            << text << " -> " << path << "\n";
  return 0;
}

int run_degenerate(const ExperimentSpec& opt) {
  const PointConfig config = load_config(opt.config_path);
  const ControlPoints controls = load_controls(opt.controls_path);
  const Polytope poly = convex_hull(config);
  const std::size_t k = config.points.size();
  const WeightVector base = weights_or_ones(opt, k);

  LiftingFunction lambda;
  if (!opt.lifting_path.empty()) {
    lambda = load_lifting(opt.lifting_path);
    if (lambda.values.size() != k)
      throw ParseError("lifting length does not match configuration");
  } else if (config.dim == 1) {
    // Curve schedules: the theorem's i(m-i), or the halved caption variant.
    const int m = static_cast<int>(k) - 1;
    lambda.values.resize(k);
    const double div = opt.schedule == "caption" ? 2.0 : 1.0;
    for (int i = 0; i <= m; ++i)
      lambda.values[i] = static_cast<double>(i) * static_cast<double>(m - i) / div;
  } else {
    throw ParseError("degenerate needs --lifting for d > 1 configurations");
  }

  std::vector<double> ts = opt.t_values;
  if (ts.empty()) ts = {1.0, 5.0, 100.0};
  DegenerationSchedule schedule(base, lambda, ts);

  Triangulation t_lambda;
  try {
    t_lambda = regular_triangulation(config, lambda);
  } catch (const NonGenericLifting&) {
    t_lambda = regular_triangulation(config, perturb_lifting(lambda, config));
  }
  const SimplicialComplexEmbedding complex = control_polytope(t_lambda, controls);

  double kappa = 0.0;
  for (const auto& b : controls.b) kappa = std::max(kappa, norm2(b));

  std::vector<std::vector<CsvCell>> rows;
  for (std::size_t ti = 0; ti < schedule.t_values.size(); ++ti) {
    const double t = schedule.t_values[ti];
    const WeightVector w = degenerate_weights(base, lambda, t);
    const DistanceReport rep = patch_complex_distance(config, poly, w, controls,
                                                      complex, grid_for(opt, config.dim));
    rows.push_back({CsvCell(t), CsvCell(rep.sup_patch_to_complex),
                    CsvCell(rep.sup_complex_to_patch), CsvCell(rep.samples)});
    std::cout << "degenerate: t=" << t
              << " patch->complex=" << fmt17(rep.sup_patch_to_complex)
              << " complex->patch=" << fmt17(rep.sup_complex_to_patch) << "\n";

    if (config.dim == 1 && controls.ambient_dim == 2) {
      std::vector<Vec> curve;
      double lo = config.points[0][0], hi = lo;
      for (const auto& p : config.points) {
        lo = std::min(lo, p[0]);
        hi = std::max(hi, p[0]);
      }
      for (int i = 0; i <= 400; ++i) {
        const double x = lo + (hi - lo) * i / 400.0;
        curve.push_back(patch_eval(config, poly, w, controls, {x}));
      }
      std::vector<Vec> polygon = controls.b;
      const double eps = t > 1.0 ? kappa * (k - 1) / t : 0.0;
      write_curve_svg(out_path(opt, "curve_t" + std::to_string(ti) + ".svg"),
                      curve, polygon, eps);
    }
    if (config.dim == 2 && controls.ambient_dim == 3) {
      // Patch surface mesh over the filtered grid cells of the bounding box.
      std::vector<Vec> verts;
      std::vector<std::vector<int>> faces;
      const int grid = grid_for(opt, config.dim);
      std::vector<std::vector<int>> index(grid, std::vector<int>(grid, -1));
      Vec lo(2), hi(2);
      for (int j = 0; j < 2; ++j) {
        lo[j] = hi[j] = config.points[0][j];
        for (const auto& p : config.points) {
          lo[j] = std::min(lo[j], p[j]);
          hi[j] = std::max(hi[j], p[j]);
        }
      }
      for (int i = 0; i < grid; ++i)
        for (int j = 0; j < grid; ++j) {
          Vec x = {lo[0] + (hi[0] - lo[0]) * i / (grid - 1.0),
                   lo[1] + (hi[1] - lo[1]) * j / (grid - 1.0)};
          bool inside = true;
          for (std::size_t f = 0; f < poly.facets.size() && inside; ++f)
            if (poly.eval(f, x) < -1e-12) inside = false;
          if (!inside) continue;
          index[i][j] = static_cast<int>(verts.size());
          verts.push_back(patch_eval(config, poly, w, controls, x));
        }
      for (int i = 0; i + 1 < grid; ++i)
        for (int j = 0; j + 1 < grid; ++j) {
          const int v00 = index[i][j], v10 = index[i + 1][j];
          const int v01 = index[i][j + 1], v11 = index[i + 1][j + 1];
          if (v00 >= 0 && v10 >= 0 && v11 >= 0) faces.push_back({v00, v10, v11});
          if (v00 >= 0 && v11 >= 0 && v01 >= 0) faces.push_back({v00, v11, v01});
        }
      write_obj(out_path(opt, "patch_t" + std::to_string(ti) + ".obj"), verts, faces);
    }
  }
  write_csv(out_path(opt, "distances.csv"),
            {"t", "sup_patch_to_complex", "sup_complex_to_patch", "samples"}, rows);
  if (config.dim == 2 && controls.ambient_dim == 3) {
    std::vector<Vec> verts = controls.b;
    std::vector<std::vector<int>> faces = t_lambda.simplices;
    write_obj(out_path(opt, "control_polytope.obj"), verts, faces);
  }
  std::cout << "degenerate: wrote " << rows.size() << " reports -> "
            << out_path(opt, "distances.csv") << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"toric patch kernel driver"};
  app.require_subcommand(1);
  ExperimentSpec opt;

  auto add_common = [&](CLI::App* sub, bool needs_controls, bool needs_lifting) {
    sub->add_option("--config", opt.config_path, "point configuration JSON")->required();
    if (needs_controls)
      sub->add_option("--controls", opt.controls_path, "control points JSON")->required();
    else
      sub->add_option("--controls", opt.controls_path, "control points JSON");
    sub->add_option("--weights", opt.weights_path, "weights JSON");
    if (needs_lifting)
      sub->add_option("--lifting", opt.lifting_path, "lifting JSON")->required();
    else
      sub->add_option("--lifting", opt.lifting_path, "lifting JSON");
    sub->add_option("--projection", opt.projection_path, "affine projection JSON");
    sub->add_option("--grid", opt.grid, "samples per axis (default 201/101/21 by dimension)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--tol", opt.tol, "solver tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--t", opt.t_values, "degeneration t values")->delimiter(',');
    sub->add_option("--out", opt.out_dir, "output directory");
    sub->add_option("--seed", opt.seed, "random seed (outputs are deterministic)");
    sub->add_option("--schedule", opt.schedule, "curve weight schedule: theorem|caption")
        ->check(CLI::IsMember({"theorem", "caption"}));
  };

  auto* sample = app.add_subcommand("sample", "sample the patch map over a grid");
  add_common(sample, true, false);
  auto* blend_cmd = app.add_subcommand("blend", "sample the blending vectors over a grid");
  add_common(blend_cmd, false, false);
  auto* ipf = app.add_subcommand("ipf", "invert the tautological projection on an interior grid");
  add_common(ipf, false, false);
  auto* check = app.add_subcommand("check-injective", "all-weights injectivity certificate");
  add_common(check, true, false);
  auto* tri = app.add_subcommand("triangulate", "regular triangulation from a lifting");
  add_common(tri, false, true);
  auto* degen = app.add_subcommand("degenerate", "toric degeneration distance sweep");
  add_common(degen, true, false);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*sample) return run_sample(opt);
    if (*blend_cmd) return run_blend(opt);
    if (*ipf) return run_ipf(opt);
    if (*check) return run_check_injective(opt);
    if (*tri) return run_triangulate(opt);
    if (*degen) return run_degenerate(opt);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 64;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 65;
  }
  return 0;
}
