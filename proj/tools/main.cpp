#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "gbasic/generate.hpp"
#include "gbasic/io.hpp"
#include "gbasic/parallel.hpp"

using namespace gbasic;

namespace {

struct GlobalOpts {
  std::string field_name = "Q";
  unsigned long prime = 0;
  std::string format = "text";
  int threads = 1;
};

Field make_field(const GlobalOpts& g) {
  if (g.field_name == "Q") {
    if (g.prime) throw validation_error("--prime only applies to --field Fp");
    return Field::rationals();
  }
  if (g.field_name == "Fp") {
    if (!g.prime) throw validation_error("--field Fp requires --prime");
    return Field::prime_field(g.prime);
  }
  throw validation_error("--field must be Q or Fp");
}

void emit(const GlobalOpts& g, const json& j, const std::string& text) {
  if (g.format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

std::string betti_text(const BettiTable& t) {
  int max_row = 0;
  long totals[3] = {0, 0, 0};
  for (const auto& [ij, b] : t.entries) {
    max_row = std::max(max_row, ij.second - ij.first);
    totals[ij.first] += b;
  }
  std::ostringstream out;
  auto cell = [&](const std::string& s) { out << std::setw(7) << s; };
  cell("");
  for (int i = 0; i <= 2; ++i) cell(std::to_string(i));
  out << "\n";
  cell("total:");
  for (int i = 0; i <= 2; ++i) cell(std::to_string(totals[i]));
  out << "\n";
  for (int d = 0; d <= max_row; ++d) {
    cell(std::to_string(d) + ":");
    for (int i = 0; i <= 2; ++i) {
      long b = t.beta(i, d + i);
      cell(b == 0 ? "." : std::to_string(b));
    }
    out << "\n";
  }
  auto degree_line = [&](const char* label, const std::vector<int>& ds) {
    out << label;
    for (int d : ds) out << " " << d;
    out << "\n";
  };
  degree_line("b-degrees (generators):", t.b_degrees);
  degree_line("a-degrees (syzygies):", t.a_degrees);
  return out.str();
}

std::string cb_report_text(const CBReport& r) {
  std::ostringstream out;
  out << "CB index: " << r.cb_index << "\n";
  out << "syzygy degrees: a_min = " << r.a_min << ", a_max = " << r.a_max
      << "\n";
  out << "bound " << r.a_min - 3 << " <= " << r.cb_index
      << " <= " << r.a_max - 3 << ": "
      << (r.bound_holds ? "holds" : "VIOLATED") << "\n";
  out << "per degree:";
  for (const auto& [l, good] : r.per_degree)
    out << " CB_" << l << "=" << (good ? "true" : "false");
  out << "\n";
  return out.str();
}

struct Certificate {
  json rows = json::array();
  std::string text;
  bool all_ok = true;
};

Certificate width_certificate(const ModulePresentation& m,
                              const std::vector<Section>& sections,
                              const PointSet& z,
                              const std::vector<int>& targets) {
  Certificate cert;
  std::ostringstream out;
  out << std::left << std::setw(20) << "point" << std::setw(8) << "target"
      << std::setw(8) << "width" << "ok\n";
  for (int i = 0; i < z.size(); ++i) {
    int width = section_images_in_fiber(m, sections, z[i]).width;
    bool ok = width >= targets[i];
    cert.all_ok = cert.all_ok && ok;
    out << std::left << std::setw(20) << z[i].str() << std::setw(8)
        << targets[i] << std::setw(8) << width << (ok ? "yes" : "NO") << "\n";
    cert.rows.push_back(json{{"point", i},
                             {"target", targets[i]},
                             {"width", width},
                             {"ok", ok}});
  }
  cert.text = out.str();
  return cert;
}

std::vector<int> checked_weights(const std::vector<int>& weights,
                                 const PointSet& z) {
  if (static_cast<int>(weights.size()) == z.size()) return weights;
  if (weights.size() == 1)
    return std::vector<int>(z.size(), weights[0]);
  throw validation_error("--weights needs one value per point (or one for all)");
}

void write_output(const std::string& path, const json& j) {
  if (path.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw validation_error("cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graded basic elements: fibers, shrinking, Betti tables, "
               "Cayley-Bacharach indices"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOpts g;
  app.add_option("--field", g.field_name, "coefficient field (Q or Fp)")
      ->capture_default_str();
  app.add_option("--prime", g.prime, "prime p for --field Fp");
  app.add_option("--format", g.format, "output format (text or json)")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--threads", g.threads,
                 "worker threads (0 = all cores; env GRADED_BASIC_THREADS "
                 "overrides)")
      ->capture_default_str();

  int exit_code = 0;

  // cb index | check | bounds
  CLI::App* cb = app.add_subcommand("cb", "Cayley-Bacharach computations");
  cb->require_subcommand(1);
  cb->fallthrough();
  static std::string cb_points_path;
  static int cb_degree = 0;

  CLI::App* cb_idx = cb->add_subcommand("index", "largest l with CB_l");
  cb_idx->add_option("points", cb_points_path, "points.json")->required();
  cb_idx->callback([&] {
    Field field = make_field(g);
    PointSet z = points_from_json(load_json_file(cb_points_path), field);
    int idx = cb_index(z, resolve_threads(g.threads));
    emit(g, json{{"cb_index", idx}},
         "CB index: " + std::to_string(idx) + "\n");
  });

  CLI::App* cb_chk = cb->add_subcommand("check", "test CB_l for one degree");
  cb_chk->add_option("points", cb_points_path, "points.json")->required();
  cb_chk->add_option("--degree", cb_degree, "degree l")->required();
  cb_chk->callback([&] {
    Field field = make_field(g);
    PointSet z = points_from_json(load_json_file(cb_points_path), field);
    bool good = satisfies_cb(z, cb_degree, resolve_threads(g.threads));
    emit(g, json{{"degree", cb_degree}, {"satisfied", good}},
         "CB_" + std::to_string(cb_degree) + ": " +
             (good ? "true" : "false") + "\n");
  });

  CLI::App* cb_bounds = cb->add_subcommand(
      "bounds", "CB index against the syzygy-degree bounds");
  cb_bounds->add_option("points", cb_points_path, "points.json")->required();
  cb_bounds->callback([&] {
    Field field = make_field(g);
    PointSet z = points_from_json(load_json_file(cb_points_path), field);
    CBReport r = verify_bounds(z, resolve_threads(g.threads));
    emit(g, cb_report_to_json(r), cb_report_text(r));
    if (!r.bound_holds) exit_code = 2;
  });

  // betti
  static std::string betti_points_path;
  CLI::App* betti_cmd =
      app.add_subcommand("betti", "graded Betti numbers of S/I_Z");
  betti_cmd->add_option("points", betti_points_path, "points.json")
      ->required();
  betti_cmd->callback([&] {
    Field field = make_field(g);
    PointSet z = points_from_json(load_json_file(betti_points_path), field);
    BettiTable t = betti_table(z, resolve_threads(g.threads));
    emit(g, betti_to_json(t), betti_text(t));
  });

  // mu
  static std::string mod_path, pts_path, secs_path, lform;
  CLI::App* mu_cmd =
      app.add_subcommand("mu", "minimal generator counts of fibers");
  mu_cmd->add_option("module", mod_path, "module.json")->required();
  mu_cmd->add_option("points", pts_path, "points.json")->required();
  mu_cmd->add_option("--linear-form", lform,
                     "dehomogenizer L (default: per-point coordinate)");
  mu_cmd->callback([&] {
    Field field = make_field(g);
    ModulePresentation m =
        module_from_json(load_json_file(mod_path), field);
    PointSet z = points_from_json(load_json_file(pts_path), field);
    json rows = json::array();
    std::ostringstream out;
    out << std::left << std::setw(20) << "point" << "mu\n";
    for (int i = 0; i < z.size(); ++i) {
      int mu_i = lform.empty()
                     ? mu(m, z[i])
                     : mu(m, z[i],
                          HomogPoly::parse(lform, m.num_vars(), field, 1));
      rows.push_back(json{{"point", i}, {"mu", mu_i}});
      out << std::left << std::setw(20) << z[i].str() << mu_i << "\n";
    }
    emit(g, json{{"results", std::move(rows)}}, out.str());
  });

  // fitting
  static int fitting_index = 0;
  CLI::App* fit_cmd =
      app.add_subcommand("fitting", "Fitting ideal vanishing at points");
  fit_cmd->add_option("module", mod_path, "module.json")->required();
  fit_cmd->add_option("points", pts_path, "points.json")->required();
  fit_cmd->add_option("--index", fitting_index, "Fitting index i")->required();
  fit_cmd->add_option("--linear-form", lform, "dehomogenizer L");
  fit_cmd->callback([&] {
    Field field = make_field(g);
    ModulePresentation m =
        module_from_json(load_json_file(mod_path), field);
    PointSet z = points_from_json(load_json_file(pts_path), field);
    json rows = json::array();
    std::ostringstream out;
    out << "Fitt_" << fitting_index << " vanishing\n";
    out << std::left << std::setw(20) << "point" << "vanishes\n";
    for (int i = 0; i < z.size(); ++i) {
      bool v = lform.empty()
                   ? fitting_vanishes_at(m, fitting_index, z[i])
                   : fitting_vanishes_at(
                         m, fitting_index, z[i],
                         HomogPoly::parse(lform, m.num_vars(), field, 1));
      rows.push_back(json{{"point", i}, {"vanishes", v}});
      out << std::left << std::setw(20) << z[i].str() << (v ? "yes" : "no")
          << "\n";
    }
    emit(g, json{{"index", fitting_index}, {"results", std::move(rows)}},
         out.str());
  });

  // shrink
  static std::vector<int> weights;
  CLI::App* shrink_cmd = app.add_subcommand(
      "shrink", "one round of the finite shrinking procedure");
  shrink_cmd->add_option("module", mod_path, "module.json")->required();
  shrink_cmd->add_option("sections", secs_path, "sections.json")->required();
  shrink_cmd->add_option("points", pts_path, "points.json")->required();
  shrink_cmd->add_option("--weights", weights, "per-point weights w_i")
      ->required()
      ->delimiter(',');
  shrink_cmd->callback([&] {
    Field field = make_field(g);
    ModulePresentation m =
        module_from_json(load_json_file(mod_path), field);
    std::vector<Section> secs =
        sections_from_json(load_json_file(secs_path), m);
    PointSet z = points_from_json(load_json_file(pts_path), field);
    std::vector<int> w = checked_weights(weights, z);
    ShrinkResult res = shrink_once(m, secs, z.points(), w);
    int u = static_cast<int>(secs.size());
    std::vector<int> targets;
    for (int wi : w) targets.push_back(std::min(u - 1, wi));
    Certificate cert = width_certificate(m, res.sections, z, targets);
    std::ostringstream out;
    out << "L = " << res.step.dehomogenizer.str() << "\n";
    for (std::size_t j = 0; j < res.step.lambdas.size(); ++j)
      out << "lambda_" << j + 2 << " = " << res.step.lambdas[j].str()
          << "   r_" << j + 2 << " = " << res.step.realized[j].str() << "\n";
    out << cert.text;
    emit(g,
         json{{"step", shrink_step_to_json(res.step)},
              {"sections", sections_to_json(res.sections)},
              {"certificate", cert.rows}},
         out.str());
    if (!cert.all_ok) exit_code = 1;
  });

  // basic
  static int keep = 1;
  CLI::App* basic_cmd = app.add_subcommand(
      "basic", "iterated shrinking down to t basic sections");
  basic_cmd->add_option("module", mod_path, "module.json")->required();
  basic_cmd->add_option("sections", secs_path, "sections.json")->required();
  basic_cmd->add_option("points", pts_path, "points.json")->required();
  basic_cmd->add_option("--weights", weights, "per-point weights w_i")
      ->required()
      ->delimiter(',');
  basic_cmd->add_option("--keep", keep, "number of sections to keep (t)")
      ->required();
  basic_cmd->callback([&] {
    Field field = make_field(g);
    ModulePresentation m =
        module_from_json(load_json_file(mod_path), field);
    std::vector<Section> secs =
        sections_from_json(load_json_file(secs_path), m);
    PointSet z = points_from_json(load_json_file(pts_path), field);
    std::vector<int> w = checked_weights(weights, z);
    BasicElementsResult res = basic_elements(m, secs, z.points(), w, keep);
    std::vector<int> targets;
    for (int wi : w) targets.push_back(std::min(keep, wi));
    Certificate cert = width_certificate(m, res.sections, z, targets);
    std::ostringstream out;
    out << "kept " << keep << " of " << secs.size() << " sections, degrees:";
    for (const Section& s : res.sections) out << " " << s.degree();
    out << "\ntransform:\n";
    const UnipotentTransform& t = res.transform;
    for (int i = 0; i < t.size(); ++i) {
      out << "  [";
      for (int j = 0; j < t.size(); ++j)
        out << (j ? ", " : "") << t.entry(i, j).str();
      out << "]\n";
    }
    out << cert.text;
    emit(g,
         json{{"transform", transform_to_json(res.transform)},
              {"sections", sections_to_json(res.sections)},
              {"certificate", cert.rows}},
         out.str());
    if (!cert.all_ok) exit_code = 1;
  });

  // serre
  CLI::App* serre_cmd = app.add_subcommand(
      "serre", "one section dropping every listed fiber's mu by 1");
  serre_cmd->add_option("module", mod_path, "module.json")->required();
  serre_cmd->add_option("sections", secs_path, "sections.json")->required();
  serre_cmd->add_option("points", pts_path, "points.json")->required();
  serre_cmd->callback([&] {
    Field field = make_field(g);
    ModulePresentation m =
        module_from_json(load_json_file(mod_path), field);
    std::vector<Section> secs =
        sections_from_json(load_json_file(secs_path), m);
    PointSet z = points_from_json(load_json_file(pts_path), field);
    Section s = serre_section(m, secs, z.points());
    std::vector<Section> out_secs{s};
    std::vector<int> targets(z.size(), 1);
    Certificate cert = width_certificate(m, out_secs, z, targets);
    std::ostringstream out;
    out << "section degree " << s.degree() << ":\n";
    for (const HomogPoly& f : s.coords()) out << "  " << f.str() << "\n";
    out << cert.text;
    emit(g,
         json{{"section", section_to_json(s)}, {"certificate", cert.rows}},
         out.str());
    if (!cert.all_ok) exit_code = 1;
  });

  // generate
  static std::string out_path;
  static int grid_a = 3, grid_b = 3, rand_n = 6;
  static unsigned long rand_seed = 0;
  CLI::App* gen = app.add_subcommand("generate", "emit point configurations");
  gen->require_subcommand(1);
  gen->fallthrough();
  gen->add_option("--out", out_path, "output path (default: stdout)");

  CLI::App* gen_grid = gen->add_subcommand("grid", "a x b grid");
  gen_grid->add_option("--a", grid_a, "rows")->capture_default_str();
  gen_grid->add_option("--b", grid_b, "columns")->capture_default_str();
  gen_grid->callback([&] {
    write_output(out_path,
                 points_to_json(grid_points(grid_a, grid_b, make_field(g))));
  });

  CLI::App* gen_rand = gen->add_subcommand("random", "seeded random points");
  gen_rand->add_option("--n", rand_n, "point count")->capture_default_str();
  gen_rand->add_option("--seed", rand_seed, "seed")->capture_default_str();
  gen_rand->callback([&] {
    write_output(out_path,
                 points_to_json(random_points(rand_n, rand_seed,
                                              make_field(g))));
  });

  CLI::App* gen_simplex =
      gen->add_subcommand("simplex", "coordinate points of P^2");
  gen_simplex->callback([&] {
    write_output(out_path, points_to_json(simplex_points(make_field(g))));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const hypothesis_error& e) {
    std::cerr << "hypothesis violated at point " << e.point_index << ": "
              << e.what() << "\n";
    return 3;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
