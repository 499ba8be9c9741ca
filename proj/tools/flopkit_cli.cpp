// Batch driver. Every subcommand prints a JSON report to stdout; figure
// subcommands also write SVG files. Randomized checks take an explicit seed
// and identical inputs produce byte-identical output.
//
// Exit codes: 0 success, 1 a verification check failed, 2 malformed input.

#include "flopkit/json_io.hpp"
#include "flopkit/svg.hpp"
#include "flopkit/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

namespace {

using namespace flopkit;

std::string report_dir() {
  const char* env = std::getenv("FLOPKIT_REPORT_DIR");
  return env ? env : ".";
}

json read_json_file(const std::string& path) {
  if (path == "-") return json::parse(std::cin);
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return json::parse(in);
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << content;
}

Side parse_side(const std::string& s) {
  if (s == "-" || s == "minus") return Side::Minus;
  if (s == "+" || s == "plus") return Side::Plus;
  throw std::invalid_argument("side must be + or -");
}

Weight parse_weight(const std::string& s) {
  auto comma = s.find(',');
  if (comma == std::string::npos) throw std::invalid_argument("weight must be a,b");
  return Weight(Int(s.substr(0, comma)), Int(s.substr(comma + 1)));
}

Cubic6 parse_cubic6(const std::string& which) {
  if (which == "fermat") return Cubic6::fermat();
  json j = read_json_file(which);
  Cubic6 f;
  for (const auto& m : j.at("monomials")) {
    auto idx = m.at("indices").get<std::vector<int>>();
    if (idx.size() != 3) throw std::invalid_argument("cubic monomial needs 3 indices");
    std::sort(idx.begin(), idx.end());
    if (idx[0] < 0 || idx[2] > 5) throw std::invalid_argument("cubic index out of range");
    f.coeff[{idx[0], idx[1], idx[2]}] = rat_from_string(m.at("coeff").get<std::string>());
  }
  return f;
}

json window_json(Side side) {
  WindowSet ws = side == Side::Minus ? minus_window() : plus_window();
  WeightSet set = enumerate_window(ws);
  json rules = json::array();
  for (const auto& r : ws.rules)
    rules.push_back(json{{"lambda", {to_i64(r.lambda.w1), to_i64(r.lambda.w2)}},
                         {"eta", to_i64(r.eta)},
                         {"interval", {rat_to_string(r.lo()), rat_to_string(r.hi())}}});
  return json{{"side", side == Side::Minus ? "-" : "+"},
              {"count", set.size()},
              {"rules", rules},
              {"weights", to_json(set)}};
}

std::string windows_svg() {
  SvgSeries minus{enumerate_window(minus_window()), "#c62828", 4.5, false};
  SvgSeries plus{enumerate_window(plus_window()), "#1565c0", 2.5, false};
  return weight_scatter_svg({minus, plus}, -4, 4, "window weights: wide = red, narrow = blue");
}

std::string kernel_svg() {
  SvgSeries support{resolution_of_K().weight_support(), "#2e7d32", 4.0, false};
  SvgSeries deleted{{Weight(2, -2)}, "#1565c0", 4.0, false};
  SvgSeries final_term{{Weight(0, -3)}, "#c62828", 7.0, true};
  return weight_scatter_svg({support, deleted, final_term}, -4, 4,
                            "kernel resolution support (green), deleted weight (blue), final term (red)");
}

std::string closure_svg(const ClosureState& st, const WeightSet& initial) {
  SvgSeries closed{st.generated, "#c62828", 6.0, true};
  SvgSeries init{initial, "#c62828", 3.0, false};
  return weight_scatter_svg({closed, init}, -7, 7, "generation closure");
}

int cmd_verify_all(unsigned long seed, const std::string& report_path) {
  RunReport rep = verify_all(seed);
  json out = rep.to_json();
  std::cout << out.dump(2) << "\n";
  if (!report_path.empty()) write_file(report_path, out.dump(2) + "\n");
  for (const auto& c : rep.checks)
    std::cerr << (c.status == CheckStatus::Pass
                      ? "PASS"
                      : (c.status == CheckStatus::Fail ? "FAIL" : "INCONCLUSIVE"))
              << "  " << c.name << "\n";
  return rep.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic toolkit for windows, characters and Koszul data of a rank-2 GIT flop"};
  app.require_subcommand(1);

  // eta
  auto* eta_cmd = app.add_subcommand("eta", "window widths of the stratification");
  std::string eta_config;
  eta_cmd->add_option("--config", eta_config, "GIT problem JSON (defaults to the built-in one)");

  // windows
  auto* win_cmd = app.add_subcommand("windows", "enumerate a grade-restriction window");
  std::string win_side = "-";
  std::string win_svg;
  long win_box = 8;
  win_cmd->add_option("--side", win_side, "- or +")->required();
  win_cmd->add_option("--box", win_box, "enumeration box bound");
  win_cmd->add_option("--svg", win_svg, "write a scatter SVG here");

  // gamma-table
  auto* gamma_cmd = app.add_subcommand("gamma-table", "character table of the order-18 stabilizer");
  std::string gamma_csv;
  gamma_cmd->add_option("--csv", gamma_csv, "also write the table as CSV");

  // semistable
  auto* ss_cmd = app.add_subcommand("semistable", "test a point for semistability");
  std::string ss_point, ss_side;
  ss_cmd->add_option("--point", ss_point, "point JSON file, or - for stdin")->required();
  ss_cmd->add_option("--side", ss_side, "- or +")->required();

  // slice-weights
  auto* slice_cmd = app.add_subcommand("slice-weights", "residual weights of a local model");
  std::string slice_model;
  slice_cmd->add_option("model", slice_model, "model name")->required();

  // weyman
  auto* wey_cmd = app.add_subcommand("weyman", "pushforward complex of a twisted line bundle");
  std::string wey_model = "lambda2-plus", wey_twist = "-2,2", wey_svg;
  wey_cmd->add_option("--model", wey_model, "resolution model name");
  wey_cmd->add_option("--twist", wey_twist, "line bundle twist a,b (powers of L and T/L)");
  wey_cmd->add_option("--svg", wey_svg, "write the support scatter SVG here");

  // closure
  auto* clo_cmd = app.add_subcommand("closure", "generation closure from the narrow window");
  bool clo_with_k = false, clo_without_k = false;
  long clo_box = 8;
  std::string clo_svg;
  clo_cmd->add_flag("--with-k", clo_with_k, "mark the kernel object as given");
  clo_cmd->add_flag("--without-k", clo_without_k, "sequences only");
  clo_cmd->add_option("--box", clo_box, "box bound");
  clo_cmd->add_option("--svg", clo_svg, "write the closure scatter SVG here");

  // koszul-tor
  auto* kos_cmd = app.add_subcommand("koszul-tor", "lambda-weight report of Koszul homology");
  std::string kos_case = "z1plus";
  int kos_trunc = 6;
  kos_cmd->add_option("--case", kos_case, "z1plus, z1minus, or a problem JSON file");
  kos_cmd->add_option("--truncation", kos_trunc, "internal degree truncation (>= 4)");

  // hom-series
  auto* hom_cmd = app.add_subcommand("hom-series", "graded Hom Euler series between two bundles");
  std::string hom_src = "0,0", hom_tgt = "0,0";
  int hom_n = 6;
  hom_cmd->add_option("--src", hom_src, "source highest weight a,b");
  hom_cmd->add_option("--tgt", hom_tgt, "target highest weight a,b");
  hom_cmd->add_option("--degree", hom_n, "series truncation");

  // critical
  auto* crit_cmd = app.add_subcommand("critical", "stratumwise critical locus report");
  std::string crit_f = "fermat";
  long crit_samples = 1000;
  unsigned long crit_seed = 0;
  crit_cmd->add_option("--f", crit_f, "fermat or a cubic JSON file");
  crit_cmd->add_option("--samples", crit_samples, "double-root sample count");
  crit_cmd->add_option("--seed", crit_seed, "RNG seed");

  // figures
  auto* fig_cmd = app.add_subcommand("figures", "emit the three weight-diagram SVG/JSON pairs");
  std::string fig_dir = report_dir();
  fig_cmd->add_option("--outdir", fig_dir, "output directory (default FLOPKIT_REPORT_DIR or .)");

  // verify-all
  auto* ver_cmd = app.add_subcommand("verify-all", "run the full acceptance registry");
  unsigned long ver_seed = 0;
  std::string ver_report;
  ver_cmd->add_option("--seed", ver_seed, "RNG seed");
  ver_cmd->add_option("--report", ver_report, "write the JSON report here");

  try {
    app.parse(argc, argv);

    if (*eta_cmd) {
      GitProblem p = eta_config.empty() ? GitProblem::standard()
                                        : git_problem_from_json(read_json_file(eta_config));
      json etas = json::array();
      for (const auto& l : p.lambdas)
        etas.push_back(json{{"lambda", {to_i64(l.w1), to_i64(l.w2)}},
                            {"eta", to_i64(eta(p, l))},
                            {"eta_negated", to_i64(eta(p, -l))}});
      std::cout << json{{"calabi_yau", p.calabi_yau()}, {"etas", etas}}.dump(2) << "\n";
      return 0;
    }
    if (*win_cmd) {
      json out = window_json(parse_side(win_side));
      if (win_box != 8) {
        WindowSet ws = parse_side(win_side) == Side::Minus ? minus_window() : plus_window();
        out["weights"] = to_json(enumerate_window(ws, win_box));
      }
      std::cout << out.dump(2) << "\n";
      if (!win_svg.empty()) write_file(win_svg, windows_svg());
      return 0;
    }
    if (*gamma_cmd) {
      GammaCharTable t = character_table();
      std::cout << to_json(t).dump(2) << "\n";
      if (!gamma_csv.empty()) {
        std::ostringstream csv;
        csv << "irrep,dim";
        for (size_t c = 0; c < t.group.classes.size(); ++c) csv << ",class" << c;
        csv << "\n";
        for (const auto& ir : t.irreps) {
          csv << ir.label << "," << ir.dim;
          for (const auto& v : ir.values) csv << "," << v.x << (v.y >= 0 ? "+" : "") << v.y << "w";
          csv << "\n";
        }
        write_file(gamma_csv, csv.str());
      }
      return 0;
    }
    if (*ss_cmd) {
      PointV p = point_from_json(read_json_file(ss_point));
      Side side = parse_side(ss_side);
      bool ss = semistable(p, side);
      std::cout << json{{"side", ss_side}, {"semistable", ss}, {"phi_rank", p.phi_rank()},
                        {"stratum", stratum_name(stratum(p.psi))}}
                       .dump(2)
                << "\n";
      return 0;
    }
    if (*slice_cmd) {
      SliceModel m = slice_weights(slice_model);
      json bw = json::array(), iw = json::array();
      for (const auto& w : m.bundle_weights) bw.push_back(to_i64(w));
      for (const auto& w : m.isotropy_weights) iw.push_back(to_i64(w));
      std::cout << json{{"name", m.name}, {"base", m.base}, {"bundle_weights", bw},
                        {"isotropy_weights", iw}}
                       .dump(2)
                << "\n";
      return 0;
    }
    if (*wey_cmd) {
      Weight tw = parse_weight(wey_twist);
      WeymanComplex c =
          weyman_complex(resolution_model(wey_model), LineBundleWeight(tw.a, tw.b));
      std::cout << to_json(c).dump(2) << "\n";
      if (!wey_svg.empty()) {
        SvgSeries sup{c.weight_support(), "#2e7d32", 4.0, false};
        write_file(wey_svg, weight_scatter_svg({sup}, -6, 6, "complex support"));
      }
      return 0;
    }
    if (*clo_cmd) {
      if (clo_with_k == clo_without_k)
        throw CLI::ValidationError("closure", "pass exactly one of --with-k / --without-k");
      WeightSet nplus = enumerate_window(plus_window());
      auto templates = lambda1_sequence_templates();
      templates.push_back(kernel_resolution_template());
      ClosureState st = closure(nplus, templates, clo_box, clo_with_k);
      std::cout << to_json(st).dump(2) << "\n";
      if (!clo_svg.empty()) write_file(clo_svg, closure_svg(st, nplus));
      return 0;
    }
    if (*kos_cmd) {
      KoszulProblem p;
      if (kos_case == "z1plus")
        p = koszul_z1plus_problem();
      else if (kos_case == "z1minus")
        p = koszul_z1minus_problem();
      else
        p = koszul_problem_from_json(read_json_file(kos_case));
      TorWeightReport rep = tor_weights(p, kos_trunc);
      std::cout << to_json(rep).dump(2) << "\n";
      return 0;
    }
    if (*hom_cmd) {
      Weight src = parse_weight(hom_src), tgt = parse_weight(hom_tgt);
      auto series = hom_euler_series(IrrepDecomp{{src, 1}}, IrrepDecomp{{tgt, 1}},
                                     v_character(), hom_n);
      std::cout << json{{"src", to_json(src)}, {"tgt", to_json(tgt)}, {"series", series}}.dump(2)
                << "\n";
      return 0;
    }
    if (*crit_cmd) {
      Cubic6 f = parse_cubic6(crit_f);
      CriticalReport rep = critical_stratum_check(f, crit_seed, crit_samples);
      json checks = json::array();
      for (const auto& c : rep.checks)
        checks.push_back(json{{"stratum", c.stratum}, {"claim", c.claim}, {"pass", c.pass},
                              {"indeterminate", c.indeterminate}, {"detail", c.detail}});
      std::cout << json{{"fermat", rep.fermat},
                        {"checks", checks},
                        {"sigma2_semistable_samples", rep.sigma2_semistable_samples},
                        {"sigma2_semistable_noncritical", rep.sigma2_semistable_noncritical},
                        {"all_pass", rep.all_pass()}}
                       .dump(2)
                << "\n";
      return rep.all_pass() ? 0 : 1;
    }
    if (*fig_cmd) {
      WeightSet nplus = enumerate_window(plus_window());
      auto templates = lambda1_sequence_templates();
      templates.push_back(kernel_resolution_template());
      ClosureState st = closure(nplus, templates, 8, true);
      write_file(fig_dir + "/windows.svg", windows_svg());
      write_file(fig_dir + "/windows.json",
                 json{{"minus", window_json(Side::Minus)}, {"plus", window_json(Side::Plus)}}
                         .dump(2) +
                     "\n");
      write_file(fig_dir + "/kernel_resolution.svg", kernel_svg());
      write_file(fig_dir + "/kernel_resolution.json", to_json(resolution_of_K()).dump(2) + "\n");
      write_file(fig_dir + "/closure.svg", closure_svg(st, nplus));
      write_file(fig_dir + "/closure.json", to_json(st).dump(2) + "\n");
      std::cout << json{{"written",
                         {"windows.svg", "windows.json", "kernel_resolution.svg",
                          "kernel_resolution.json", "closure.svg", "closure.json"}},
                        {"outdir", fig_dir}}
                       .dump(2)
                << "\n";
      return 0;
    }
    if (*ver_cmd) return cmd_verify_all(ver_seed, ver_report);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
