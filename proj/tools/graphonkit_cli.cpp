// Command-line front end: graphon file I/O plus one subcommand per library
// area (cut norms, distances, diagnostics, sampling, the example gallery).
// Exit codes: 0 success, 1 validation/usage error, 2 failed verification.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "graphonkit/graphonkit.hpp"

namespace gk = graphonkit;
using nlohmann::json;

namespace {

int default_threads() {
  if (const char* env = std::getenv("GRAPHONKIT_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  return 1;
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) throw gk::graphon_error(gk::errc::parse_error, "cannot open " + out_path);
    out << text;
  }
}

json witness_json(const std::vector<std::uint8_t>& w) {
  json a = json::array();
  for (auto b : w) a.push_back(static_cast<int>(b));
  return a;
}

gk::dist_mode parse_mode(const std::string& s) {
  if (s == "perm") return gk::dist_mode::permutation_exhaustive;
  if (s == "altlp") return gk::dist_mode::alternating_lp;
  if (s == "both") return gk::dist_mode::both;
  if (s == "identity") return gk::dist_mode::forced_identity;
  throw gk::graphon_error(gk::errc::parse_error, "unknown mode: " + s);
}

std::string claims_table(const gk::GalleryResult& res) {
  std::ostringstream os;
  os << "example: " << res.name << "\n";
  for (const auto& c : res.claims) {
    os << (c.pass ? "PASS" : "FAIL") << "  " << c.name << "  " << c.value << " " << c.relation
       << " " << c.bound;
    if (c.tol > 0.0) os << " (tol " << c.tol << ")";
    if (!c.note.empty()) os << "  # " << c.note;
    os << "\n";
  }
  os << (res.all_pass() ? "ALL CLAIMS PASS" : "CLAIM FAILURES PRESENT") << "\n";
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"step-graphon toolkit: cut norms, coupling distances, sampling, diagnostics"};
  app.require_subcommand(1);

  std::string w_path, w2_path, out_path, family_kind, name, which;
  std::vector<std::string> family_files;
  std::string metric = "cut", mode = "both", tgrid_str = "2,4,8,16";
  double p = 2.0, t = 1.0, u = 1.0, level_b = 1.0;
  std::vector<double> b_grid{1.0}, m_grid{1.0};
  int restarts = gk::kDefaultRestarts, runs = 50, n_param = -1;
  int threads = default_threads();
  std::size_t exact_cap = gk::kExactBlocksDefault;
  std::uint64_t seed = 0;
  bool heuristic = false, stretched = false, allow_signed = false, keep_isolated = false;
  bool do_normalize = false;

  auto* c_cut = app.add_subcommand("cutnorm", "cut norm of a graphon file");
  c_cut->add_option("graphon", w_path)->required();
  c_cut->add_flag("--heuristic", heuristic, "multistart heuristic (lower bound with witness)");
  c_cut->add_option("--restarts", restarts);
  c_cut->add_option("--seed", seed);
  c_cut->add_option("--exact-cap", exact_cap, "max blocks for exact enumeration");
  c_cut->add_option("--threads", threads);
  c_cut->add_option("--out", out_path);

  auto* c_dist = app.add_subcommand("dist", "coupling distance between two graphons");
  c_dist->add_option("graphon1", w_path)->required();
  c_dist->add_option("graphon2", w2_path)->required();
  c_dist->add_option("--metric", metric, "cut|l1|lp");
  c_dist->add_option("--p", p);
  c_dist->add_option("--mode", mode, "perm|altlp|both|identity");
  c_dist->add_option("--restarts", restarts);
  c_dist->add_option("--seed", seed);
  c_dist->add_option("--threads", threads);
  c_dist->add_flag("--stretched", stretched, "compare L1-normalized graphons");
  c_dist->add_flag("--allow-signed", allow_signed, "permit signed graphons for the lp metric");
  c_dist->add_option("--out", out_path);

  auto* c_diag = app.add_subcommand("diag", "integrability/regularity profiles as CSV");
  c_diag->add_option("kind", family_kind, "ui|tails|ucr")->required();
  c_diag->add_option("--family", family_files, "graphon JSON files")->required();
  c_diag->add_option("--B", b_grid, "levels for the UI tail profile");
  c_diag->add_option("--M", m_grid, "mass budgets for tail profiles");
  c_diag->add_option("--out", out_path);

  auto* c_sample = app.add_subcommand("sample", "Poisson random graph from a graphon");
  c_sample->add_option("graphon", w_path)->required();
  c_sample->add_option("--t", t, "time horizon")->required();
  c_sample->add_option("--seed", seed);
  c_sample->add_flag("--keep-isolated", keep_isolated);
  c_sample->add_option("--out", out_path);

  auto* c_conv = app.add_subcommand("converge", "sampled-graph convergence experiment");
  c_conv->add_option("graphon", w_path)->required();
  c_conv->add_option("--tgrid", tgrid_str, "comma-separated increasing horizons");
  c_conv->add_option("--runs", runs);
  c_conv->add_option("--seed", seed);
  c_conv->add_option("--threads", threads);
  c_conv->add_option("--out", out_path);

  auto* c_example = app.add_subcommand("example", "emit a gallery graphon as JSON");
  c_example->add_option("name", name)->required();
  c_example->add_option("--n", n_param);
  c_example->add_option("--seed", seed)->default_val(2026);
  c_example->add_option("--which", which, "graphon name within the example");
  c_example->add_option("--out", out_path);

  auto* c_verify = app.add_subcommand("verify", "check a gallery example's claim records");
  c_verify->add_option("name", name)->required();
  c_verify->add_option("--n", n_param);
  c_verify->add_option("--seed", seed)->default_val(2026);
  c_verify->add_option("--out", out_path);

  auto* c_entropy = app.add_subcommand("entropy", "entropy of a [0,1]-valued graphon");
  c_entropy->add_option("graphon", w_path)->required();
  c_entropy->add_option("--out", out_path);

  auto* c_stretch = app.add_subcommand("stretch", "stretch or normalize a graphon");
  c_stretch->add_option("graphon", w_path)->required();
  c_stretch->add_option("--u", u, "measure scale factor");
  c_stretch->add_flag("--normalize", do_normalize, "stretch to unit L1 norm instead");
  c_stretch->add_option("--out", out_path);

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_cut->parsed()) {
      const gk::StepGraphon w = gk::read_graphon_file(w_path);
      gk::CutNormResult r;
      if (heuristic || w.block_count() > exact_cap)
        r = gk::cut_norm_heuristic(w, restarts, seed, threads);
      else
        r = gk::cut_norm_exact(w, exact_cap);
      json j{{"value", r.value},
             {"kind", gk::to_string(r.kind)},
             {"witness_x", witness_json(r.witness_x)},
             {"witness_y", witness_json(r.witness_y)}};
      emit(out_path, j.dump(2) + "\n");
    } else if (c_dist->parsed()) {
      const gk::StepGraphon w1 = gk::read_graphon_file(w_path);
      const gk::StepGraphon w2 = gk::read_graphon_file(w2_path);
      gk::distance_options opt;
      opt.mode = parse_mode(mode);
      opt.restarts = restarts;
      opt.seed = seed;
      opt.threads = threads;
      opt.allow_signed = allow_signed;
      gk::dist_metric dm = metric == "cut"  ? gk::dist_metric::cut
                           : metric == "l1" ? gk::dist_metric::l1
                           : metric == "lp" ? gk::dist_metric::lp
                                            : throw gk::graphon_error(gk::errc::parse_error,
                                                                      "unknown metric: " + metric);
      gk::MetricEstimate est;
      if (stretched) {
        est = gk::stretched_distance(w1, w2, dm, p, opt);
      } else {
        switch (dm) {
          case gk::dist_metric::cut: est = gk::cut_distance(w1, w2, opt); break;
          case gk::dist_metric::l1: est = gk::delta_1(w1, w2, opt); break;
          case gk::dist_metric::lp: est = gk::delta_p(w1, w2, p, opt); break;
        }
      }
      json j{{"value", est.value},
             {"lower", est.lower},
             {"kind", gk::to_string(est.kind)},
             {"method", est.method}};
      emit(out_path, j.dump(2) + "\n");
    } else if (c_diag->parsed()) {
      std::vector<gk::StepGraphon> family;
      for (const auto& f : family_files) family.push_back(gk::read_graphon_file(f));
      std::ostringstream csv;
      csv << "graphon_id,parameter,value\n";
      if (family_kind == "ui") {
        for (std::size_t i = 0; i < family.size(); ++i)
          csv << i << ",l1," << gk::l1_norm(family[i]) << "\n";
        for (double b : b_grid) {
          const gk::UiProfile prof = gk::ui_profile(family, b);
          csv << "family,tail@" << b << "," << prof.sup_tail << "\n";
          (void)level_b;
        }
      } else if (family_kind == "tails" || family_kind == "ucr") {
        const gk::tail_norm norm =
            family_kind == "tails" ? gk::tail_norm::l1 : gk::tail_norm::cut;
        for (std::size_t i = 0; i < family.size(); ++i)
          for (double m : m_grid) {
            const gk::TailMassResult r = gk::regular_tail_mass(family[i], m, norm);
            csv << i << ",M=" << m << (r.exact ? "" : " (upper)") << "," << r.value << "\n";
          }
      } else {
        throw gk::graphon_error(gk::errc::parse_error, "unknown diag kind: " + family_kind);
      }
      emit(out_path, csv.str());
    } else if (c_sample->parsed()) {
      const gk::StepGraphon w = gk::read_graphon_file(w_path);
      gk::SampledGraph g = gk::sample_tilde_graph(w, t, seed);
      if (!keep_isolated) g = gk::drop_isolated(g);
      std::ostringstream os;
      gk::write_graph_file(os, gk::to_edge_list(g));
      emit(out_path, os.str());
    } else if (c_conv->parsed()) {
      const gk::StepGraphon w = gk::read_graphon_file(w_path);
      std::vector<double> grid;
      std::stringstream ss(tgrid_str);
      std::string tok;
      while (std::getline(ss, tok, ',')) grid.push_back(std::stod(tok));
      const auto series = gk::convergence_series(w, grid, runs, seed, threads);
      std::ostringstream csv;
      csv << "t,run,estimate,median\n";
      for (const auto& pt : series)
        for (std::size_t r = 0; r < pt.estimates.size(); ++r)
          csv << pt.t << "," << r << "," << pt.estimates[r] << "," << pt.median << "\n";
      emit(out_path, csv.str());
    } else if (c_example->parsed()) {
      const gk::GalleryResult res = gk::gallery_example(name, n_param, seed);
      const gk::StepGraphon* chosen = nullptr;
      for (const auto& [gname, g] : res.graphons)
        if (which.empty() || gname == which) chosen = &g;  // default: last (deepest) graphon
      if (!chosen)
        throw gk::graphon_error(gk::errc::parse_error, "no graphon named '" + which + "'");
      emit(out_path, gk::graphon_to_json(*chosen).dump(2) + "\n");
    } else if (c_verify->parsed()) {
      const gk::GalleryResult res = gk::gallery_example(name, n_param, seed);
      emit(out_path, claims_table(res));
      if (!res.all_pass()) return 2;
    } else if (c_entropy->parsed()) {
      const gk::StepGraphon w = gk::read_graphon_file(w_path);
      json j{{"entropy", gk::entropy(w)}};
      emit(out_path, j.dump(2) + "\n");
    } else if (c_stretch->parsed()) {
      const gk::StepGraphon w = gk::read_graphon_file(w_path);
      const gk::StepGraphon s = do_normalize ? gk::normalize(w) : gk::stretch(w, u);
      emit(out_path, gk::graphon_to_json(s).dump(2) + "\n");
    }
  } catch (const gk::graphon_error& e) {
    std::cerr << "error [" << gk::to_string(e.code()) << "]: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
