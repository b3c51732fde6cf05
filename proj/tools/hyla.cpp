// hyla command-line tool: spectral analysis of uniform hypergraphs.
// Exit codes: 0 success, 1 usage, 2 input error, 3 numeric failure,
// 4 regression mismatch.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "hyla/arccc.hpp"
#include "hyla/eigenmap.hpp"
#include "hyla/generators.hpp"
#include "hyla/io.hpp"
#include "hyla/proptest.hpp"
#include "hyla/rewiring.hpp"
#include "hyla/spectral.hpp"
#include "hyla/tables.hpp"

using json = nlohmann::json;

namespace {

struct RegressionMismatch {};

constexpr int kSchemaVersion = 1;

json edge_json(const hyla::Hyperedge& e) {
  json j;
  json verts = json::array();
  for (int v : e.vertices) verts.push_back(v + 1);  // 1-based externally
  if (e.directed()) {
    j["tail"] = verts;
    j["head"] = e.head + 1;
  } else {
    j["vertices"] = verts;
  }
  return j;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << content;
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << j.dump(2) << '\n';
}

int run(int argc, char** argv) {
  CLI::App app{"spectral hypergraph analysis"};
  app.require_subcommand(1);

  // ---- generate ------------------------------------------------------
  auto* gen = app.add_subcommand("generate", "emit a structured or random hypergraph");
  std::string family, gen_out;
  int gen_n = 0, gen_r = 3, gen_hubs = 1;
  long long gen_edges = 0;
  std::uint64_t gen_seed = 0;
  bool gen_directed = false;
  gen->add_option("--family", family, "hyperring|complete|star|multistar|random")
      ->required()
      ->check(CLI::IsMember({"hyperring", "complete", "star", "multistar", "random"}));
  gen->add_option("--n", gen_n)->required();
  gen->add_option("--r", gen_r, "edge size (complete/random)");
  gen->add_option("--hubs", gen_hubs, "multistar hubs (1 or 2)");
  gen->add_option("--edges", gen_edges, "edge count (random)");
  gen->add_option("--seed", gen_seed);
  gen->add_flag("--directed", gen_directed, "random family: directed edges");
  gen->add_option("--out", gen_out, "output file (default stdout)");
  gen->callback([&] {
    hyla::Hypergraph g = [&] {
      if (family == "hyperring") return hyla::hyperring(gen_n);
      if (family == "complete") return hyla::complete_hypergraph(gen_n, gen_r);
      if (family == "star") return hyla::complete_star(gen_n);
      if (family == "multistar") return hyla::multi_star(gen_n, gen_hubs);
      if (gen_edges <= 0)
        throw std::invalid_argument("generate --family random requires --edges");
      return gen_directed
                 ? hyla::random_directed(gen_n, gen_r, gen_edges, gen_seed)
                 : hyla::random_uniform(gen_n, gen_r, gen_edges, gen_seed);
    }();
    if (gen_out.empty()) {
      hyla::write_hypergraph(g, std::cout);
    } else {
      hyla::write_hypergraph(g, gen_out);
    }
  });

  // ---- spectrum ------------------------------------------------------
  auto* spec = app.add_subcommand("spectrum", "eigenvalues and algebraic connectivity");
  std::string spec_in;
  bool spec_json = false;
  spec->add_option("--in", spec_in)->required();
  spec->add_flag("--json", spec_json);
  spec->callback([&] {
    const auto g = hyla::read_hypergraph(spec_in);
    const auto s = hyla::spectrum(g);
    if (spec_json) {
      json j;
      j["schema_version"] = kSchemaVersion;
      j["n"] = g.n();
      j["directed"] = g.directed();
      j["algebraic_connectivity"] = s.algebraic_connectivity;
      j["component_count"] = s.component_count;
      j["zero_multiplicity"] = s.zero_multiplicity;
      j["eigenvalues"] = std::vector<double>(
          s.eigenvalues.data(), s.eigenvalues.data() + s.eigenvalues.size());
      j["fiedler"] = std::vector<double>(s.fiedler.data(),
                                         s.fiedler.data() + s.fiedler.size());
      std::cout << j.dump(2) << '\n';
    } else {
      std::printf("n = %d, %s, %zu edges\n", g.n(),
                  g.directed() ? "directed" : "undirected", g.edge_count());
      std::printf("algebraic connectivity a = %.9g\n", s.algebraic_connectivity);
      std::printf("components = %d, zero multiplicity = %d\n", s.component_count,
                  s.zero_multiplicity);
      std::printf("eigenvalues:");
      for (int i = 0; i < s.eigenvalues.size(); ++i)
        std::printf(" %.6g", s.eigenvalues[i]);
      std::printf("\nfiedler:");
      for (int i = 0; i < s.fiedler.size(); ++i)
        std::printf(" %.6g", s.fiedler[i]);
      std::printf("\n");
    }
  });

  // ---- connectivity ---------------------------------------------------
  auto* conn = app.add_subcommand("connectivity", "vertex connectivity, sparsity, bounds");
  std::string conn_in;
  bool conn_json = false;
  conn->add_option("--in", conn_in)->required();
  conn->add_flag("--json", conn_json);
  conn->callback([&] {
    const auto g = hyla::read_hypergraph(conn_in);
    const auto s = hyla::spectrum(g);
    const int sp = hyla::sparsity(g);
    const auto vc = hyla::vertex_connectivity(g);
    const double factor = g.directed() ? 1.5 * g.m() : 2.0 * g.m() - 1.0;
    const double bound = factor * sp * vc.value;
    if (conn_json) {
      json j;
      j["schema_version"] = kSchemaVersion;
      j["sparsity"] = sp;
      j["vertex_connectivity"] = vc.value;
      j["no_cutset"] = vc.no_cutset;
      j["algebraic_connectivity"] = s.algebraic_connectivity;
      j["bound_factor"] = factor;
      j["bound"] = bound;
      j["bound_holds"] = s.algebraic_connectivity <= bound + 1e-9;
      std::cout << j.dump(2) << '\n';
    } else {
      std::printf("sparsity s = %d\n", sp);
      std::printf("vertex connectivity v = %d%s\n", vc.value,
                  vc.no_cutset ? " (no cutset exists; n-m cap)" : "");
      std::printf("a = %.9g, bound %s*s*v = %.9g, %s\n",
                  s.algebraic_connectivity, g.directed() ? "(3/2)m" : "(2m-1)",
                  bound,
                  s.algebraic_connectivity <= bound + 1e-9 ? "holds" : "VIOLATED");
    }
  });

  // ---- tables ----------------------------------------------------------
  auto* tab = app.add_subcommand("tables", "structured-family regression gate");
  bool tab_json = false;
  tab->add_flag("--json", tab_json);
  tab->callback([&] {
    const auto cells = hyla::compute_tables();
    if (tab_json) {
      json j;
      j["schema_version"] = kSchemaVersion;
      j["cells"] = json::array();
      for (const auto& c : cells)
        j["cells"].push_back({{"table", c.table},
                              {"kind", c.kind},
                              {"n", c.n},
                              {"expected", c.expected},
                              {"computed", c.computed},
                              {"ok", c.ok()}});
      j["pass"] = hyla::tables_pass(cells);
      std::cout << j.dump(2) << '\n';
    } else {
      int bad = 0;
      for (const auto& c : cells) {
        std::printf("%-11s %-5s n=%-3d expected %10.3f computed %10.6f  %s\n",
                    c.table.c_str(), c.kind.c_str(), c.n, c.expected, c.computed,
                    c.ok() ? "ok" : "MISMATCH");
        bad += c.ok() ? 0 : 1;
      }
      std::printf("%zu cells, %d mismatches\n", cells.size(), bad);
    }
    if (!hyla::tables_pass(cells)) throw RegressionMismatch{};
  });

  // ---- rewire ----------------------------------------------------------
  auto* rw = app.add_subcommand("rewire", "greedy hyperedge adding/rewiring");
  std::string rw_in, rw_mode = "add", rw_out, rw_report, rw_csv;
  int rw_steps = 1;
  rw->add_option("--in", rw_in)->required();
  rw->add_option("--steps", rw_steps)->required();
  rw->add_option("--mode", rw_mode)->check(CLI::IsMember({"add", "rewire"}));
  rw->add_option("--out", rw_out, "rewired hypergraph file");
  rw->add_option("--report", rw_report, "step report JSON");
  rw->add_option("--csv", rw_csv, "CSV of (step, a) pairs");
  rw->callback([&] {
    const auto g = hyla::read_hypergraph(rw_in);
    const auto mode =
        rw_mode == "add" ? hyla::RewireMode::kAdd : hyla::RewireMode::kRewire;
    const auto [result, report] = hyla::rewire(g, rw_steps, mode);
    if (!rw_out.empty()) hyla::write_hypergraph(result, rw_out);
    json j;
    j["schema_version"] = kSchemaVersion;
    j["mode"] = rw_mode;
    j["exhausted"] = report.exhausted;
    j["steps"] = json::array();
    std::string csv = "step,a\n";
    if (!report.steps.empty())
      csv += "0," + std::to_string(report.steps.front().a_before) + "\n";
    int stepno = 0;
    for (const auto& st : report.steps) {
      json sj;
      sj["a_before"] = st.a_before;
      sj["a_after"] = st.a_after;
      sj["added"] = edge_json(st.added);
      sj["score_added"] = st.score_added;
      if (st.removed) {
        sj["removed"] = edge_json(*st.removed);
        sj["score_removed"] = *st.score_removed;
      }
      j["steps"].push_back(sj);
      csv += std::to_string(++stepno) + "," + std::to_string(st.a_after) + "\n";
    }
    if (!rw_report.empty()) {
      write_json_file(rw_report, j);
    } else {
      std::cout << j.dump(2) << '\n';
    }
    if (!rw_csv.empty()) write_text_file(rw_csv, csv);
  });

  // ---- arccc -----------------------------------------------------------
  auto* ar = app.add_subcommand("arccc", "maximize lambda_2 under box+budget constraints");
  std::string ar_instance, ar_out;
  int ar_iters = 2000;
  ar->add_option("--instance", ar_instance, "instance JSON")->required();
  ar->add_option("--out", ar_out, "solution JSON (default stdout)");
  ar->add_option("--max-iters", ar_iters);
  ar->callback([&] {
    std::ifstream in(ar_instance);
    if (!in) throw std::runtime_error("cannot open '" + ar_instance + "'");
    json j;
    try {
      in >> j;
    } catch (const json::exception& e) {
      throw std::runtime_error(ar_instance + ": " + e.what());
    }
    hyla::ArcccInstance inst;
    inst.n = j.at("n").get<int>();
    inst.budget = j.at("budget").get<double>();
    for (const auto& c : j.at("candidates")) {
      hyla::ArcccCandidate cand;
      for (int v : c.at("vertices")) cand.vertices.push_back(v - 1);
      std::sort(cand.vertices.begin(), cand.vertices.end());
      cand.cost = c.at("cost").get<double>();
      inst.candidates.push_back(std::move(cand));
    }
    if (!inst.candidates.empty())
      inst.edge_size = (int)inst.candidates.front().vertices.size();
    hyla::ArcccOptions opt;
    opt.max_iters = ar_iters;
    const auto sol = hyla::solve(inst, opt);
    json out;
    out["schema_version"] = kSchemaVersion;
    out["lambda2"] = sol.lambda2;
    out["weights"] = sol.weights;
    out["iterations"] = sol.iterations;
    out["converged"] = sol.converged;
    out["feasibility_gap"] = sol.feasibility_gap;
    out["ascent_gap"] = sol.ascent_gap;
    if (ar_out.empty()) {
      std::cout << out.dump(2) << '\n';
    } else {
      write_json_file(ar_out, out);
    }
  });

  // ---- arccc-recover ----------------------------------------------------
  auto* rec = app.add_subcommand("arccc-recover",
                                 "weight-recovery experiment from a simplicial dataset");
  std::string rec_prefix, rec_out;
  long long rec_max_absent = 20000;
  int rec_iters = 2000;
  rec->add_option("--scholp", rec_prefix, "dataset prefix (expects -nverts/-simplices)")
      ->required();
  rec->add_option("--out", rec_out, "report JSON (default stdout)");
  rec->add_option("--max-absent", rec_max_absent,
                  "cap on sampled absent candidates (-1 = all)");
  rec->add_option("--max-iters", rec_iters);
  rec->callback([&] {
    const auto data = hyla::read_scholp(rec_prefix);
    hyla::ArcccOptions opt;
    opt.max_iters = rec_iters;
    const auto rep =
        hyla::weight_recovery_experiment(data.hypergraph, 2.0, rec_max_absent, 12345, opt);
    json out;
    out["schema_version"] = kSchemaVersion;
    out["n"] = data.hypergraph.n();
    out["simplices_total"] = data.simplices_total;
    out["kept_size3"] = data.kept;
    out["distinct_edges"] = rep.true_edges.size();
    out["candidates"] = rep.instance.candidates.size();
    out["budget"] = rep.instance.budget;
    out["lambda2"] = rep.solution.lambda2;
    out["support_recovered"] = rep.support_recovered;
    out["median_rel_error"] = rep.median_rel_error;
    out["max_below_threshold"] = rep.max_below_threshold;
    out["min_above_threshold"] = rep.min_above_threshold;
    out["true_weights"] = rep.true_weights;
    std::vector<double> rec_true(rep.recovered.begin(),
                                 rep.recovered.begin() + rep.true_edges.size());
    out["recovered_weights"] = rec_true;
    if (rec_out.empty()) {
      std::cout << out.dump(2) << '\n';
    } else {
      write_json_file(rec_out, out);
    }
  });

  // ---- eigenmap ----------------------------------------------------------
  auto* em = app.add_subcommand("eigenmap", "hypergraph Laplacian eigenmap pipeline");
  std::string em_input, em_label, em_variant = "hypergraph";
  std::string em_embedding_out, em_metrics_out;
  int em_m = 7, em_q = 2, em_k = 2;
  std::uint64_t em_seed = 0;
  bool em_zscore = false;
  em->add_option("--input", em_input, "CSV dataset")->required();
  em->add_option("--label-col", em_label, "label column name")->required();
  em->add_option("--m", em_m, "nearest neighbors per point");
  em->add_option("--q", em_q, "embedding dimension");
  em->add_option("--k", em_k, "k-means clusters");
  em->add_option("--variant", em_variant)
      ->check(CLI::IsMember({"hypergraph", "graph", "graph-unnorm"}));
  em->add_option("--seed", em_seed);
  em->add_flag("--zscore", em_zscore, "z-score normalization instead of min-max");
  em->add_option("--embedding-out", em_embedding_out, "embedding CSV");
  em->add_option("--metrics-out", em_metrics_out, "metrics JSON (default stdout)");
  em->callback([&] {
    const auto ds = hyla::read_csv_dataset(em_input, em_label);
    hyla::PipelineOptions opt;
    opt.m = em_m;
    opt.q = em_q;
    opt.k = em_k;
    opt.seed = em_seed;
    opt.zscore = em_zscore;
    opt.variant = em_variant == "hypergraph"
                      ? hyla::EigenmapVariant::kHypergraph
                      : (em_variant == "graph" ? hyla::EigenmapVariant::kGraph
                                               : hyla::EigenmapVariant::kGraphUnnormalized);
    const auto res = hyla::pipeline(ds, opt);
    if (!em_embedding_out.empty()) {
      std::string csv;
      for (int j = 0; j < res.embedding.coords.cols(); ++j)
        csv += (j ? ",y" : "y") + std::to_string(j + 1);
      csv += ",cluster\n";
      char buf[64];
      for (int i = 0; i < res.embedding.coords.rows(); ++i) {
        for (int j = 0; j < res.embedding.coords.cols(); ++j) {
          std::snprintf(buf, sizeof buf, "%.12g", res.embedding.coords(i, j));
          csv += std::string(j ? "," : "") + buf;
        }
        csv += "," + std::to_string(res.cluster_labels[i]) + "\n";
      }
      write_text_file(em_embedding_out, csv);
    }
    json out;
    out["schema_version"] = kSchemaVersion;
    out["variant"] = em_variant;
    out["m"] = em_m;
    out["q"] = em_q;
    out["k"] = em_k;
    out["nmi"] = res.nmi;
    out["ari"] = res.ari;
    out["skipped_zero_count"] = res.embedding.skipped_zero_count;
    out["eigenvalues_used"] = std::vector<double>(
        res.embedding.eigenvalues_used.data(),
        res.embedding.eigenvalues_used.data() + res.embedding.eigenvalues_used.size());
    if (em_metrics_out.empty()) {
      std::cout << out.dump(2) << '\n';
    } else {
      write_json_file(em_metrics_out, out);
    }
  });

  // ---- reduce --------------------------------------------------------------
  auto* red = app.add_subcommand("reduce", "clique or circle reduction to a multigraph");
  std::string red_in, red_kind = "clique", red_out;
  red->add_option("--in", red_in)->required();
  red->add_option("--kind", red_kind)->check(CLI::IsMember({"clique", "circle"}));
  red->add_option("--out", red_out, "multigraph edge list (default stdout)");
  red->callback([&] {
    const auto g = hyla::read_hypergraph(red_in);
    const auto mg =
        red_kind == "clique" ? hyla::clique_reduction(g) : hyla::circle_reduction(g);
    std::string body = "multigraph " + std::to_string(mg.n) + ' ' +
                       (mg.directed ? "directed" : "undirected") + "\n";
    for (const auto& [a, b] : mg.edges)
      body += std::to_string(a + 1) + ' ' + std::to_string(b + 1) + "\n";
    if (red_out.empty()) {
      std::cout << body;
    } else {
      write_text_file(red_out, body);
    }
  });

  // ---- consensus -------------------------------------------------------------
  auto* cons = app.add_subcommand("consensus", "simulate consensus dynamics");
  std::string cons_in, cons_x0 = "random", cons_trace;
  double cons_dt = 0.01;
  int cons_steps = 1000;
  std::uint64_t cons_seed = 0;
  cons->add_option("--in", cons_in)->required();
  cons->add_option("--x0", cons_x0)->check(CLI::IsMember({"random", "spike"}));
  cons->add_option("--dt", cons_dt);
  cons->add_option("--steps", cons_steps);
  cons->add_option("--seed", cons_seed);
  cons->add_option("--trace", cons_trace, "CSV trace of (t, disagreement, mean)");
  cons->callback([&] {
    const auto g = hyla::read_hypergraph(cons_in);
    Eigen::VectorXd x0(g.n());
    if (cons_x0 == "spike") {
      x0.setZero();
      x0[0] = 1.0;
    } else {
      hyla::Rng rng(cons_seed);
      for (int i = 0; i < g.n(); ++i) x0[i] = rng.uniform(-1.0, 1.0);
    }
    const auto res = hyla::consensus_simulate(g, x0, cons_dt, cons_steps);
    const auto s = hyla::spectrum(g);
    if (!cons_trace.empty()) {
      std::string csv = "t,disagreement,mean\n";
      char buf[96];
      for (std::size_t i = 0; i < res.times.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.10g,%.12g,%.12g\n", res.times[i],
                      res.disagreement[i], res.states[i].mean());
        csv += buf;
      }
      write_text_file(cons_trace, csv);
    }
    std::printf("fitted decay rate = %.6g (a = %.6g, ratio %.4f)\n",
                res.fitted_rate, s.algebraic_connectivity,
                s.algebraic_connectivity != 0.0
                    ? res.fitted_rate / s.algebraic_connectivity
                    : 0.0);
    std::printf("mean drift = %.3g\n", res.mean_drift);
  });

  // ---- proptest -----------------------------------------------------------
  auto* prop = app.add_subcommand("proptest", "randomized theorem checks");
  std::uint64_t prop_seed = 42;
  int prop_trials = 200;
  prop->add_option("--seed", prop_seed);
  prop->add_option("--trials", prop_trials);
  prop->callback([&] {
    const auto report = hyla::run_all(prop_seed, prop_trials);
    for (const auto& c : report.checks) {
      std::printf("%-48s %4d trials, %d failures\n", c.name.c_str(), c.trials,
                  c.failures);
      if (c.failures > 0)
        std::printf("  first counterexample (seed %llu):\n%s\n",
                    (unsigned long long)prop_seed, c.first_counterexample.c_str());
    }
    if (!report.all_passed) throw RegressionMismatch{};
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;  // usage error
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const RegressionMismatch&) {
    return 4;
  } catch (const hyla::NumericError& e) {
    std::cerr << "numeric failure: " << e.what() << '\n';
    return 3;
  } catch (const hyla::ParseError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
