// cml: generate, learn, partition, embed, evaluate and cross-check
// contrastive metric-learning instances from the command line.
//
// Exit codes: 0 success, 1 error, 2 proved infeasible (line host),
// 3 budget-limited best-effort result.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include "cml/errors.hpp"
#include "cml/euclidean_learner.hpp"
#include "cml/evaluation.hpp"
#include "cml/finite_embed.hpp"
#include "cml/graph_partition.hpp"
#include "cml/instance.hpp"
#include "cml/io.hpp"
#include "cml/line_learner.hpp"
#include "cml/lipschitz.hpp"
#include "cml/oracle.hpp"
#include "cml/planted.hpp"
#include "cml/tree_learner.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitBudget = 3;

cml::Instance load_instance(const std::string& path) {
  return cml::instance_from_json(cml::parse_json_file(path));
}

void maybe_write(const std::string& path, const nlohmann::json& j) {
  if (!path.empty()) cml::write_json_file(path, j);
}

std::string csv_escape(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_cluster_csv(const std::string& path,
                       const std::vector<cml::ClusterStat>& stats,
                       const cml::AccuracyReport& report) {
  if (path.empty()) return;
  std::string out = "stage,index,size,host_points,delta,accuracy,budget_exhausted\n";
  for (std::size_t i = 0; i < stats.size(); ++i) {
    const auto& s = stats[i];
    out += "cluster," + std::to_string(i) + "," + std::to_string(s.size) + "," +
           std::to_string(s.grid_points) + "," + csv_escape(s.delta_used) + "," +
           csv_escape(s.accuracy) + "," + (s.budget_exhausted ? "1" : "0") + "\n";
  }
  out += "total,," + std::to_string(report.satisfied_similar + report.satisfied_dissimilar) +
         ",,," + csv_escape(report.accuracy) + ",\n";
  cml::write_text_file(path, out);
}

void write_tree_csv(const std::string& path, const std::vector<cml::TreeHostStat>& stats,
                    const cml::AccuracyReport& report) {
  if (path.empty()) return;
  std::string out = "stage,index,size,host_points,depth,arity,delta,accuracy,budget_exhausted\n";
  for (std::size_t i = 0; i < stats.size(); ++i) {
    const auto& s = stats[i];
    out += "cluster," + std::to_string(i) + "," + std::to_string(s.size) + "," +
           std::to_string(s.host_vertices) + "," + std::to_string(s.depth) + "," +
           std::to_string(s.arity) + "," + csv_escape(s.delta_used) + "," +
           csv_escape(s.accuracy) + "," + (s.budget_exhausted ? "1" : "0") + "\n";
  }
  out += "total,,,,,," + csv_escape(report.accuracy) + ",,\n";
  cml::write_text_file(path, out);
}

struct GenerateArgs {
  std::string host = "line";
  std::size_t n = 10;
  double u = 1.0;
  double l = 2.0;
  double noise = 0.0;
  std::uint64_t seed = 0;
  int dim = 1;
  double box = 0.0;
  std::string out;
  std::string truth_out;
};

int run_generate(const GenerateArgs& a) {
  cml::HostKind host;
  if (a.host == "line") host = cml::HostKind::Line;
  else if (a.host == "euclidean") host = cml::HostKind::Euclidean;
  else if (a.host == "tree") host = cml::HostKind::Tree;
  else throw cml::InvalidParameter("unknown host '" + a.host + "'");

  cml::PlantedOptions opt;
  opt.dim = a.dim;
  opt.box = a.box;
  auto [inst, truth] = cml::generate_planted(host, a.n, a.u, a.l, a.noise, a.seed, opt);
  maybe_write(a.out, cml::instance_to_json(inst));
  maybe_write(a.truth_out, cml::truth_to_json(truth));
  std::cout << "generated n=" << inst.n() << " similar=" << inst.similar.size()
            << " dissimilar=" << inst.dissimilar.size() << " flipped="
            << truth.flipped.size() << "\n";
  return kExitOk;
}

int run_validate(const std::string& in, bool as_json) {
  cml::Instance inst = load_instance(in);
  cml::ValidationReport rep = cml::validate(inst);
  if (as_json) {
    nlohmann::json j;
    j["version"] = 1;
    j["n"] = inst.n();
    j["complete"] = rep.complete;
    j["n_similar"] = rep.n_similar;
    j["n_dissimilar"] = rep.n_dissimilar;
    j["s_graph_components"] = rep.s_graph_components;
    j["s_graph_connected"] = rep.s_graph_connected;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "valid instance: n=" << inst.n() << " similar=" << rep.n_similar
              << " dissimilar=" << rep.n_dissimilar
              << " complete=" << (rep.complete ? "yes" : "no")
              << " s_components=" << rep.s_graph_components << "\n";
  }
  return kExitOk;
}

int run_learn_line(const std::string& in, const std::string& out,
                   const std::string& report_out) {
  cml::Instance inst = load_instance(in);
  cml::LineResult res = cml::learn_line(inst);
  if (!res.feasible) {
    std::cout << "infeasible\n";
    return kExitInfeasible;
  }
  cml::AccuracyReport rep = cml::accuracy(inst, *res.embedding, 1.0);
  maybe_write(out, cml::embedding_to_json(*res.embedding));
  maybe_write(report_out, cml::report_to_json(rep));
  std::cout << "feasible accuracy=" << rep.accuracy << " c=1\n";
  return kExitOk;
}

struct LearnArgs {
  std::string in;
  std::string out;
  std::string report_out;
  std::string csv;
  int dim = 2;
  double epsilon = 0.25;
  double eps_prime = 0.5;
  double zeta = -1.0;  // < 0: clean-label pipeline
  std::uint64_t seed = 0;
  std::size_t grid_budget = 512;
  std::size_t tree_budget = 160;
  std::uint64_t enum_budget = 50000;
  int restarts = 0;
  int jobs = 1;
};

int run_learn_euclidean(const LearnArgs& a) {
  cml::Instance inst = load_instance(a.in);
  cml::EuclideanOptions opt;
  opt.grid_budget = a.grid_budget;
  opt.enum_budget = a.enum_budget;
  opt.restarts = a.restarts;
  opt.jobs = a.jobs;
  cml::EuclideanResult res =
      a.zeta < 0.0
          ? cml::learn_euclidean_perfect(inst, a.dim, a.epsilon, a.eps_prime, a.seed, opt)
          : cml::learn_euclidean_imperfect(inst, a.dim, a.epsilon, a.eps_prime, a.zeta,
                                           a.seed, opt);
  maybe_write(a.out, cml::embedding_to_json(res.embedding));
  maybe_write(a.report_out, cml::report_to_json(res.report));
  write_cluster_csv(a.csv, res.cluster_stats, res.report);
  std::cerr << "[learn euclidean] restarts=" << res.restarts
            << " best=" << res.best_restart << " removed_edges=" << res.removed_edges
            << "\n";
  std::cout << "accuracy=" << res.report.accuracy << " c=" << res.report.c
            << (res.budget_exhausted ? " (budget-limited)" : "") << "\n";
  return res.budget_exhausted ? kExitBudget : kExitOk;
}

int run_learn_tree(const LearnArgs& a) {
  cml::Instance inst = load_instance(a.in);
  cml::TreeOptions opt;
  opt.tree_budget = a.tree_budget;
  opt.enum_budget = a.enum_budget;
  opt.restarts = a.restarts;
  opt.jobs = a.jobs;
  cml::TreeResult res =
      a.zeta < 0.0
          ? cml::learn_tree_perfect(inst, a.epsilon, a.eps_prime, a.seed, opt)
          : cml::learn_tree_imperfect(inst, a.epsilon, a.eps_prime, a.zeta, a.seed, opt);
  maybe_write(a.out, cml::embedding_to_json(res.embedding));
  maybe_write(a.report_out, cml::report_to_json(res.report));
  write_tree_csv(a.csv, res.cluster_stats, res.report);
  std::cerr << "[learn tree] restarts=" << res.restarts << " best=" << res.best_restart
            << " removed_edges=" << res.removed_edges << "\n";
  std::cout << "accuracy=" << res.report.accuracy << " c=" << res.report.c
            << (res.budget_exhausted ? " (budget-limited)" : "") << "\n";
  return res.budget_exhausted ? kExitBudget : kExitOk;
}

int run_partition_lipschitz(const std::string& in, double delta, std::uint64_t seed,
                            const std::string& out) {
  cml::Instance inst = load_instance(in);
  cml::ConstraintGraphS g = cml::ConstraintGraphS::build(inst);
  cml::LipschitzPartitionSample sample = cml::sample_lipschitz_partition(g, delta, seed);
  maybe_write(out, cml::lipschitz_to_json(sample, g.ids));
  std::cout << "clusters=" << sample.clusters.size()
            << " cut_similar_pairs=" << sample.cut_similar_pairs.size() << "\n";
  return kExitOk;
}

int run_partition_annuli(const std::string& in, double delta, std::uint64_t seed,
                         const std::string& out) {
  cml::Instance inst = load_instance(in);
  cml::AnnuliPartition ann = cml::annuli_partition(inst, delta, seed);
  maybe_write(out, cml::annuli_to_json(ann));
  std::cout << "clusters=" << ann.clusters.size()
            << " cut_similar_pairs=" << ann.cut_similar_pairs.size() << "\n";
  return kExitOk;
}

int run_partition_well_linked(const std::string& in, double alpha, double zeta,
                              double slack, const std::string& out) {
  cml::Instance inst = load_instance(in);
  if (alpha < 0.0) {
    if (zeta < 0.0)
      throw cml::InvalidParameter("well-linked partition needs --alpha or --zeta");
    alpha = cml::noise_alpha(zeta, inst.n());
  }
  cml::WellLinkedOptions opt;
  opt.slack = slack;
  cml::WellLinkedDecomposition wld = cml::well_linked_decomposition(inst, alpha, opt);
  maybe_write(out, cml::well_linked_to_json(wld));
  std::cout << "components=" << wld.components.size()
            << " removed_edges=" << wld.removed_edges.size() << " chi=" << wld.chi
            << (wld.budget_hit ? " (budget-limited)" : "") << "\n";
  return wld.budget_hit ? kExitBudget : kExitOk;
}

int run_embed_finite(const std::string& in, const std::string& host_path, double epsilon,
                     double eps_prime, std::uint64_t enum_budget, std::uint64_t seed,
                     const std::string& out) {
  cml::Instance inst = load_instance(in);
  cml::FiniteMetric host = cml::finite_metric_from_json(cml::parse_json_file(host_path));
  cml::PairSystem sub = cml::full_system(inst);
  cml::FiniteEmbedOptions opt;
  opt.partition_seed = seed;
  cml::FiniteEmbedResult res =
      cml::embed_into_finite_metric(sub, host, epsilon, eps_prime, enum_budget, opt);
  nlohmann::json j;
  j["version"] = 1;
  nlohmann::json assign = nlohmann::json::object();
  for (std::size_t i = 0; i < sub.ids.size(); ++i)
    assign[sub.ids[i]] = host.points[static_cast<std::size_t>(res.point_of[i])];
  j["assignment"] = assign;
  j["accuracy"] = res.accuracy;
  j["candidates"] = res.candidates;
  j["budget_exhausted"] = res.budget_exhausted;
  j["c1"] = res.c1;
  j["c2"] = res.c2;
  j["granularity"] = res.table.granularity;
  j["refinement_parts"] = res.refinement_parts;
  maybe_write(out, j);
  std::cout << "accuracy=" << res.accuracy << " candidates=" << res.candidates
            << (res.budget_exhausted ? " (budget-limited)" : "") << "\n";
  return res.budget_exhausted ? kExitBudget : kExitOk;
}

int run_oracle_finite(const std::string& in, const std::string& host_path, double c,
                      std::uint64_t cap, const std::string& out) {
  cml::Instance inst = load_instance(in);
  cml::FiniteMetric host = cml::finite_metric_from_json(cml::parse_json_file(host_path));
  cml::PairSystem sub = cml::full_system(inst);
  cml::FiniteOracleResult res = cml::brute_force_finite(sub, host, c, cap);
  nlohmann::json j;
  j["version"] = 1;
  nlohmann::json assign = nlohmann::json::object();
  for (std::size_t i = 0; i < sub.ids.size(); ++i)
    assign[sub.ids[i]] = host.points[static_cast<std::size_t>(res.point_of[i])];
  j["assignment"] = assign;
  j["accuracy"] = res.accuracy;
  j["evaluated"] = res.evaluated;
  maybe_write(out, j);
  std::cout << "optimum=" << res.accuracy << " evaluated=" << res.evaluated << "\n";
  return kExitOk;
}

int run_oracle_line(const std::string& in, std::uint64_t cap, const std::string& out) {
  cml::Instance inst = load_instance(in);
  cml::LineOracleResult res = cml::brute_force_line_feasible(inst, cap);
  if (!res.feasible) {
    std::cout << "infeasible nodes=" << res.nodes << "\n";
    return kExitInfeasible;
  }
  cml::Embedding emb = cml::Embedding::line();
  for (const auto& [id, x] : res.witness) emb.coords[id] = {x};
  maybe_write(out, cml::embedding_to_json(emb));
  std::cout << "feasible nodes=" << res.nodes << "\n";
  return kExitOk;
}

int run_oracle_tree(const std::string& in, double alpha, int depth, int arity, double c,
                    std::uint64_t cap, const std::string& out) {
  cml::Instance inst = load_instance(in);
  cml::PairSystem sub = cml::full_system(inst);
  cml::FiniteOracleResult res = cml::brute_force_tree_small(sub, alpha, depth, arity, c, cap);
  nlohmann::json j;
  j["version"] = 1;
  j["accuracy"] = res.accuracy;
  j["evaluated"] = res.evaluated;
  maybe_write(out, j);
  std::cout << "optimum=" << res.accuracy << " evaluated=" << res.evaluated << "\n";
  return kExitOk;
}

int run_evaluate(const std::string& in, const std::string& emb_path, double c,
                 const std::string& out) {
  cml::Instance inst = load_instance(in);
  cml::Embedding emb = cml::embedding_from_json(cml::parse_json_file(emb_path));
  cml::AccuracyReport rep = cml::accuracy(inst, emb, c);
  maybe_write(out, cml::report_to_json(rep));
  std::cout << "accuracy=" << rep.accuracy << " c=" << c
            << " violated=" << rep.violated.size() << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"contrastive metric learning toolkit"};
  app.require_subcommand(1);

  // generate
  GenerateArgs gen;
  CLI::App* c_gen = app.add_subcommand("generate", "sample a planted instance");
  c_gen->add_option("--host", gen.host, "line | euclidean | tree")->required();
  c_gen->add_option("--n", gen.n, "number of objects")->required();
  c_gen->add_option("--u", gen.u, "similarity threshold");
  c_gen->add_option("--l", gen.l, "dissimilarity threshold");
  c_gen->add_option("--noise", gen.noise, "label flip probability");
  c_gen->add_option("--seed", gen.seed, "random seed");
  c_gen->add_option("--dim", gen.dim, "euclidean dimension");
  c_gen->add_option("--box", gen.box, "sampling box side (0 = auto)");
  c_gen->add_option("--out", gen.out, "instance output path");
  c_gen->add_option("--truth-out", gen.truth_out, "planted truth output path");

  // validate
  std::string val_in;
  bool val_json = false;
  CLI::App* c_val = app.add_subcommand("validate", "check an instance document");
  c_val->add_option("--in", val_in, "instance path")->required();
  c_val->add_flag("--json", val_json, "print the report as JSON");

  // learn
  CLI::App* c_learn = app.add_subcommand("learn", "fit an embedding");
  c_learn->require_subcommand(1);
  std::string ll_in, ll_out, ll_report;
  CLI::App* c_ll = c_learn->add_subcommand("line", "exact line feasibility");
  c_ll->add_option("--in", ll_in, "instance path")->required();
  c_ll->add_option("--out", ll_out, "embedding output path");
  c_ll->add_option("--report-out", ll_report, "report output path");

  LearnArgs le;
  CLI::App* c_le = c_learn->add_subcommand("euclidean", "low-dimensional pipeline");
  c_le->add_option("--in", le.in, "instance path")->required();
  c_le->add_option("--dim", le.dim, "host dimension");
  c_le->add_option("--epsilon", le.epsilon, "accuracy slack");
  c_le->add_option("--eps-prime", le.eps_prime, "distortion slack");
  c_le->add_option("--zeta", le.zeta, "noise rate (enables the noisy pipeline)");
  c_le->add_option("--seed", le.seed, "random seed");
  c_le->add_option("--grid-budget", le.grid_budget, "net points per cluster");
  c_le->add_option("--enum-budget", le.enum_budget, "assignment candidates per cluster");
  c_le->add_option("--restarts", le.restarts, "restart count (0 = auto)");
  c_le->add_option("--jobs", le.jobs, "parallel restarts");
  c_le->add_option("--out", le.out, "embedding output path");
  c_le->add_option("--report-out", le.report_out, "report output path");
  c_le->add_option("--csv", le.csv, "per-cluster stats CSV path");

  LearnArgs lt;
  CLI::App* c_lt = c_learn->add_subcommand("tree", "tree-host pipeline");
  c_lt->add_option("--in", lt.in, "instance path")->required();
  c_lt->add_option("--epsilon", lt.epsilon, "accuracy slack");
  c_lt->add_option("--eps-prime", lt.eps_prime, "distortion slack");
  c_lt->add_option("--zeta", lt.zeta, "noise rate (enables the noisy pipeline)");
  c_lt->add_option("--seed", lt.seed, "random seed");
  c_lt->add_option("--tree-budget", lt.tree_budget, "host vertices per cluster");
  c_lt->add_option("--enum-budget", lt.enum_budget, "assignment candidates per cluster");
  c_lt->add_option("--restarts", lt.restarts, "restart count (0 = auto)");
  c_lt->add_option("--jobs", lt.jobs, "parallel restarts");
  c_lt->add_option("--out", lt.out, "embedding output path");
  c_lt->add_option("--report-out", lt.report_out, "report output path");
  c_lt->add_option("--csv", lt.csv, "per-cluster stats CSV path");

  // partition
  CLI::App* c_part = app.add_subcommand("partition", "similarity-metric partitions");
  c_part->require_subcommand(1);
  std::string pl_in, pl_out;
  double pl_delta = 1.0;
  std::uint64_t pl_seed = 0;
  CLI::App* c_pl = c_part->add_subcommand("lipschitz", "diameter-bounded random partition");
  c_pl->add_option("--in", pl_in, "instance path")->required();
  c_pl->add_option("--delta", pl_delta, "diameter bound")->required();
  c_pl->add_option("--seed", pl_seed, "random seed");
  c_pl->add_option("--out", pl_out, "partition output path");

  std::string pa_in, pa_out;
  double pa_delta = 1.0;
  std::uint64_t pa_seed = 0;
  CLI::App* c_pa = c_part->add_subcommand("annuli", "random rings around the smallest id");
  c_pa->add_option("--in", pa_in, "instance path")->required();
  c_pa->add_option("--delta", pa_delta, "ring scale")->required();
  c_pa->add_option("--seed", pa_seed, "random seed");
  c_pa->add_option("--out", pa_out, "partition output path");

  std::string pw_in, pw_out;
  double pw_alpha = -1.0, pw_zeta = -1.0, pw_slack = 1.0;
  CLI::App* c_pw = c_part->add_subcommand("well-linked", "expander decomposition");
  c_pw->add_option("--in", pw_in, "instance path")->required();
  c_pw->add_option("--alpha", pw_alpha, "edge removal budget factor");
  c_pw->add_option("--zeta", pw_zeta, "noise rate (derives alpha)");
  c_pw->add_option("--slack", pw_slack, "threshold slack factor");
  c_pw->add_option("--out", pw_out, "decomposition output path");

  // embed finite
  CLI::App* c_embed = app.add_subcommand("embed", "host-specific embeddings");
  c_embed->require_subcommand(1);
  std::string ef_in, ef_host, ef_out;
  double ef_eps = 0.25, ef_eps_prime = 0.5;
  std::uint64_t ef_budget = 200000, ef_seed = 0;
  CLI::App* c_ef = c_embed->add_subcommand("finite", "bounded search into a finite metric");
  c_ef->add_option("--in", ef_in, "instance path")->required();
  c_ef->add_option("--host", ef_host, "finite metric path")->required();
  c_ef->add_option("--epsilon", ef_eps, "accuracy slack");
  c_ef->add_option("--eps-prime", ef_eps_prime, "distortion slack");
  c_ef->add_option("--enum-budget", ef_budget, "assignment candidates");
  c_ef->add_option("--seed", ef_seed, "partition seed");
  c_ef->add_option("--out", ef_out, "assignment output path");

  // oracle
  CLI::App* c_oracle = app.add_subcommand("oracle", "exhaustive reference results");
  c_oracle->require_subcommand(1);
  std::string of_in, of_host, of_out;
  double of_c = 1.0;
  std::uint64_t of_cap = 10000000;
  CLI::App* c_of = c_oracle->add_subcommand("finite", "exhaustive finite-host optimum");
  c_of->add_option("--in", of_in, "instance path")->required();
  c_of->add_option("--host", of_host, "finite metric path")->required();
  c_of->add_option("--c", of_c, "distortion");
  c_of->add_option("--cap", of_cap, "assignment cap");
  c_of->add_option("--out", of_out, "result output path");

  std::string ol_in, ol_out;
  std::uint64_t ol_cap = 5000000;
  CLI::App* c_ol = c_oracle->add_subcommand("line", "exact line feasibility");
  c_ol->add_option("--in", ol_in, "instance path")->required();
  c_ol->add_option("--cap", ol_cap, "search node cap");
  c_ol->add_option("--out", ol_out, "witness output path");

  std::string ot_in, ot_out;
  double ot_alpha = 0.25, ot_c = 1.0;
  int ot_depth = 3, ot_arity = 2;
  std::uint64_t ot_cap = 10000000;
  CLI::App* c_ot = c_oracle->add_subcommand("tree", "exhaustive canonical-tree optimum");
  c_ot->add_option("--in", ot_in, "instance path")->required();
  c_ot->add_option("--alpha", ot_alpha, "edge length");
  c_ot->add_option("--depth", ot_depth, "tree depth");
  c_ot->add_option("--arity", ot_arity, "tree branching");
  c_ot->add_option("--c", ot_c, "distortion");
  c_ot->add_option("--cap", ot_cap, "assignment cap");
  c_ot->add_option("--out", ot_out, "result output path");

  // evaluate
  std::string ev_in, ev_emb, ev_out;
  double ev_c = 1.0;
  CLI::App* c_ev = app.add_subcommand("evaluate", "score an embedding");
  c_ev->add_option("--in", ev_in, "instance path")->required();
  c_ev->add_option("--embedding", ev_emb, "embedding path")->required();
  c_ev->add_option("--c", ev_c, "distortion");
  c_ev->add_option("--out", ev_out, "report output path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*c_gen) return run_generate(gen);
    if (*c_val) return run_validate(val_in, val_json);
    if (*c_ll) return run_learn_line(ll_in, ll_out, ll_report);
    if (*c_le) return run_learn_euclidean(le);
    if (*c_lt) return run_learn_tree(lt);
    if (*c_pl) return run_partition_lipschitz(pl_in, pl_delta, pl_seed, pl_out);
    if (*c_pa) return run_partition_annuli(pa_in, pa_delta, pa_seed, pa_out);
    if (*c_pw) return run_partition_well_linked(pw_in, pw_alpha, pw_zeta, pw_slack, pw_out);
    if (*c_ef)
      return run_embed_finite(ef_in, ef_host, ef_eps, ef_eps_prime, ef_budget, ef_seed, ef_out);
    if (*c_of) return run_oracle_finite(of_in, of_host, of_c, of_cap, of_out);
    if (*c_ol) return run_oracle_line(ol_in, ol_cap, ol_out);
    if (*c_ot) return run_oracle_tree(ot_in, ot_alpha, ot_depth, ot_arity, ot_c, ot_cap, ot_out);
    if (*c_ev) return run_evaluate(ev_in, ev_emb, ev_c, ev_out);
  } catch (const cml::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitError;
  }
  std::cerr << "error: no subcommand\n";
  return kExitError;
}
