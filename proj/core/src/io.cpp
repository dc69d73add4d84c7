#include "cml/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "cml/errors.hpp"

namespace cml {
namespace {

using nlohmann::json;

void need(const json& j, const char* key, const char* what) {
  if (!j.contains(key))
    throw ParseError(std::string(what) + ": missing field '" + key + "'");
}

double num(const json& j, const char* key, const char* what) {
  need(j, key, what);
  if (!j[key].is_number())
    throw ParseError(std::string(what) + ": field '" + key + "' must be a number");
  return j[key].get<double>();
}

std::string str(const json& j, const char* key, const char* what) {
  need(j, key, what);
  if (!j[key].is_string())
    throw ParseError(std::string(what) + ": field '" + key + "' must be a string");
  return j[key].get<std::string>();
}

void check_version(const json& j, const char* what) {
  need(j, "version", what);
  if (!j["version"].is_number_integer() || j["version"].get<int>() != 1)
    throw ParseError(std::string(what) + ": unsupported version");
}

std::vector<IdPair> pairs_from(const json& j, const char* key, const char* what) {
  need(j, key, what);
  if (!j[key].is_array())
    throw ParseError(std::string(what) + ": field '" + key + "' must be an array");
  std::vector<IdPair> out;
  for (const auto& e : j[key]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
      throw ParseError(std::string(what) + ": '" + key + "' entries must be [id, id]");
    out.push_back(make_pair_sorted(e[0].get<std::string>(), e[1].get<std::string>()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

json pairs_to(const std::vector<IdPair>& pairs) {
  std::vector<IdPair> sorted = pairs;
  for (auto& p : sorted) p = make_pair_sorted(p.first, p.second);
  std::sort(sorted.begin(), sorted.end());
  json arr = json::array();
  for (const auto& p : sorted) arr.push_back({p.first, p.second});
  return arr;
}

}  // namespace

json instance_to_json(const Instance& inst) {
  json j;
  j["version"] = 1;
  std::vector<std::string> objects = inst.objects;
  std::sort(objects.begin(), objects.end());
  j["objects"] = objects;
  j["u"] = inst.u;
  j["l"] = inst.l;
  j["similar"] = pairs_to(inst.similar);
  j["dissimilar"] = pairs_to(inst.dissimilar);
  return j;
}

Instance instance_from_json(const json& j) {
  const char* what = "instance";
  if (!j.is_object()) throw ParseError("instance: document must be an object");
  check_version(j, what);
  need(j, "objects", what);
  if (!j["objects"].is_array()) throw ParseError("instance: 'objects' must be an array");
  Instance inst;
  for (const auto& e : j["objects"]) {
    if (!e.is_string()) throw ParseError("instance: object ids must be strings");
    inst.objects.push_back(e.get<std::string>());
  }
  inst.u = num(j, "u", what);
  inst.l = num(j, "l", what);
  inst.similar = pairs_from(j, "similar", what);
  inst.dissimilar = pairs_from(j, "dissimilar", what);
  validate_instance(inst);
  return inst;
}

json embedding_to_json(const Embedding& emb) {
  json j;
  j["version"] = 1;
  switch (emb.host) {
    case HostKind::Line: {
      j["host"] = "line";
      json coords = json::object();
      for (const auto& [id, x] : emb.coords) coords[id] = x[0];
      j["assignment"] = coords;
      break;
    }
    case HostKind::Euclidean: {
      j["host"] = "euclidean";
      j["dim"] = emb.dim;
      json coords = json::object();
      for (const auto& [id, x] : emb.coords) coords[id] = x;
      j["assignment"] = coords;
      break;
    }
    case HostKind::Tree: {
      j["host"] = "tree";
      j["tree"] = tree_metric_to_json(*emb.tree);
      json assign = json::object();
      for (const auto& [id, v] : emb.vertex_of) assign[id] = v;
      j["assignment"] = assign;
      break;
    }
  }
  return j;
}

Embedding embedding_from_json(const json& j) {
  const char* what = "embedding";
  if (!j.is_object()) throw ParseError("embedding: document must be an object");
  check_version(j, what);
  std::string host = str(j, "host", what);
  need(j, "assignment", what);
  const json& assign = j["assignment"];
  if (!assign.is_object()) throw ParseError("embedding: 'assignment' must be an object");
  if (host == "line") {
    Embedding emb = Embedding::line();
    for (auto it = assign.begin(); it != assign.end(); ++it) {
      if (!it.value().is_number())
        throw ParseError("embedding: line coordinates must be numbers");
      emb.coords[it.key()] = {it.value().get<double>()};
    }
    return emb;
  }
  if (host == "euclidean") {
    need(j, "dim", what);
    if (!j["dim"].is_number_integer() || j["dim"].get<int>() < 1)
      throw ParseError("embedding: 'dim' must be a positive integer");
    int dim = j["dim"].get<int>();
    Embedding emb = Embedding::euclidean(dim);
    for (auto it = assign.begin(); it != assign.end(); ++it) {
      if (!it.value().is_array() || static_cast<int>(it.value().size()) != dim)
        throw ParseError("embedding: coordinates for '" + it.key() + "' must be a dim-length array");
      std::vector<double> x;
      for (const auto& e : it.value()) {
        if (!e.is_number()) throw ParseError("embedding: coordinates must be numbers");
        x.push_back(e.get<double>());
      }
      emb.coords[it.key()] = std::move(x);
    }
    return emb;
  }
  if (host == "tree") {
    need(j, "tree", what);
    auto tree = std::make_shared<TreeMetric>(tree_metric_from_json(j["tree"]));
    Embedding emb = Embedding::on_tree(tree);
    for (auto it = assign.begin(); it != assign.end(); ++it) {
      if (!it.value().is_string())
        throw ParseError("embedding: tree assignment values must be vertex ids");
      emb.vertex_of[it.key()] = it.value().get<std::string>();
    }
    return emb;
  }
  throw ParseError("embedding: unknown host '" + host + "'");
}

json report_to_json(const AccuracyReport& report) {
  json j;
  j["version"] = 1;
  j["c"] = report.c;
  j["accuracy"] = report.accuracy;
  j["satisfied_similar"] = report.satisfied_similar;
  j["satisfied_dissimilar"] = report.satisfied_dissimilar;
  json violated = json::array();
  for (const auto& v : report.violated) {
    json e;
    e["pair"] = {v.pair.first, v.pair.second};
    e["kind"] = v.kind == PairKind::Similar ? "similar" : "dissimilar";
    e["distance"] = v.distance;
    violated.push_back(e);
  }
  j["violated"] = violated;
  return j;
}

json finite_metric_to_json(const FiniteMetric& fm) {
  json j;
  j["version"] = 1;
  j["points"] = fm.points;
  j["matrix"] = fm.dist;
  return j;
}

FiniteMetric finite_metric_from_json(const json& j) {
  const char* what = "finite metric";
  if (!j.is_object()) throw ParseError("finite metric: document must be an object");
  check_version(j, what);
  need(j, "points", what);
  need(j, "matrix", what);
  if (!j["points"].is_array()) throw ParseError("finite metric: 'points' must be an array");
  if (!j["matrix"].is_array()) throw ParseError("finite metric: 'matrix' must be an array");
  FiniteMetric fm;
  for (const auto& e : j["points"]) {
    if (!e.is_string()) throw ParseError("finite metric: point ids must be strings");
    fm.points.push_back(e.get<std::string>());
  }
  for (const auto& row : j["matrix"]) {
    if (!row.is_array()) throw ParseError("finite metric: matrix rows must be arrays");
    std::vector<double> r;
    for (const auto& e : row) {
      if (!e.is_number()) throw ParseError("finite metric: matrix entries must be numbers");
      r.push_back(e.get<double>());
    }
    fm.dist.push_back(std::move(r));
  }
  fm.validate();
  return fm;
}

json tree_metric_to_json(const TreeMetric& tree) {
  json j;
  j["version"] = 1;
  j["vertices"] = tree.vertices;
  json edges = json::array();
  for (const auto& [v, w, len] : tree.edges) edges.push_back({json(v), json(w), json(len)});
  j["edges"] = edges;
  j["root"] = tree.root;
  return j;
}

TreeMetric tree_metric_from_json(const json& j) {
  const char* what = "tree metric";
  if (!j.is_object()) throw ParseError("tree metric: document must be an object");
  check_version(j, what);
  need(j, "vertices", what);
  need(j, "edges", what);
  TreeMetric tree;
  if (!j["vertices"].is_array()) throw ParseError("tree metric: 'vertices' must be an array");
  for (const auto& e : j["vertices"]) {
    if (!e.is_string()) throw ParseError("tree metric: vertex ids must be strings");
    tree.vertices.push_back(e.get<std::string>());
  }
  if (!j["edges"].is_array()) throw ParseError("tree metric: 'edges' must be an array");
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 3 || !e[0].is_string() || !e[1].is_string() ||
        !e[2].is_number())
      throw ParseError("tree metric: edges must be [vertex, vertex, length]");
    tree.edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>(),
                            e[2].get<double>());
  }
  tree.root = str(j, "root", what);
  try {
    tree.validate();
  } catch (const Error& err) {
    throw ParseError(std::string("tree metric: ") + err.what());
  }
  return tree;
}

json truth_to_json(const PlantedTruth& truth) {
  json j;
  j["version"] = 1;
  j["noise_rate"] = truth.noise_rate;
  j["flipped"] = pairs_to(truth.flipped);
  j["ground"] = embedding_to_json(truth.ground);
  return j;
}

json lipschitz_to_json(const LipschitzPartitionSample& sample,
                       const std::vector<std::string>& ids) {
  json j;
  j["version"] = 1;
  j["delta"] = sample.delta;
  j["beta_target"] = sample.beta_target;
  json clusters = json::array();
  for (const auto& cl : sample.clusters) {
    json names = json::array();
    for (int v : cl) names.push_back(ids.at(static_cast<std::size_t>(v)));
    clusters.push_back(names);
  }
  j["clusters"] = clusters;
  std::vector<IdPair> cut;
  for (const auto& e : sample.cut_similar_pairs)
    cut.push_back(make_pair_sorted(ids.at(static_cast<std::size_t>(e.first)),
                                   ids.at(static_cast<std::size_t>(e.second))));
  j["cut_similar_pairs"] = pairs_to(cut);
  return j;
}

json annuli_to_json(const AnnuliPartition& ann) {
  json j;
  j["version"] = 1;
  j["center"] = ann.center;
  j["shift"] = ann.shift;
  j["delta"] = ann.delta;
  json rings = json::object();
  for (const auto& [id, r] : ann.ring_index) rings[id] = r;
  j["rings"] = rings;
  j["clusters"] = ann.clusters;
  j["cut_similar_pairs"] = pairs_to(ann.cut_similar_pairs);
  return j;
}

json well_linked_to_json(const WellLinkedDecomposition& wld) {
  json j;
  j["version"] = 1;
  j["alpha"] = wld.alpha;
  j["chi"] = wld.chi;
  j["edge_budget"] = wld.edge_budget;
  j["budget_hit"] = wld.budget_hit;
  j["components"] = wld.components;
  j["achieved_expansion"] = json::array();
  for (double e : wld.achieved_expansion) {
    if (std::isfinite(e)) j["achieved_expansion"].push_back(e);
    else j["achieved_expansion"].push_back(nullptr);  // singletons: no cut exists
  }
  j["removed_edges"] = pairs_to(wld.removed_edges);
  return j;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw ParseError("error while reading '" + path + "'");
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ParseError("cannot open '" + path + "' for writing");
  out << content;
  out.flush();
  if (!out) throw ParseError("error while writing '" + path + "'");
}

json parse_json_file(const std::string& path) {
  std::string text = read_text_file(path);
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("'" + path + "' is not valid JSON");
  return j;
}

void write_json_file(const std::string& path, const json& j) {
  write_text_file(path, j.dump(2) + "\n");
}

}  // namespace cml
