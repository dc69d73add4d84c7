#pragma once

#include <string>

#include <json.hpp>

#include "cml/embedding.hpp"
#include "cml/evaluation.hpp"
#include "cml/finite_metric.hpp"
#include "cml/graph_partition.hpp"
#include "cml/instance.hpp"
#include "cml/lipschitz.hpp"
#include "cml/planted.hpp"
#include "cml/tree_learner.hpp"

namespace cml {

// JSON documents: every writer emits a canonical form (sorted keys,
// canonical pair order, version field), so identical state means identical
// bytes. Readers throw ParseError with the offending path or field.

nlohmann::json instance_to_json(const Instance& inst);
Instance instance_from_json(const nlohmann::json& j);

nlohmann::json embedding_to_json(const Embedding& emb);
Embedding embedding_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const AccuracyReport& report);

nlohmann::json finite_metric_to_json(const FiniteMetric& fm);
FiniteMetric finite_metric_from_json(const nlohmann::json& j);

nlohmann::json tree_metric_to_json(const TreeMetric& tree);
TreeMetric tree_metric_from_json(const nlohmann::json& j);

nlohmann::json truth_to_json(const PlantedTruth& truth);

nlohmann::json lipschitz_to_json(const LipschitzPartitionSample& sample,
                                 const std::vector<std::string>& ids);
nlohmann::json annuli_to_json(const AnnuliPartition& ann);
nlohmann::json well_linked_to_json(const WellLinkedDecomposition& wld);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

nlohmann::json parse_json_file(const std::string& path);
void write_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace cml
