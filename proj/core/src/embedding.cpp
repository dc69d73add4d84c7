#include "cml/embedding.hpp"

#include <cmath>

#include "cml/errors.hpp"

namespace cml {

bool Embedding::covers(const Instance& inst) const {
  for (const auto& id : inst.objects) {
    if (host == HostKind::Tree) {
      if (!vertex_of.count(id)) return false;
    } else {
      if (!coords.count(id)) return false;
    }
  }
  return true;
}

void Embedding::check_against(const Instance& inst) const {
  for (const auto& id : inst.objects) {
    if (host == HostKind::Tree) {
      auto it = vertex_of.find(id);
      if (it == vertex_of.end())
        throw MissingAssignment("object not embedded: " + id);
      if (!tree) throw InvalidParameter("tree embedding without a tree");
      if (tree->index_of(it->second) < 0)
        throw InvalidParameter("object " + id + " assigned to unknown vertex " + it->second);
    } else {
      auto it = coords.find(id);
      if (it == coords.end()) throw MissingAssignment("object not embedded: " + id);
      std::size_t want = host == HostKind::Line ? 1 : static_cast<std::size_t>(dim);
      if (it->second.size() != want)
        throw DimensionMismatch("coordinate size mismatch for object " + id);
    }
  }
}

HostDistance::HostDistance(const Embedding& emb) : emb_(emb) {}

double HostDistance::operator()(const std::string& a, const std::string& b) const {
  if (emb_.host == HostKind::Tree) {
    auto ia = emb_.vertex_of.find(a);
    auto ib = emb_.vertex_of.find(b);
    if (ia == emb_.vertex_of.end()) throw MissingAssignment("object not embedded: " + a);
    if (ib == emb_.vertex_of.end()) throw MissingAssignment("object not embedded: " + b);
    auto row = tree_rows_.find(ia->second);
    if (row == tree_rows_.end())
      row = tree_rows_.emplace(ia->second, emb_.tree->distances_from(ia->second)).first;
    int j = emb_.tree->index_of(ib->second);
    return row->second[static_cast<std::size_t>(j)];
  }
  auto ia = emb_.coords.find(a);
  auto ib = emb_.coords.find(b);
  if (ia == emb_.coords.end()) throw MissingAssignment("object not embedded: " + a);
  if (ib == emb_.coords.end()) throw MissingAssignment("object not embedded: " + b);
  if (ia->second.size() != ib->second.size())
    throw DimensionMismatch("coordinate sizes disagree: " + a + " vs " + b);
  double sq = 0.0;
  for (std::size_t k = 0; k < ia->second.size(); ++k) {
    double d = ia->second[k] - ib->second[k];
    sq += d * d;
  }
  return std::sqrt(sq);
}

}  // namespace cml
