#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cml/instance.hpp"

namespace cml_test {

inline cml::Instance make_instance(std::vector<std::string> objects, double u, double l,
                                   std::vector<cml::IdPair> similar,
                                   std::vector<cml::IdPair> dissimilar) {
  cml::Instance inst;
  inst.objects = std::move(objects);
  inst.u = u;
  inst.l = l;
  inst.similar = std::move(similar);
  inst.dissimilar = std::move(dissimilar);
  inst.reindex();
  return inst;
}

// Complete instance over the given ids: every listed pair is similar, every
// other pair dissimilar.
inline cml::Instance complete_instance(std::vector<std::string> objects, double u,
                                       double l, std::vector<cml::IdPair> similar) {
  std::vector<cml::IdPair> dissimilar;
  for (std::size_t i = 0; i < objects.size(); ++i) {
    for (std::size_t j = i + 1; j < objects.size(); ++j) {
      cml::IdPair p = cml::make_pair_sorted(objects[i], objects[j]);
      bool in_s = false;
      for (const auto& q : similar) in_s |= q == p;
      if (!in_s) dissimilar.push_back(p);
    }
  }
  return make_instance(std::move(objects), u, l, std::move(similar),
                       std::move(dissimilar));
}

}  // namespace cml_test
