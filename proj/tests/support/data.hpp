#pragma once

#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

#include "freelat/bipartite.hpp"

namespace freelat::oracle {

inline nlohmann::json load_json(const std::string& name) {
  std::ifstream in(std::string(FREELAT_DATA_DIR) + "/" + name);
  if (!in) throw std::runtime_error("missing data file " + name);
  return nlohmann::json::parse(in);
}

inline BipartiteStructure load_structure(const std::string& name) { return structure_from_json(load_json(name)); }
inline AESentence load_sentence(const std::string& name) { return sentence_from_json(load_json(name)); }

}  // namespace freelat::oracle
