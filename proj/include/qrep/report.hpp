#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "qrep/blocks.hpp"
#include "qrep/certify.hpp"
#include "qrep/orbits.hpp"
#include "qrep/veech.hpp"

namespace qrep {

using json = nlohmann::json;

inline constexpr const char* kVersion = "0.1.0";
inline constexpr double kPerronTolerance = 1e-12;

/// Output of one CLI command. Objects serialize with sorted keys, so dumping a
/// parsed report reproduces it byte for byte.
struct Report {
  std::string command;
  json inputs;
  json results;
  std::vector<std::string> notes;

  json to_json() const;
  std::string dump() const;  // two-space indent, trailing newline
};

json certificate_json(const InfinitenessCertificate& cert);

json blocks_json(const ColoredGraph& graph, int p);

json veech_json(const ConfigurationGraph& g);

json orbits_json(int g, int n, bool labeled);

}  // namespace qrep
