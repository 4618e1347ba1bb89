#pragma once

#include "simplotope/circumscribe.hpp"
#include "simplotope/continuity.hpp"
#include "simplotope/verify.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace spt {

using Json = nlohmann::ordered_json;

/// Malformed input document (distinct from geometric rejection).
struct GridParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GridPatch {
  std::string id;
  Point base;
  std::vector<Factor> blocks;
  std::vector<int> degrees;

  Simplotope shape() const { return Simplotope(base, blocks); }
  PatchInput patch_input() const { return PatchInput{shape(), degrees, id}; }
};

struct GridFile {
  int order = 0;
  std::vector<GridPatch> patches;
  bool auto_adjacency = false;
  std::vector<std::pair<std::string, std::string>> adjacencies;

  std::size_t patch_index(const std::string& id) const;
};

GridFile parse_grid(const Json& j);
GridFile load_grid(const std::string& path);
Json to_json(const GridFile& grid);

Json rational_json(const Rational& r);
Rational rational_from_json(const Json& j);
Json point_json(const Point& p);
Point point_from_json(const Json& j);
Json blocked_index_json(const BlockedIndex& k);
BlockedIndex blocked_index_from_json(const Json& j);

Json to_json(const ConditionSet& cs);
ConditionSet condition_set_from_json(const Json& j);
Json to_json(const SmoothnessSystem& system);
Json to_json(const VerificationReport& report);
Json tensor_net_json(const TensorNet& net, bool render_float);
Json simplex_net_json(const SimplexNet& net, bool render_float);
Json to_json(const CircumscribedSimplex& c, bool render_float);

}  // namespace spt
