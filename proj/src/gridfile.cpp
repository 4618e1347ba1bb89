#include "simplotope/gridfile.hpp"

#include <fstream>
#include <set>

namespace spt {

Json rational_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw GridParseError("expected a rational as \"p/q\" string or integer");
}

Json point_json(const Point& p) {
  Json out = Json::array();
  for (const auto& c : p) out.push_back(rational_json(c));
  return out;
}

Point point_from_json(const Json& j) {
  if (!j.is_array()) throw GridParseError("expected a coordinate array");
  Point p;
  for (const auto& c : j) p.push_back(rational_from_json(c));
  return p;
}

Json blocked_index_json(const BlockedIndex& k) {
  Json out = Json::array();
  for (const auto& b : k.blocks) out.push_back(Json(b));
  return out;
}

BlockedIndex blocked_index_from_json(const Json& j) {
  if (!j.is_array()) throw GridParseError("expected a blocked index (array of arrays)");
  BlockedIndex k;
  for (const auto& b : j) {
    if (!b.is_array()) throw GridParseError("expected a blocked index (array of arrays)");
    k.blocks.push_back(b.get<MultiIndex>());
  }
  return k;
}

std::size_t GridFile::patch_index(const std::string& id) const {
  for (std::size_t i = 0; i < patches.size(); ++i)
    if (patches[i].id == id) return i;
  throw GridParseError("adjacency references unknown patch '" + id + "'");
}

GridFile parse_grid(const Json& j) {
  if (!j.is_object()) throw GridParseError("grid file must be a JSON object");
  GridFile grid;
  grid.order = j.value("order", 0);
  if (grid.order < 0) throw GridParseError("order must be non-negative");
  if (!j.contains("patches") || !j["patches"].is_array() || j["patches"].empty())
    throw GridParseError("grid file needs a non-empty 'patches' array");

  std::set<std::string> ids;
  for (const auto& pj : j["patches"]) {
    GridPatch patch;
    if (!pj.contains("id") || !pj["id"].is_string())
      throw GridParseError("every patch needs a string 'id'");
    patch.id = pj["id"].get<std::string>();
    if (!ids.insert(patch.id).second)
      throw GridParseError("duplicate patch id '" + patch.id + "'");
    if (!pj.contains("base")) throw GridParseError("patch '" + patch.id + "' has no base point");
    patch.base = point_from_json(pj["base"]);
    if (!pj.contains("blocks") || !pj["blocks"].is_array())
      throw GridParseError("patch '" + patch.id + "' has no 'blocks' array");
    for (const auto& bj : pj["blocks"]) {
      if (!bj.is_array()) throw GridParseError("patch '" + patch.id + "': block must be an array");
      Factor f;
      for (const auto& ej : bj) {
        Point e = point_from_json(ej);
        if (e.size() != patch.base.size())
          throw GridParseError("patch '" + patch.id + "': displacement dimension mismatch");
        f.edges.push_back(std::move(e));
      }
      patch.blocks.push_back(std::move(f));
    }
    if (!pj.contains("degrees") || !pj["degrees"].is_array())
      throw GridParseError("patch '" + patch.id + "' has no 'degrees' array");
    patch.degrees = pj["degrees"].get<std::vector<int>>();
    if (patch.degrees.size() != patch.blocks.size())
      throw GridParseError("patch '" + patch.id + "': one degree per block required");
    for (int d : patch.degrees)
      if (d < 0) throw GridParseError("patch '" + patch.id + "': negative degree");
    try {
      patch.shape();
    } catch (const std::invalid_argument& e) {
      throw GridParseError("patch '" + patch.id + "': " + e.what());
    }
    grid.patches.push_back(std::move(patch));
  }

  if (j.contains("adjacencies")) {
    const auto& aj = j["adjacencies"];
    if (aj.is_string()) {
      if (aj.get<std::string>() != "auto")
        throw GridParseError("adjacencies must be \"auto\" or a list of pairs");
      grid.auto_adjacency = true;
    } else if (aj.is_array()) {
      for (const auto& pair : aj) {
        if (!pair.contains("left") || !pair.contains("right"))
          throw GridParseError("adjacency entries need 'left' and 'right' ids");
        grid.adjacencies.emplace_back(pair["left"].get<std::string>(),
                                      pair["right"].get<std::string>());
      }
      for (const auto& [a, b] : grid.adjacencies) {
        grid.patch_index(a);
        grid.patch_index(b);
      }
    } else {
      throw GridParseError("adjacencies must be \"auto\" or a list of pairs");
    }
  }
  return grid;
}

GridFile load_grid(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GridParseError("cannot open grid file '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw GridParseError(std::string("invalid JSON: ") + e.what());
  }
  return parse_grid(j);
}

Json to_json(const GridFile& grid) {
  Json out;
  out["order"] = grid.order;
  out["patches"] = Json::array();
  for (const auto& patch : grid.patches) {
    Json pj;
    pj["id"] = patch.id;
    pj["base"] = point_json(patch.base);
    Json blocks = Json::array();
    for (const auto& f : patch.blocks) {
      Json bj = Json::array();
      for (const auto& e : f.edges) bj.push_back(point_json(e));
      blocks.push_back(bj);
    }
    pj["blocks"] = blocks;
    pj["degrees"] = patch.degrees;
    out["patches"].push_back(pj);
  }
  if (grid.auto_adjacency) {
    out["adjacencies"] = "auto";
  } else {
    Json adj = Json::array();
    for (const auto& [a, b] : grid.adjacencies) adj.push_back(Json{{"left", a}, {"right", b}});
    out["adjacencies"] = adj;
  }
  return out;
}

Json to_json(const ConditionSet& cs) {
  Json out;
  out["order"] = cs.order;
  out["direction"] = point_json(cs.direction);
  Json patches = Json::array();
  for (const auto& p : cs.patches)
    patches.push_back(Json{{"id", p.id}, {"type", p.type}, {"degrees", p.degrees}});
  out["patches"] = patches;
  out["equal_oof_dims"] = cs.equal_oof_dims;
  out["completion_rows"] = cs.has_completion_rows;
  Json conditions = Json::array();
  for (const auto& c : cs.conditions) {
    Json cj;
    cj["rho"] = c.rho;
    if (c.completion) cj["completion"] = true;
    Json terms = Json::array();
    for (const auto& t : c.terms) {
      terms.push_back(Json{{"patch", cs.patches.at(t.ref.patch).id},
                           {"index", blocked_index_json(t.ref.index)},
                           {"weight", rational_json(t.weight)}});
    }
    cj["terms"] = terms;
    conditions.push_back(cj);
  }
  out["conditions"] = conditions;
  return out;
}

ConditionSet condition_set_from_json(const Json& j) {
  ConditionSet cs;
  cs.order = j.at("order").get<int>();
  cs.direction = point_from_json(j.at("direction"));
  for (const auto& pj : j.at("patches"))
    cs.patches.push_back(PatchMeta{pj.at("id").get<std::string>(),
                                   pj.at("type").get<std::vector<int>>(),
                                   pj.at("degrees").get<std::vector<int>>()});
  cs.equal_oof_dims = j.value("equal_oof_dims", false);
  cs.has_completion_rows = j.value("completion_rows", false);
  for (const auto& cj : j.at("conditions")) {
    LinearCondition c;
    c.rho = cj.value("rho", 0);
    c.completion = cj.value("completion", false);
    for (const auto& tj : cj.at("terms")) {
      const std::string id = tj.at("patch").get<std::string>();
      int rank = -1;
      for (std::size_t p = 0; p < cs.patches.size(); ++p)
        if (cs.patches[p].id == id) rank = static_cast<int>(p);
      if (rank < 0) throw GridParseError("condition references unknown patch '" + id + "'");
      c.terms.push_back(ConditionTerm{
          CoefficientRef{rank, blocked_index_from_json(tj.at("index"))},
          rational_from_json(tj.at("weight"))});
    }
    cs.conditions.push_back(std::move(c));
  }
  return cs;
}

Json to_json(const SmoothnessSystem& system) {
  Json out;
  Json columns = Json::array();
  for (const auto& [id, key] : system.columns)
    columns.push_back(Json{{"patch", id}, {"index", blocked_index_json(key)}});
  out["columns"] = columns;
  Json rows = Json::array();
  for (std::size_t r = 0; r < system.rows.size(); ++r)
    for (const auto& [c, w] : system.rows[r])
      rows.push_back(Json::array({r, c, rational_json(w)}));
  out["entries"] = rows;
  out["row_count"] = system.rows.size();
  return out;
}

Json to_json(const VerificationReport& report) {
  Json out;
  out["pair"] = report.pair;
  out["order"] = report.order;
  out["samples"] = report.sample_count;
  out["conditions_satisfied"] = report.conditions_satisfied;
  out["condition_residual"] = rational_json(report.condition_residual);
  out["max_discrepancy"] = rational_json(report.max_discrepancy);
  out["pass"] = report.pass;
  Json failures = Json::array();
  for (const auto& f : report.failures) {
    Json fj;
    fj["kind"] = f.kind;
    fj["point"] = point_json(f.point);
    fj["direction_powers"] = f.direction_powers;
    fj["left"] = rational_json(f.left_value);
    fj["right"] = rational_json(f.right_value);
    failures.push_back(fj);
  }
  out["failures"] = failures;
  return out;
}

namespace {

Json point_json_float(const Point& p) {
  Json out = Json::array();
  for (const auto& c : p) out.push_back(to_double(c));
  return out;
}

}  // namespace

Json tensor_net_json(const TensorNet& net, bool render_float) {
  Json out = Json::array();
  for (const auto& [k, q] : net.entries) {
    Json e;
    e["index"] = blocked_index_json(k);
    e["point"] = point_json(q);
    if (render_float) e["point_float"] = point_json_float(q);
    out.push_back(e);
  }
  return out;
}

Json simplex_net_json(const SimplexNet& net, bool render_float) {
  Json out = Json::array();
  for (const auto& [k, q] : net.entries) {
    Json e;
    e["index"] = Json(k);
    e["point"] = point_json(q);
    if (render_float) e["point_float"] = point_json_float(q);
    out.push_back(e);
  }
  return out;
}

Json to_json(const CircumscribedSimplex& c, bool render_float) {
  Json out;
  Json vertices = Json::array();
  for (const auto& v : c.simplex.vertices()) vertices.push_back(point_json(v));
  out["vertices"] = vertices;
  if (render_float) {
    Json vf = Json::array();
    for (const auto& v : c.simplex.vertices()) vf.push_back(point_json_float(v));
    out["vertices_float"] = vf;
  }
  out["partition"] = c.partition;
  Json alpha = Json::array();
  for (const auto& a : c.alpha) alpha.push_back(rational_json(a));
  out["alpha"] = alpha;
  return out;
}

}  // namespace spt
