#include "simplotope/commands.hpp"

#include <fstream>
#include <iostream>
#include <optional>

namespace spt {

std::vector<std::pair<std::size_t, std::size_t>> resolve_adjacencies(const GridFile& grid) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  if (grid.auto_adjacency) {
    for (std::size_t a = 0; a < grid.patches.size(); ++a)
      for (std::size_t b = a + 1; b < grid.patches.size(); ++b)
        if (detect_shared_facet(grid.patches[a].shape(), grid.patches[b].shape()))
          pairs.emplace_back(a, b);
    return pairs;
  }
  for (const auto& [a, b] : grid.adjacencies)
    pairs.emplace_back(grid.patch_index(a), grid.patch_index(b));
  return pairs;
}

Json conditions_document(const GridFile& grid) {
  std::vector<PatchInput> inputs;
  for (const auto& p : grid.patches) inputs.push_back(p.patch_input());
  SmoothnessSystem system =
      assemble_smoothness_system(inputs, resolve_adjacencies(grid), grid.order);

  Json doc;
  doc["order"] = grid.order;
  Json sets = Json::array();
  for (const auto& cs : system.pair_sets) sets.push_back(to_json(cs));
  doc["pairs"] = sets;
  doc["matrix"] = to_json(system);
  return doc;
}

Json verify_document(const GridFile& grid, int samples, std::uint64_t seed, const Json* replay,
                     bool& all_pass) {
  const auto pairs = resolve_adjacencies(grid);
  Json reports = Json::array();
  all_pass = true;
  std::size_t pair_index = 0;
  for (const auto& [a, b] : pairs) {
    const PatchInput first = grid.patches[a].patch_input();
    const PatchInput second = grid.patches[b].patch_input();
    ConditionSet cs;
    if (replay) {
      const auto& sets = replay->at("pairs");
      if (pair_index >= sets.size())
        throw GridParseError("replay document has fewer pairs than the grid");
      cs = condition_set_from_json(sets.at(pair_index));
      auto info = detect_shared_facet(first.shape, second.shape);
      if (!info)
        throw std::invalid_argument("patches '" + first.id + "' and '" + second.id +
                                    "' do not share a facet");
      cs.facet = info->normalized.facet();
    } else {
      cs = mixed_conditions(first, second, grid.order);
    }
    const auto conditioned = instantiate_conditioned(cs, seed + pair_index);
    TensorPolynomial left(first.shape, first.degrees, conditioned.by_rank[0]);
    TensorPolynomial right(second.shape, second.degrees, conditioned.by_rank[1]);
    VerificationReport report = check_conditions(left, right, cs, samples, seed + pair_index);
    report.pair = first.id + "|" + second.id;
    all_pass = all_pass && report.pass;
    reports.push_back(to_json(report));
    ++pair_index;
  }
  Json doc;
  doc["order"] = grid.order;
  doc["samples"] = samples;
  doc["seed"] = seed;
  doc["reports"] = reports;
  doc["pass"] = all_pass;
  return doc;
}

Json bnet_document(const GridFile& grid, bool render_float) {
  Json doc;
  Json patches = Json::array();
  for (const auto& p : grid.patches) {
    Json pj;
    pj["id"] = p.id;
    pj["net"] = tensor_net_json(domain_points(p.shape(), p.degrees), render_float);
    patches.push_back(pj);
  }
  doc["patches"] = patches;
  return doc;
}

Json circumscribe_document(const GridFile& grid, bool render_float) {
  Json doc;
  Json patches = Json::array();
  for (const auto& p : grid.patches) {
    Json pj;
    pj["id"] = p.id;
    pj["circumscribed"] = to_json(standard_circumscribed(p.shape()), render_float);
    patches.push_back(pj);
  }
  doc["patches"] = patches;

  Json pairs = Json::array();
  for (const auto& [a, b] : resolve_adjacencies(grid)) {
    const auto info = detect_shared_facet(grid.patches[a].shape(), grid.patches[b].shape());
    if (!info)
      throw std::invalid_argument("patches '" + grid.patches[a].id + "' and '" +
                                  grid.patches[b].id + "' do not share a facet");
    const CircumscribedPair pair = circumscribed_pair(info->normalized);
    Json pj;
    pj["left"] = grid.patches[a].id;
    pj["right"] = grid.patches[b].id;
    pj["left_simplex"] = to_json(pair.left, render_float);
    pj["right_simplex"] = to_json(pair.right, render_float);
    pj["shared_vertices"] = pair.shared_slots.size();
    pairs.push_back(pj);
  }
  doc["pairs"] = pairs;
  return doc;
}

namespace {

void write_document(const Json& doc, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << doc.dump(2) << "\n";
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write output file '" + out_path + "'");
  out << doc.dump(2) << "\n";
}

std::optional<GridFile> load(const CommandOptions& options, std::ostream& diag) {
  try {
    GridFile grid = load_grid(options.grid_path);
    if (options.order_override >= 0) grid.order = options.order_override;
    return grid;
  } catch (const GridParseError& e) {
    diag << "parse error: " << e.what() << "\n";
    return std::nullopt;
  }
}

template <class Fn>
int guarded(const CommandOptions& options, std::ostream& diag, Fn&& fn) {
  auto grid = load(options, diag);
  if (!grid) return exit_parse_error;
  try {
    return fn(*grid);
  } catch (const GridParseError& e) {
    diag << "parse error: " << e.what() << "\n";
    return exit_parse_error;
  } catch (const std::invalid_argument& e) {
    diag << "rejected: " << e.what() << "\n";
    return exit_geometry_rejected;
  }
}

}  // namespace

int run_conditions(const CommandOptions& options, std::ostream& diag) {
  return guarded(options, diag, [&](const GridFile& grid) {
    write_document(conditions_document(grid), options.out_path);
    return exit_ok;
  });
}

int run_verify(const CommandOptions& options, std::ostream& diag) {
  std::optional<Json> replay;
  if (!options.replay_path.empty()) {
    std::ifstream in(options.replay_path);
    if (!in) {
      diag << "parse error: cannot open replay file '" << options.replay_path << "'\n";
      return exit_parse_error;
    }
    Json j;
    try {
      in >> j;
    } catch (const std::exception& e) {
      diag << "parse error: invalid replay JSON: " << e.what() << "\n";
      return exit_parse_error;
    }
    replay = std::move(j);
  }
  return guarded(options, diag, [&](const GridFile& grid) {
    bool all_pass = false;
    Json doc = verify_document(grid, options.samples, options.seed,
                               replay ? &*replay : nullptr, all_pass);
    write_document(doc, options.out_path);
    return all_pass ? exit_ok : exit_verification_failed;
  });
}

int run_bnet(const CommandOptions& options, std::ostream& diag) {
  return guarded(options, diag, [&](const GridFile& grid) {
    write_document(bnet_document(grid, options.render_float), options.out_path);
    return exit_ok;
  });
}

int run_circumscribe(const CommandOptions& options, std::ostream& diag) {
  return guarded(options, diag, [&](const GridFile& grid) {
    write_document(circumscribe_document(grid, options.render_float), options.out_path);
    return exit_ok;
  });
}

}  // namespace spt
