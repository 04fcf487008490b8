#pragma once

// Configurations shared by the unit and acceptance tests: the hand-built
// reference configurations plus seeded generator output.

#include "kfp/catalog.hpp"

#include <map>
#include <string>
#include <vector>

namespace corpus {

struct Entry {
  std::string id;
  kfp::KConfiguration config;
  int expected_lines = -1;  // -1 when not fixed by construction
};

inline std::string type_id(const kfp::KType& t) {
  std::string s = "type";
  for (int d : t.d()) s += std::to_string(d);
  return s;
}

/// Every feasible line count for each listed type.
inline std::vector<Entry> line_count_family(const std::vector<std::vector<int>>& types, std::uint64_t seed) {
  std::vector<Entry> out;
  for (const auto& d : types) {
    kfp::KType t(d);
    for (int r : kfp::feasible_line_counts(t)) {
      out.push_back({type_id(t) + "_r" + std::to_string(r) + "_seed" + std::to_string(seed),
                     kfp::generate_with_line_count(t, r, seed), r});
    }
  }
  return out;
}

inline std::vector<std::vector<int>> sweep_types() {
  return {{1, 2}, {1, 3}, {2, 3}, {1, 2, 3}, {1, 3, 4, 5}, {1, 2, 3, 4}, {1, 2, 3, 4, 5}};
}

inline std::vector<Entry> references() {
  // line counts read off the drawings
  const std::map<std::string, int> lines{{"type123_r4", 4},  {"type123_r3", 3},  {"type123_r2", 2},
                                         {"type123_r1", 1},  {"type1345_r3", 3}, {"type1234_r4", 4},
                                         {"type13456_r2", 2}};
  std::vector<Entry> out;
  for (auto& [id, x] : kfp::catalog::reference_configurations()) out.push_back({id, x, lines.at(id)});
  return out;
}

inline std::vector<Entry> generic(std::uint64_t seed) {
  std::vector<Entry> out;
  for (const auto& d : std::vector<std::vector<int>>{{2, 5}, {2, 4}, {1, 2, 3}, {1, 3, 5}, {2, 3, 4, 6}}) {
    kfp::KType t(d);
    out.push_back({type_id(t) + "_generic_seed" + std::to_string(seed), kfp::generate_generic(t, seed)});
  }
  return out;
}

/// References, generic configurations and line-count families for s = 2..5
/// under two seeds.
inline std::vector<Entry> full(std::uint64_t seed = 1) {
  auto out = references();
  auto g = generic(seed);
  out.insert(out.end(), g.begin(), g.end());
  for (std::uint64_t sd : {seed, seed + 1}) {
    auto f = line_count_family(sweep_types(), sd);
    out.insert(out.end(), f.begin(), f.end());
  }
  return out;
}

}  // namespace corpus
