#pragma once

// Group-spec files: {"series": "C", "rank": 2, "similitude": true,
// "galois_order": 1, "mu": [1,1,1]}. Field order irrelevant, unknown fields
// rejected, mu entries integers or "num/den" strings.

#include "zipstrata/rootdata.hpp"
#include "zipstrata/zipdata.hpp"

#include <string>
#include <vector>

namespace zipstrata {

struct GroupSpec {
  Series series = Series::A;
  int rank = 1;
  bool similitude = false;
  int galois_order = 1;
  std::vector<Rat> mu;
};

struct SpecError : std::runtime_error {
  explicit SpecError(const std::string& what) : std::runtime_error(what) {}
};

GroupSpec parse_group_spec(const std::string& json_text);
GroupSpec load_group_spec(const std::string& path);

RootDatum datum_from_spec(const GroupSpec& spec);
ZipDatum zip_datum_from_spec(const GroupSpec& spec);

}  // namespace zipstrata
