#include "zipstrata/groupspec.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace zipstrata {

namespace {

using nlohmann::json;

Rat rat_from_json(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Rat(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) return rat_from_string(j.get<std::string>());
  throw SpecError(path + ": expected an integer or a \"num/den\" string");
}

}  // namespace

GroupSpec parse_group_spec(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw SpecError(std::string("spec is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw SpecError("spec must be a JSON object");

  static const std::set<std::string> known = {"series", "rank", "similitude", "galois_order",
                                              "mu"};
  for (auto it = j.begin(); it != j.end(); ++it)
    if (known.count(it.key()) == 0) throw SpecError(it.key() + ": unknown field");

  GroupSpec spec;
  if (!j.contains("series") || !j["series"].is_string() || j["series"].get<std::string>().size() != 1)
    throw SpecError("series: expected one of \"A\", \"B\", \"C\", \"D\"");
  try {
    spec.series = series_from_letter(j["series"].get<std::string>()[0]);
  } catch (const std::invalid_argument& e) {
    throw SpecError(std::string("series: ") + e.what());
  }
  if (!j.contains("rank") || !j["rank"].is_number_integer())
    throw SpecError("rank: expected a positive integer");
  spec.rank = j["rank"].get<int>();
  if (spec.rank <= 0) throw SpecError("rank: expected a positive integer");
  if (j.contains("similitude")) {
    if (!j["similitude"].is_boolean()) throw SpecError("similitude: expected a boolean");
    spec.similitude = j["similitude"].get<bool>();
  }
  if (j.contains("galois_order")) {
    if (!j["galois_order"].is_number_integer()) throw SpecError("galois_order: expected 1 or 2");
    spec.galois_order = j["galois_order"].get<int>();
  }
  if (!j.contains("mu") || !j["mu"].is_array()) throw SpecError("mu: expected an array");
  for (size_t i = 0; i < j["mu"].size(); ++i) {
    std::ostringstream path;
    path << "mu[" << i << "]";
    try {
      spec.mu.push_back(rat_from_json(j["mu"][i], path.str()));
    } catch (const std::invalid_argument& e) {
      throw SpecError(path.str() + ": " + e.what());
    }
  }
  return spec;
}

GroupSpec load_group_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open spec file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_group_spec(buf.str());
}

RootDatum datum_from_spec(const GroupSpec& spec) {
  try {
    return build_root_datum(spec.series, spec.rank, spec.similitude, spec.galois_order);
  } catch (const std::invalid_argument& e) {
    throw SpecError(e.what());
  }
}

ZipDatum zip_datum_from_spec(const GroupSpec& spec) {
  RootDatum rd = datum_from_spec(spec);
  if (static_cast<int>(spec.mu.size()) != rd.rank) {
    std::ostringstream os;
    os << "mu: expected " << rd.rank << " coordinates, got " << spec.mu.size();
    throw SpecError(os.str());
  }
  try {
    return make_zip_datum(rd, Cocharacter(spec.mu));
  } catch (const std::invalid_argument& e) {
    throw SpecError(std::string("mu: ") + e.what());
  }
}

}  // namespace zipstrata
