#include "doctest.h"

#include "zipstrata/groupspec.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"

using namespace zipstrata;

TEST_CASE("parsing a siegel spec") {
  GroupSpec spec = parse_group_spec(
      R"({"series": "C", "rank": 2, "similitude": true, "galois_order": 1, "mu": [1,1,1]})");
  CHECK(spec.series == Series::C);
  CHECK(spec.rank == 2);
  CHECK(spec.similitude);
  ZipDatum zd = zip_datum_from_spec(spec);
  CHECK(zd.rd.rank == 3);
}

TEST_CASE("field order is irrelevant") {
  GroupSpec a = parse_group_spec(R"({"mu": [1,1,1], "rank": 2, "series": "C", "similitude": true})");
  GroupSpec b = parse_group_spec(R"({"series": "C", "similitude": true, "rank": 2, "mu": [1,1,1]})");
  CHECK(a.mu == b.mu);
  CHECK(a.rank == b.rank);
}

TEST_CASE("rejections with field paths") {
  CHECK_THROWS_WITH_AS(parse_group_spec(R"({"series": "C", "rank": 2, "mu": [1,1], "extra": 1})"),
                       "extra: unknown field", SpecError);
  CHECK_THROWS_AS(parse_group_spec(R"({"series": "X", "rank": 2, "mu": [1,1]})"), SpecError);
  CHECK_THROWS_AS(parse_group_spec(R"({"series": "C", "rank": 0, "mu": []})"), SpecError);
  CHECK_THROWS_AS(parse_group_spec(R"({"series": "C", "rank": 2})"), SpecError);
  CHECK_THROWS_AS(parse_group_spec(R"("not an object")"), SpecError);
  CHECK_THROWS_AS(parse_group_spec(R"({"series": "C", "rank": 2, "mu": [1, true]})"), SpecError);

  // wrong mu length and non-dominant mu are reported as spec errors
  GroupSpec short_mu =
      parse_group_spec(R"({"series": "C", "rank": 2, "similitude": true, "mu": [1,1]})");
  CHECK_THROWS_AS(zip_datum_from_spec(short_mu), SpecError);
  GroupSpec bad_mu =
      parse_group_spec(R"({"series": "C", "rank": 2, "similitude": true, "mu": [1,1,2]})");
  CHECK_THROWS_AS(zip_datum_from_spec(bad_mu), SpecError);
}

TEST_CASE("rational mu entries") {
  GroupSpec spec = parse_group_spec(
      R"({"series": "C", "rank": 2, "similitude": true, "mu": [1, "1/2", "1/2"]})");
  CHECK(spec.mu[1] == Rat(1, 2));
  ZipDatum zd = zip_datum_from_spec(spec);
  CHECK(zd.K.size() == 2);  // this mu pairs to zero with both simple roots
}

namespace {

std::string run_cli(const std::string& args, int* exit_code) {
  const char* bin = std::getenv("ZIPSTRATA_BIN");
  REQUIRE(bin != nullptr);
  std::string tmp = "cli_out.tmp";
  std::string cmd = std::string(bin) + " " + args + " > " + tmp + " 2>/dev/null";
  int rc = std::system(cmd.c_str());
  if (exit_code) *exit_code = WEXITSTATUS(rc);
  std::ifstream in(tmp);
  std::ostringstream buf;
  buf << in.rdbuf();
  std::remove(tmp.c_str());
  return buf.str();
}

}  // namespace

TEST_CASE("cli determinism and JSON round trip") {
  const char* bin = std::getenv("ZIPSTRATA_BIN");
  const char* specdir = std::getenv("ZIPSTRATA_SPECS");
  if (!bin || !specdir) return;  // only run when wired up through ctest
  std::string spec = std::string(specdir) + "/siegel_c2.json";

  int rc1 = 0, rc2 = 0;
  std::string out1 = run_cli("strata --spec " + spec + " --json", &rc1);
  std::string out2 = run_cli("strata --spec " + spec + " --json", &rc2);
  CHECK(rc1 == 0);
  CHECK(out1 == out2);

  // round trip: re-ingest the emitted table and rebuild the same records
  GroupSpec gs = load_group_spec(spec);
  ZipDatum zd = zip_datum_from_spec(gs);
  std::vector<StratumRecord> table = strata_table(zd);
  nlohmann::json parsed = nlohmann::json::parse(out1);
  REQUIRE(parsed.size() == table.size());
  for (size_t i = 0; i < table.size(); ++i) {
    auto word_of = [&](const char* key) {
      std::vector<int> w;
      for (const auto& x : parsed[i][key]) w.push_back(x.get<int>() - 1);
      return from_word(zd.rd, w);
    };
    CHECK(word_of("word") == table[i].w);
    CHECK(parsed[i]["length"].get<int>() == table[i].length);
    CHECK(parsed[i]["dimension"].get<int>() == table[i].dimension);
    CHECK(word_of("minimal_partner") == table[i].minimal_partner);
    CHECK(word_of("cominimal_partner") == table[i].cominimal_partner);
    CHECK(word_of("involution_image") == table[i].involution_image);
  }

  int rc_bad = 0;
  run_cli("strata --spec /nonexistent.json", &rc_bad);
  CHECK(rc_bad == 2);

  int rc_hasse = 0;
  std::string hasse_out = run_cli("hasse --spec " + spec + " --p 3 --chi -1,-1", &rc_hasse);
  CHECK(rc_hasse == 0);
  CHECK(hasse_out.find("INTERNAL-INCONSISTENCY") == std::string::npos);
  size_t exists_count = 0;
  for (size_t pos = 0; (pos = hasse_out.find("verdict=exists", pos)) != std::string::npos; ++pos)
    ++exists_count;
  CHECK(exists_count == 4);

  // sweep mode stays byte-deterministic under worker parallelism
  int rc_s1 = 0, rc_s2 = 0;
  std::string sweep1 = run_cli("hasse --spec " + spec + " --json --seed 7 --jobs 2", &rc_s1);
  std::string sweep2 = run_cli("hasse --spec " + spec + " --json --seed 7 --jobs 2", &rc_s2);
  CHECK(rc_s1 == 0);
  CHECK(sweep1 == sweep2);
}
