#include <fstream>
#include <sstream>

#include "doctest.h"
#include "scf/pipeline.hpp"

using namespace scf;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const std::string kK3 = SCF_FIXTURE_DIR "/k3_genus7_p7.json";
const std::string kSurface = SCF_FIXTURE_DIR "/surface_typeII_p5.json";

std::vector<HistoryEntry> session_log() {
  return {{7, 12, 7, 10, 64, {}}, {6, 11, 7, 5, 34, {}}, {5, 10, 7, 1, 12, {}}};
}

bool same_numbers(const std::vector<HistoryEntry>& a, const std::vector<HistoryEntry>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].same_numbers(b[i])) return false;
  return true;
}

nlohmann::ordered_json without_times(const VerificationReport& r) {
  auto j = to_json(r);
  for (auto& c : j["checks"]) c.erase("ms");
  return j;
}

}  // namespace

TEST_CASE("bundled fixtures load") {
  auto k3 = load_witness(kK3, 65521);
  CHECK(k3.ambient_dim == 7);
  CHECK(k3.expected.degree == 12);
  CHECK(k3.expected.genus == 7);
  CHECK_FALSE(k3.note.empty());
  auto s = load_witness(kSurface);
  CHECK(s.ambient_dim == 5);
  CHECK(s.expected.degree == 10);
  CHECK(s.expected.genus == 7);
  CHECK(s.expected.quadrics == 1);
  CHECK(s.expected.cubics == 12);
  CHECK(s.expected.euler == 26);
  CHECK(s.expected.h0_normal_in_cubic == 15);
  CHECK(s.lines.size() == 2);
  CHECK(same_numbers(s.history, session_log()));
}

TEST_CASE("malformed witness files") {
  std::string text = read_file(kSurface);
  SUBCASE("truncated") {
    try {
      parse_witness(text.substr(0, text.size() / 2));
      FAIL("no error");
    } catch (const WitnessError& e) {
      CHECK(e.line() > 1);
      CHECK(std::string(e.what()).find("line") != std::string::npos);
    }
  }
  SUBCASE("prime mismatch") { CHECK_THROWS_AS(parse_witness(text, 101), WitnessError); }
  auto j = nlohmann::json::parse(text);
  SUBCASE("composite prime") {
    j["prime"] = 65520;
    CHECK_THROWS_AS(witness_from_json(j), WitnessError);
  }
  SUBCASE("inhomogeneous generator") {
    j["generators"].push_back("x0^2 + x1");
    CHECK_THROWS_AS(witness_from_json(j), WitnessError);
  }
  SUBCASE("bad grammar names the generator") {
    j["generators"][2] = "x0^2 + * x1";
    try {
      witness_from_json(j);
      FAIL("no error");
    } catch (const WitnessError& e) {
      CHECK(std::string(e.what()).find("generator 2") != std::string::npos);
    }
  }
  SUBCASE("missing field") {
    j.erase("ambient_dim");
    CHECK_THROWS_AS(witness_from_json(j), WitnessError);
  }
  SUBCASE("variable count") {
    j["variables"].push_back("x6");
    CHECK_THROWS_AS(witness_from_json(j), WitnessError);
  }
}

TEST_CASE("witness JSON round trip") {
  auto b = load_witness(kSurface);
  auto again = witness_from_json(nlohmann::json::parse(to_json(b).dump()));
  CHECK(again.generators == b.generators);
  CHECK(again.lines == b.lines);
  CHECK(again.variables == b.variables);
  CHECK(same_numbers(again.history, b.history));
  CHECK(again.history[0].center == b.history[0].center);
  CHECK(again.expected.h0_normal_in_cubic == b.expected.h0_normal_in_cubic);
}

TEST_CASE("construction reproduces the projection numerology") {
  auto k3 = load_witness(kK3);
  PipelineConfig c0, c1;
  c1.seed = 1;
  auto a = construct_witness(k3, c0);
  auto b = construct_witness(k3, c1);
  CHECK(same_numbers(a.history, session_log()));
  CHECK(same_numbers(b.history, session_log()));
  CHECK(a.generators != b.generators);
  CHECK(a.lines.size() == 2);
  // the bundled fixture is the seed-0 construction
  CHECK(a.generators == load_witness(kSurface).generators);
}

TEST_CASE("a corrupted starting surface fails before any projection") {
  auto k3 = load_witness(kK3);
  SUBCASE("one quadric deleted") {
    // nine of the ten quadrics already cut out the surface up to saturation,
    // so the scheme is unchanged; the file is caught as incomplete
    k3.generators.pop_back();
    try {
      construct_witness(k3, {});
      FAIL("no error");
    } catch (const ContractError& e) {
      CHECK(std::string(e.what()).find("incomplete") != std::string::npos);
    }
  }
  SUBCASE("a quadric replaced by a random one") {
    k3.generators.back() = "x0^2 + 3*x1*x7 - x5^2";
    try {
      construct_witness(k3, {});
      FAIL("no error");
    } catch (const ContractError& e) {
      CHECK(std::string(e.what()).find("degree") != std::string::npos);
    }
  }
}

TEST_CASE("verification of the bundled witness is deterministic") {
  auto b = load_witness(kSurface);
  auto r1 = run_verification(b, {});
  CHECK(r1.verdict());
  CHECK(r1.checks().size() == 27);
  CHECK_FALSE(r1.assumptions.empty());
  for (const auto& c : r1.checks()) CHECK_FALSE(c.anchor.empty());
  auto r2 = run_verification(b, {});
  CHECK(without_times(r1) == without_times(r2));
  auto j = to_json(r1);
  CHECK(j["verdict"] == "pass");
  CHECK(j["prime"] == 65521);
  CHECK(j["checks"][0].contains("ms"));
}

TEST_CASE("a report stops cleanly at its deadline") {
  auto b = load_witness(kSurface);
  PipelineConfig c;
  c.timeout_secs = 1e-6;
  auto r = run_verification(b, c);
  CHECK_FALSE(r.aborted.empty());
  CHECK_FALSE(r.verdict());
}
