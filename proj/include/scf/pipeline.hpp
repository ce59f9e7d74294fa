#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "scf/geometry.hpp"

namespace scf {

/// Malformed or inconsistent witness file.
class WitnessError : public std::runtime_error {
 public:
  explicit WitnessError(const std::string& msg, int line = 0, int column = 0)
      : std::runtime_error(msg), line_(line), column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_, column_;
};

/// Numerical state of one surface along the projection chain.
struct HistoryEntry {
  int ambient_dim = 0;
  long degree = 0, genus = 0, quadrics = 0, cubics = 0;
  /// Where the next projection was centered, in this step's coordinates.
  std::optional<std::vector<Coeff>> center;

  bool same_numbers(const HistoryEntry& o) const {
    return ambient_dim == o.ambient_dim && degree == o.degree && genus == o.genus && quadrics == o.quadrics &&
           cubics == o.cubics;
  }
};

struct Expectations {
  std::optional<long> degree, genus, quadrics, cubics, euler, h0_normal_in_cubic;
};

/// Serialized surface: ideal generators in the text grammar plus metadata.
struct WitnessBundle {
  std::uint32_t prime = FieldConfig::kDefaultPrime;
  int ambient_dim = 0;
  std::vector<std::string> variables;
  std::vector<std::string> generators;
  std::vector<HistoryEntry> history;
  std::vector<std::vector<std::string>> lines;
  Expectations expected;
  std::string note;

  RingPtr ring() const;
  /// Parses the generators; throws WitnessError naming the bad generator.
  Ideal ideal(const RingPtr& ring) const;
  std::vector<ProjectiveScheme> line_schemes(const RingPtr& ring) const;
};

nlohmann::ordered_json to_json(const WitnessBundle& b);
/// Validates field types, the prime, the variable count and homogeneity.
WitnessBundle witness_from_json(const nlohmann::json& j);
/// `engine_prime`, when given, must equal the file's prime.
WitnessBundle parse_witness(const std::string& text, std::optional<std::uint32_t> engine_prime = std::nullopt);
WitnessBundle load_witness(const std::string& path, std::optional<std::uint32_t> engine_prime = std::nullopt);
void save_witness(const WitnessBundle& b, const std::string& path);

/// Bundle for a scheme, with generators written from a minimal generating set.
WitnessBundle bundle_from_scheme(const ProjectiveScheme& S);

struct PipelineConfig {
  std::uint64_t seed = 0;
  int max_retries = 8;
  /// 0 disables the deadline.
  double timeout_secs = 3600;
};

/// Two internal projections of the degree-12 K3 in `k3` from random smooth
/// centers, tracking both exceptional lines. Each step must show the predicted
/// (degree, genus) and h0(I(2)), h0(I(3)) equal to chi(I(2)), chi(I(3)) of
/// the image; a failing center is redrawn up to `max_retries` times before a
/// ContractError.
WitnessBundle construct_witness(const WitnessBundle& k3, const PipelineConfig& config);

/// The full check list for a surface in P^5 carrying two lines.
VerificationReport run_verification(const WitnessBundle& bundle, const PipelineConfig& config);

/// {"verdict", "prime", "seed", "checks": [...], "assumptions": [...]} (+ "aborted").
nlohmann::ordered_json to_json(const VerificationReport& r);

}  // namespace scf
