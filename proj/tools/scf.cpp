// scf: verify, construct and inspect witness surfaces.
//
// Exit codes: 0 all checks pass, 1 a check failed, 2 usage error, 3 engine or input error.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "scf/lattice.hpp"
#include "scf/pipeline.hpp"

#ifndef SCF_FIXTURE_DIR
#define SCF_FIXTURE_DIR "fixtures"
#endif

namespace {

struct Options {
  std::uint32_t prime = scf::FieldConfig::kDefaultPrime;
  std::uint64_t seed = 0;
  std::string witness;
  std::string out;
  std::string k3 = SCF_FIXTURE_DIR "/k3_genus7_p7.json";
  int max_retries = 8;
  double timeout_secs = 3600;
  long s2 = 0, deg = 0, h4 = 3;
};

void emit(const std::string& text, const Options& o) {
  if (o.out.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw std::runtime_error("cannot write " + o.out);
  f << text << "\n";
}

scf::PipelineConfig config_of(const Options& o) {
  scf::PipelineConfig c;
  c.seed = o.seed;
  c.max_retries = o.max_retries;
  c.timeout_secs = o.timeout_secs;
  return c;
}

int cmd_verify(const Options& o) {
  auto bundle = scf::load_witness(o.witness, o.prime);
  auto report = scf::run_verification(bundle, config_of(o));
  emit(scf::to_json(report).dump(2), o);
  if (!report.aborted.empty()) return 3;
  return report.verdict() ? 0 : 1;
}

int cmd_construct(const Options& o) {
  auto k3 = scf::load_witness(o.k3, o.prime);
  try {
    auto bundle = scf::construct_witness(k3, config_of(o));
    emit(scf::to_json(bundle).dump(2), o);
    return 0;
  } catch (const scf::ContractError& e) {
    std::cerr << "construct: " << e.what() << "\n";
    return 1;
  }
}

int cmd_invariants(const Options& o) {
  auto bundle = scf::load_witness(o.witness, o.prime);
  auto R = bundle.ring();
  scf::ProjectiveScheme S(bundle.ideal(R), o.seed);
  nlohmann::ordered_json j;
  j["ambient_dim"] = S.ambient_dim();
  j["dim"] = S.dim();
  j["degree"] = S.degree().str();
  j["hilbert_polynomial"] = S.hilbert_poly().to_string();
  if (S.dim() == 2) {
    auto s = scf::sectional_invariants(S.hilbert_poly());
    j["sectional_genus"] = s.genus.str();
    j["chi_O"] = s.chi.str();
  }
  for (int d = 1; d <= 3; ++d) j["h0_I(" + std::to_string(d) + ")"] = S.ideal().slice_dim(d);
  j["smooth"] = scf::is_smooth(S, o.seed);
  emit(j.dump(2), o);
  return 0;
}

int cmd_lattice(const Options& o) {
  scf::BigInt d = scf::hassett_discriminant({o.h4, o.deg, o.s2});
  nlohmann::ordered_json j;
  j["discriminant"] = d.str();
  j["square_free"] = scf::is_square_free(d);
  j["admissible"] = scf::hassett_admissible_divisor(d);
  emit(j.dump(2), o);
  return 0;
}

int cmd_groebner(const Options& o) {
  auto bundle = scf::load_witness(o.witness, o.prime);
  auto I = bundle.ideal(bundle.ring());
  emit(scf::dump(I.gb()), o);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification of a type II surface of degree 10 on a cubic fourfold"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--prime", o.prime, "field characteristic")->capture_default_str();
  app.add_option("--seed", o.seed, "seed for every random choice")->capture_default_str();
  app.add_option("--out", o.out, "write output here instead of stdout");
  app.add_option("--max-retries", o.max_retries, "redraws for centers and cubics")->capture_default_str();
  app.add_option("--timeout-secs", o.timeout_secs, "wall-clock budget (0 = none)")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "run every check on a witness surface in P5");
  verify->add_option("--witness", o.witness, "witness JSON")->required();
  auto* construct = app.add_subcommand("construct", "build a witness by two internal projections");
  construct->add_option("--k3", o.k3, "starting K3 surface")->capture_default_str();
  auto* invariants = app.add_subcommand("invariants", "numerical invariants of a witness");
  invariants->add_option("--witness", o.witness, "witness JSON")->required();
  auto* lattice = app.add_subcommand("lattice", "discriminant of <h^2, S>");
  lattice->add_option("--s2", o.s2, "S^2")->required();
  lattice->add_option("--deg", o.deg, "h^2.S = deg S")->required();
  lattice->add_option("--h4", o.h4, "h^4")->capture_default_str();
  auto* groebner = app.add_subcommand("groebner", "dump the reduced Groebner basis");
  groebner->add_option("--witness", o.witness, "witness JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (!scf::is_prime_u32(o.prime)) {
      std::cerr << "--prime must be prime\n";
      return 2;
    }
    if (*verify) return cmd_verify(o);
    if (*construct) return cmd_construct(o);
    if (*invariants) return cmd_invariants(o);
    if (*lattice) return cmd_lattice(o);
    if (*groebner) return cmd_groebner(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
