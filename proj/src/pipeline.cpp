#include "scf/pipeline.hpp"

#include <fstream>
#include <random>
#include <sstream>

#include "scf/deadline.hpp"
#include "scf/homological.hpp"
#include "scf/lattice.hpp"
#include "scf/parse.hpp"

namespace scf {

using nlohmann::json;
using nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Witness files

RingPtr WitnessBundle::ring() const {
  return std::make_shared<const PolyRing>(ambient_dim + 1, FieldConfig(prime), MonomialOrder::grevlex(ambient_dim + 1),
                                          variables);
}

Ideal WitnessBundle::ideal(const RingPtr& R) const {
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    try {
      gens.push_back(parse_polynomial(generators[i], R));
    } catch (const ParseError& e) {
      throw WitnessError("generator " + std::to_string(i) + ": " + e.what(), e.line(), e.column());
    }
    if (!gens.back().is_homogeneous()) throw WitnessError("generator " + std::to_string(i) + " is not homogeneous");
  }
  return Ideal(R, std::move(gens));
}

std::vector<ProjectiveScheme> WitnessBundle::line_schemes(const RingPtr& R) const {
  std::vector<ProjectiveScheme> out;
  for (std::size_t k = 0; k < lines.size(); ++k) {
    std::vector<Polynomial> gens;
    for (const auto& s : lines[k]) {
      try {
        gens.push_back(parse_polynomial(s, R));
      } catch (const ParseError& e) {
        throw WitnessError("line " + std::to_string(k) + ": " + e.what(), e.line(), e.column());
      }
      if (!gens.back().is_homogeneous()) throw WitnessError("line " + std::to_string(k) + " is not homogeneous");
    }
    out.push_back(ProjectiveScheme(Ideal(R, std::move(gens))));
  }
  return out;
}

namespace {

ordered_json history_json(const HistoryEntry& h) {
  ordered_json j{{"ambient_dim", h.ambient_dim}, {"degree", h.degree},   {"genus", h.genus},
                 {"quadrics", h.quadrics},       {"cubics", h.cubics}};
  if (h.center) j["center"] = *h.center;
  return j;
}

template <class T>
T field(const json& j, const char* key) {
  if (!j.contains(key)) throw WitnessError(std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw WitnessError(std::string("field \"") + key + "\": " + e.what());
  }
}

}  // namespace

ordered_json to_json(const WitnessBundle& b) {
  ordered_json j;
  j["prime"] = b.prime;
  j["ambient_dim"] = b.ambient_dim;
  j["variables"] = b.variables;
  j["generators"] = b.generators;
  j["history"] = ordered_json::array();
  for (const auto& h : b.history) j["history"].push_back(history_json(h));
  j["lines"] = b.lines;
  ordered_json e = ordered_json::object();
  auto put = [&](const char* k, const std::optional<long>& v) {
    if (v) e[k] = *v;
  };
  put("degree", b.expected.degree);
  put("genus", b.expected.genus);
  put("quadrics", b.expected.quadrics);
  put("cubics", b.expected.cubics);
  put("euler", b.expected.euler);
  put("h0_normal_in_cubic", b.expected.h0_normal_in_cubic);
  j["expected"] = e;
  if (!b.note.empty()) j["note"] = b.note;
  return j;
}

WitnessBundle witness_from_json(const json& j) {
  if (!j.is_object()) throw WitnessError("witness must be a JSON object");
  WitnessBundle b;
  b.prime = field<std::uint32_t>(j, "prime");
  if (!is_prime_u32(b.prime)) throw WitnessError("declared prime " + std::to_string(b.prime) + " is not prime");
  b.ambient_dim = field<int>(j, "ambient_dim");
  if (b.ambient_dim < 1) throw WitnessError("ambient_dim must be positive");
  b.variables = field<std::vector<std::string>>(j, "variables");
  if (static_cast<int>(b.variables.size()) != b.ambient_dim + 1)
    throw WitnessError("expected " + std::to_string(b.ambient_dim + 1) + " variables");
  b.generators = field<std::vector<std::string>>(j, "generators");
  if (j.contains("history")) {
    for (const auto& h : j.at("history")) {
      HistoryEntry e;
      e.ambient_dim = field<int>(h, "ambient_dim");
      e.degree = field<long>(h, "degree");
      e.genus = field<long>(h, "genus");
      e.quadrics = field<long>(h, "quadrics");
      e.cubics = field<long>(h, "cubics");
      if (h.contains("center")) e.center = field<std::vector<Coeff>>(h, "center");
      b.history.push_back(std::move(e));
    }
  }
  if (j.contains("lines")) b.lines = field<std::vector<std::vector<std::string>>>(j, "lines");
  if (j.contains("expected")) {
    const json& e = j.at("expected");
    auto get = [&](const char* k, std::optional<long>& slot) {
      if (e.contains(k)) slot = field<long>(e, k);
    };
    get("degree", b.expected.degree);
    get("genus", b.expected.genus);
    get("quadrics", b.expected.quadrics);
    get("cubics", b.expected.cubics);
    get("euler", b.expected.euler);
    get("h0_normal_in_cubic", b.expected.h0_normal_in_cubic);
  }
  if (j.contains("note")) b.note = field<std::string>(j, "note");
  // parse everything once so a bad file fails here, not mid-run
  RingPtr R;
  try {
    R = b.ring();
  } catch (const std::exception& e) {
    throw WitnessError(std::string("variables: ") + e.what());
  }
  b.ideal(R);
  b.line_schemes(R);
  return b;
}

WitnessBundle parse_witness(const std::string& text, std::optional<std::uint32_t> engine_prime) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    // byte offset -> line and column
    int line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw WitnessError("JSON parse error at line " + std::to_string(line) + ", column " + std::to_string(col), line,
                       col);
  }
  WitnessBundle b = witness_from_json(j);
  if (engine_prime && *engine_prime != b.prime)
    throw WitnessError("witness prime " + std::to_string(b.prime) + " differs from the engine prime " +
                       std::to_string(*engine_prime));
  return b;
}

WitnessBundle load_witness(const std::string& path, std::optional<std::uint32_t> engine_prime) {
  std::ifstream in(path);
  if (!in) throw WitnessError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_witness(ss.str(), engine_prime);
}

void save_witness(const WitnessBundle& b, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << to_json(b).dump(2) << "\n";
}

namespace {

std::vector<std::string> generator_strings(const Ideal& I) {
  std::vector<std::string> out;
  for (const auto& g : I.minimal_generators()) out.push_back(g.to_string());
  return out;
}

HistoryEntry numbers_of(const ProjectiveScheme& S) {
  HistoryEntry h;
  h.ambient_dim = S.ambient_dim();
  h.degree = static_cast<long>(S.degree());
  h.genus = static_cast<long>(sectional_genus(S));
  h.quadrics = S.ideal().slice_dim(2);
  h.cubics = S.ideal().slice_dim(3);
  return h;
}

// h1(I(2)) = h1(I(3)) = 0 and no h2: the counts equal chi(I(d)).
bool counts_match_chi(const ProjectiveScheme& S, const HistoryEntry& h) {
  HilbertPoly P = S.hilbert_poly();
  return chi_ideal_twist(P, S.ambient_dim(), 2) == h.quadrics && chi_ideal_twist(P, S.ambient_dim(), 3) == h.cubics;
}

std::string describe(const HistoryEntry& h) {
  std::ostringstream os;
  os << "(" << h.degree << ", " << h.genus << ", " << h.quadrics << ", " << h.cubics << ") in P^" << h.ambient_dim;
  return os.str();
}

}  // namespace

WitnessBundle bundle_from_scheme(const ProjectiveScheme& S) {
  WitnessBundle b;
  b.prime = S.ring()->field().prime();
  b.ambient_dim = S.ambient_dim();
  b.variables = S.ring()->var_names();
  b.generators = generator_strings(S.ideal());
  return b;
}

// ---------------------------------------------------------------------------
// Construction

WitnessBundle construct_witness(const WitnessBundle& k3, const PipelineConfig& config) {
  std::optional<DeadlineScope> deadline;
  if (config.timeout_secs > 0)
    deadline.emplace(std::chrono::steady_clock::now() +
                     std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                         std::chrono::duration<double>(config.timeout_secs)));
  std::mt19937_64 rng(config.seed);
  RingPtr R = k3.ring();
  Ideal given = k3.ideal(R);
  ProjectiveScheme S(given, config.seed);

  if (S.dim() != 2 || S.degree() != k3.expected.degree.value_or(12))
    throw ContractError("starting scheme has dimension " + std::to_string(S.dim()) + " and degree " +
                        S.degree().str());
  HistoryEntry first = numbers_of(S);
  if (first.genus != k3.expected.genus.value_or(7))
    throw ContractError("starting surface has sectional genus " + std::to_string(first.genus));
  // the file must carry the whole ideal, not just enough of it to cut out S
  if (given.slice_dim(2) != first.quadrics || given.slice_dim(3) != first.cubics)
    throw ContractError("starting ideal is incomplete: it spans " + std::to_string(given.slice_dim(2)) +
                        " quadrics and " + std::to_string(given.slice_dim(3)) + " cubics of " + describe(first));
  if (first.quadrics != k3.expected.quadrics.value_or(first.quadrics) ||
      first.cubics != k3.expected.cubics.value_or(first.cubics) || !counts_match_chi(S, first))
    throw ContractError("starting surface has counts " + describe(first));

  std::vector<HistoryEntry> history{first};
  std::vector<ProjectiveScheme> lines;
  for (int step = 0; step < 2; ++step) {
    std::optional<InternalProjection> done;
    std::vector<ProjectiveScheme> moved;
    RationalPoint center;
    std::string last_failure = "no attempt";
    for (int attempt = 0; attempt < config.max_retries && !done; ++attempt) {
      try {
        center = sample_smooth_point(S, rng());
        InternalProjection proj = internal_projection(S, center, rng());
        moved.clear();
        for (const auto& L : lines) moved.push_back(proj.map.image(L));
        bool lines_ok = true;
        for (const auto& L : moved)
          lines_ok = lines_ok && L.dim() == 1 && L.degree() == 1 && proj.image.contains(L);
        if (!lines_ok) {
          last_failure = "an earlier exceptional line did not survive";
          continue;
        }
        HistoryEntry h = numbers_of(proj.image);
        if (!counts_match_chi(proj.image, h)) {
          last_failure = "counts " + describe(h) + " differ from chi";
          continue;
        }
        done = std::move(proj);
      } catch (const ContractError& e) {
        last_failure = e.what();
      }
    }
    if (!done) {
      throw ContractError("projection " + std::to_string(step + 1) + " failed after " +
                          std::to_string(config.max_retries) + " centers: " + last_failure);
    }
    history.back().center = center.coords;
    history.push_back(numbers_of(done->image));
    moved.push_back(done->exceptional_line);
    lines = std::move(moved);
    S = done->image;
  }

  WitnessBundle out = bundle_from_scheme(S);
  out.history = std::move(history);
  for (const auto& L : lines) out.lines.push_back(generator_strings(L.ideal()));
  out.expected = {10, 7, 1, 12, 26, 15};
  std::ostringstream note;
  note << "two internal projections of the starting K3 surface, seed " << config.seed;
  out.note = note.str();
  return out;
}

// ---------------------------------------------------------------------------
// Verification

namespace {

template <class T>
std::string str(const T& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace

VerificationReport run_verification(const WitnessBundle& bundle, const PipelineConfig& config) {
  VerificationReport rep;
  rep.prime = bundle.prime;
  rep.seed = config.seed;
  rep.assumptions = {
      {"K_S^2 = -2", "S is a K3 surface blown up in two points; its two (-1)-lines give K^2 = -2"},
      {"h1(N_{S/P5}) = h2(N_{S/P5}) = 0", "the Hilbert scheme of P5 is smooth at S of dimension h0(N_{S/P5})"},
      {"the Hilbert scheme of flags is smooth of dimension h0(N_{S/P5}) + h0(I_S(3)) - 1 at [S in X]",
       "flag dimension count 58 + 12 - 1 = 69"},
      {"dim C14 = 19, dim PGL(6) = 35", "C14 is a divisor in the 20-dimensional moduli of cubic fourfolds"},
  };

  std::optional<DeadlineScope> deadline;
  if (config.timeout_secs > 0)
    deadline.emplace(std::chrono::steady_clock::now() +
                     std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                         std::chrono::duration<double>(config.timeout_secs)));

  try {
    RingPtr R = bundle.ring();
    if (bundle.ambient_dim != 5) throw std::invalid_argument("verification expects a surface in P5");
    ProjectiveScheme S(bundle.ideal(R), config.seed);
    auto lines = bundle.line_schemes(R);
    ProjectiveScheme none = ProjectiveScheme::from_saturated(Ideal::unit(R));
    const ProjectiveScheme& L1 = lines.size() > 0 ? lines[0] : none;
    const ProjectiveScheme& L2 = lines.size() > 1 ? lines[1] : none;
    const Expectations& want = bundle.expected;

    TypeIIExpectations t2;
    t2.degree = want.degree.value_or(10);
    t2.genus = want.genus.value_or(7);
    t2.quadrics = want.quadrics.value_or(1);
    rep.append(type_II_certificate(S, L1, L2, t2, config.seed));

    rep.append(timed_check("h0(I_S(3))", "S lies on 12 independent cubics", str(want.cubics.value_or(12)),
                           [&] { return str(S.ideal().slice_dim(3)); }));

    auto sect = [&] { return sectional_invariants(S.hilbert_poly()); };
    rep.append(timed_check("euler number", "c2(S) = 12 chi(O_S) - K^2 = 26", str(want.euler.value_or(26)),
                           [&] { return str(noether_c2(sect().chi, -2)); }));

    std::optional<Hypersurface> Q, X;
    rep.append(timed_check("quadric Q smooth", "the unique quadric through S is smooth", "-1", [&] {
      Q = random_hypersurface_containing(S, 2, config.seed);
      return str(singular_locus(Q->scheme, config.seed).dim());
    }));
    rep.append(timed_check("cubic X smooth", "a random cubic through S is smooth", "-1", [&] {
      int sing = 0;
      for (int attempt = 0; attempt < config.max_retries; ++attempt) {
        X = random_hypersurface_containing(S, 3, config.seed * 1000003 + attempt);
        sing = singular_locus(X->scheme, config.seed).dim();
        if (sing < 0) break;
        X.reset();
      }
      return str(sing);
    }));

    long h0_p5 = -1, h0_x = -1, h0_i3 = S.ideal().slice_dim(3);
    rep.append(timed_check("h0(N_{S/Q})", "chi(N_{S/Q}) = 38 with vanishing higher cohomology", "38", [&] {
      if (!Q) throw std::runtime_error("no quadric");
      return str(h0_normal_sheaf(S, Q->scheme, config.seed));
    }));
    rep.append(timed_check("h0(N_{S/P5})", "the Hilbert scheme of type II surfaces has dimension 58", "58", [&] {
      h0_p5 = h0_normal_sheaf(S, ProjectiveScheme::whole_space(R), config.seed);
      return str(h0_p5);
    }));
    rep.append(timed_check("h0(N_{S/X})", "h0(N_{S/X}) = 15 for a general cubic X through S",
                           str(want.h0_normal_in_cubic.value_or(15)), [&] {
                             if (!X) throw std::runtime_error("no smooth cubic");
                             h0_x = h0_normal_sheaf(S, X->scheme, config.seed);
                             return str(h0_x);
                           }));

    rep.append(timed_check("chi(I_S(2))", "chi(I_S(2)) = 21 - 20 = 1", "1",
                           [&] { return str(chi_ideal_twist(S.hilbert_poly(), 5, 2)); }));
    rep.append(timed_check("chi(I_S(3))", "chi(I_S(3)) = 56 - 44 = 12", "12",
                           [&] { return str(chi_ideal_twist(S.hilbert_poly(), 5, 3)); }));

    auto inv = [&] {
      auto s = sect();
      return SurfaceInvariants::from_sectional(s.degree, s.genus, s.chi, -2);
    };
    rep.append(timed_check("self-intersection", "S^2 = 6 deg S + 3 hK + K^2 - c2 = 38", "38",
                           [&] { return str(self_intersection_in_cubic(inv())); }));
    BigInt disc = 0;
    rep.append(timed_check("discriminant", "d = 3 S^2 - deg(S)^2 = 114 - 100 = 14", "14", [&] {
      auto i = inv();
      disc = hassett_discriminant({3, i.degree(), self_intersection_in_cubic(i)});
      return str(disc);
    }));
    rep.append(timed_check("discriminant square-free", "14 is square-free, so <h^2, S> is saturated", "true",
                           [&] { return std::string(is_square_free(disc) ? "true" : "false"); }));
    rep.append(timed_check("admissible", "d > 6 and d = 0, 2 mod 6", "true",
                           [&] { return std::string(hassett_admissible_divisor(disc) ? "true" : "false"); }));

    LedgerResult ledger{};
    rep.append(timed_check("flag ledger", "58 + 12 - 1 = 69 and 69 - 54 = 15", "(69, 15)", [&] {
      if (h0_p5 < 0) throw std::runtime_error("h0(N_{S/P5}) unavailable");
      DimensionLedger L;
      L.tangent_dim = h0_p5;
      L.cubics = h0_i3;
      ledger = flag_dimension_ledger(L);
      return "(" + str(ledger.flag_dim) + ", " + str(ledger.fiber_bound) + ")";
    }));
    rep.append(timed_check("fiber bound = h0(N_{S/X})", "the flag count bound equals the computed h0(N_{S/X})",
                           "true", [&] {
                             if (h0_x < 0) throw std::runtime_error("h0(N_{S/X}) unavailable");
                             return std::string(ledger.fiber_bound == h0_x ? "true" : "false");
                           }));
    rep.append(timed_check("residual class", "10 = S.h^2 = 3a + 5b forces S = 5h^2 - D", "(5, -1)", [] {
      auto r = residual_class_solver(10, 5, 3);
      return "(" + str(r.a) + ", " + str(r.b) + ")";
    }));
    rep.append(timed_check("residual class, scroll", "quartic scroll residual to a quintic del Pezzo: 3h^2 - D",
                           "(3, -1)", [] {
                             auto r = residual_class_solver(4, 5, 3);
                             return "(" + str(r.a) + ", " + str(r.b) + ")";
                           }));
  } catch (const TimeoutError& e) {
    rep.aborted = std::string("timeout: ") + e.what();
  }
  return rep;
}

ordered_json to_json(const VerificationReport& r) {
  ordered_json j;
  j["verdict"] = r.verdict() ? "pass" : "fail";
  j["prime"] = r.prime;
  j["seed"] = r.seed;
  j["checks"] = ordered_json::array();
  for (const auto& c : r.checks()) {
    j["checks"].push_back(ordered_json{{"name", c.name},
                                       {"anchor", c.anchor},
                                       {"expected", c.expected},
                                       {"computed", c.computed},
                                       {"pass", c.pass},
                                       {"ms", static_cast<long long>(c.ms + 0.5)}});
  }
  j["assumptions"] = ordered_json::array();
  for (const auto& a : r.assumptions) j["assumptions"].push_back(ordered_json{{"statement", a.statement}, {"anchor", a.anchor}});
  if (!r.aborted.empty()) j["aborted"] = r.aborted;
  return j;
}

}  // namespace scf
