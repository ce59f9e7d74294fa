// Writes the starting K3 surface: a random linear section of the spinor
// tenfold, degree 12 and sectional genus 7 in P^7.
//
//   make_k3_fixture <out.json> [seed]

#include <iostream>

#include "scf/pipeline.hpp"
#include "scf/spinor.hpp"

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: make_k3_fixture <out.json> [seed]\n";
    return 2;
  }
  std::uint64_t seed = argc > 2 ? std::stoull(argv[2]) : 1;
  auto R = scf::PolyRing::make(8);
  scf::ProjectiveScheme S(scf::Ideal(R, scf::spinor_k3_section(R, seed)));
  auto b = scf::bundle_from_scheme(S);
  b.expected.degree = 12;
  b.expected.genus = 7;
  b.expected.quadrics = 10;
  b.expected.cubics = 64;
  b.history.push_back({S.ambient_dim(), static_cast<long>(S.degree()), static_cast<long>(scf::sectional_genus(S)),
                       S.ideal().slice_dim(2), S.ideal().slice_dim(3), std::nullopt});
  b.note = "Pullback of the ten spinor quadrics of the orthogonal Grassmannian OG(5,10) in P^15 along a random "
           "linear map P^7 -> P^15 (make_k3_fixture, seed " + std::to_string(seed) +
           "). A general such section is a genus-7 K3 surface with Picard group generated by the hyperplane class.";
  scf::save_witness(b, argv[1]);
  return 0;
}
