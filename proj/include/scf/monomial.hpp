#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <span>
#include <stdexcept>
#include <vector>

namespace scf {

inline constexpr int kMaxVars = 16;
inline constexpr int kMaxExponent = 127;

/// Exponent vector packed into two machine words, one byte per variable.
/// Exponents stay below 128 so that divisibility is a borrow-free subtraction.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::span<const int> exps);

  static Monomial var(int i, int power = 1);

  int operator[](int i) const { return bytes()[i]; }
  int degree() const { return deg_; }
  bool is_one() const { return deg_ == 0; }

  void set(int i, int e);

  bool divides(const Monomial& other) const {
    constexpr std::uint64_t kHigh = 0x8080808080808080ull;
    return (((other.w_[0] | kHigh) - w_[0]) & kHigh) == kHigh &&
           (((other.w_[1] | kHigh) - w_[1]) & kHigh) == kHigh;
  }
  /// True iff no variable occurs in both.
  bool coprime(const Monomial& other) const;

  Monomial operator*(const Monomial& o) const;
  /// Requires o | *this.
  Monomial operator/(const Monomial& o) const;
  Monomial lcm(const Monomial& o) const;
  Monomial gcd(const Monomial& o) const;

  /// Bit i set iff variable i occurs.
  std::uint32_t support_mask() const;

  bool operator==(const Monomial& o) const { return w_[0] == o.w_[0] && w_[1] == o.w_[1]; }
  bool operator!=(const Monomial& o) const { return !(*this == o); }

  std::size_t hash() const {
    return static_cast<std::size_t>(w_[0] * 0x9E3779B97F4A7C15ull ^ (w_[1] + 0x632BE59BD9B4E019ull));
  }

  std::array<std::uint8_t, 16> bytes() const {
    std::array<std::uint8_t, 16> b;
    std::memcpy(b.data(), w_.data(), 16);
    return b;
  }

 private:
  std::array<std::uint64_t, 2> w_{0, 0};
  std::uint16_t deg_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

enum class OrderKind { grevlex, lex, block };

/// Term order on monomials in `nvars` variables. `rank[r]` lists the variable
/// that is r-th largest; identity unless a permutation is requested.
/// block(k): the first k ranked variables form an elimination block compared by
/// grevlex, ties broken by grevlex on the remaining variables.
class MonomialOrder {
 public:
  MonomialOrder() = default;
  static MonomialOrder grevlex(int nvars);
  static MonomialOrder lex(int nvars);
  static MonomialOrder block(int nvars, int k);
  MonomialOrder with_permutation(std::vector<int> rank) const;

  OrderKind kind() const { return kind_; }
  int block_size() const { return block_; }
  int nvars() const { return static_cast<int>(rank_.size()); }
  const std::vector<int>& ranking() const { return rank_; }

  /// -1, 0, +1 for a <, ==, > b.
  int compare(const Monomial& a, const Monomial& b) const;

  bool operator==(const MonomialOrder& o) const {
    return kind_ == o.kind_ && block_ == o.block_ && rank_ == o.rank_;
  }

 private:
  int grevlex_range(const Monomial& a, const Monomial& b, int lo, int hi) const;

  OrderKind kind_ = OrderKind::grevlex;
  int block_ = 0;
  std::vector<int> rank_;
};

/// All monomials of total degree d in n variables, in decreasing order under `ord`.
std::vector<Monomial> monomials_of_degree(int n, int d, const MonomialOrder& ord);

}  // namespace scf
