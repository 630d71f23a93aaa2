#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "skewdual/rng.hpp"

namespace skewdual {

using BigInt = boost::multiprecision::cpp_int;

// Opaque handle on an element of some GaloisField. The value 0 is always
// zero and 1 is always one; everything else depends on the field's
// internal representation, so use encode()/decode() to get at the
// canonical base-p integer of the coordinate vector.
struct Fe {
  std::uint64_t v = 0;
  friend bool operator==(Fe, Fe) = default;
  friend auto operator<=>(Fe, Fe) = default;
};

struct FeHash {
  std::size_t operator()(Fe a) const noexcept { return std::hash<std::uint64_t>{}(a.v); }
};

class GaloisField;
using FieldRef = std::shared_ptr<const GaloisField>;

// GF(p^n) = GF(p)[t]/(modulus), p odd. Small fields (order <= 2^20) store
// elements as discrete logarithms with a Zech table; larger ones store the
// coordinate encoding directly and multiply polynomials.
class GaloisField {
 public:
  static constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 20;

  static FieldRef prime(std::uint32_t p);
  static FieldRef extension(std::uint32_t p, unsigned n);
  static FieldRef with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus);
  // lexicographically smallest monic irreducible of degree n, constant
  // term first
  static std::vector<std::uint32_t> canonical_modulus(std::uint32_t p, unsigned n);
  static bool is_prime(std::uint64_t n);

  std::uint32_t characteristic() const { return p_; }
  unsigned degree() const { return n_; }
  std::uint64_t order() const { return q_; }
  const std::vector<std::uint32_t>& modulus() const { return mod_; }
  bool table_mode() const { return table_; }
  bool same_as(const GaloisField& o) const { return p_ == o.p_ && mod_ == o.mod_; }

  Fe zero() const { return Fe{0}; }
  Fe one() const { return Fe{1}; }
  Fe add(Fe a, Fe b) const;
  Fe sub(Fe a, Fe b) const { return add(a, neg(b)); }
  Fe neg(Fe a) const;
  Fe mul(Fe a, Fe b) const;
  Fe inv(Fe a) const;
  Fe div(Fe a, Fe b) const { return mul(a, inv(b)); }
  Fe pow(Fe a, std::uint64_t e) const;
  Fe pow(Fe a, const BigInt& e) const;
  Fe pow_signed(Fe a, long long e) const;
  // a^(p^j); j may be negative
  Fe frobenius(Fe a, long long j) const;

  Fe from_int(long long c) const;
  Fe from_coords(const std::vector<std::uint32_t>& c) const;
  std::vector<std::uint32_t> coords(Fe a) const;
  std::uint64_t encode(Fe a) const;
  Fe decode(std::uint64_t code) const;
  // i-th element in encoding order
  Fe element(std::uint64_t i) const { return decode(i); }
  Fe gen() const { return gen_; }  // generates the multiplicative group
  Fe var() const;                   // the class of t

  Fe random(Rng& rng) const { return decode(rng.below(q_)); }
  Fe random_nonzero(Rng& rng) const { return decode(1 + rng.below(q_ - 1)); }

  bool is_square(Fe a) const;
  // root with the smaller encoding, if any
  std::optional<Fe> sqrt(Fe a) const;
  // multiplicative order of a nonzero element
  std::uint64_t mult_order(Fe a) const;
  // discrete log base gen(); table fields only
  std::uint64_t log(Fe a) const;
  // some e with base^e = target (Pohlig-Hellman, baby-step giant-step)
  std::optional<std::uint64_t> discrete_log(Fe base, Fe target) const;

  std::string to_string(Fe a) const;
  std::string describe() const;

  GaloisField(std::uint32_t p, std::vector<std::uint32_t> modulus);

 private:
  using Digits = std::vector<std::uint32_t>;

  Fe poly_add(Fe a, Fe b) const;
  Fe poly_mul(Fe a, Fe b) const;
  Fe poly_pow(Fe a, const BigInt& e) const;
  void unpack(std::uint64_t code, std::uint32_t* out) const;
  std::uint64_t pack(const std::uint32_t* in) const;
  void build_tables();
  void build_frobenius();
  Fe find_generator() const;

  std::uint32_t p_;
  unsigned n_;
  std::uint64_t q_;
  Digits mod_;
  bool table_ = false;
  Fe gen_{1};
  std::vector<std::uint64_t> order_factors_;  // primes dividing q-1

  // table mode: element value v>0 is gen^(v-1)
  std::vector<std::uint32_t> enc_of_;
  std::vector<std::uint32_t> rep_of_;
  std::vector<std::uint32_t> zech_;
  std::vector<std::uint64_t> pj_mod_;  // p^j mod (q-1)

  // poly mode: frob_[j] is the n*n matrix of a -> a^(p^j), row-major
  std::vector<std::vector<std::uint32_t>> frob_;
};

std::vector<std::uint64_t> prime_factors(std::uint64_t n);

}  // namespace skewdual
