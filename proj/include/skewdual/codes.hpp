#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "skewdual/decomposition.hpp"

namespace skewdual {

// q = p^e
std::pair<std::uint32_t, unsigned> prime_power(std::uint64_t q);

struct CodeParameters {
  std::uint64_t q = 3;
  unsigned r = 2;
  unsigned k = 1;
  // P(Y), constant term first; Y^k - 1 when absent
  std::optional<std::vector<long long>> modulus;
  // modulus of K over GF(p), constant term first; canonical when absent
  std::optional<std::vector<std::uint32_t>> field_modulus;

  std::uint32_t p() const { return prime_power(q).first; }
  unsigned e() const { return prime_power(q).second; }
  unsigned s() const { return r / 2; }
  bool cyclic() const { return !modulus; }
  FieldRef F() const;
  FieldRef K() const;
  Poly central(const GaloisField& F) const;
  unsigned central_degree() const;
  std::size_t length() const { return static_cast<std::size_t>(r) * central_degree(); }
  // throws std::invalid_argument on bad values
  void validate() const;
  std::string describe() const;
};

struct NoSelfdualCodes : std::domain_error {
  using std::domain_error::domain_error;
};

struct Existence {
  bool exists = false;
  std::string reason;
};

// Closed form for Y^k - 1, per-factor rule for other moduli. Inseparable
// moduli raise InseparableModulus.
Existence exists_selfdual(const CodeParameters& params);
BigInt count_selfdual(const CodeParameters& params);

struct SkewCode {
  OrePoly generator;
  std::size_t length = 0;
  std::size_t dimension() const { return length - static_cast<std::size_t>(generator.degree()); }
};

// rgcd with the modulus; the modulus itself for the zero class
OrePoly normalize_generator(const QuotientAlgebra& E, const OrePoly& f);
bool is_selforthogonal(const QuotientAlgebra& E, const OrePoly& f);
bool is_selfdual(const QuotientAlgebra& E, const OrePoly& f);
OrePoly dual_generator(const QuotientAlgebra& E, const OrePoly& f);
// minimum Hamming weight over nonzero codewords; nullopt for the zero code
std::optional<std::size_t> min_distance(const QuotientAlgebra& E, const OrePoly& f, std::uint64_t budget = 10'000'000);

// Separable setting: decomposition plus one sesquilinear space per
// tau-fixed component.
class SelfDualCodes {
 public:
  explicit SelfDualCodes(const CodeParameters& params, std::uint64_t seed = 1);

  const CodeParameters& params() const { return params_; }
  const Decomposition& decomposition() const { return D_; }
  const QuotientAlgebra& algebra() const { return D_.algebra(); }
  // Witt test on every tau-fixed component
  bool exists() const { return exists_; }
  BigInt count() const;
  OrePoly random(Rng& rng) const;

  class Enumerator {
   public:
    std::optional<OrePoly> next();

   private:
    friend class SelfDualCodes;
    explicit Enumerator(const SelfDualCodes* owner);
    bool restart(std::size_t slot);
    bool advance(std::size_t slot);

    const SelfDualCodes* owner_;
    std::vector<std::size_t> slots_;  // component index per odometer digit
    std::vector<std::optional<IsotropicEnumerator>> iso_;
    std::vector<std::optional<SubspaceEnumerator>> sub_;
    std::vector<Matrix> cur_;
    bool started_ = false, done_ = false;
  };
  Enumerator enumerate() const { return Enumerator(this); }

 private:
  CodeParameters params_;
  Decomposition D_;
  std::vector<std::optional<SesquiSpace>> forms_;
  bool exists_ = true;
};

}  // namespace skewdual
