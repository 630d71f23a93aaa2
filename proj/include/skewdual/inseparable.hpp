#pragma once

#include <map>
#include <memory>
#include <unordered_set>

#include "skewdual/codes.hpp"

namespace skewdual {

// Twist xi X^t of the trace form on the single component of Y - y0.
struct TwistSpec {
  unsigned t = 0;  // 0 or s
  Fe xi{1};        // nonzero element of K
};

// Base data for the repeated factor Y - y0 (y0 = +-1).
class TwistedFamily {
 public:
  TwistedFamily(FieldRef F, FieldRef K, int y0, std::uint64_t seed = 1);

  const Decomposition& base() const { return D_; }
  const OreRingRef& ring() const { return D_.ring(); }
  int y0() const { return y0_; }
  unsigned s() const { return D_.r() / 2; }

  // (kappa, rho) -> (kappa, (x theta)^t (xi^-1 rho)) on K_l
  SesquiSpace form(const TwistSpec& tw) const;
  // monic g of degree s with g xi X^-t g* = 0 mod X^r - y0, in enumeration order
  std::vector<OrePoly> codes(const TwistSpec& tw) const;
  // g xi X^-t g* = 0 mod X^r - y0
  bool satisfies(const TwistSpec& tw, const OrePoly& g) const;
  // scalar multiple whose first nonzero coordinate over F is 1
  Fe projective_rep(Fe xi) const;

 private:
  int y0_;
  Decomposition D_;
};

// Products f = g_m ... g_1 of twisted generators over (Y - y0)^(p^m), each
// g_i drawn from the twist fixed by the running constant term.
class InseparableEnumerator {
 public:
  InseparableEnumerator(FieldRef F, FieldRef K, unsigned k, bool dedup, int y0 = 1, std::uint64_t seed = 1);

  std::optional<OrePoly> next();
  const QuotientAlgebra& algebra() const { return *E_; }
  const TwistedFamily& family() const { return fam_; }
  std::uint64_t raw_count() const { return raw_; }
  std::uint64_t yielded() const { return yielded_; }
  std::size_t twists_built() const { return cache_.size(); }
  // upper bound on the raw count: product of the largest twisted family size per level
  std::uint64_t largest_level_size(std::size_t level) const;

 private:
  using List = std::shared_ptr<const std::vector<OrePoly>>;
  List list_for(std::size_t level, const OrePoly& f);

  struct Frame {
    std::size_t level;
    OrePoly f;
    List list;
    std::size_t idx = 0;
  };

  TwistedFamily fam_;
  std::shared_ptr<QuotientAlgebra> E_;
  unsigned depth_;
  bool dedup_;
  std::map<std::pair<unsigned, std::uint64_t>, List> cache_;
  std::vector<std::size_t> level_max_;
  std::vector<Frame> stack_;
  std::unordered_set<std::string> seen_;
  std::uint64_t raw_ = 0, yielded_ = 0;
  bool started_ = false;
};

// k = p^m with m >= 1
bool is_pure_p_power(unsigned k, std::uint32_t p);

}  // namespace skewdual
