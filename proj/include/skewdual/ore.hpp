#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "skewdual/etale.hpp"

namespace skewdual {

// K[X; theta] with theta the |F|-power Frobenius of K over F. Arithmetic is
// exposed both on raw coefficient vectors (hot loops) and through OrePoly.
class OreRing {
 public:
  using Coeffs = std::vector<Fe>;

  OreRing(FieldRef F, FieldRef K);

  const GaloisField& F() const { return *F_; }
  const GaloisField& K() const { return *K_; }
  const FieldRef& F_ref() const { return F_; }
  const FieldRef& K_ref() const { return K_; }
  unsigned r() const { return r_; }
  unsigned e() const { return e_; }
  const RelativeBasis& K_over_F() const { return KF_; }
  Fe from_F(Fe a) const { return KF_.embedding()(a); }

  Fe theta(Fe a, long long i = 1) const { return K_->frobenius(a, static_cast<long long>(e_) * i); }
  Fe trace_KF(Fe a) const;  // lands in F

  void trim(Coeffs& a) const;
  Coeffs add(const Coeffs& a, const Coeffs& b) const;
  Coeffs sub(const Coeffs& a, const Coeffs& b) const;
  Coeffs mul(const Coeffs& a, const Coeffs& b) const;
  // c * a for a scalar c on the left
  Coeffs lscale(Fe c, const Coeffs& a) const;
  std::pair<Coeffs, Coeffs> right_divmod(const Coeffs& f, const Coeffs& g) const;
  std::pair<Coeffs, Coeffs> left_divmod(const Coeffs& f, const Coeffs& g) const;
  Coeffs monic(const Coeffs& f) const;
  Coeffs rgcd(Coeffs f, Coeffs g) const;
  Coeffs llcm(const Coeffs& f, const Coeffs& g) const;
  // P(X^r) for P over F
  Coeffs central(const Poly& P) const;

  bool operator==(const OreRing& o) const { return F_->same_as(*o.F_) && K_->same_as(*o.K_); }

 private:
  FieldRef F_, K_;
  unsigned e_, r_;
  RelativeBasis KF_;
};

using OreRingRef = std::shared_ptr<const OreRing>;

class OrePoly {
 public:
  OrePoly() = default;
  OrePoly(OreRingRef ring, std::vector<Fe> coeffs);

  static OrePoly zero(OreRingRef ring) { return OrePoly(std::move(ring), {}); }
  static OrePoly one(OreRingRef ring) { return OrePoly(std::move(ring), {Fe{1}}); }
  static OrePoly monomial(OreRingRef ring, Fe c, std::size_t deg);
  static OrePoly central(OreRingRef ring, const Poly& P);

  const OreRingRef& ring() const { return ring_; }
  const std::vector<Fe>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Fe coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Fe{0}; }
  Fe lead() const { return c_.empty() ? Fe{0} : c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == Fe{1}; }

  OrePoly operator+(const OrePoly& o) const;
  OrePoly operator-(const OrePoly& o) const;
  OrePoly operator*(const OrePoly& o) const;
  bool operator==(const OrePoly& o) const { return c_ == o.c_; }

  std::string to_string() const;

 private:
  void check_same(const OrePoly& o) const;
  OreRingRef ring_;
  std::vector<Fe> c_;
};

std::pair<OrePoly, OrePoly> right_divmod(const OrePoly& f, const OrePoly& g);
std::pair<OrePoly, OrePoly> left_divmod(const OrePoly& f, const OrePoly& g);
OrePoly monic(const OrePoly& f);
OrePoly rgcd(const OrePoly& f, const OrePoly& g);
OrePoly llcm(const OrePoly& f, const OrePoly& g);
OrePoly llcm(const std::vector<OrePoly>& fs);
bool right_divides(const OrePoly& g, const OrePoly& f);

// K[X;theta]/(P(X^r)) for a monic P over F with P(0) != 0; the modulus is
// central, so X is invertible and the adjunction is defined.
class QuotientAlgebra {
 public:
  QuotientAlgebra(OreRingRef ring, Poly P);

  const OreRingRef& ring() const { return ring_; }
  const Poly& central_modulus() const { return P_; }
  const OrePoly& modulus() const { return M_; }
  std::size_t length() const { return n_; }

  OreRing::Coeffs reduce(OreRing::Coeffs f) const;
  OreRing::Coeffs mul(const OreRing::Coeffs& f, const OreRing::Coeffs& g) const;
  // sum X^-i f_i, with nonnegative exponents
  OreRing::Coeffs star(const OreRing::Coeffs& f) const;
  // coefficients of X^(ir), traced down to F
  Poly reduced_trace(const OreRing::Coeffs& f) const;

  OrePoly reduce(const OrePoly& f) const;
  OrePoly mul(const OrePoly& f, const OrePoly& g) const;
  OrePoly star(const OrePoly& f) const;
  Poly reduced_trace(const OrePoly& f) const;
  Poly pairing(const OrePoly& f, const OrePoly& g) const;
  OrePoly normalize(const OrePoly& f) const;

 private:
  OreRingRef ring_;
  Poly P_;
  OrePoly M_;
  std::size_t n_;
  std::vector<Poly> inv_y_pow_;  // Y^-c mod P, c = 0..deg P
};

// Matrix over L of v -> sum f_i (x theta)^i (v) on K (x) L.
Matrix eval_semilinear(const EtaleAlgebra& A, const std::vector<AlgElem>& f, const AlgElem& x);

}  // namespace skewdual
