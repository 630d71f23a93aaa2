#pragma once

#include <optional>
#include <vector>

#include "skewdual/extension.hpp"

namespace skewdual {

// Element of K (x)_F L, stored by its L-coordinates in the power basis
// 1, a, ..., a^(r-1) of K over F (a = generator of K).
struct AlgElem {
  std::vector<Fe> c;
  friend bool operator==(const AlgElem&, const AlgElem&) = default;
};

// The algebra K (x)_F L = L[a]/(m(a)), m the minimal polynomial of a over
// F. It is a product of fields; theta (the |F|-power map of K) acts on a
// and fixes L, sigma acts on L-coefficients through a Frobenius power of L.
class EtaleAlgebra {
 public:
  EtaleAlgebra(FieldRef F, FieldRef K, FieldRef L, long long sigma_exp = 0);

  const GaloisField& base() const { return *L_; }
  const FieldRef& base_ref() const { return L_; }
  const FieldRef& K() const { return K_; }
  const FieldRef& F() const { return F_; }
  std::size_t rank() const { return r_; }
  long long sigma_exp() const { return sigma_exp_; }
  // |F| = p^e
  unsigned theta_exp() const { return e_; }
  const RelativeBasis& K_over_F() const { return KF_; }
  const Embedding& F_into_L() const { return FL_; }

  AlgElem zero() const;
  AlgElem one() const;
  AlgElem scalar(Fe l) const;
  AlgElem basis(std::size_t i) const;
  AlgElem add(const AlgElem& a, const AlgElem& b) const;
  AlgElem sub(const AlgElem& a, const AlgElem& b) const;
  AlgElem neg(const AlgElem& a) const;
  AlgElem mul(const AlgElem& a, const AlgElem& b) const;
  AlgElem scale(const AlgElem& a, Fe l) const;
  AlgElem pow(const AlgElem& a, std::uint64_t e) const;
  std::optional<AlgElem> inv(const AlgElem& a) const;
  bool is_unit(const AlgElem& a) const { return inv(a).has_value(); }
  bool is_zero(const AlgElem& a) const;
  AlgElem theta(const AlgElem& a, long long i = 1) const;
  AlgElem sigma(const AlgElem& a) const { return frob(a, sigma_exp_); }
  // a^(p^j) on the L-coefficients, fixing the power basis of K
  AlgElem frob(const AlgElem& a, long long j) const;
  Fe trace(const AlgElem& a) const;
  Fe norm(const AlgElem& a) const;
  AlgElem random(Rng& rng) const;

  // K -> K (x) L, kappa -> kappa (x) 1
  AlgElem from_K(Fe kappa) const;
  // L-linear matrix of multiplication by a (columns = images of basis)
  Matrix mult_matrix(const AlgElem& a) const;
  const Matrix& theta_matrix(long long i) const;

 private:
  FieldRef F_, K_, L_;
  unsigned e_ = 1;
  std::size_t r_ = 0;
  long long sigma_exp_ = 0;
  RelativeBasis KF_;
  Embedding FL_;
  Poly mod_;  // over L, monic of degree r
  std::vector<Matrix> theta_pow_;
};

// x with norm(x) = y, y a nonzero element of the base
AlgElem norm_preimage(const EtaleAlgebra& A, Fe y, Rng& rng);
// invertible zeta with theta(zeta) = z * zeta, for norm(z) = 1
AlgElem hilbert90(const EtaleAlgebra& A, const AlgElem& z, Rng& rng);

}  // namespace skewdual
