#include "skewdual/etale.hpp"

#include <stdexcept>

namespace skewdual {

EtaleAlgebra::EtaleAlgebra(FieldRef F, FieldRef K, FieldRef L, long long sigma_exp)
    : F_(std::move(F)), K_(std::move(K)), L_(std::move(L)), sigma_exp_(sigma_exp) {
  if (K_->degree() % F_->degree() != 0) throw std::invalid_argument("K is not an extension of F");
  e_ = F_->degree();
  r_ = K_->degree() / e_;
  KF_ = RelativeBasis::power(Embedding(F_, K_), K_->var());
  FL_ = Embedding(F_, L_);
  const GaloisField& Kf = *K_;
  const GaloisField& Lf = *L_;
  // minimal polynomial of a over F: a^r = sum c_j a^j
  Fe ar = Kf.pow(Kf.var(), static_cast<std::uint64_t>(r_));
  auto c = KF_.coords(ar);
  mod_.assign(r_ + 1, Lf.zero());
  for (std::size_t j = 0; j < r_; ++j) mod_[j] = Lf.neg(FL_(c[j]));
  mod_[r_] = Lf.one();
  // theta(a^j) in coordinates
  Matrix th(r_, r_);
  Fe aj = Kf.one();
  for (std::size_t j = 0; j < r_; ++j) {
    auto cj = KF_.coords(Kf.frobenius(aj, e_));
    for (std::size_t i = 0; i < r_; ++i) th(i, j) = FL_(cj[i]);
    aj = Kf.mul(aj, Kf.var());
  }
  theta_pow_.push_back(Matrix::identity(r_));
  for (std::size_t i = 1; i < r_; ++i) theta_pow_.push_back(linalg::mul(Lf, th, theta_pow_.back()));
  if (linalg::mul(Lf, th, theta_pow_.back()) != Matrix::identity(r_)) {
    throw std::logic_error("theta does not have order r");
  }
}

AlgElem EtaleAlgebra::zero() const { return AlgElem{std::vector<Fe>(r_, Fe{0})}; }

AlgElem EtaleAlgebra::one() const { return scalar(Fe{1}); }

AlgElem EtaleAlgebra::scalar(Fe l) const {
  AlgElem a = zero();
  a.c[0] = l;
  return a;
}

AlgElem EtaleAlgebra::basis(std::size_t i) const {
  AlgElem a = zero();
  a.c.at(i) = Fe{1};
  return a;
}

AlgElem EtaleAlgebra::add(const AlgElem& a, const AlgElem& b) const {
  AlgElem s = a;
  for (std::size_t i = 0; i < r_; ++i) s.c[i] = L_->add(a.c[i], b.c[i]);
  return s;
}

AlgElem EtaleAlgebra::sub(const AlgElem& a, const AlgElem& b) const {
  AlgElem s = a;
  for (std::size_t i = 0; i < r_; ++i) s.c[i] = L_->sub(a.c[i], b.c[i]);
  return s;
}

AlgElem EtaleAlgebra::neg(const AlgElem& a) const {
  AlgElem s = a;
  for (auto& x : s.c) x = L_->neg(x);
  return s;
}

AlgElem EtaleAlgebra::mul(const AlgElem& a, const AlgElem& b) const {
  const GaloisField& Lf = *L_;
  std::vector<Fe> t(2 * r_ - 1, Fe{0});
  for (std::size_t i = 0; i < r_; ++i) {
    if (a.c[i] == Fe{0}) continue;
    for (std::size_t j = 0; j < r_; ++j) t[i + j] = Lf.add(t[i + j], Lf.mul(a.c[i], b.c[j]));
  }
  for (std::size_t k = 2 * r_ - 1; k-- > r_;) {
    const Fe f = t[k];
    if (f == Fe{0}) continue;
    for (std::size_t j = 0; j < r_; ++j) t[k - r_ + j] = Lf.sub(t[k - r_ + j], Lf.mul(f, mod_[j]));
  }
  t.resize(r_);
  return AlgElem{std::move(t)};
}

AlgElem EtaleAlgebra::scale(const AlgElem& a, Fe l) const {
  AlgElem s = a;
  for (auto& x : s.c) x = L_->mul(x, l);
  return s;
}

AlgElem EtaleAlgebra::pow(const AlgElem& a, std::uint64_t e) const {
  AlgElem r = one(), b = a;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

std::optional<AlgElem> EtaleAlgebra::inv(const AlgElem& a) const {
  Poly p = a.c;
  fpoly::trim(p);
  if (p.empty()) return std::nullopt;
  auto s = fpoly::inverse_mod(*L_, p, mod_);
  if (!s) return std::nullopt;
  AlgElem out = zero();
  for (std::size_t i = 0; i < s->size(); ++i) out.c[i] = (*s)[i];
  return out;
}

bool EtaleAlgebra::is_zero(const AlgElem& a) const {
  for (auto x : a.c)
    if (x != Fe{0}) return false;
  return true;
}

const Matrix& EtaleAlgebra::theta_matrix(long long i) const {
  long long k = i % static_cast<long long>(r_);
  if (k < 0) k += static_cast<long long>(r_);
  return theta_pow_[static_cast<std::size_t>(k)];
}

AlgElem EtaleAlgebra::theta(const AlgElem& a, long long i) const {
  const Matrix& m = theta_matrix(i);
  if (&m == &theta_pow_[0]) return a;
  return AlgElem{linalg::mul_vec(*L_, m, a.c)};
}

AlgElem EtaleAlgebra::frob(const AlgElem& a, long long j) const {
  if (j == 0) return a;
  AlgElem s = a;
  for (auto& x : s.c) x = L_->frobenius(x, j);
  return s;
}

Fe EtaleAlgebra::trace(const AlgElem& a) const {
  AlgElem s = a;
  for (std::size_t i = 1; i < r_; ++i) s = add(s, theta(a, static_cast<long long>(i)));
  for (std::size_t i = 1; i < r_; ++i)
    if (s.c[i] != Fe{0}) throw std::logic_error("trace left the base");
  return s.c[0];
}

Fe EtaleAlgebra::norm(const AlgElem& a) const {
  AlgElem s = a;
  for (std::size_t i = 1; i < r_; ++i) s = mul(s, theta(a, static_cast<long long>(i)));
  for (std::size_t i = 1; i < r_; ++i)
    if (s.c[i] != Fe{0}) throw std::logic_error("norm left the base");
  return s.c[0];
}

AlgElem EtaleAlgebra::random(Rng& rng) const {
  AlgElem a = zero();
  for (auto& x : a.c) x = L_->random(rng);
  return a;
}

AlgElem EtaleAlgebra::from_K(Fe kappa) const {
  auto c = KF_.coords(kappa);
  AlgElem a = zero();
  for (std::size_t i = 0; i < r_; ++i) a.c[i] = FL_(c[i]);
  return a;
}

Matrix EtaleAlgebra::mult_matrix(const AlgElem& a) const {
  Matrix m(r_, r_);
  for (std::size_t j = 0; j < r_; ++j) {
    AlgElem col = mul(a, basis(j));
    for (std::size_t i = 0; i < r_; ++i) m(i, j) = col.c[i];
  }
  return m;
}

AlgElem norm_preimage(const EtaleAlgebra& A, Fe y, Rng& rng) {
  const GaloisField& L = A.base();
  if (y == Fe{0}) throw std::domain_error("norm preimage of zero");
  if (y == L.one()) return A.one();
  for (;;) {
    AlgElem x = A.random(rng);
    if (!A.is_unit(x)) continue;
    const Fe n = A.norm(x);
    if (n == y) return x;
    // norm is multiplicative: if y is a power of n, lift the exponent
    auto e = L.discrete_log(n, y);
    if (e) {
      AlgElem z = A.pow(x, *e);
      if (A.norm(z) != y) throw std::logic_error("norm preimage check failed");
      return z;
    }
  }
}

AlgElem hilbert90(const EtaleAlgebra& A, const AlgElem& z, Rng& rng) {
  if (A.norm(z) != A.base().one()) throw std::domain_error("hilbert90 needs an element of norm 1");
  const std::size_t r = A.rank();
  // c_i = z theta(z) ... theta^(i-1)(z)
  std::vector<AlgElem> c(r);
  c[0] = A.one();
  for (std::size_t i = 1; i < r; ++i) c[i] = A.mul(c[i - 1], A.theta(z, static_cast<long long>(i - 1)));
  for (;;) {
    AlgElem v = A.random(rng);
    AlgElem w = A.zero();
    for (std::size_t i = 0; i < r; ++i) w = A.add(w, A.mul(c[i], A.theta(v, static_cast<long long>(i))));
    auto zeta = A.inv(w);
    if (!zeta) continue;
    if (A.theta(*zeta) != A.mul(z, *zeta)) throw std::logic_error("hilbert90 check failed");
    return *zeta;
  }
}

}  // namespace skewdual
