#include "skewdual/ore.hpp"

#include <sstream>
#include <stdexcept>

namespace skewdual {

using Coeffs = OreRing::Coeffs;

OreRing::OreRing(FieldRef F, FieldRef K) : F_(std::move(F)), K_(std::move(K)) {
  if (K_->characteristic() != F_->characteristic() || K_->degree() % F_->degree() != 0) {
    throw std::invalid_argument("K must be an extension of F");
  }
  e_ = F_->degree();
  r_ = K_->degree() / e_;
  KF_ = RelativeBasis::power(Embedding(F_, K_), K_->var());
}

Fe OreRing::trace_KF(Fe a) const {
  Fe s = a;
  for (unsigned i = 1; i < r_; ++i) s = K_->add(s, theta(a, i));
  auto t = KF_.restrict(s);
  if (!t) throw std::logic_error("trace left F");
  return *t;
}

void OreRing::trim(Coeffs& a) const {
  while (!a.empty() && a.back() == Fe{0}) a.pop_back();
}

Coeffs OreRing::add(const Coeffs& a, const Coeffs& b) const {
  const GaloisField& k = *K_;
  Coeffs c(std::max(a.size(), b.size()), Fe{0});
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = k.add(c[i], b[i]);
  trim(c);
  return c;
}

Coeffs OreRing::sub(const Coeffs& a, const Coeffs& b) const {
  const GaloisField& k = *K_;
  Coeffs c(std::max(a.size(), b.size()), Fe{0});
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = k.sub(c[i], b[i]);
  trim(c);
  return c;
}

Coeffs OreRing::mul(const Coeffs& a, const Coeffs& b) const {
  if (a.empty() || b.empty()) return {};
  const GaloisField& k = *K_;
  Coeffs c(a.size() + b.size() - 1, Fe{0});
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == Fe{0}) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] == Fe{0}) continue;
      c[i + j] = k.add(c[i + j], k.mul(a[i], theta(b[j], static_cast<long long>(i))));
    }
  }
  trim(c);
  return c;
}

Coeffs OreRing::lscale(Fe c, const Coeffs& a) const {
  if (c == Fe{0}) return {};
  Coeffs out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = K_->mul(c, a[i]);
  return out;
}

std::pair<Coeffs, Coeffs> OreRing::right_divmod(const Coeffs& f, const Coeffs& g) const {
  if (g.empty()) throw std::domain_error("division by the zero skew polynomial");
  const GaloisField& k = *K_;
  Coeffs r = f;
  trim(r);
  const std::size_t n = g.size() - 1;
  if (r.size() < g.size()) return {Coeffs{}, r};
  Coeffs q(r.size() - n, Fe{0});
  while (r.size() >= g.size()) {
    const std::size_t d = r.size() - 1 - n;
    const Fe c = k.div(r.back(), theta(g.back(), static_cast<long long>(d)));
    q[d] = c;
    for (std::size_t j = 0; j <= n; ++j) {
      r[d + j] = k.sub(r[d + j], k.mul(c, theta(g[j], static_cast<long long>(d))));
    }
    r.back() = Fe{0};
    trim(r);
  }
  trim(q);
  return {q, r};
}

std::pair<Coeffs, Coeffs> OreRing::left_divmod(const Coeffs& f, const Coeffs& g) const {
  if (g.empty()) throw std::domain_error("division by the zero skew polynomial");
  const GaloisField& k = *K_;
  Coeffs r = f;
  trim(r);
  const std::size_t n = g.size() - 1;
  if (r.size() < g.size()) return {Coeffs{}, r};
  Coeffs q(r.size() - n, Fe{0});
  while (r.size() >= g.size()) {
    const std::size_t d = r.size() - 1 - n;
    const Fe c = theta(k.div(r.back(), g.back()), -static_cast<long long>(n));
    q[d] = c;
    for (std::size_t j = 0; j <= n; ++j) {
      r[d + j] = k.sub(r[d + j], k.mul(g[j], theta(c, static_cast<long long>(j))));
    }
    r.back() = Fe{0};
    trim(r);
  }
  trim(q);
  return {q, r};
}

Coeffs OreRing::monic(const Coeffs& f) const {
  if (f.empty()) return f;
  return lscale(K_->inv(f.back()), f);
}

Coeffs OreRing::rgcd(Coeffs f, Coeffs g) const {
  trim(f);
  trim(g);
  while (!g.empty()) {
    Coeffs r = right_divmod(f, g).second;
    f = std::move(g);
    g = std::move(r);
  }
  return monic(f);
}

Coeffs OreRing::llcm(const Coeffs& f0, const Coeffs& g0) const {
  Coeffs r0 = f0, r1 = g0;
  trim(r0);
  trim(r1);
  if (r0.empty() || r1.empty()) return {};
  // r_i = s_i f + t_i g
  Coeffs s0{Fe{1}}, s1;
  while (!r1.empty()) {
    auto [q, r] = right_divmod(r0, r1);
    Coeffs s2 = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  return monic(mul(s1, f0));
}

Coeffs OreRing::central(const Poly& P) const {
  Coeffs c;
  if (P.empty()) return c;
  c.assign((P.size() - 1) * r_ + 1, Fe{0});
  for (std::size_t j = 0; j < P.size(); ++j) c[j * r_] = from_F(P[j]);
  return c;
}

OrePoly::OrePoly(OreRingRef ring, std::vector<Fe> coeffs) : ring_(std::move(ring)), c_(std::move(coeffs)) {
  ring_->trim(c_);
}

OrePoly OrePoly::monomial(OreRingRef ring, Fe c, std::size_t deg) {
  std::vector<Fe> v(deg + 1, Fe{0});
  v[deg] = c;
  return OrePoly(std::move(ring), std::move(v));
}

OrePoly OrePoly::central(OreRingRef ring, const Poly& P) {
  auto c = ring->central(P);
  return OrePoly(std::move(ring), std::move(c));
}

void OrePoly::check_same(const OrePoly& o) const {
  if (ring_ != o.ring_ && !(*ring_ == *o.ring_)) throw std::invalid_argument("skew polynomials over different rings");
}

OrePoly OrePoly::operator+(const OrePoly& o) const {
  check_same(o);
  return OrePoly(ring_, ring_->add(c_, o.c_));
}

OrePoly OrePoly::operator-(const OrePoly& o) const {
  check_same(o);
  return OrePoly(ring_, ring_->sub(c_, o.c_));
}

OrePoly OrePoly::operator*(const OrePoly& o) const {
  check_same(o);
  return OrePoly(ring_, ring_->mul(c_, o.c_));
}

std::string OrePoly::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << ring_->K().to_string(c_[i]);
  os << ']';
  return os.str();
}

std::pair<OrePoly, OrePoly> right_divmod(const OrePoly& f, const OrePoly& g) {
  auto [q, r] = f.ring()->right_divmod(f.coeffs(), g.coeffs());
  return {OrePoly(f.ring(), std::move(q)), OrePoly(f.ring(), std::move(r))};
}

std::pair<OrePoly, OrePoly> left_divmod(const OrePoly& f, const OrePoly& g) {
  auto [q, r] = f.ring()->left_divmod(f.coeffs(), g.coeffs());
  return {OrePoly(f.ring(), std::move(q)), OrePoly(f.ring(), std::move(r))};
}

OrePoly monic(const OrePoly& f) { return OrePoly(f.ring(), f.ring()->monic(f.coeffs())); }

OrePoly rgcd(const OrePoly& f, const OrePoly& g) {
  if (f.is_zero() && g.is_zero()) throw std::invalid_argument("rgcd of zero polynomials");
  return OrePoly(f.ring(), f.ring()->rgcd(f.coeffs(), g.coeffs()));
}

OrePoly llcm(const OrePoly& f, const OrePoly& g) { return OrePoly(f.ring(), f.ring()->llcm(f.coeffs(), g.coeffs())); }

OrePoly llcm(const std::vector<OrePoly>& fs) {
  if (fs.empty()) throw std::invalid_argument("llcm of an empty list");
  OrePoly acc = monic(fs.front());
  for (std::size_t i = 1; i < fs.size(); ++i) acc = llcm(acc, fs[i]);
  return acc;
}

bool right_divides(const OrePoly& g, const OrePoly& f) { return right_divmod(f, g).second.is_zero(); }

QuotientAlgebra::QuotientAlgebra(OreRingRef ring, Poly P) : ring_(std::move(ring)), P_(std::move(P)) {
  const GaloisField& F = ring_->F();
  fpoly::trim(P_);
  if (P_.size() < 2) throw std::invalid_argument("central modulus must have positive degree");
  P_ = fpoly::monic(F, P_);
  if (P_[0] == Fe{0}) throw std::invalid_argument("X is not invertible modulo this modulus");
  M_ = OrePoly::central(ring_, P_);
  n_ = static_cast<std::size_t>(M_.degree());
  // Y^-1 = -(P(Y) - P(0)) / (P(0) Y)
  const std::size_t d = P_.size() - 1;
  Poly yinv(d, F.zero());
  const Fe m = F.neg(F.inv(P_[0]));
  for (std::size_t j = 1; j <= d; ++j) yinv[j - 1] = F.mul(m, P_[j]);
  fpoly::trim(yinv);
  inv_y_pow_.push_back(Poly{F.one()});
  for (std::size_t c = 1; c <= d; ++c) inv_y_pow_.push_back(fpoly::mulmod(F, inv_y_pow_.back(), yinv, P_));
}

Coeffs QuotientAlgebra::reduce(Coeffs f) const {
  const GaloisField& k = ring_->K();
  ring_->trim(f);
  const auto& m = M_.coeffs();
  const unsigned r = ring_->r();
  while (f.size() > n_) {
    const std::size_t d = f.size() - 1 - n_;
    const Fe a = f.back();
    // M is monic with coefficients in F, only at multiples of r
    for (std::size_t j = 0; j < n_; j += r) {
      if (m[j] != Fe{0}) f[d + j] = k.sub(f[d + j], k.mul(a, m[j]));
    }
    f.back() = Fe{0};
    ring_->trim(f);
  }
  return f;
}

Coeffs QuotientAlgebra::mul(const Coeffs& f, const Coeffs& g) const { return reduce(ring_->mul(f, g)); }

Coeffs QuotientAlgebra::star(const Coeffs& f0) const {
  const GaloisField& k = ring_->K();
  const Coeffs f = reduce(f0);
  const std::size_t r = ring_->r();
  Coeffs out(n_, Fe{0});
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == Fe{0}) continue;
    const Fe a = ring_->theta(f[i], -static_cast<long long>(i));
    // X^-i = Y^-c X^(rc - i)
    const std::size_t c = (i + r - 1) / r;
    const std::size_t b = r * c - i;
    const Poly& w = inv_y_pow_[c];
    for (std::size_t j = 0; j < w.size(); ++j) {
      if (w[j] == Fe{0}) continue;
      const std::size_t pos = r * j + b;
      out[pos] = k.add(out[pos], k.mul(a, ring_->from_F(w[j])));
    }
  }
  ring_->trim(out);
  return out;
}

Poly QuotientAlgebra::reduced_trace(const Coeffs& f0) const {
  const Coeffs f = reduce(f0);
  const std::size_t r = ring_->r();
  Poly t(P_.size() - 1, ring_->F().zero());
  for (std::size_t i = 0; i * r < f.size(); ++i) t[i] = ring_->trace_KF(f[i * r]);
  fpoly::trim(t);
  return t;
}

OrePoly QuotientAlgebra::reduce(const OrePoly& f) const { return OrePoly(ring_, reduce(f.coeffs())); }

OrePoly QuotientAlgebra::mul(const OrePoly& f, const OrePoly& g) const {
  return OrePoly(ring_, mul(f.coeffs(), g.coeffs()));
}

OrePoly QuotientAlgebra::star(const OrePoly& f) const { return OrePoly(ring_, star(f.coeffs())); }

Poly QuotientAlgebra::reduced_trace(const OrePoly& f) const { return reduced_trace(f.coeffs()); }

Poly QuotientAlgebra::pairing(const OrePoly& f, const OrePoly& g) const {
  return reduced_trace(mul(f.coeffs(), star(g.coeffs())));
}

OrePoly QuotientAlgebra::normalize(const OrePoly& f) const {
  OrePoly red = reduce(f);
  if (red.is_zero()) throw std::invalid_argument("cannot normalize the zero class");
  return rgcd(red, M_);
}

Matrix eval_semilinear(const EtaleAlgebra& A, const std::vector<AlgElem>& f, const AlgElem& x) {
  const GaloisField& L = A.base();
  const std::size_t r = A.rank();
  Matrix out(r, r);
  AlgElem px = A.one();  // x theta(x) ... theta^(i-1)(x)
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (!A.is_zero(f[i])) {
      Matrix term = linalg::mul(L, A.mult_matrix(A.mul(f[i], px)), A.theta_matrix(static_cast<long long>(i)));
      out = linalg::add(L, out, term);
    }
    px = A.mul(px, A.theta(x, static_cast<long long>(i)));
  }
  return out;
}

}  // namespace skewdual
