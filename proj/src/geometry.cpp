#include "skewdual/geometry.hpp"

#include <stdexcept>

namespace skewdual {

std::string to_string(FormKind k) {
  switch (k) {
    case FormKind::euclidean: return "euclidean";
    case FormKind::hermitian: return "hermitian";
    case FormKind::skew_euclidean: return "skew_euclidean";
    case FormKind::skew_hermitian: return "skew_hermitian";
  }
  return "?";
}

std::uint64_t isqrt_exact(std::uint64_t q) {
  std::uint64_t t = 1;
  while (t * t < q) ++t;
  if (t * t != q) throw std::invalid_argument("order is not a square");
  return t;
}

SesquiSpace::SesquiSpace(FieldRef F, long long sigma_exp, Matrix G) : F_(std::move(F)), G_(std::move(G)) {
  const GaloisField& f = *F_;
  const long long n = f.degree();
  sigma_exp_ = ((sigma_exp % n) + n) % n;
  if (sigma_exp_ != 0 && 2 * sigma_exp_ != n) throw std::invalid_argument("sigma must be an involution");
  if (G_.rows != G_.cols) throw std::invalid_argument("Gram matrix not square");
  if (G_.rows > 0 && linalg::det(f, G_) == Fe{0}) throw std::invalid_argument("degenerate form");
  const Matrix Gt = linalg::transpose(G_);
  const Matrix sG = sigma(G_);
  const Matrix msG = linalg::scale(f, sG, f.neg(f.one()));
  if (Gt == sG) {
    kind_ = sigma_exp_ ? FormKind::hermitian : FormKind::euclidean;
  } else if (Gt == msG) {
    kind_ = sigma_exp_ ? FormKind::skew_hermitian : FormKind::skew_euclidean;
  } else {
    throw std::invalid_argument("form is neither (skew-)symmetric nor (skew-)hermitian");
  }
}

std::uint64_t SesquiSpace::fixed_order() const { return sigma_exp_ ? isqrt_exact(F_->order()) : F_->order(); }

std::vector<Fe> SesquiSpace::sigma(const std::vector<Fe>& v) const {
  if (!sigma_exp_) return v;
  std::vector<Fe> w(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) w[i] = sigma(v[i]);
  return w;
}

Matrix SesquiSpace::sigma(const Matrix& m) const {
  if (!sigma_exp_) return m;
  return linalg::frobenius(*F_, m, sigma_exp_);
}

Fe SesquiSpace::form(const std::vector<Fe>& u, const std::vector<Fe>& w) const {
  return linalg::dot(*F_, u, linalg::mul_vec(*F_, G_, sigma(w)));
}

Matrix SesquiSpace::sandwich(const Matrix& M) const {
  const GaloisField& f = *F_;
  return linalg::mul(f, linalg::mul(f, M, G_), linalg::transpose(sigma(M)));
}

Matrix SesquiSpace::orthogonal(const Matrix& W) const {
  // B(x, w) = x . (G sigma(w))
  Matrix cons(0, dim());
  for (std::size_t i = 0; i < W.rows; ++i) cons.append_row(linalg::mul_vec(*F_, G_, sigma(W.row(i))));
  if (cons.rows == 0) return Matrix::identity(dim());
  return linalg::kernel(*F_, cons);
}

bool witt_index_is_maximal(const SesquiSpace& V) {
  if (V.dim() % 2) throw std::invalid_argument("odd dimension");
  if (V.kind() != FormKind::euclidean) return true;
  const GaloisField& f = V.field();
  Fe d = linalg::det(f, V.gram());
  if ((V.dim() / 2) % 2) d = f.neg(d);
  return f.is_square(d);
}

namespace {

// omega with sigma(omega) = -omega
Fe skew_unit(const SesquiSpace& V) {
  const GaloisField& f = V.field();
  Fe g = f.gen();
  return f.sub(g, V.sigma(g));
}

// uniform random element of norm 1 for x -> x sigma(x)
Fe random_norm_one(const SesquiSpace& V, Rng& rng) {
  const GaloisField& f = V.field();
  const std::uint64_t t = V.fixed_order();
  return f.pow(f.random_nonzero(rng), t - 1);
}

Fe norm_root(const SesquiSpace& V, Fe delta) {
  const GaloisField& f = V.field();
  if (delta == Fe{0}) return delta;
  const std::uint64_t t = V.fixed_order();
  auto e = f.discrete_log(f.gen(), delta);
  if (!e || *e % (t + 1)) throw std::logic_error("value is not a norm");
  Fe r = f.pow(f.gen(), *e / (t + 1));
  if (f.mul(r, V.sigma(r)) != delta) throw std::logic_error("norm root check failed");
  return r;
}

std::vector<Fe> axpy(const GaloisField& f, const std::vector<Fe>& u, Fe l, const std::vector<Fe>& v) {
  std::vector<Fe> w(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) w[i] = f.add(u[i], f.mul(l, v[i]));
  return w;
}

std::vector<Fe> scaled(const GaloisField& f, const std::vector<Fe>& u, Fe l) {
  std::vector<Fe> w(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) w[i] = f.mul(l, u[i]);
  return w;
}

std::vector<Fe> random_in(const GaloisField& f, const Matrix& basis, Rng& rng) {
  std::vector<Fe> x(basis.cols, Fe{0});
  for (std::size_t i = 0; i < basis.rows; ++i) {
    Fe c = f.random(rng);
    if (c == Fe{0}) continue;
    for (std::size_t j = 0; j < basis.cols; ++j) x[j] = f.add(x[j], f.mul(c, basis(i, j)));
  }
  return x;
}

}  // namespace

std::optional<Fe> solve_isotropy_equation(const SesquiSpace& V, const std::vector<Fe>& u, const std::vector<Fe>& v,
                                          Rng& rng) {
  const GaloisField& f = V.field();
  if (V.kind() == FormKind::skew_euclidean) return f.random(rng);
  Fe a = V.form(u, u), b = V.form(v, v), c = V.form(u, v);
  if (V.kind() == FormKind::skew_hermitian) {
    Fe w = skew_unit(V);
    a = f.mul(w, a);
    b = f.mul(w, b);
    c = f.mul(w, c);
  }
  const Fe two = f.from_int(2);
  if (b == Fe{0}) {
    // a + Tr(sigma(lambda) c) = 0
    if (c == Fe{0}) {
      if (a == Fe{0}) return f.random(rng);
      return std::nullopt;
    }
    Fe mu = f.neg(f.div(a, two));
    if (V.has_involution()) {
      Fe m = f.random(rng);
      mu = f.add(mu, f.sub(m, V.sigma(m)));
    }
    return V.sigma(f.div(mu, c));
  }
  // N(lambda b + c) = Delta
  const Fe delta = f.sub(f.mul(c, V.sigma(c)), f.mul(a, b));
  Fe root;
  if (V.has_involution()) {
    root = f.mul(norm_root(V, delta), random_norm_one(V, rng));
  } else {
    auto r = f.sqrt(delta);
    if (!r) return std::nullopt;
    root = (rng.below(2) == 0) ? *r : f.neg(*r);
  }
  return f.div(f.sub(root, c), b);
}

Matrix HyperbolicBasis::matrix() const {
  const std::size_t n = u.empty() ? 0 : u[0].size();
  Matrix m(0, n);
  for (const auto& x : u) m.append_row(x);
  for (const auto& x : v) m.append_row(x);
  return m;
}

HyperbolicBasis hyperbolic_decomposition(const SesquiSpace& V, Rng& rng, HyperbolicOptions opt) {
  if (!witt_index_is_maximal(V)) throw std::domain_error("Witt index is not maximal");
  const GaloisField& f = V.field();
  if (V.kind() == FormKind::skew_hermitian) {
    const Fe w = skew_unit(V);
    SesquiSpace H(V.field_ref(), V.sigma_exp(), linalg::scale(f, V.gram(), w));
    HyperbolicBasis hb = hyperbolic_decomposition(H, rng, opt);
    for (auto& x : hb.v) x = scaled(f, x, f.neg(w));
    return hb;
  }
  const std::size_t N = V.dim();
  HyperbolicBasis hb;
  Matrix W(0, N);
  std::size_t trials = 0;
  while (2 * hb.u.size() < N) {
    const Matrix perp = V.orthogonal(W);
    std::vector<Fe> u = random_in(f, perp, rng), v = random_in(f, perp, rng);
    ++trials;
    if (linalg::rank(f, Matrix::from_rows({u, v}, N)) != 2) continue;
    if (V.kind() == FormKind::skew_euclidean) {
      const Fe c = V.form(u, v);
      if (c == Fe{0}) continue;
      v = scaled(f, v, f.inv(c));
    } else {
      if (V.form(v, v) == Fe{0}) {
        if (!opt.swap_retry) continue;
        std::swap(u, v);
        if (V.form(v, v) == Fe{0}) continue;
      }
      auto lam = solve_isotropy_equation(V, u, v, rng);
      if (!lam) continue;
      u = axpy(f, u, *lam, v);
      if (V.form(u, v) == Fe{0}) continue;
      auto mu = solve_isotropy_equation(V, v, u, rng);
      if (!mu) throw std::logic_error("linear isotropy equation without solution");
      v = axpy(f, v, *mu, u);
      v = scaled(f, v, f.inv(V.form(v, u)));
    }
    W.append_row(u);
    W.append_row(v);
    hb.u.push_back(std::move(u));
    hb.v.push_back(std::move(v));
  }
  if (opt.trials) *opt.trials += trials;
  return hb;
}

Matrix random_isotropic_maximal(const SesquiSpace& V, Rng& rng) {
  HyperbolicBasis hb = hyperbolic_decomposition(V, rng);
  Matrix m = Matrix::from_rows(hb.u, V.dim());
  linalg::rref(V.field(), m);
  return m;
}

// ---------------------------------------------------------------------------

SubspaceEnumerator::SubspaceEnumerator(FieldRef F, std::size_t N) : F_(std::move(F)), N_(N), dmin_(0), dmax_(N) {}

SubspaceEnumerator::SubspaceEnumerator(FieldRef F, std::size_t N, std::size_t dim)
    : F_(std::move(F)), N_(N), dmin_(dim), dmax_(dim) {
  if (dim > N) throw std::invalid_argument("dimension exceeds ambient dimension");
}

void SubspaceEnumerator::reset() {
  started_ = false;
  done_ = false;
}

void SubspaceEnumerator::start_pivots() {
  free_.clear();
  for (std::size_t i = 0; i < d_; ++i) {
    std::size_t k = i + 1;
    for (std::size_t j = piv_[i] + 1; j < N_; ++j) {
      while (k < d_ && piv_[k] < j) ++k;
      if (k < d_ && piv_[k] == j) continue;
      free_.push_back({i, j});
    }
  }
  digits_.assign(free_.size(), 0);
}

bool SubspaceEnumerator::start_dim() {
  piv_.resize(d_);
  for (std::size_t i = 0; i < d_; ++i) piv_[i] = i;
  start_pivots();
  return true;
}

bool SubspaceEnumerator::next_pivots() {
  if (d_ == 0) return false;
  std::size_t i = d_;
  while (i-- > 0) {
    if (piv_[i] < N_ - d_ + i) {
      ++piv_[i];
      for (std::size_t j = i + 1; j < d_; ++j) piv_[j] = piv_[j - 1] + 1;
      start_pivots();
      return true;
    }
  }
  return false;
}

Matrix SubspaceEnumerator::current() const {
  Matrix m(d_, N_);
  for (std::size_t i = 0; i < d_; ++i) m(i, piv_[i]) = F_->one();
  for (std::size_t t = 0; t < free_.size(); ++t) m(free_[t].first, free_[t].second) = F_->element(digits_[t]);
  return m;
}

std::optional<Matrix> SubspaceEnumerator::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    d_ = dmin_;
    start_dim();
    return current();
  }
  const std::uint64_t q = F_->order();
  std::size_t t = digits_.size();
  while (t-- > 0) {
    if (++digits_[t] < q) return current();
    digits_[t] = 0;
  }
  if (next_pivots()) return current();
  if (d_ >= dmax_) {
    done_ = true;
    return std::nullopt;
  }
  ++d_;
  start_dim();
  return current();
}

// ---------------------------------------------------------------------------

IsotropicEnumerator::IsotropicEnumerator(const SesquiSpace& V, std::uint64_t basis_seed)
    : V_(V), s_(V.dim() / 2), eps_(V.is_skew() ? -1 : 1), as_(V.field_ref(), V.dim() / 2) {
  Rng rng(basis_seed);
  hb_ = hyperbolic_decomposition(V_, rng);
  H_ = hb_.matrix();
}

bool IsotropicEnumerator::load_next_a() {
  auto a = as_.next();
  if (!a) {
    exhausted_ = true;
    return false;
  }
  const GaloisField& f = V_.field();
  A_ = *a;
  const std::size_t d = A_.rows;
  // C: RREF basis of the orthogonal of the row span of sigma(A)
  if (d == 0) {
    C_ = Matrix::identity(s_);
  } else {
    C_ = linalg::kernel(f, V_.sigma(A_));
  }
  std::vector<bool> cpiv(s_, false);
  for (std::size_t i = 0; i < C_.rows; ++i) {
    for (std::size_t j = 0; j < s_; ++j) {
      if (C_(i, j) != Fe{0}) {
        cpiv[j] = true;
        break;
      }
    }
  }
  bfree_.clear();
  for (std::size_t j = 0; j < s_; ++j)
    if (!cpiv[j]) bfree_.push_back(j);
  // GF(p)-linear system A sigma(B)^T + eps B sigma(A)^T = 0
  const std::uint32_t p = f.characteristic();
  const std::size_t n = f.degree();
  const std::size_t U = d * bfree_.size() * n;
  auto Fp = GaloisField::prime(p);
  Matrix S(d * d * n, U);
  const Matrix sAt = linalg::transpose(V_.sigma(A_));
  std::uint64_t pm = 1;
  std::vector<Fe> unit(n);
  for (std::size_t m = 0; m < n; ++m, pm *= p) unit[m] = f.decode(pm);
  for (std::size_t i = 0, col = 0; i < d; ++i) {
    for (std::size_t jj = 0; jj < bfree_.size(); ++jj) {
      for (std::size_t m = 0; m < n; ++m, ++col) {
        Matrix B(d, s_);
        B(i, bfree_[jj]) = unit[m];
        Matrix phi = linalg::mul(f, A_, linalg::transpose(V_.sigma(B)));
        Matrix t2 = linalg::mul(f, B, sAt);
        if (eps_ < 0) t2 = linalg::scale(f, t2, f.neg(f.one()));
        phi = linalg::add(f, phi, t2);
        for (std::size_t e = 0; e < d * d; ++e) {
          auto c = f.coords(phi.a[e]);
          for (std::size_t k = 0; k < n; ++k) S(e * n + k, col) = Fp->from_int(c[k]);
        }
      }
    }
  }
  if (U == 0) {
    kb_ = Matrix(0, 0);
  } else {
    kb_ = linalg::kernel(*Fp, S);
  }
  odo_.assign(kb_.rows, 0);
  have_a_ = true;
  return true;
}

std::optional<Matrix> IsotropicEnumerator::next() {
  const GaloisField& f = V_.field();
  while (!exhausted_) {
    if (!have_a_) {
      load_next_a();
      continue;
    }
    const std::size_t d = A_.rows;
    const std::uint32_t p = f.characteristic();
    const std::size_t n = f.degree();
    // B from the current GF(p) combination
    Matrix B(d, s_);
    if (kb_.rows) {
      std::vector<std::uint64_t> val(kb_.cols, 0);
      auto Fp = GaloisField::prime(p);
      for (std::size_t t = 0; t < kb_.rows; ++t) {
        if (!odo_[t]) continue;
        for (std::size_t u = 0; u < kb_.cols; ++u) val[u] += std::uint64_t(odo_[t]) * Fp->encode(kb_(t, u));
      }
      for (std::size_t i = 0, col = 0; i < d; ++i) {
        for (std::size_t jj = 0; jj < bfree_.size(); ++jj, col += n) {
          std::vector<std::uint32_t> c(n);
          for (std::size_t k = 0; k < n; ++k) c[k] = static_cast<std::uint32_t>(val[col + k] % p);
          B(i, bfree_[jj]) = f.from_coords(c);
        }
      }
    }
    Matrix M(s_, 2 * s_);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < s_; ++j) {
        M(i, j) = A_(i, j);
        M(i, s_ + j) = B(i, j);
      }
    }
    for (std::size_t i = 0; i < C_.rows; ++i)
      for (std::size_t j = 0; j < s_; ++j) M(d + i, s_ + j) = C_(i, j);
    // advance
    std::size_t t = odo_.size();
    bool carried = true;
    while (t-- > 0) {
      if (++odo_[t] < p) {
        carried = false;
        break;
      }
      odo_[t] = 0;
    }
    if (carried) have_a_ = false;
    Matrix out = linalg::mul(f, M, H_);
    linalg::rref(f, out);
    return out;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

BigInt random_below(const BigInt& bound, Rng& rng) {
  if (bound <= 0) throw std::invalid_argument("empty range");
  const unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(bound)) + 1;
  for (;;) {
    BigInt x = 0;
    for (unsigned got = 0; got < bits; got += 64) x = (x << 64) | BigInt(rng.next());
    x &= (BigInt(1) << bits) - 1;
    if (x < bound) return x;
  }
}

BigInt q_binomial(unsigned n, unsigned k, const BigInt& q) {
  if (k > n) throw std::invalid_argument("k > n in q-binomial");
  BigInt num = 1, den = 1;
  for (unsigned i = 0; i < k; ++i) {
    num *= boost::multiprecision::pow(q, n - i) - 1;
    den *= boost::multiprecision::pow(q, i + 1) - 1;
  }
  return num / den;
}

BigInt count_subspaces(unsigned n, const BigInt& q) {
  BigInt t = 0;
  for (unsigned d = 0; d <= n; ++d) t += q_binomial(n, d, q);
  return t;
}

BigInt count_isotropic(FormKind kind, unsigned s, std::uint64_t qF) {
  BigInt q = qF, r = 1;
  switch (kind) {
    case FormKind::euclidean:
      for (unsigned i = 0; i < s; ++i) r *= boost::multiprecision::pow(q, i) + 1;
      break;
    case FormKind::hermitian:
    case FormKind::skew_hermitian: {
      BigInt t = isqrt_exact(qF);
      for (unsigned i = 0; i < s; ++i) r *= boost::multiprecision::pow(t, 2 * i + 1) + 1;
      break;
    }
    case FormKind::skew_euclidean:
      for (unsigned d = 1; d <= s; ++d) r *= boost::multiprecision::pow(q, d) + 1;
      break;
  }
  return r;
}

Matrix random_subspace(const GaloisField& F, std::size_t N, std::size_t dim, Rng& rng) {
  if (dim > N) throw std::invalid_argument("dimension exceeds ambient dimension");
  for (;;) {
    Matrix m(dim, N);
    for (auto& x : m.a) x = F.random(rng);
    linalg::rref(F, m);
    if (m.rows == dim) return m;
  }
}

Matrix random_subspace(const GaloisField& F, std::size_t N, Rng& rng) {
  const BigInt q = F.order();
  BigInt x = random_below(count_subspaces(static_cast<unsigned>(N), q), rng);
  std::size_t d = 0;
  for (;; ++d) {
    BigInt w = q_binomial(static_cast<unsigned>(N), static_cast<unsigned>(d), q);
    if (x < w) break;
    x -= w;
  }
  return random_subspace(F, N, d, rng);
}

}  // namespace skewdual
