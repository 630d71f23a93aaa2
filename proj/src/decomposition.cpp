#include "skewdual/decomposition.hpp"

#include <map>

namespace skewdual {

std::string to_string(SymmetryClass c) {
  switch (c) {
    case SymmetryClass::euclidean:
      return "euclidean";
    case SymmetryClass::hermitian:
      return "hermitian";
    case SymmetryClass::nonpalindromic:
      return "nonpalindromic";
  }
  return "?";
}

Poly cyclic_modulus(const GaloisField& F, unsigned k) {
  if (k == 0) throw std::invalid_argument("k must be positive");
  Poly P = fpoly::x_power(F, k);
  P[0] = F.neg(F.one());
  return P;
}

bool is_palindromic(const GaloisField& F, const Poly& P) {
  if (P.empty() || P[0] == F.zero()) return false;
  Poly R = fpoly::reciprocal(P);
  return fpoly::monic(F, R) == fpoly::monic(F, P);
}

std::vector<FactorShape> factor_shapes(const GaloisField& F, const Poly& P0, Rng& rng) {
  Poly P = P0;
  fpoly::trim(P);
  if (fpoly::degree(P) < 1) throw std::invalid_argument("central modulus must have positive degree");
  P = fpoly::monic(F, P);
  if (P[0] == F.zero()) throw std::invalid_argument("central modulus vanishes at 0");
  if (!is_palindromic(F, P)) throw std::invalid_argument("central modulus is not palindromic");
  if (!fpoly::is_squarefree(F, P)) {
    throw InseparableModulus("central modulus has repeated factors; use the inseparable enumeration");
  }
  auto fs = fpoly::factor_squarefree(F, P, rng);
  std::vector<FactorShape> out(fs.size());
  const Fe one = F.one(), mone = F.neg(F.one());
  for (std::size_t l = 0; l < fs.size(); ++l) {
    out[l].P = fs[l];
    out[l].degree = static_cast<unsigned>(fpoly::degree(fs[l]));
    if (out[l].degree == 1 && fs[l][0] == mone) out[l].y_sign = 1;
    if (out[l].degree == 1 && fs[l][0] == one) out[l].y_sign = -1;
    Poly rec = fpoly::monic(F, fpoly::reciprocal(fs[l]));
    bool found = false;
    for (std::size_t m = 0; m < fs.size(); ++m) {
      if (fs[m] == rec) {
        out[l].tau = m;
        found = true;
      }
    }
    if (!found) throw std::logic_error("reciprocal factor missing");
  }
  for (std::size_t l = 0; l < out.size(); ++l) {
    if (out[l].tau != l) {
      out[l].cls = SymmetryClass::nonpalindromic;
    } else {
      out[l].cls = out[l].y_sign ? SymmetryClass::euclidean : SymmetryClass::hermitian;
    }
  }
  return out;
}

Decomposition Decomposition::cyclic(FieldRef F, FieldRef K, unsigned k, Rng& rng) {
  Poly P = cyclic_modulus(*F, k);
  return Decomposition(std::move(F), std::move(K), std::move(P), rng);
}

Decomposition::Decomposition(FieldRef F, FieldRef K, Poly P, Rng& rng) {
  auto shapes = factor_shapes(*F, P, rng);
  P = fpoly::monic(*F, P);
  ring_ = std::make_shared<OreRing>(F, K);
  E_ = std::make_shared<QuotientAlgebra>(ring_, P);
  const GaloisField& Fd = *F;
  const unsigned e = Fd.degree();
  const std::uint32_t p = Fd.characteristic();

  comps_.resize(shapes.size());
  std::map<unsigned, FieldRef> fields;
  for (std::size_t l = 0; l < shapes.size(); ++l) {
    auto& c = comps_[l];
    c.index = l;
    c.shape = shapes[l];
    const unsigned d = c.shape.degree;
    if (!fields.count(d)) fields[d] = d == 1 ? F : GaloisField::extension(p, e * d);
    c.L = fields[d];
    Embedding emb(F, c.L);
    Poly PL;
    for (Fe a : c.shape.P) PL.push_back(emb(a));
    auto rts = fpoly::roots(*c.L, PL, rng);
    if (rts.size() != d) throw std::logic_error("factor does not split in its residue field");
    c.y = rts.front();
    c.y_basis = RelativeBasis::power(emb, c.y);
  }
  for (auto& c : comps_) {
    const GaloisField& L = *c.L;
    const Fe target = L.inv(comps_[c.tau()].y);
    bool found = false;
    for (unsigned j = 0; j < c.degree() && !found; ++j) {
      if (L.frobenius(c.y, static_cast<long long>(e) * j) == target) {
        c.sigma_exp = static_cast<long long>(e) * j;
        found = true;
      }
    }
    if (!found) throw std::logic_error("no Frobenius power sends y to the inverse partner root");
    c.A = std::make_shared<EtaleAlgebra>(F, K, c.L, c.sigma_exp);
    c.x = norm_preimage(*c.A, c.y, rng);
    if (c.A->norm(c.x) != c.y) throw std::logic_error("norm preimage check failed");
  }
  build_twists(rng);

  for (auto& c : comps_) {
    Poly cof = fpoly::divmod(Fd, P, c.shape.P).first;
    auto inv = fpoly::inverse_mod(Fd, cof, c.shape.P);
    if (!inv) throw std::logic_error("factors are not coprime");
    c.Q = fpoly::rem(Fd, fpoly::mul(Fd, cof, *inv), P);
    comp_mod_.push_back(OrePoly::central(ring_, c.shape.P));
    idem_.push_back(OrePoly::central(ring_, c.Q));
  }
}

void Decomposition::build_twists(Rng& rng) {
  for (auto& c : comps_) {
    const auto& t = comps_[c.tau()];
    c.z = c.A->mul(c.x, t.A->frob(t.x, t.sigma_exp));
    if (c.A->norm(c.z) != c.L->one()) throw std::logic_error("z does not have norm 1");
  }
  for (auto& c : comps_) {
    const EtaleAlgebra& A = *c.A;
    if (c.palindromic()) {
      const AlgElem z0 = hilbert90(A, c.z, rng);
      AlgElem cand = A.add(z0, A.sigma(z0));
      if (!A.is_unit(cand)) {
        const AlgElem w = A.scale(z0, c.L->inv(c.y));
        cand = A.add(w, A.sigma(w));
      }
      // both candidates can fail when K_l is not a field
      while (!A.is_unit(cand)) {
        const AlgElem w = A.scale(z0, c.L->random_nonzero(rng));
        cand = A.add(w, A.sigma(w));
      }
      c.zeta = cand;
    } else if (c.index < c.tau()) {
      c.zeta = hilbert90(A, c.z, rng);
      comps_[c.tau()].zeta = A.frob(c.zeta, c.sigma_exp);
    }
  }
  for (const auto& c : comps_) {
    const EtaleAlgebra& A = *c.A;
    if (!A.is_unit(c.zeta) || A.theta(c.zeta) != A.mul(c.z, c.zeta)) throw std::logic_error("zeta check failed");
    if (A.frob(c.zeta, c.sigma_exp) != comps_[c.tau()].zeta) throw std::logic_error("zeta is not sigma-compatible");
  }
}

std::vector<std::size_t> Decomposition::palindromic() const {
  std::vector<std::size_t> out;
  for (const auto& c : comps_) {
    if (c.palindromic()) out.push_back(c.index);
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> Decomposition::pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& c : comps_) {
    if (c.index < c.tau()) out.push_back({c.index, c.tau()});
  }
  return out;
}

AlgElem Decomposition::sigma(std::size_t l, const AlgElem& a) const {
  const auto& c = comps_.at(l);
  return c.A->frob(a, c.sigma_exp);
}

Matrix Decomposition::pairing_gram(std::size_t l) const {
  const auto& c = comps_.at(l);
  const EtaleAlgebra& A = *c.A;
  const std::size_t r = A.rank();
  // Tr(zeta a^m) for m < 2r - 1
  std::vector<Fe> tr;
  AlgElem pw = c.zeta;
  for (std::size_t m = 0; m + 1 < 2 * r; ++m) {
    tr.push_back(A.trace(pw));
    pw = A.mul(pw, A.basis(1 % r));
  }
  Matrix G(r, r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) G(i, j) = tr[i + j];
  }
  return G;
}

SesquiSpace Decomposition::sesquilinear_form(std::size_t l) const {
  const auto& c = comps_.at(l);
  if (!c.palindromic()) throw std::invalid_argument("component is not tau-fixed");
  return SesquiSpace(c.L, c.sigma_exp, pairing_gram(l));
}

Matrix Decomposition::partner_orthogonal(std::size_t l, const Matrix& V) const {
  const auto& c = comps_.at(l);
  const GaloisField& L = *c.L;
  const std::size_t r = c.A->rank();
  const Matrix W = V.rows ? linalg::kernel(L, linalg::mul(L, V, pairing_gram(l))) : Matrix::identity(r);
  return linalg::rref_copy(L, linalg::frobenius(L, W, c.sigma_exp));
}

std::vector<Fe> Decomposition::to_central(std::size_t l, const AlgElem& a) const {
  const auto& c = comps_.at(l);
  const std::size_t r = c.A->rank(), d = c.degree();
  std::vector<std::vector<Fe>> cij(r);
  for (std::size_t i = 0; i < r; ++i) cij[i] = c.y_basis.coords(a.c[i]);
  const RelativeBasis& KF = c.A->K_over_F();
  std::vector<Fe> kappa(d);
  std::vector<Fe> col(r);
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < r; ++i) col[i] = cij[i][j];
    kappa[j] = KF.combine(col);
  }
  return kappa;
}

Matrix Decomposition::evaluate(std::size_t l, const OrePoly& f) const {
  const auto& c = comps_.at(l);
  OrePoly red = right_divmod(f, comp_mod_[l]).second;
  std::vector<AlgElem> fa;
  for (Fe a : red.coeffs()) fa.push_back(c.A->from_K(a));
  if (fa.empty()) return Matrix(c.A->rank(), c.A->rank());
  return eval_semilinear(*c.A, fa, c.x);
}

std::optional<OrePoly> Decomposition::generator_by_lcm(std::size_t l, const Matrix& V) const {
  const auto& c = comps_.at(l);
  const EtaleAlgebra& A = *c.A;
  const GaloisField& K = ring_->K();
  const unsigned r = ring_->r();
  if (V.rows == 0) return OrePoly::one(ring_);
  std::vector<OrePoly> lin;
  for (std::size_t i = 0; i < V.rows; ++i) {
    AlgElem v{V.row(i)};
    auto vi = A.inv(v);
    if (!vi) return std::nullopt;
    const AlgElem ratio = A.mul(A.mul(c.x, A.theta(v)), *vi);
    const auto kappa = to_central(l, ratio);
    std::vector<Fe> g(std::max<std::size_t>(2, r * (kappa.size() - 1) + 1), K.zero());
    g[1] = K.one();
    for (std::size_t j = 0; j < kappa.size(); ++j) g[r * j] = K.sub(g[r * j], kappa[j]);
    lin.push_back(rgcd(OrePoly(ring_, g), comp_mod_[l]));
  }
  return rgcd(llcm(lin), comp_mod_[l]);
}

OrePoly Decomposition::generator_by_annihilator(std::size_t l, const Matrix& V) const {
  const auto& c = comps_.at(l);
  const EtaleAlgebra& A = *c.A;
  const GaloisField& K = ring_->K();
  const std::size_t d = c.degree(), e = d * V.rows;
  if (e == 0) return OrePoly::one(ring_);
  // rows (v, j), columns a_0..a_{e-1}
  Matrix S(V.rows * d, e);
  std::vector<Fe> rhs(V.rows * d);
  for (std::size_t b = 0; b < V.rows; ++b) {
    AlgElem w{V.row(b)};
    for (std::size_t i = 0; i <= e; ++i) {
      const auto kappa = to_central(l, w);
      for (std::size_t j = 0; j < d; ++j) {
        if (i < e) {
          S(b * d + j, i) = kappa[j];
        } else {
          rhs[b * d + j] = K.neg(kappa[j]);
        }
      }
      w = A.mul(c.x, A.theta(w));
    }
  }
  if (linalg::rank(K, S) != e) throw std::invalid_argument("subspace is not a sum of F_l-lines");
  auto sol = linalg::solve(K, S, rhs);
  if (!sol) throw std::logic_error("annihilator system is inconsistent");
  std::vector<Fe> f = *sol;
  f.push_back(K.one());
  return OrePoly(ring_, f);
}

OrePoly Decomposition::component_generator(std::size_t l, const Matrix& V) const {
  if (auto g = generator_by_lcm(l, V)) return *g;
  return generator_by_annihilator(l, V);
}

OrePoly Decomposition::partner_generator(std::size_t l, const OrePoly& fl) const {
  const auto& c = comps_.at(l);
  auto [h, rem] = right_divmod(comp_mod_[l], fl);
  if (!rem.is_zero()) throw std::invalid_argument("not a divisor of the component modulus");
  const int D = h.degree();
  std::vector<Fe> g(D + 1);
  for (int i = 0; i <= D; ++i) g[D - i] = ring_->theta(h.coeff(i), D - i);
  return rgcd(OrePoly(ring_, g), comp_mod_[c.tau()]);
}

OrePoly Decomposition::code_from_subspaces(const std::vector<Matrix>& V) const {
  if (V.size() != comps_.size()) throw std::invalid_argument("need one subspace per component");
  const unsigned r = ring_->r();
  std::vector<OrePoly> f(comps_.size());
  for (const auto& c : comps_) {
    const std::size_t l = c.index;
    if (c.palindromic()) {
      if (V[l].cols != r || 2 * V[l].rows != r) throw std::invalid_argument("need a subspace of half dimension");
      const Matrix B = linalg::rref_copy(*c.L, V[l]);
      if (B.rows != V[l].rows) throw std::invalid_argument("subspace rows are dependent");
      if (!sesquilinear_form(l).is_isotropic(B)) throw std::invalid_argument("subspace is not isotropic");
      f[l] = component_generator(l, B);
    } else if (l < c.tau()) {
      if (V[l].cols != r) throw std::invalid_argument("subspace has the wrong ambient dimension");
      f[l] = component_generator(l, linalg::rref_copy(*c.L, V[l]));
      f[c.tau()] = partner_generator(l, f[l]);
    }
  }
  OrePoly acc = OrePoly::zero(ring_);
  for (std::size_t l = 0; l < f.size(); ++l) acc = acc + f[l] * idem_[l];
  return normalize(acc);
}

std::vector<Matrix> Decomposition::subspaces_from_code(const OrePoly& f) const {
  std::vector<Matrix> out;
  for (const auto& c : comps_) out.push_back(linalg::kernel(*c.L, evaluate(c.index, f)));
  return out;
}

OrePoly Decomposition::normalize(const OrePoly& f) const {
  OrePoly red = E_->reduce(f);
  if (red.is_zero()) return E_->modulus();
  return rgcd(red, E_->modulus());
}

OrePoly Decomposition::dual_code(const OrePoly& f) const {
  if (f.is_zero()) throw std::invalid_argument("zero generator");
  auto [g, rem] = right_divmod(E_->modulus(), monic(f));
  if (!rem.is_zero()) throw std::invalid_argument("generator does not divide the modulus");
  return normalize(E_->star(E_->reduce(g)));
}

bool Decomposition::is_selforthogonal(const OrePoly& f) const {
  const OrePoly g = normalize(f);
  return E_->mul(g, E_->star(g)).is_zero();
}

bool Decomposition::is_selfdual(const OrePoly& f) const {
  const OrePoly g = normalize(f);
  return 2 * static_cast<std::size_t>(g.degree()) == E_->length() && E_->mul(g, E_->star(g)).is_zero();
}

}  // namespace skewdual
