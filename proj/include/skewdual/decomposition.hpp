#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "skewdual/geometry.hpp"
#include "skewdual/ore.hpp"

namespace skewdual {

enum class SymmetryClass { euclidean, hermitian, nonpalindromic };

std::string to_string(SymmetryClass c);

// Raised for a central modulus with repeated factors; those go through the
// inseparable enumeration instead.
struct InseparableModulus : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Factor data that needs no arithmetic in K.
struct FactorShape {
  Poly P;  // monic irreducible over F
  unsigned degree = 0;
  std::size_t tau = 0;
  SymmetryClass cls = SymmetryClass::nonpalindromic;
  int y_sign = 0;  // +1 / -1 when P = Y -+ 1, else 0
};

// Y^k - 1 over F
Poly cyclic_modulus(const GaloisField& F, unsigned k);
// a nonzero multiple of its own reciprocal
bool is_palindromic(const GaloisField& F, const Poly& P);
// Factors in canonical order with tau; throws InseparableModulus or
// std::invalid_argument (not palindromic, P(0) = 0).
std::vector<FactorShape> factor_shapes(const GaloisField& F, const Poly& P, Rng& rng);

struct FactorComponent {
  std::size_t index = 0;
  FactorShape shape;
  FieldRef L;  // F_l = F[Y]/P_l
  Fe y;        // root of P_l in L, smallest encoding
  std::shared_ptr<const EtaleAlgebra> A;  // K (x) F_l, with sigma = sigma_l
  long long sigma_exp = 0;                // sigma_l as a p-power on L
  AlgElem x, z, zeta;
  RelativeBasis y_basis;  // powers of y, L over F
  Poly Q;                 // 1 mod P_l, 0 mod the other factors

  std::size_t tau() const { return shape.tau; }
  SymmetryClass cls() const { return shape.cls; }
  unsigned degree() const { return shape.degree; }
  bool palindromic() const { return shape.tau == index; }
};

// E = K[X;theta]/(P(X^r)) split into the components K_l[X;theta]/(X^r - y_l).
class Decomposition {
 public:
  Decomposition(FieldRef F, FieldRef K, Poly P, Rng& rng);
  static Decomposition cyclic(FieldRef F, FieldRef K, unsigned k, Rng& rng);

  const OreRingRef& ring() const { return ring_; }
  const QuotientAlgebra& algebra() const { return *E_; }
  const GaloisField& F() const { return ring_->F(); }
  const GaloisField& K() const { return ring_->K(); }
  const Poly& central_modulus() const { return E_->central_modulus(); }
  std::size_t length() const { return E_->length(); }
  unsigned r() const { return ring_->r(); }

  std::size_t size() const { return comps_.size(); }
  const FactorComponent& component(std::size_t l) const { return comps_.at(l); }
  const std::vector<FactorComponent>& components() const { return comps_; }
  // tau-fixed indices, and pairs (l, tau(l)) with l < tau(l)
  std::vector<std::size_t> palindromic() const;
  std::vector<std::pair<std::size_t, std::size_t>> pairs() const;

  // sigma_l : K_l -> K_tau(l)
  AlgElem sigma(std::size_t l, const AlgElem& a) const;
  // (kappa, rho) = Tr(zeta_l kappa sigma_tau(rho)) on K_l; needs tau(l) = l
  SesquiSpace sesquilinear_form(std::size_t l) const;
  // Gram of (kappa, rho) = Tr(zeta_l kappa sigma_tau(rho)) for kappa in K_l,
  // rho in K_tau(l)
  Matrix pairing_gram(std::size_t l) const;
  // rows of K_tau(l) orthogonal to the rows of V under pairing_gram(l)
  Matrix partner_orthogonal(std::size_t l, const Matrix& V) const;

  // a = sum_j kappa_j y^j with kappa_j in K
  std::vector<Fe> to_central(std::size_t l, const AlgElem& a) const;
  // matrix over F_l of f(x_l theta) on K_l
  Matrix evaluate(std::size_t l, const OrePoly& f) const;
  // generator of the left ideal of K[X;theta]/(P_l(X^r)) killing V
  OrePoly component_generator(std::size_t l, const Matrix& V) const;
  // the same through an llcm of linear factors; needs a basis of units
  std::optional<OrePoly> generator_by_lcm(std::size_t l, const Matrix& V) const;
  OrePoly generator_by_annihilator(std::size_t l, const Matrix& V) const;
  // f_tau from f_l, for a pair
  OrePoly partner_generator(std::size_t l, const OrePoly& fl) const;

  // One subspace per component; entries at the larger index of a pair are
  // ignored. Returns the normalized generator.
  OrePoly code_from_subspaces(const std::vector<Matrix>& V) const;
  // kernels of f(x_l theta), one per component, in RREF
  std::vector<Matrix> subspaces_from_code(const OrePoly& f) const;

  OrePoly normalize(const OrePoly& f) const;
  OrePoly dual_code(const OrePoly& f) const;
  bool is_selforthogonal(const OrePoly& f) const;
  bool is_selfdual(const OrePoly& f) const;

 private:
  void build_component(std::size_t l, const FactorShape& sh, Rng& rng);
  void build_twists(Rng& rng);

  OreRingRef ring_;
  std::shared_ptr<const QuotientAlgebra> E_;
  std::vector<FactorComponent> comps_;
  std::vector<OrePoly> comp_mod_;  // P_l(X^r)
  std::vector<OrePoly> idem_;      // Q_l(X^r)
};

}  // namespace skewdual
