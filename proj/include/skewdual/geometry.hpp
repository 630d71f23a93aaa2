#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skewdual/linalg.hpp"

namespace skewdual {

enum class FormKind { euclidean, hermitian, skew_euclidean, skew_hermitian };

std::string to_string(FormKind k);

// The form B(u, w) = u^T G sigma(w) on F^N, where sigma is either the
// identity or the involution a -> a^(sqrt|F|).
class SesquiSpace {
 public:
  // sigma_exp is a p-power exponent: 0, or half the degree of F.
  SesquiSpace(FieldRef F, long long sigma_exp, Matrix G);

  const GaloisField& field() const { return *F_; }
  const FieldRef& field_ref() const { return F_; }
  long long sigma_exp() const { return sigma_exp_; }
  bool has_involution() const { return sigma_exp_ != 0; }
  std::size_t dim() const { return G_.rows; }
  const Matrix& gram() const { return G_; }
  FormKind kind() const { return kind_; }
  bool is_skew() const { return kind_ == FormKind::skew_euclidean || kind_ == FormKind::skew_hermitian; }
  // |F^sigma|
  std::uint64_t fixed_order() const;

  Fe sigma(Fe a) const { return sigma_exp_ ? F_->frobenius(a, sigma_exp_) : a; }
  std::vector<Fe> sigma(const std::vector<Fe>& v) const;
  Matrix sigma(const Matrix& m) const;
  Fe form(const std::vector<Fe>& u, const std::vector<Fe>& w) const;
  // M G sigma(M)^T
  Matrix sandwich(const Matrix& M) const;
  bool is_isotropic(const Matrix& M) const { return linalg::is_zero(sandwich(M)); }
  // rows span {x : B(x, w) = 0 for all rows w of W}
  Matrix orthogonal(const Matrix& W) const;

 private:
  FieldRef F_;
  long long sigma_exp_;
  Matrix G_;
  FormKind kind_;
};

bool witt_index_is_maximal(const SesquiSpace& V);

// lambda with B(u + lambda v, u + lambda v) = 0, uniform among solutions
std::optional<Fe> solve_isotropy_equation(const SesquiSpace& V, const std::vector<Fe>& u, const std::vector<Fe>& v,
                                          Rng& rng);

// B(u_i, v_i) = 1, every other pairing inside the basis vanishes except
// B(v_i, u_i) = +-1.
struct HyperbolicBasis {
  std::vector<std::vector<Fe>> u, v;
  Matrix matrix() const;  // rows u_1..u_s, v_1..v_s
};

struct HyperbolicOptions {
  bool swap_retry = false;
  std::size_t* trials = nullptr;  // total draws of (u, v), if requested
};

HyperbolicBasis hyperbolic_decomposition(const SesquiSpace& V, Rng& rng, HyperbolicOptions opt = {});
Matrix random_isotropic_maximal(const SesquiSpace& V, Rng& rng);

// Every RREF matrix with N columns (rank in [dmin, dmax]) exactly once:
// by rank, then pivot set lexicographically, then free entries with the
// last one running fastest.
class SubspaceEnumerator {
 public:
  SubspaceEnumerator(FieldRef F, std::size_t N);
  SubspaceEnumerator(FieldRef F, std::size_t N, std::size_t dim);
  std::optional<Matrix> next();
  void reset();

 private:
  bool start_dim();
  bool next_pivots();
  void start_pivots();
  Matrix current() const;

  FieldRef F_;
  std::size_t N_, dmin_, dmax_, d_ = 0;
  std::vector<std::size_t> piv_;
  std::vector<std::pair<std::size_t, std::size_t>> free_;
  std::vector<std::uint64_t> digits_;
  bool started_ = false, done_ = false;
};

// Maximal isotropic subspaces via the (A, B, C) block parameterization in a
// fixed hyperbolic basis; each subspace comes out once, as an RREF matrix
// in the original coordinates.
class IsotropicEnumerator {
 public:
  explicit IsotropicEnumerator(const SesquiSpace& V, std::uint64_t basis_seed = 0x5eed);
  std::optional<Matrix> next();
  // dimension over GF(p) of the current B-solution space
  std::size_t current_b_dim() const { return kb_.rows; }
  const HyperbolicBasis& basis() const { return hb_; }

 private:
  bool load_next_a();

  SesquiSpace V_;
  std::size_t s_;
  int eps_;
  HyperbolicBasis hb_;
  Matrix H_;
  SubspaceEnumerator as_;
  Matrix A_, C_;
  std::vector<std::size_t> bfree_;  // free columns of B
  Matrix kb_;                       // GF(p) kernel basis, rows over the unknowns
  std::vector<std::uint32_t> odo_;
  bool have_a_ = false, exhausted_ = false;
};

Matrix random_subspace(const GaloisField& F, std::size_t N, Rng& rng);
Matrix random_subspace(const GaloisField& F, std::size_t N, std::size_t dim, Rng& rng);

BigInt q_binomial(unsigned n, unsigned k, const BigInt& q);
BigInt count_subspaces(unsigned n, const BigInt& q);
// number of totally isotropic subspaces of dimension s in a nondegenerate
// space of dimension 2s with Witt index s
BigInt count_isotropic(FormKind kind, unsigned s, std::uint64_t qF);
BigInt random_below(const BigInt& bound, Rng& rng);
std::uint64_t isqrt_exact(std::uint64_t q);  // throws if q is not a square

}  // namespace skewdual
