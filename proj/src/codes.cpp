#include "skewdual/codes.hpp"

#include <sstream>

namespace skewdual {

std::pair<std::uint32_t, unsigned> prime_power(std::uint64_t q) {
  if (q < 3) throw std::invalid_argument("q must be an odd prime power");
  for (std::uint64_t p = 2; p * p <= q; ++p) {
    if (q % p) continue;
    unsigned e = 0;
    while (q % p == 0) {
      q /= p;
      ++e;
    }
    if (q != 1) throw std::invalid_argument("q is not a prime power");
    if (p == 2) throw std::invalid_argument("characteristic 2 is not supported");
    return {static_cast<std::uint32_t>(p), e};
  }
  return {static_cast<std::uint32_t>(q), 1};
}

void CodeParameters::validate() const {
  auto [pp, ee] = prime_power(q);
  (void)pp;
  if (r == 0) throw std::invalid_argument("r must be positive");
  if (static_cast<std::uint64_t>(ee) * r > 40) throw std::invalid_argument("K is too large");
  if (cyclic() && k == 0) throw std::invalid_argument("k must be positive");
  if (modulus) {
    auto F = GaloisField::extension(pp, ee);
    Poly P = central(*F);
    if (fpoly::degree(P) < 1) throw std::invalid_argument("modulus must have positive degree");
    if (!is_palindromic(*F, P)) throw std::invalid_argument("modulus is not palindromic");
  }
  if (field_modulus && field_modulus->size() != static_cast<std::size_t>(ee) * r + 1) {
    throw std::invalid_argument("field modulus has the wrong degree");
  }
}

FieldRef CodeParameters::F() const { return GaloisField::extension(p(), e()); }

FieldRef CodeParameters::K() const {
  if (field_modulus) return GaloisField::with_modulus(p(), *field_modulus);
  return GaloisField::extension(p(), e() * r);
}

Poly CodeParameters::central(const GaloisField& F) const {
  if (!modulus) return cyclic_modulus(F, k);
  Poly P = fpoly::from_ints(F, *modulus);
  fpoly::trim(P);
  return P;
}

unsigned CodeParameters::central_degree() const {
  if (!modulus) return k;
  auto c = *modulus;
  while (!c.empty() && c.back() % static_cast<long long>(p()) == 0) c.pop_back();
  return c.empty() ? 0 : static_cast<unsigned>(c.size() - 1);
}

std::string CodeParameters::describe() const {
  std::ostringstream os;
  os << "q=" << q << " r=" << r;
  if (modulus) {
    os << " P=[";
    for (std::size_t i = 0; i < modulus->size(); ++i) os << (i ? "," : "") << (*modulus)[i];
    os << "]";
  } else {
    os << " k=" << k;
  }
  return os.str();
}

namespace {

// (-1)^s is a square in GF(q)
bool minus_one_power_is_square(unsigned s, std::uint64_t q) { return s % 2 == 0 || q % 4 == 1; }

Existence shape_existence(const CodeParameters& params, const std::vector<FactorShape>& shapes) {
  if (params.r % 2) return {false, "r is odd"};
  const unsigned s = params.s();
  const bool sq = minus_one_power_is_square(s, params.q);
  for (const auto& sh : shapes) {
    if (sh.y_sign == 1 && sq) return {false, "(-1)^s is a square in F, so the factor Y-1 has no maximal isotropic space"};
    if (sh.y_sign == -1 && !sq) {
      return {false, "(-1)^s is not a square in F, so the factor Y+1 has no maximal isotropic space"};
    }
  }
  return {true, "every factor admits a maximal isotropic space"};
}

BigInt shape_count(const CodeParameters& params, const std::vector<FactorShape>& shapes) {
  const unsigned s = params.s();
  BigInt total = 1;
  for (std::size_t l = 0; l < shapes.size(); ++l) {
    const auto& sh = shapes[l];
    const std::uint64_t ql = [&] {
      std::uint64_t v = 1;
      for (unsigned i = 0; i < sh.degree; ++i) v *= params.q;
      return v;
    }();
    switch (sh.cls) {
      case SymmetryClass::euclidean:
        total *= count_isotropic(FormKind::euclidean, s, ql);
        break;
      case SymmetryClass::hermitian:
        total *= count_isotropic(FormKind::hermitian, s, ql);
        break;
      case SymmetryClass::nonpalindromic:
        if (l < sh.tau) total *= count_subspaces(params.r, BigInt(ql));
        break;
    }
  }
  return total;
}

}  // namespace

Existence exists_selfdual(const CodeParameters& params) {
  params.validate();
  auto F = params.F();
  if (params.cyclic()) {
    if (params.k % F->characteristic() == 0) {
      throw InseparableModulus("p divides k; use the inseparable enumeration");
    }
    if (params.r % 2) return {false, "r is odd"};
    if (params.k % 2 == 0) return {false, "k is even"};
    if (params.s() % 2 == 0) return {false, "s is even"};
    if (params.q % 4 != 3) return {false, "q = 1 mod 4"};
    return {true, "r even, k odd, s odd and q = 3 mod 4"};
  }
  Rng rng(0);
  auto shapes = factor_shapes(*F, params.central(*F), rng);
  return shape_existence(params, shapes);
}

BigInt count_selfdual(const CodeParameters& params) {
  if (!exists_selfdual(params).exists) return 0;
  auto F = params.F();
  Rng rng(0);
  return shape_count(params, factor_shapes(*F, params.central(*F), rng));
}

OrePoly normalize_generator(const QuotientAlgebra& E, const OrePoly& f) {
  OrePoly red = E.reduce(f);
  if (red.is_zero()) return E.modulus();
  return rgcd(red, E.modulus());
}

bool is_selforthogonal(const QuotientAlgebra& E, const OrePoly& f) {
  const OrePoly g = normalize_generator(E, f);
  return E.mul(g, E.star(g)).is_zero();
}

bool is_selfdual(const QuotientAlgebra& E, const OrePoly& f) {
  const OrePoly g = normalize_generator(E, f);
  return 2 * static_cast<std::size_t>(g.degree()) == E.length() && E.mul(g, E.star(g)).is_zero();
}

OrePoly dual_generator(const QuotientAlgebra& E, const OrePoly& f) {
  if (f.is_zero()) throw std::invalid_argument("zero generator");
  auto [g, rem] = right_divmod(E.modulus(), monic(f));
  if (!rem.is_zero()) throw std::invalid_argument("generator does not divide the modulus");
  return normalize_generator(E, E.star(E.reduce(g)));
}

std::optional<std::size_t> min_distance(const QuotientAlgebra& E, const OrePoly& f, std::uint64_t budget) {
  const auto& ring = E.ring();
  const GaloisField& K = ring->K();
  const std::size_t n = E.length();
  const OrePoly g = normalize_generator(E, f);
  const std::size_t dim = n - static_cast<std::size_t>(g.degree());
  if (dim == 0) return std::nullopt;
  BigInt total = boost::multiprecision::pow(BigInt(K.order()), static_cast<unsigned>(dim));
  if (total > budget) throw std::length_error("min_distance: budget exceeded");
  // rows X^i g
  std::vector<std::vector<Fe>> rows;
  OrePoly xi = OrePoly::one(ring);
  const OrePoly X = OrePoly::monomial(ring, K.one(), 1);
  for (std::size_t i = 0; i < dim; ++i) {
    auto c = (xi * g).coeffs();
    c.resize(n, K.zero());
    rows.push_back(std::move(c));
    xi = X * xi;
  }
  const std::uint64_t q = K.order();
  std::vector<std::uint64_t> digit(dim, 0);
  std::vector<Fe> cw(n, K.zero());
  std::size_t best = n;
  for (;;) {
    std::size_t j = 0;
    for (; j < dim; ++j) {
      const Fe before = K.element(digit[j]);
      digit[j] = (digit[j] + 1) % q;
      const Fe delta = K.sub(K.element(digit[j]), before);
      for (std::size_t t = 0; t < n; ++t) cw[t] = K.add(cw[t], K.mul(delta, rows[j][t]));
      if (digit[j] != 0) break;
    }
    if (j == dim) break;
    std::size_t w = 0;
    for (Fe a : cw) w += (a != K.zero());
    if (w < best) best = w;
  }
  return best;
}

SelfDualCodes::SelfDualCodes(const CodeParameters& params, std::uint64_t seed)
    : params_(params), D_([&] {
        params.validate();
        Rng rng(seed);
        auto F = params.F();
        return Decomposition(F, params.K(), params.central(*F), rng);
      }()) {
  forms_.resize(D_.size());
  if (params_.r % 2) exists_ = false;
  for (std::size_t l : D_.palindromic()) {
    forms_[l].emplace(D_.sesquilinear_form(l));
    if (exists_ && !witt_index_is_maximal(*forms_[l])) exists_ = false;
  }
}

BigInt SelfDualCodes::count() const {
  if (!exists_) return 0;
  std::vector<FactorShape> shapes;
  for (const auto& c : D_.components()) shapes.push_back(c.shape);
  return shape_count(params_, shapes);
}

OrePoly SelfDualCodes::random(Rng& rng) const {
  if (!exists_) throw NoSelfdualCodes("no selfdual codes for " + params_.describe());
  std::vector<Matrix> V(D_.size());
  for (std::size_t l : D_.palindromic()) V[l] = random_isotropic_maximal(*forms_[l], rng);
  for (auto [l, t] : D_.pairs()) V[l] = random_subspace(*D_.component(l).L, params_.r, rng);
  return D_.code_from_subspaces(V);
}

SelfDualCodes::Enumerator::Enumerator(const SelfDualCodes* owner) : owner_(owner) {
  const auto& D = owner_->D_;
  for (const auto& c : D.components()) {
    if (c.palindromic() || c.index < c.tau()) slots_.push_back(c.index);
  }
  iso_.resize(slots_.size());
  sub_.resize(slots_.size());
  cur_.resize(slots_.size());
  done_ = !owner_->exists_;
}

bool SelfDualCodes::Enumerator::restart(std::size_t i) {
  const auto& D = owner_->D_;
  const std::size_t l = slots_[i];
  if (D.component(l).palindromic()) {
    iso_[i].emplace(*owner_->forms_[l]);
  } else {
    sub_[i].emplace(D.component(l).L, owner_->params_.r);
  }
  return advance(i);
}

bool SelfDualCodes::Enumerator::advance(std::size_t i) {
  auto m = iso_[i] ? iso_[i]->next() : sub_[i]->next();
  if (!m) return false;
  cur_[i] = std::move(*m);
  return true;
}

std::optional<OrePoly> SelfDualCodes::Enumerator::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    for (std::size_t i = 0; i < slots_.size(); ++i) {
      if (!restart(i)) {
        done_ = true;
        return std::nullopt;
      }
    }
  } else {
    std::size_t i = slots_.size();
    for (;;) {
      if (i == 0) {
        done_ = true;
        return std::nullopt;
      }
      --i;
      if (advance(i)) break;
      restart(i);
    }
  }
  const auto& D = owner_->D_;
  std::vector<Matrix> V(D.size());
  for (std::size_t i = 0; i < slots_.size(); ++i) V[slots_[i]] = cur_[i];
  return D.code_from_subspaces(V);
}

}  // namespace skewdual
