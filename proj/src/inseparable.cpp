#include "skewdual/inseparable.hpp"

namespace skewdual {

bool is_pure_p_power(unsigned k, std::uint32_t p) {
  if (k < p) return false;
  while (k % p == 0) k /= p;
  return k == 1;
}

namespace {

Poly linear(const GaloisField& F, int y0) { return {F.neg(F.from_int(y0)), F.one()}; }

}  // namespace

TwistedFamily::TwistedFamily(FieldRef F, FieldRef K, int y0, std::uint64_t seed)
    : y0_(y0), D_([&] {
        if (y0 != 1 && y0 != -1) throw std::invalid_argument("y0 must be 1 or -1");
        if (K->degree() % (2 * F->degree())) throw std::invalid_argument("[K:F] must be even");
        Rng rng(seed);
        Poly P = linear(*F, y0);
        return Decomposition(F, K, P, rng);
      }()) {}

SesquiSpace TwistedFamily::form(const TwistSpec& tw) const {
  const GaloisField& K = D_.K();
  if (tw.xi == K.zero()) throw std::invalid_argument("twist must be nonzero");
  if (tw.t != 0 && tw.t != s()) throw std::invalid_argument("twist exponent must be 0 or s");
  const auto& ring = D_.ring();
  // X^t xi^-1 = theta^t(xi^-1) X^t
  const OrePoly w = OrePoly::monomial(ring, ring->theta(K.inv(tw.xi), tw.t), tw.t);
  const auto& c = D_.component(0);
  Matrix G = linalg::mul(*c.L, D_.pairing_gram(0), D_.evaluate(0, w));
  return SesquiSpace(c.L, 0, std::move(G));
}

std::vector<OrePoly> TwistedFamily::codes(const TwistSpec& tw) const {
  const SesquiSpace V = form(tw);
  std::vector<OrePoly> out;
  if (!witt_index_is_maximal(V)) return out;
  IsotropicEnumerator it(V);
  while (auto m = it.next()) out.push_back(D_.component_generator(0, *m));
  return out;
}

bool TwistedFamily::satisfies(const TwistSpec& tw, const OrePoly& g) const {
  const QuotientAlgebra& E = D_.algebra();
  const GaloisField& K = D_.K();
  const auto& ring = D_.ring();
  // X^-t = y0 X^(r-t) when t > 0
  Fe xi = tw.xi;
  if (tw.t > 0 && y0_ == -1) xi = K.neg(xi);
  const OrePoly u = OrePoly::monomial(ring, xi, tw.t ? D_.r() - tw.t : 0);
  return E.mul(E.mul(g, u), E.star(g)).is_zero();
}

Fe TwistedFamily::projective_rep(Fe xi) const {
  const auto& ring = D_.ring();
  auto c = ring->K_over_F().coords(xi);
  for (Fe a : c) {
    if (a != ring->F().zero()) return ring->K().mul(xi, ring->from_F(ring->F().inv(a)));
  }
  throw std::invalid_argument("zero has no projective representative");
}

InseparableEnumerator::InseparableEnumerator(FieldRef F, FieldRef K, unsigned k, bool dedup, int y0,
                                             std::uint64_t seed)
    : fam_(F, K, y0, seed), depth_(k), dedup_(dedup) {
  if (!is_pure_p_power(k, F->characteristic())) throw std::invalid_argument("k must be a positive power of p");
  Poly P{F->one()};
  const Poly lin = linear(*F, y0);
  for (unsigned i = 0; i < k; ++i) P = fpoly::mul(*F, P, lin);
  E_ = std::make_shared<QuotientAlgebra>(fam_.ring(), P);
  level_max_.assign(depth_, 0);
}

std::uint64_t InseparableEnumerator::largest_level_size(std::size_t level) const { return level_max_.at(level); }

InseparableEnumerator::List InseparableEnumerator::list_for(std::size_t level, const OrePoly& f) {
  const unsigned s = fam_.s();
  const TwistSpec tw{level % 2 ? s : 0u, fam_.projective_rep(f.coeff(0))};
  const auto key = std::make_pair(tw.t, fam_.ring()->K().encode(tw.xi));
  auto it = cache_.find(key);
  if (it == cache_.end()) {
    it = cache_.emplace(key, std::make_shared<const std::vector<OrePoly>>(fam_.codes(tw))).first;
  }
  level_max_[level] = std::max<std::uint64_t>(level_max_[level], it->second->size());
  return it->second;
}

std::optional<OrePoly> InseparableEnumerator::next() {
  if (!started_) {
    started_ = true;
    const OrePoly one = OrePoly::one(fam_.ring());
    stack_.push_back({0, one, list_for(0, one)});
  }
  const GaloisField& K = fam_.ring()->K();
  unsigned bits = 1;
  while ((std::uint64_t{1} << bits) < K.order()) ++bits;
  while (!stack_.empty()) {
    Frame& fr = stack_.back();
    if (fr.idx == fr.list->size()) {
      stack_.pop_back();
      continue;
    }
    OrePoly f = (*fr.list)[fr.idx++] * fr.f;
    const std::size_t level = fr.level + 1;
    if (level == depth_) {
      ++raw_;
      if (dedup_) {
        std::string key;
        std::uint64_t acc = 0;
        unsigned fill = 0;
        for (Fe a : f.coeffs()) {
          const std::uint64_t v = K.encode(a);
          for (unsigned b = 0; b < bits; ++b) {
            acc |= ((v >> b) & 1) << fill;
            if (++fill == 8) {
              key.push_back(static_cast<char>(acc));
              acc = 0;
              fill = 0;
            }
          }
        }
        if (fill) key.push_back(static_cast<char>(acc));
        if (!seen_.insert(std::move(key)).second) continue;
      }
      ++yielded_;
      return f;
    }
    List next_list = list_for(level, f);
    stack_.push_back({level, std::move(f), std::move(next_list), 0});
  }
  return std::nullopt;
}

}  // namespace skewdual
