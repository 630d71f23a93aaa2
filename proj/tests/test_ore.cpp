#include <gtest/gtest.h>

#include <map>

#include "skewdual/ore.hpp"

using namespace skewdual;

namespace {

struct Setup {
  OreRingRef ring;
  std::shared_ptr<QuotientAlgebra> E;
};

// E_k for |F| = p^e, [K:F] = r, modulus Y^k - 1
Setup make(std::uint32_t p, unsigned e, unsigned r, unsigned k) {
  auto F = GaloisField::extension(p, e);
  auto K = GaloisField::extension(p, e * r);
  auto ring = std::make_shared<const OreRing>(F, K);
  Poly P(k + 1, F->zero());
  P[0] = F->neg(F->one());
  P[k] = F->one();
  return {ring, std::make_shared<QuotientAlgebra>(ring, P)};
}

OrePoly random_poly(const OreRingRef& ring, std::size_t len, Rng& rng) {
  std::vector<Fe> c(len);
  for (auto& x : c) x = ring->K().random(rng);
  return OrePoly(ring, c);
}

// term-by-term product using X^i kappa = kappa^(q^i) X^i, with the power
// taken by plain exponentiation
OrePoly schoolbook(const OrePoly& a, const OrePoly& b) {
  const auto& ring = a.ring();
  const GaloisField& K = ring->K();
  const std::uint64_t q = ring->F().order();
  std::map<std::size_t, Fe> acc;
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    std::uint64_t qi = 1;
    for (std::size_t t = 0; t < i; ++t) qi *= q;
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
      Fe term = K.mul(a.coeffs()[i], K.pow(b.coeffs()[j], qi));
      acc[i + j] = K.add(acc.count(i + j) ? acc[i + j] : K.zero(), term);
    }
  }
  std::vector<Fe> c;
  for (auto& [d, v] : acc) {
    if (c.size() <= d) c.resize(d + 1, K.zero());
    c[d] = v;
  }
  return OrePoly(ring, c);
}

const std::vector<std::tuple<std::uint32_t, unsigned, unsigned, unsigned>> kParams = {
    {3, 1, 2, 1}, {3, 1, 2, 3}, {3, 1, 6, 1}, {5, 1, 2, 3}, {3, 2, 2, 3}, {3, 1, 4, 5}, {7, 1, 2, 1}, {3, 1, 6, 3}};

}  // namespace

TEST(Ore, DefiningLaw) {
  auto s = make(3, 1, 2, 1);
  const GaloisField& K = s.ring->K();
  Rng rng(1);
  for (int it = 0; it < 20; ++it) {
    Fe k = K.random(rng);
    OrePoly X = OrePoly::monomial(s.ring, K.one(), 1);
    OrePoly kap = OrePoly::monomial(s.ring, k, 0);
    EXPECT_EQ(X * kap, OrePoly::monomial(s.ring, K.pow(k, 3u), 1));
    OrePoly f = random_poly(s.ring, 4, rng);
    EXPECT_EQ(f * OrePoly::one(s.ring), f);
  }
  // (X + a)(X - a) in GF(9)[X; theta]
  Fe a = K.gen();
  OrePoly l(s.ring, {a, K.one()}), m(s.ring, {K.neg(a), K.one()});
  EXPECT_EQ(l * m, schoolbook(l, m));
  EXPECT_EQ((l * m).coeffs(), (std::vector<Fe>{K.neg(K.mul(a, a)), K.sub(a, K.pow(a, 3u)), K.one()}));
}

TEST(Ore, RingAxioms) {
  Rng rng(2);
  for (auto [p, e, r, k] : kParams) {
    auto s = make(p, e, r, k);
    for (int it = 0; it < 100; ++it) {
      OrePoly f = random_poly(s.ring, 1 + rng.below(6), rng);
      OrePoly g = random_poly(s.ring, 1 + rng.below(6), rng);
      OrePoly h = random_poly(s.ring, 1 + rng.below(6), rng);
      EXPECT_EQ(f * g, schoolbook(f, g));
      EXPECT_EQ((f * g) * h, f * (g * h));
      EXPECT_EQ(f * (g + h), f * g + f * h);
      EXPECT_EQ((g + h) * f, g * f + h * f);
      if (!f.is_zero() && !g.is_zero()) EXPECT_EQ((f * g).degree(), f.degree() + g.degree());
    }
  }
}

TEST(Ore, DivisionRoundTrip) {
  Rng rng(3);
  for (auto [p, e, r, k] : kParams) {
    auto s = make(p, e, r, k);
    for (int it = 0; it < 100; ++it) {
      OrePoly f = random_poly(s.ring, 1 + rng.below(6), rng);
      OrePoly g = random_poly(s.ring, 1 + rng.below(5), rng);
      if (g.is_zero()) continue;
      OrePoly rem = random_poly(s.ring, static_cast<std::size_t>(g.degree()), rng);
      auto [q1, r1] = right_divmod(f * g + rem, g);
      EXPECT_EQ(q1, f);
      EXPECT_EQ(r1, rem);
      auto [q2, r2] = left_divmod(g * f + rem, g);
      EXPECT_EQ(q2, f);
      EXPECT_EQ(r2, rem);
    }
    OrePoly g = random_poly(s.ring, 3, rng);
    if (!g.is_zero()) {
      auto [q, rr] = right_divmod(g, g);
      EXPECT_EQ(q, OrePoly::one(s.ring));
      EXPECT_TRUE(rr.is_zero());
    }
  }
}

TEST(Ore, GcdAndLcm) {
  Rng rng(4);
  for (auto [p, e, r, k] : kParams) {
    auto s = make(p, e, r, k);
    const OrePoly& M = s.E->modulus();
    for (int it = 0; it < 100; ++it) {
      OrePoly f = random_poly(s.ring, 1 + rng.below(5), rng);
      OrePoly g = random_poly(s.ring, 1 + rng.below(5), rng);
      if (f.is_zero() || g.is_zero()) continue;
      EXPECT_EQ(rgcd(f, OrePoly::zero(s.ring)), monic(f));
      OrePoly d = rgcd(f, g);
      EXPECT_TRUE(d.is_monic());
      EXPECT_TRUE(right_divides(d, f));
      EXPECT_TRUE(right_divides(d, g));
      OrePoly l = llcm(f, g);
      EXPECT_TRUE(l.is_monic());
      EXPECT_TRUE(right_divides(f, l));
      EXPECT_TRUE(right_divides(g, l));
      EXPECT_EQ(rgcd(l, f), monic(f));
      // degree formula for the lattice of left ideals
      EXPECT_EQ(l.degree() + d.degree(), f.degree() + g.degree());
      // a divisor of the modulus is its own rgcd with it
      OrePoly dv = rgcd(f, M);
      EXPECT_EQ(rgcd(dv, M), dv);
      EXPECT_TRUE(right_divides(dv, M));
    }
  }
}

TEST(Ore, LinearFactorsLcm) {
  // llcm of X - theta(v)/v over independent v has degree = count
  auto s = make(3, 1, 6, 1);
  const GaloisField& K = s.ring->K();
  Rng rng(5);
  std::vector<OrePoly> lin;
  for (int i = 0; i < 3; ++i) {
    Fe v = K.random_nonzero(rng);
    lin.push_back(OrePoly(s.ring, {K.neg(K.div(s.ring->theta(v), v)), K.one()}));
  }
  OrePoly l = llcm(lin);
  // degree is the F-dimension of the span of the three v, at most 3
  EXPECT_LE(l.degree(), 3);
  EXPECT_GE(l.degree(), 1);
  EXPECT_TRUE(right_divides(l, s.E->modulus()));
}

TEST(Ore, Adjunction) {
  Rng rng(6);
  for (auto [p, e, r, k] : kParams) {
    auto s = make(p, e, r, k);
    const std::size_t n = s.E->length();
    for (int it = 0; it < 100; ++it) {
      OrePoly f = random_poly(s.ring, n, rng), g = random_poly(s.ring, n, rng), h = random_poly(s.ring, n, rng);
      EXPECT_EQ(s.E->star(s.E->star(f)), f);
      EXPECT_EQ(s.E->star(s.E->mul(f, g)), s.E->mul(s.E->star(g), s.E->star(f)));
      OrePoly c = OrePoly::monomial(s.ring, s.ring->K().random(rng), 0);
      EXPECT_EQ(s.E->star(c), c);
      // <f, gh> = <f h*, g>
      EXPECT_EQ(s.E->pairing(f, s.E->mul(g, h)), s.E->pairing(s.E->mul(f, s.E->star(h)), g));
    }
    // T_rd(1) = r
    Poly t1 = s.E->reduced_trace(OrePoly::one(s.ring));
    EXPECT_EQ(t1, fpoly::constant(s.ring->F().from_int(r)));
  }
}

TEST(Ore, GeneralPalindromicModulus) {
  auto F = GaloisField::prime(3);
  auto K = GaloisField::extension(3, 6);
  auto ring = std::make_shared<const OreRing>(F, K);
  QuotientAlgebra E(ring, fpoly::from_ints(*F, {1, 0, 1}));  // Y^2 + 1
  Rng rng(7);
  for (int it = 0; it < 100; ++it) {
    OrePoly f = random_poly(ring, 12, rng), g = random_poly(ring, 12, rng);
    EXPECT_EQ(E.star(E.star(f)), f);
    EXPECT_EQ(E.star(E.mul(f, g)), E.mul(E.star(g), E.star(f)));
    // X * X^-1 = 1
    OrePoly X = OrePoly::monomial(ring, K->one(), 1);
    EXPECT_EQ(E.mul(X, E.star(X)), OrePoly::one(ring));
  }
}

TEST(Ore, Normalize) {
  Rng rng(8);
  auto s = make(3, 1, 2, 3);
  const OrePoly& M = s.E->modulus();
  EXPECT_EQ(s.E->normalize(OrePoly::monomial(s.ring, s.ring->K().gen(), 0)), OrePoly::one(s.ring));
  EXPECT_THROW(s.E->normalize(M), std::invalid_argument);
  for (int it = 0; it < 50; ++it) {
    OrePoly d = rgcd(random_poly(s.ring, 4, rng), M);
    OrePoly g = random_poly(s.ring, 3, rng);
    OrePoly f = M * g + d;
    EXPECT_EQ(s.E->normalize(f), monic(d));
    EXPECT_EQ(s.E->normalize(s.E->normalize(f)), s.E->normalize(f));
    // a unit multiple generates the same ideal
    OrePoly u = OrePoly::monomial(s.ring, s.ring->K().random_nonzero(rng), 0);
    EXPECT_EQ(s.E->normalize(u * d), monic(d));
  }
}

TEST(Ore, IdealDimension) {
  Rng rng(9);
  for (auto [p, e, r, k] : kParams) {
    auto s = make(p, e, r, k);
    const GaloisField& K = s.ring->K();
    const std::size_t n = s.E->length();
    for (int it = 0; it < 10; ++it) {
      OrePoly f = rgcd(random_poly(s.ring, 1 + rng.below(n), rng), s.E->modulus());
      Matrix span(0, n);
      OrePoly xi = OrePoly::one(s.ring);
      for (std::size_t i = 0; i < n; ++i) {
        auto c = s.E->mul(xi, f).coeffs();
        c.resize(n, Fe{0});
        span.append_row(c);
        xi = xi * OrePoly::monomial(s.ring, K.one(), 1);
      }
      EXPECT_EQ(linalg::rank(K, span), n - static_cast<std::size_t>(f.degree()));
    }
  }
}

TEST(Ore, OrthogonalityTransport) {
  // coefficient vectors orthogonal to E f for the coordinatewise form are
  // exactly the elements orthogonal to E f for the trace pairing
  Rng rng(10);
  for (auto [p, e, r, k] : kParams) {
    if (r * k > 6) continue;
    auto s = make(p, e, r, k);
    const GaloisField& K = s.ring->K();
    const GaloisField& F = s.ring->F();
    const std::size_t n = s.E->length();
    const std::size_t degP = k;
    std::vector<Fe> kb;  // F-basis of K
    for (std::size_t a = 0; a < r; ++a) kb.push_back(K.pow(K.var(), std::uint64_t(a)));
    for (int it = 0; it < 10; ++it) {
      OrePoly f = rgcd(random_poly(s.ring, 1 + rng.below(n), rng), s.E->modulus());
      // K-basis of lambda(I)
      Matrix span(0, n);
      std::vector<OrePoly> ibasis;
      for (std::size_t i = 0; i + f.degree() < n; ++i) {
        OrePoly xi = OrePoly::monomial(s.ring, K.one(), i);
        OrePoly b = s.E->mul(xi, f);
        ibasis.push_back(b);
        auto c = b.coeffs();
        c.resize(n, Fe{0});
        span.append_row(c);
      }
      Matrix perp = linalg::kernel(K, span);  // coordinatewise orthogonal
      for (std::size_t u = 0; u < perp.rows; ++u) {
        OrePoly g(s.ring, perp.row(u));
        for (const auto& b : ibasis)
          for (Fe kap : kb) EXPECT_TRUE(s.E->pairing(g, OrePoly::monomial(s.ring, kap, 0) * b).empty());
      }
      // F-dimension of the trace-orthogonal
      Matrix eqs(0, n * r);
      for (const auto& b : ibasis) {
        for (Fe kap : kb) {
          OrePoly bb = OrePoly::monomial(s.ring, kap, 0) * b;
          std::vector<std::vector<Fe>> cols;
          for (std::size_t i = 0; i < n; ++i) {
            for (Fe kk : kb) {
              Poly t = s.E->pairing(OrePoly::monomial(s.ring, kk, i), bb);
              t.resize(degP, F.zero());
              cols.push_back(t);
            }
          }
          for (std::size_t d = 0; d < degP; ++d) {
            std::vector<Fe> row;
            for (auto& c : cols) row.push_back(c[d]);
            eqs.append_row(row);
          }
        }
      }
      const std::size_t dim_perp_F = n * r - linalg::rank(F, eqs);
      EXPECT_EQ(dim_perp_F, perp.rows * r);
    }
  }
}

TEST(Ore, EvalSemilinear) {
  auto F = GaloisField::prime(3);
  auto K = GaloisField::extension(3, 4);
  auto L = GaloisField::extension(3, 2);
  EtaleAlgebra A(F, K, L, 1);
  const std::size_t r = A.rank();
  EXPECT_EQ(eval_semilinear(A, {A.one()}, A.one()), Matrix::identity(r));
  EXPECT_EQ(eval_semilinear(A, {A.zero(), A.one()}, A.one()), A.theta_matrix(1));
  Rng rng(11);
  AlgElem x = A.random(rng);
  while (!A.is_unit(x)) x = A.random(rng);
  // the r^2 operators a^j (x theta)^i are independent
  Matrix big(0, r * r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      std::vector<AlgElem> f(i + 1, A.zero());
      f[i] = A.basis(j);
      big.append_row(eval_semilinear(A, f, x).a);
    }
  }
  EXPECT_EQ(linalg::rank(*L, big), r * r);
  // evaluation is multiplicative: (fg)(x theta) = f(x theta) g(x theta)
  // checked on X * kappa = theta(kappa) X
  Fe kap = K->random_nonzero(rng);
  Matrix lhs = linalg::mul(*L, eval_semilinear(A, {A.zero(), A.one()}, x), eval_semilinear(A, {A.from_K(kap)}, x));
  Matrix rhs = eval_semilinear(A, {A.zero(), A.from_K(K->frobenius(kap, 1))}, x);
  EXPECT_EQ(lhs, rhs);
}
