#include <gtest/gtest.h>

#include <map>
#include <set>

#include "skewdual/codes.hpp"
#include "skewdual/oracle.hpp"

using namespace skewdual;

namespace {

CodeParameters cyc(std::uint64_t q, unsigned r, unsigned k) {
  CodeParameters p;
  p.q = q;
  p.r = r;
  p.k = k;
  return p;
}

// Y^j + sign
CodeParameters binom(std::uint64_t q, unsigned r, unsigned j, int sign) {
  CodeParameters p;
  p.q = q;
  p.r = r;
  std::vector<long long> c(j + 1, 0);
  c[0] = sign;
  c[j] = 1;
  p.modulus = c;
  return p;
}

std::vector<std::uint64_t> key(const GaloisField& K, const OrePoly& f) {
  std::vector<std::uint64_t> out;
  for (Fe a : f.coeffs()) out.push_back(K.encode(a));
  return out;
}

// every monic right divisor of the modulus
std::vector<OrePoly> all_divisors(const QuotientAlgebra& E) {
  const auto& ring = E.ring();
  const GaloisField& K = ring->K();
  std::vector<OrePoly> out;
  for (std::size_t d = 0; d <= E.length(); ++d) {
    std::vector<std::uint64_t> idx(d, 0);
    for (;;) {
      std::vector<Fe> c(d + 1);
      for (std::size_t i = 0; i < d; ++i) c[i] = K.element(idx[i]);
      c[d] = K.one();
      OrePoly g(ring, c);
      if (right_divides(g, E.modulus())) out.push_back(g);
      std::size_t t = 0;
      while (t < d && ++idx[t] == K.order()) idx[t++] = 0;
      if (t == d) break;
    }
  }
  return out;
}

}  // namespace

TEST(Codes, PrimePower) {
  EXPECT_EQ(prime_power(3), (std::pair<std::uint32_t, unsigned>{3, 1}));
  EXPECT_EQ(prime_power(243), (std::pair<std::uint32_t, unsigned>{3, 5}));
  EXPECT_EQ(prime_power(49), (std::pair<std::uint32_t, unsigned>{7, 2}));
  EXPECT_THROW(prime_power(12), std::invalid_argument);
  EXPECT_THROW(prime_power(8), std::invalid_argument);
  EXPECT_THROW(prime_power(1), std::invalid_argument);
  EXPECT_THROW(binom(3, 2, 3, 0).validate(), std::invalid_argument);
  EXPECT_THROW(cyc(3, 0, 1).validate(), std::invalid_argument);
  auto bad = cyc(3, 2, 1);
  bad.field_modulus = std::vector<std::uint32_t>{1, 0, 0, 1};
  EXPECT_THROW(bad.validate(), std::invalid_argument);
}

TEST(Codes, ExistenceExamples) {
  EXPECT_TRUE(exists_selfdual(cyc(3, 6, 1)).exists);
  EXPECT_FALSE(exists_selfdual(cyc(5, 6, 1)).exists);
  EXPECT_FALSE(exists_selfdual(cyc(3, 6, 2)).exists);
  EXPECT_FALSE(exists_selfdual(cyc(7, 6, 4)).exists);
  EXPECT_FALSE(exists_selfdual(cyc(3, 4, 1)).exists);
  EXPECT_FALSE(exists_selfdual(cyc(3, 3, 1)).exists);
  EXPECT_THROW(exists_selfdual(cyc(3, 6, 3)), InseparableModulus);
  EXPECT_THROW(count_selfdual(cyc(5, 2, 5)), InseparableModulus);
}

// the per-factor rule against the Witt test on the actual forms
TEST(Codes, ExistenceMatchesWittTest) {
  int agree = 0;
  for (std::uint64_t q : {3, 5, 7, 9}) {
    for (unsigned r : {2u, 4u}) {
      for (unsigned j = 1; j <= 6; ++j) {
        if (j % prime_power(q).first == 0) continue;
        for (int sign : {-1, 1}) {
          auto P = binom(q, r, j, sign);
          SCOPED_TRACE(P.describe());
          SelfDualCodes C(P, 5);
          EXPECT_EQ(exists_selfdual(P).exists, C.exists());
          EXPECT_EQ(count_selfdual(P), C.count());
          if (sign == -1) EXPECT_EQ(exists_selfdual(cyc(q, r, j)).exists, C.exists());
          ++agree;
        }
      }
    }
  }
  for (auto P : {cyc(3, 6, 1), cyc(7, 6, 1), cyc(3, 6, 5), binom(5, 6, 2, 1), binom(9, 6, 1, 1)}) {
    SCOPED_TRACE(P.describe());
    SelfDualCodes C(P);
    EXPECT_EQ(exists_selfdual(P).exists, C.exists());
  }
  EXPECT_GT(agree, 50);
}

TEST(Codes, Counts) {
  EXPECT_EQ(count_selfdual(cyc(3, 6, 1)), 80);
  EXPECT_EQ(count_selfdual(cyc(3, 2, 1)), 2);
  EXPECT_EQ(count_selfdual(cyc(3, 18, 1)), BigInt("469740602936729600"));
  EXPECT_EQ(count_selfdual(cyc(5, 6, 1)), 0);
  EXPECT_EQ(q_binomial(6, 3, 3), 33880);
  // Y-1 (2 spaces) times a Hermitian quartic over GF(81): 81^(1/2) + 1
  EXPECT_EQ(count_selfdual(cyc(3, 2, 5)), 20);
  // Y-1 over GF(7) times the pair {Y-2, Y-4}: 1 + 8 + 1 subspaces
  EXPECT_EQ(count_selfdual(cyc(7, 2, 3)), 20);
}

// |enumerate| = count, all distinct, all selfdual; random draws land in the set
TEST(Codes, EnumerateCountRandomAgree) {
  std::vector<CodeParameters> grid;
  for (std::uint64_t q : {3, 5, 7, 9}) {
    for (unsigned r : {2u, 4u, 6u}) {
      for (unsigned j = 1; j <= 7; ++j) {
        if (j % prime_power(q).first == 0) continue;
        for (int sign : {-1, 1}) grid.push_back(binom(q, r, j, sign));
      }
    }
  }
  int nonempty = 0;
  for (const auto& P : grid) {
    const BigInt n = count_selfdual(P);
    if (n > 10000) continue;
    SCOPED_TRACE(P.describe());
    SelfDualCodes C(P, 3);
    std::set<std::vector<std::uint64_t>> keys;
    auto it = C.enumerate();
    std::size_t total = 0;
    while (auto f = it.next()) {
      ++total;
      keys.insert(key(C.decomposition().K(), *f));
      ASSERT_TRUE(is_selfdual(C.algebra(), *f));
    }
    EXPECT_EQ(BigInt(total), n);
    EXPECT_EQ(keys.size(), total);
    if (total == 0) {
      Rng rng(1);
      EXPECT_THROW(C.random(rng), NoSelfdualCodes);
      continue;
    }
    ++nonempty;
    Rng rng(17);
    for (int i = 0; i < 20; ++i) EXPECT_TRUE(keys.count(key(C.decomposition().K(), C.random(rng))));
  }
  EXPECT_GT(nonempty, 10);
}

TEST(Codes, EnumerationDeterministic) {
  SelfDualCodes A(cyc(3, 6, 1), 4), B(cyc(3, 6, 1), 4);
  auto ia = A.enumerate(), ib = B.enumerate();
  for (;;) {
    auto a = ia.next(), b = ib.next();
    ASSERT_EQ(a.has_value(), b.has_value());
    if (!a) break;
    EXPECT_EQ(*a, *b);
  }
}

TEST(Codes, TwoCodesUniform) {
  SelfDualCodes C(cyc(3, 2, 1));
  std::map<std::vector<std::uint64_t>, int> freq;
  Rng rng(2024);
  for (int i = 0; i < 10000; ++i) freq[key(C.decomposition().K(), C.random(rng))]++;
  ASSERT_EQ(freq.size(), 2u);
  for (auto& [k, c] : freq) EXPECT_NEAR(c / 10000.0, 0.5, 0.02);
}

TEST(Codes, OracleEquivalence) {
  for (auto [P, expect] : std::vector<std::pair<CodeParameters, std::size_t>>{
           {cyc(3, 2, 1), 2}, {cyc(7, 2, 1), 2}, {cyc(5, 2, 1), 0}, {cyc(3, 2, 2), 0}, {binom(3, 2, 2, 1), 4}}) {
    SCOPED_TRACE(P.describe());
    SelfDualCodes C(P);
    auto rep = oracle::brute_codes(C.algebra());
    std::set<std::vector<std::uint64_t>> ours, theirs;
    const GaloisField& K = C.decomposition().K();
    auto it = C.enumerate();
    while (auto f = it.next()) {
      Matrix m = oracle::code_matrix(C.algebra(), *f);
      std::vector<std::uint64_t> k;
      for (Fe a : m.a) k.push_back(K.encode(a));
      ours.insert(k);
    }
    for (const auto& m : rep.selfdual) {
      std::vector<std::uint64_t> k;
      for (Fe a : m.a) k.push_back(K.encode(a));
      theirs.insert(k);
    }
    EXPECT_EQ(ours.size(), expect);
    EXPECT_EQ(ours, theirs);
    EXPECT_EQ(BigInt(rep.selfdual.size()), C.count());
  }
}

// product criterion vs the coordinatewise form on every ideal, plus duals
TEST(Codes, AllIdealsSmall) {
  for (auto P : {cyc(3, 2, 1), cyc(3, 2, 2), cyc(5, 2, 1), cyc(7, 2, 1), binom(3, 2, 2, 1)}) {
    SCOPED_TRACE(P.describe());
    SelfDualCodes C(P);
    const QuotientAlgebra& E = C.algebra();
    auto divs = all_divisors(E);
    auto rep = oracle::brute_codes(E);
    EXPECT_EQ(divs.size(), rep.ideals);
    std::size_t so = 0;
    for (const auto& g : divs) {
      const bool a = is_selforthogonal(E, g), b = is_selfdual(E, g);
      EXPECT_EQ(a, oracle::coordinatewise_selforthogonal(E, g));
      EXPECT_EQ(b, oracle::coordinatewise_selfdual(E, g));
      so += a;
      const OrePoly d = dual_generator(E, g);
      EXPECT_EQ(dual_generator(E, d), g);
      EXPECT_EQ(C.decomposition().dual_code(g), d);
      if (b) EXPECT_EQ(d, g);
      if (a && !b) {
        EXPECT_TRUE(right_divides(d, g));
        EXPECT_NE(d, g);
      }
    }
    EXPECT_EQ(so, rep.selforthogonal);
  }
}

TEST(Codes, MinDistance) {
  SelfDualCodes C(cyc(3, 2, 1));
  const QuotientAlgebra& E = C.algebra();
  EXPECT_EQ(min_distance(E, OrePoly::one(E.ring())), 1u);
  EXPECT_FALSE(min_distance(E, E.modulus()).has_value());
  auto it = C.enumerate();
  while (auto f = it.next()) EXPECT_EQ(min_distance(E, *f), oracle::min_weight(E, *f));
  SelfDualCodes D(cyc(7, 2, 3));
  auto jt = D.enumerate();
  int n = 0;
  while (auto f = jt.next()) {
    if (++n > 5) break;
    EXPECT_EQ(min_distance(D.algebra(), *f), oracle::min_weight(D.algebra(), *f, 1'000'000'000));
  }
  SelfDualCodes big(cyc(3, 6, 1));
  auto kt = big.enumerate();
  EXPECT_THROW(min_distance(big.algebra(), *kt.next(), 1000), std::length_error);
}
