#include <gtest/gtest.h>

#include <set>

#include "skewdual/field.hpp"

using namespace skewdual;

namespace {

// schoolbook arithmetic on coordinate vectors, independent of the
// table/poly machinery
std::vector<std::uint32_t> naive_mul(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                                     const std::vector<std::uint32_t>& mod, std::uint32_t p) {
  const std::size_t n = mod.size() - 1;
  std::vector<std::uint64_t> c(2 * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c[i + j] = (c[i + j] + std::uint64_t(a[i]) * b[j]) % p;
  for (std::size_t k = 2 * n; k-- > n;) {
    auto t = c[k];
    c[k] = 0;
    for (std::size_t j = 0; j < n; ++j) c[k - n + j] = (c[k - n + j] + (p - mod[j]) * t) % p;
  }
  return std::vector<std::uint32_t>(c.begin(), c.begin() + n);
}

std::vector<std::uint32_t> naive_add(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                                     std::uint32_t p) {
  std::vector<std::uint32_t> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = (a[i] + b[i]) % p;
  return c;
}

}  // namespace

TEST(Field, CanonicalModulusSmall) {
  EXPECT_EQ(GaloisField::canonical_modulus(3, 1), (std::vector<std::uint32_t>{0, 1}));
  // scan all monic quadratics over GF(3) in constant-first order; the
  // first one without a root is the expected modulus
  std::vector<std::uint32_t> first;
  for (std::uint32_t code = 0; code < 9 && first.empty(); ++code) {
    std::uint32_t c0 = code % 3, c1 = code / 3;
    bool root = false;
    for (std::uint32_t x = 0; x < 3; ++x) root |= (c0 + c1 * x + x * x) % 3 == 0;
    if (!root) first = {c0, c1, 1};
  }
  EXPECT_EQ(GaloisField::canonical_modulus(3, 2), first);
  EXPECT_EQ(first, (std::vector<std::uint32_t>{1, 0, 1}));
  auto K = GaloisField::extension(3, 6);
  EXPECT_EQ(K->order(), 729u);
  EXPECT_EQ(K->degree(), 6u);
}

TEST(Field, RejectsBadInput) {
  EXPECT_THROW(GaloisField::extension(2, 3), std::invalid_argument);
  EXPECT_THROW(GaloisField::extension(9, 1), std::invalid_argument);
  EXPECT_THROW(GaloisField::with_modulus(3, {2, 0, 1}), std::invalid_argument);  // x^2-1
  EXPECT_THROW(GaloisField::with_modulus(3, {1, 0, 2}), std::invalid_argument);  // not monic
}

TEST(Field, ArithmeticMatchesSchoolbook) {
  Rng rng(1);
  for (auto [p, n] : std::vector<std::pair<std::uint32_t, unsigned>>{{3, 1}, {3, 2}, {5, 2}, {7, 3}, {3, 6}, {3, 13}, {5, 9}}) {
    auto F = GaloisField::extension(p, n);
    EXPECT_EQ(F->table_mode(), F->order() <= GaloisField::kTableLimit);
    for (int it = 0; it < 300; ++it) {
      Fe a = F->random(rng), b = F->random(rng);
      auto ca = F->coords(a), cb = F->coords(b);
      EXPECT_EQ(F->coords(F->mul(a, b)), naive_mul(ca, cb, F->modulus(), p));
      EXPECT_EQ(F->coords(F->add(a, b)), naive_add(ca, cb, p));
      EXPECT_EQ(F->add(F->sub(a, b), b), a);
      if (a != F->zero()) EXPECT_EQ(F->mul(a, F->inv(a)), F->one());
      EXPECT_EQ(F->decode(F->encode(a)), a);
    }
  }
}

TEST(Field, Frobenius) {
  auto F9 = GaloisField::extension(3, 2);
  const Fe g = F9->gen();
  EXPECT_EQ(F9->mult_order(g), 8u);
  EXPECT_EQ(F9->frobenius(g, 1), F9->pow(g, 3u));
  Rng rng(2);
  for (auto [p, n] : std::vector<std::pair<std::uint32_t, unsigned>>{{3, 6}, {5, 4}, {3, 13}}) {
    auto F = GaloisField::extension(p, n);
    for (int it = 0; it < 50; ++it) {
      Fe a = F->random(rng), b = F->random(rng);
      EXPECT_EQ(F->frobenius(a, 1), F->pow(a, std::uint64_t(p)));
      EXPECT_EQ(F->frobenius(F->mul(a, b), 2), F->mul(F->frobenius(a, 2), F->frobenius(b, 2)));
      EXPECT_EQ(F->frobenius(a, static_cast<long long>(n)), a);
      EXPECT_EQ(F->frobenius(F->frobenius(a, -1), 1), a);
    }
    // exact order n on a generator of the extension
    Fe t = F->var();
    for (unsigned j = 1; j < n; ++j) EXPECT_NE(F->frobenius(t, j), t);
  }
}

TEST(Field, SquaresAgreeWithTable) {
  for (auto [p, n] : std::vector<std::pair<std::uint32_t, unsigned>>{
           {3, 1}, {5, 1}, {7, 1}, {3, 2}, {5, 2}, {3, 3}, {7, 2}, {3, 4}, {11, 2}, {5, 3}, {3, 5}, {7, 3}, {3, 6}}) {
    auto F = GaloisField::extension(p, n);
    std::set<std::uint64_t> sq;
    for (std::uint64_t i = 0; i < F->order(); ++i) sq.insert(F->encode(F->mul(F->element(i), F->element(i))));
    for (std::uint64_t i = 0; i < F->order(); ++i) {
      Fe a = F->element(i);
      const bool expect = sq.count(i) > 0;
      EXPECT_EQ(F->is_square(a), expect);
      auto s = F->sqrt(a);
      EXPECT_EQ(s.has_value(), expect);
      if (s) {
        EXPECT_EQ(F->mul(*s, *s), a);
        EXPECT_LE(F->encode(*s), F->encode(F->neg(*s)));
      }
    }
  }
  auto F3 = GaloisField::prime(3);
  EXPECT_FALSE(F3->is_square(F3->from_int(2)));
  auto F9 = GaloisField::extension(3, 2);
  EXPECT_TRUE(F9->is_square(F9->from_int(-1)));
}

TEST(Field, SqrtInLargeField) {
  auto F = GaloisField::extension(3, 13);
  Rng rng(3);
  for (int it = 0; it < 40; ++it) {
    Fe a = F->random(rng);
    Fe a2 = F->mul(a, a);
    auto s = F->sqrt(a2);
    ASSERT_TRUE(s);
    EXPECT_TRUE(*s == a || *s == F->neg(a));
  }
}

TEST(Field, DiscreteLog) {
  Rng rng(4);
  for (auto [p, n] : std::vector<std::pair<std::uint32_t, unsigned>>{{3, 6}, {3, 13}, {7, 8}}) {
    auto F = GaloisField::extension(p, n);
    for (int it = 0; it < 10; ++it) {
      Fe b = F->random_nonzero(rng);
      std::uint64_t e = rng.below(F->order());
      Fe t = F->pow(b, e);
      auto d = F->discrete_log(b, t);
      ASSERT_TRUE(d);
      EXPECT_EQ(F->pow(b, *d), t);
    }
  }
}
