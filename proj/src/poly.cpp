#include "skewdual/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace skewdual::fpoly {

void trim(Poly& a) {
  while (!a.empty() && a.back() == Fe{0}) a.pop_back();
}

int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

Poly constant(Fe c) {
  if (c == Fe{0}) return {};
  return {c};
}

Poly x_power(const GaloisField& F, std::size_t n) {
  Poly p(n + 1, F.zero());
  p[n] = F.one();
  return p;
}

Poly from_ints(const GaloisField& F, const std::vector<long long>& c) {
  Poly p;
  for (long long v : c) p.push_back(F.from_int(v));
  trim(p);
  return p;
}

Poly add(const GaloisField& F, const Poly& a, const Poly& b) {
  Poly c(std::max(a.size(), b.size()), F.zero());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = F.add(c[i], b[i]);
  trim(c);
  return c;
}

Poly sub(const GaloisField& F, const Poly& a, const Poly& b) {
  Poly c(std::max(a.size(), b.size()), F.zero());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = F.sub(c[i], b[i]);
  trim(c);
  return c;
}

Poly scale(const GaloisField& F, const Poly& a, Fe c) {
  if (c == Fe{0}) return {};
  Poly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.mul(a[i], c);
  return r;
}

Poly mul(const GaloisField& F, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, F.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == Fe{0}) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = F.add(c[i + j], F.mul(a[i], b[j]));
  }
  trim(c);
  return c;
}

std::pair<Poly, Poly> divmod(const GaloisField& F, const Poly& a, const Poly& b) {
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  Poly r = a;
  trim(r);
  if (r.size() < b.size()) return {Poly{}, r};
  Poly q(r.size() - b.size() + 1, F.zero());
  const Fe il = F.inv(b.back());
  while (r.size() >= b.size()) {
    const std::size_t sh = r.size() - b.size();
    const Fe c = F.mul(r.back(), il);
    q[sh] = c;
    for (std::size_t i = 0; i < b.size(); ++i) r[sh + i] = F.sub(r[sh + i], F.mul(c, b[i]));
    trim(r);
  }
  trim(q);
  return {q, r};
}

Poly rem(const GaloisField& F, const Poly& a, const Poly& b) { return divmod(F, a, b).second; }

Poly monic(const GaloisField& F, const Poly& a) {
  if (a.empty()) return a;
  return scale(F, a, F.inv(a.back()));
}

Poly gcd(const GaloisField& F, Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = rem(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(F, a);
}

std::optional<Poly> inverse_mod(const GaloisField& F, const Poly& a, const Poly& m) {
  Poly r0 = m, r1 = rem(F, a, m);
  Poly s0, s1{F.one()};
  while (!r1.empty()) {
    auto [q, r] = divmod(F, r0, r1);
    Poly s2 = sub(F, s0, mul(F, q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.size() != 1) return std::nullopt;
  return rem(F, scale(F, s0, F.inv(r0[0])), m);
}

Poly mulmod(const GaloisField& F, const Poly& a, const Poly& b, const Poly& m) {
  return rem(F, mul(F, a, b), m);
}

Poly powmod(const GaloisField& F, Poly base, const BigInt& e, const Poly& m) {
  Poly r = rem(F, Poly{F.one()}, m);
  base = rem(F, base, m);
  const std::size_t bits = e == 0 ? 0 : boost::multiprecision::msb(e) + 1;
  for (std::size_t i = bits; i-- > 0;) {
    r = mulmod(F, r, r, m);
    if (boost::multiprecision::bit_test(e, static_cast<unsigned>(i))) r = mulmod(F, r, base, m);
  }
  return r;
}

Poly derivative(const GaloisField& F, const Poly& a) {
  if (a.size() <= 1) return {};
  Poly d(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) d[i - 1] = F.mul(a[i], F.from_int(static_cast<long long>(i)));
  trim(d);
  return d;
}

Fe eval(const GaloisField& F, const Poly& a, Fe x) {
  Fe r = F.zero();
  for (std::size_t i = a.size(); i-- > 0;) r = F.add(F.mul(r, x), a[i]);
  return r;
}

Poly reciprocal(const Poly& a) {
  Poly r(a.rbegin(), a.rend());
  trim(r);
  return r;
}

bool is_squarefree(const GaloisField& F, const Poly& a) {
  Poly d = derivative(F, a);
  if (d.empty()) return a.size() <= 1;
  return gcd(F, a, d).size() == 1;
}

namespace {

// split a product of distinct degree-d monic irreducibles
void equal_degree(const GaloisField& F, const Poly& f, int d, Rng& rng, std::vector<Poly>& out) {
  const int n = degree(f);
  if (n == d) {
    out.push_back(f);
    return;
  }
  BigInt qd = 1;
  for (int i = 0; i < d; ++i) qd *= F.order();
  const BigInt e = (qd - 1) / 2;
  for (;;) {
    Poly a(n, F.zero());
    for (auto& c : a) c = F.random(rng);
    trim(a);
    if (a.size() <= 1) continue;
    Poly g = gcd(F, a, f);
    if (g.size() > 1 && g.size() < f.size()) {
      equal_degree(F, g, d, rng, out);
      equal_degree(F, divmod(F, f, g).first, d, rng, out);
      return;
    }
    Poly b = powmod(F, a, e, f);
    b = sub(F, b, Poly{F.one()});
    g = gcd(F, b, f);
    if (g.size() > 1 && g.size() < f.size()) {
      equal_degree(F, g, d, rng, out);
      equal_degree(F, divmod(F, f, g).first, d, rng, out);
      return;
    }
  }
}

}  // namespace

bool canonical_less(const GaloisField& F, const Poly& a, const Poly& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto ea = F.encode(a[i]), eb = F.encode(b[i]);
    if (ea != eb) return ea < eb;
  }
  return false;
}

std::vector<Poly> factor_squarefree(const GaloisField& F, const Poly& f0, Rng& rng) {
  Poly f = monic(F, f0);
  if (f.empty()) throw std::invalid_argument("cannot factor zero");
  if (!is_squarefree(F, f)) throw std::invalid_argument("polynomial is not squarefree");
  std::vector<Poly> out;
  Poly x{F.zero(), F.one()};
  Poly h = rem(F, x, f);
  int d = 0;
  while (degree(f) > 0) {
    ++d;
    if (2 * d > degree(f)) {
      out.push_back(f);
      break;
    }
    h = powmod(F, h, BigInt(F.order()), f);
    Poly g = gcd(F, sub(F, h, x), f);
    if (g.size() > 1) {
      equal_degree(F, g, d, rng, out);
      f = divmod(F, f, g).first;
      h = rem(F, h, f);
    }
  }
  std::sort(out.begin(), out.end(), [&](const Poly& a, const Poly& b) { return canonical_less(F, a, b); });
  return out;
}

std::vector<Fe> roots(const GaloisField& F, const Poly& f0, Rng& rng) {
  Poly f = monic(F, f0);
  if (f.empty()) throw std::invalid_argument("roots of zero polynomial");
  // restrict to the split squarefree part gcd(f, x^Q - x)
  Poly x{F.zero(), F.one()};
  Poly xq = powmod(F, x, BigInt(F.order()), f);
  Poly g = gcd(F, sub(F, xq, x), f);
  std::vector<Fe> out;
  if (degree(g) <= 0) return out;
  std::vector<Poly> lin;
  equal_degree(F, g, 1, rng, lin);
  for (const auto& l : lin) out.push_back(F.neg(l[0]));
  std::sort(out.begin(), out.end(), [&](Fe a, Fe b) { return F.encode(a) < F.encode(b); });
  return out;
}

bool is_irreducible(const GaloisField& F, const Poly& f0) {
  Poly f = monic(F, f0);
  const int n = degree(f);
  if (n <= 0) return false;
  Poly x{F.zero(), F.one()};
  Poly h = rem(F, x, f);
  for (int i = 1; 2 * i <= n; ++i) {
    h = powmod(F, h, BigInt(F.order()), f);
    if (gcd(F, sub(F, h, x), f).size() > 1) return false;
  }
  return true;
}

}  // namespace skewdual::fpoly
