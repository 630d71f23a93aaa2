#include "skewdual/field.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <unordered_map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace skewdual {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod64(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod64(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod64(r, a, m);
    a = mulmod64(a, a, m);
    e >>= 1;
  }
  return r;
}

bool miller_rabin(u64 n) {
  if (n < 2) return false;
  for (u64 sp : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % sp == 0) return n == sp;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    u64 x = powmod64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool comp = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod64(x, x, n);
      if (x == n - 1) {
        comp = false;
        break;
      }
    }
    if (comp) return false;
  }
  return true;
}

u64 rho(u64 n) {
  if (n % 2 == 0) return 2;
  for (u64 c = 1;; ++c) {
    u64 x = 2, y = 2, d = 1;
    auto f = [&](u64 v) { return (mulmod64(v, v, n) + c) % n; };
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      d = std::gcd(x > y ? x - y : y - x, n);
    }
    if (d != n) return d;
  }
}

void factor_rec(u64 n, std::vector<u64>& out) {
  if (n == 1) return;
  if (miller_rabin(n)) {
    out.push_back(n);
    return;
  }
  for (u64 sp = 2; sp < 1000; ++sp) {
    if (n % sp == 0) {
      out.push_back(sp);
      while (n % sp == 0) n /= sp;
      factor_rec(n, out);
      return;
    }
  }
  u64 d = rho(n);
  factor_rec(d, out);
  factor_rec(n / d, out);
}

// dense polynomials over GF(p), constant term first, used only while
// searching for a modulus
using ModP = std::vector<u64>;

void trim(ModP& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ModP rem(ModP a, const ModP& b, u64 p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const u64 inv_lead = powmod64(b.back(), p - 2, p);
  while (a.size() > db) {
    const u64 c = mulmod64(a.back(), inv_lead, p);
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = (a[shift + i] + p - mulmod64(c, b[i], p)) % p;
    }
    trim(a);
  }
  return a;
}

ModP mulmod_poly(const ModP& a, const ModP& b, const ModP& f, u64 p) {
  if (a.empty() || b.empty()) return {};
  ModP c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + mulmod64(a[i], b[j], p)) % p;
  }
  return rem(std::move(c), f, p);
}

ModP powmod_poly(ModP a, u64 e, const ModP& f, u64 p) {
  ModP r{1};
  a = rem(std::move(a), f, p);
  while (e) {
    if (e & 1) r = mulmod_poly(r, a, f, p);
    a = mulmod_poly(a, a, f, p);
    e >>= 1;
  }
  return r;
}

ModP gcd_poly(ModP a, ModP b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    ModP r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

bool irreducible_mod_p(const ModP& f, u64 p) {
  const std::size_t n = f.size() - 1;
  if (n <= 1) return n == 1;
  ModP h{0, 1};
  for (std::size_t i = 1; i <= n / 2; ++i) {
    h = powmod_poly(h, p, f, p);
    ModP t = h;
    if (t.size() < 2) t.resize(2, 0);
    t[1] = (t[1] + p - 1) % p;
    trim(t);
    if (t.empty()) return false;
    if (gcd_poly(f, t, p).size() > 1) return false;
  }
  return true;
}

}  // namespace

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<u64> out;
  factor_rec(n, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool GaloisField::is_prime(std::uint64_t n) { return miller_rabin(n); }

std::vector<std::uint32_t> GaloisField::canonical_modulus(std::uint32_t p, unsigned n) {
  if (p == 2) throw std::invalid_argument("characteristic 2 is not supported");
  if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
  if (n == 0) throw std::invalid_argument("extension degree must be positive");
  if (n == 1) return {0, 1};
  // base-p counter over the non-leading coefficients
  std::vector<u64> c(n, 0);
  for (;;) {
    std::size_t i = 0;
    while (i < n) {
      if (++c[i] < p) break;
      c[i] = 0;
      ++i;
    }
    if (i == n) throw std::logic_error("no irreducible polynomial found");
    if (c[0] == 0) continue;
    ModP f(c.begin(), c.end());
    f.push_back(1);
    if (irreducible_mod_p(f, p)) return std::vector<std::uint32_t>(f.begin(), f.end());
  }
}

FieldRef GaloisField::prime(std::uint32_t p) { return with_modulus(p, {0, 1}); }

FieldRef GaloisField::extension(std::uint32_t p, unsigned n) {
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, unsigned>, std::vector<std::uint32_t>> moduli;
  std::vector<std::uint32_t> m;
  {
    std::lock_guard lock(mu);
    auto it = moduli.find({p, n});
    if (it != moduli.end()) m = it->second;
  }
  if (m.empty()) {
    m = canonical_modulus(p, n);
    std::lock_guard lock(mu);
    moduli.emplace(std::make_pair(p, n), m);
  }
  return with_modulus(p, std::move(m));
}

// Fields are immutable, so one instance per modulus is shared process-wide.
FieldRef GaloisField::with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus) {
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, std::vector<std::uint32_t>>, FieldRef> cache;
  auto key = std::make_pair(p, modulus);
  {
    std::lock_guard lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  // built outside the lock; a concurrent duplicate is discarded
  auto F = std::make_shared<const GaloisField>(p, std::move(modulus));
  std::lock_guard lock(mu);
  return cache.emplace(std::move(key), F).first->second;
}

GaloisField::GaloisField(std::uint32_t p, std::vector<std::uint32_t> modulus) : p_(p), mod_(std::move(modulus)) {
  if (p == 2) throw std::invalid_argument("characteristic 2 is not supported");
  if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
  while (!mod_.empty() && mod_.back() == 0) mod_.pop_back();
  if (mod_.size() < 2) throw std::invalid_argument("modulus must have positive degree");
  for (auto c : mod_) {
    if (c >= p) throw std::invalid_argument("modulus coefficient out of range");
  }
  if (mod_.back() != 1) throw std::invalid_argument("modulus must be monic");
  n_ = static_cast<unsigned>(mod_.size() - 1);
  if (!irreducible_mod_p(ModP(mod_.begin(), mod_.end()), p)) {
    throw std::invalid_argument("modulus is not irreducible");
  }
  u128 q = 1;
  for (unsigned i = 0; i < n_; ++i) {
    q *= p;
    if (q > (u128{1} << 62)) throw std::invalid_argument("field too large");
  }
  q_ = static_cast<u64>(q);
  order_factors_ = prime_factors(q_ - 1);
  table_ = q_ <= kTableLimit;
  const Fe g = find_generator();
  if (table_) {
    gen_ = g;
    build_tables();
    gen_ = Fe{2};
  } else {
    gen_ = g;
    build_frobenius();
  }
}

void GaloisField::unpack(std::uint64_t code, std::uint32_t* out) const {
  for (unsigned i = 0; i < n_; ++i) {
    out[i] = static_cast<std::uint32_t>(code % p_);
    code /= p_;
  }
}

std::uint64_t GaloisField::pack(const std::uint32_t* in) const {
  u64 code = 0;
  for (unsigned i = n_; i-- > 0;) code = code * p_ + in[i];
  return code;
}

Fe GaloisField::poly_add(Fe a, Fe b) const {
  u64 x = a.v, y = b.v, res = 0, mult = 1;
  while (x || y) {
    u64 s = x % p_ + y % p_;
    if (s >= p_) s -= p_;
    res += s * mult;
    mult *= p_;
    x /= p_;
    y /= p_;
  }
  return Fe{res};
}

Fe GaloisField::poly_mul(Fe a, Fe b) const {
  if (a.v == 0 || b.v == 0) return Fe{0};
  std::uint32_t x[64], y[64];
  u64 c[128] = {};
  unpack(a.v, x);
  unpack(b.v, y);
  if (p_ < (1u << 16)) {
    // sums of at most 2n products below p^2 fit in 64 bits
    for (unsigned i = 0; i < n_; ++i) {
      if (!x[i]) continue;
      for (unsigned j = 0; j < n_; ++j) c[i + j] += static_cast<u64>(x[i]) * y[j];
    }
    for (unsigned i = 2 * n_ - 1; i-- > n_;) {
      const u64 t = c[i] % p_;
      if (!t) continue;
      for (unsigned j = 0; j < n_; ++j) c[i - n_ + j] += (p_ - mod_[j]) * t;
    }
  } else {
    for (unsigned i = 0; i < n_; ++i) {
      if (!x[i]) continue;
      for (unsigned j = 0; j < n_; ++j) c[i + j] = (c[i + j] + static_cast<u64>(x[i]) * y[j] % p_) % p_;
    }
    for (unsigned i = 2 * n_ - 1; i-- > n_;) {
      const u64 t = c[i];
      if (!t) continue;
      for (unsigned j = 0; j < n_; ++j) c[i - n_ + j] = (c[i - n_ + j] + (p_ - mod_[j]) * t % p_) % p_;
    }
  }
  std::uint32_t z[64];
  for (unsigned i = 0; i < n_; ++i) z[i] = static_cast<std::uint32_t>(c[i] % p_);
  return Fe{pack(z)};
}

Fe GaloisField::poly_pow(Fe a, const BigInt& e) const {
  Fe r{1};
  const std::size_t bits = e == 0 ? 0 : boost::multiprecision::msb(e) + 1;
  for (std::size_t i = bits; i-- > 0;) {
    r = poly_mul(r, r);
    if (boost::multiprecision::bit_test(e, static_cast<unsigned>(i))) r = poly_mul(r, a);
  }
  return r;
}

Fe GaloisField::find_generator() const {
  if (q_ == 3) return Fe{2};
  for (u64 c = 2; c < q_; ++c) {
    bool ok = true;
    for (u64 f : order_factors_) {
      if (poly_pow(Fe{c}, BigInt((q_ - 1) / f)) == Fe{1}) {
        ok = false;
        break;
      }
    }
    if (ok) return Fe{c};
  }
  throw std::logic_error("no multiplicative generator");
}

void GaloisField::build_tables() {
  const u64 q1 = q_ - 1;
  enc_of_.assign(q_, 0);
  rep_of_.assign(q_, 0);
  // multiplication by the generator on coordinates; column k is t^k * gen
  std::vector<u64> M(static_cast<std::size_t>(n_) * n_);
  std::uint32_t buf[64];
  u64 tk = 1;
  for (unsigned k = 0; k < n_; ++k) {
    unpack(poly_mul(Fe{tk}, gen_).v, buf);
    for (unsigned i = 0; i < n_; ++i) M[i * n_ + k] = buf[i];
    if (k + 1 < n_) tk *= p_;
  }
  std::vector<u64> d(n_, 0), nd(n_);
  d[0] = 1;
  u64 cur = 1;
  for (u64 i = 0; i < q1; ++i) {
    enc_of_[i + 1] = static_cast<std::uint32_t>(cur);
    rep_of_[cur] = static_cast<std::uint32_t>(i + 1);
    cur = 0;
    for (unsigned r = n_; r-- > 0;) {
      u64 acc = 0;
      for (unsigned k = 0; k < n_; ++k) acc += M[r * n_ + k] * d[k];
      nd[r] = acc % p_;
      cur = cur * p_ + nd[r];
    }
    d.swap(nd);
  }
  zech_.assign(q1, 0);
  for (u64 d = 0; d < q1; ++d) {
    const u64 e = enc_of_[d + 1];
    const u64 c0 = e % p_;
    const u64 e2 = e - c0 + (c0 + 1) % p_;
    zech_[d] = rep_of_[e2];
  }
  pj_mod_.assign(n_, 0);
  u64 pj = 1 % q1;
  for (unsigned j = 0; j < n_; ++j) {
    pj_mod_[j] = pj;
    pj = mulmod64(pj, p_, q1);
  }
}

void GaloisField::build_frobenius() {
  frob_.assign(n_, std::vector<std::uint32_t>(static_cast<std::size_t>(n_) * n_, 0));
  for (unsigned i = 0; i < n_; ++i) frob_[0][i * n_ + i] = 1;
  if (n_ == 1) return;
  // column k of frob_[1] holds the coordinates of (t^k)^p
  std::uint32_t buf[64];
  u64 tk = 1;
  const u64 t = p_;
  for (unsigned k = 0; k < n_; ++k) {
    unpack(poly_pow(Fe{tk}, BigInt(p_)).v, buf);
    for (unsigned i = 0; i < n_; ++i) frob_[1][i * n_ + k] = buf[i];
    tk = poly_mul(Fe{tk}, Fe{t}).v;
  }
  for (unsigned j = 2; j < n_; ++j) {
    for (unsigned i = 0; i < n_; ++i) {
      for (unsigned k = 0; k < n_; ++k) {
        u64 s = 0;
        for (unsigned m = 0; m < n_; ++m) {
          s = (s + static_cast<u64>(frob_[1][i * n_ + m]) * frob_[j - 1][m * n_ + k]) % p_;
        }
        frob_[j][i * n_ + k] = static_cast<std::uint32_t>(s);
      }
    }
  }
}

Fe GaloisField::add(Fe a, Fe b) const {
  if (!table_) return poly_add(a, b);
  if (a.v == 0) return b;
  if (b.v == 0) return a;
  const u64 q1 = q_ - 1;
  const u64 la = a.v - 1, lb = b.v - 1;
  const u64 d = lb >= la ? lb - la : lb + q1 - la;
  const u64 z = zech_[d];
  if (z == 0) return Fe{0};
  u64 r = la + z - 1;
  if (r >= q1) r -= q1;
  return Fe{r + 1};
}

Fe GaloisField::neg(Fe a) const {
  if (a.v == 0) return a;
  if (table_) {
    const u64 q1 = q_ - 1;
    u64 r = a.v - 1 + q1 / 2;
    if (r >= q1) r -= q1;
    return Fe{r + 1};
  }
  std::uint32_t x[64];
  unpack(a.v, x);
  for (unsigned i = 0; i < n_; ++i) x[i] = x[i] ? p_ - x[i] : 0;
  return Fe{pack(x)};
}

Fe GaloisField::mul(Fe a, Fe b) const {
  if (!table_) return poly_mul(a, b);
  if (a.v == 0 || b.v == 0) return Fe{0};
  const u64 q1 = q_ - 1;
  u64 s = a.v - 1 + b.v - 1;
  if (s >= q1) s -= q1;
  return Fe{s + 1};
}

Fe GaloisField::inv(Fe a) const {
  if (a.v == 0) throw std::domain_error("inverse of zero");
  if (!table_) return poly_pow(a, BigInt(q_ - 2));
  const u64 q1 = q_ - 1;
  const u64 l = a.v - 1;
  return Fe{(l == 0 ? 0 : q1 - l) + 1};
}

Fe GaloisField::pow(Fe a, std::uint64_t e) const { return pow(a, BigInt(e)); }

Fe GaloisField::pow(Fe a, const BigInt& e) const {
  if (e < 0) throw std::invalid_argument("negative exponent");
  if (e == 0) return Fe{1};
  if (a.v == 0) return Fe{0};
  if (!table_) return poly_pow(a, e % (q_ - 1) == 0 ? BigInt(q_ - 1) : BigInt(e % (q_ - 1)));
  const u64 q1 = q_ - 1;
  const u64 em = static_cast<u64>(e % q1);
  return Fe{mulmod64(a.v - 1, em, q1) + 1};
}

Fe GaloisField::pow_signed(Fe a, long long e) const {
  if (e >= 0) return pow(a, static_cast<u64>(e));
  return inv(pow(a, static_cast<u64>(-e)));
}

Fe GaloisField::frobenius(Fe a, long long j) const {
  long long jj = j % static_cast<long long>(n_);
  if (jj < 0) jj += n_;
  if (jj == 0 || a.v <= 1) return a;
  if (table_) {
    const u64 q1 = q_ - 1;
    return Fe{mulmod64(a.v - 1, pj_mod_[jj], q1) + 1};
  }
  std::uint32_t x[64], y[64];
  unpack(a.v, x);
  const auto& m = frob_[jj];
  for (unsigned i = 0; i < n_; ++i) {
    u64 s = 0;
    for (unsigned k = 0; k < n_; ++k) s += static_cast<u64>(m[i * n_ + k]) * x[k] % p_;
    y[i] = static_cast<std::uint32_t>(s % p_);
  }
  return Fe{pack(y)};
}

Fe GaloisField::from_int(long long c) const {
  long long r = c % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return decode(static_cast<u64>(r));
}

Fe GaloisField::from_coords(const std::vector<std::uint32_t>& c) const {
  if (c.size() > n_) throw std::invalid_argument("too many coordinates");
  std::uint32_t x[64] = {};
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] >= p_) throw std::invalid_argument("coordinate out of range");
    x[i] = c[i];
  }
  return decode(pack(x));
}

std::vector<std::uint32_t> GaloisField::coords(Fe a) const {
  std::vector<std::uint32_t> out(n_);
  unpack(encode(a), out.data());
  return out;
}

std::uint64_t GaloisField::encode(Fe a) const { return table_ ? enc_of_[a.v] : a.v; }

Fe GaloisField::decode(std::uint64_t code) const {
  if (code >= q_) throw std::out_of_range("element encoding out of range");
  return table_ ? Fe{rep_of_[code]} : Fe{code};
}

Fe GaloisField::var() const {
  if (n_ >= 2) return decode(p_);
  return from_int(-static_cast<long long>(mod_[0]));
}

bool GaloisField::is_square(Fe a) const {
  if (a.v == 0) return true;
  if (table_) return (a.v - 1) % 2 == 0;
  return pow(a, (q_ - 1) / 2) == Fe{1};
}

std::optional<Fe> GaloisField::sqrt(Fe a) const {
  if (a.v == 0) return a;
  if (!is_square(a)) return std::nullopt;
  Fe r;
  if (table_) {
    r = Fe{(a.v - 1) / 2 + 1};
  } else {
    // Tonelli-Shanks
    u64 qo = q_ - 1;
    unsigned s = 0;
    while (qo % 2 == 0) {
      qo /= 2;
      ++s;
    }
    Fe z{0};
    for (u64 c = 2; c < q_; ++c) {
      if (!is_square(Fe{c})) {
        z = Fe{c};
        break;
      }
    }
    unsigned m = s;
    Fe c = pow(z, qo);
    Fe t = pow(a, qo);
    r = pow(a, (qo + 1) / 2);
    while (t != Fe{1}) {
      unsigned i = 0;
      Fe tt = t;
      while (tt != Fe{1}) {
        tt = mul(tt, tt);
        ++i;
      }
      Fe b = c;
      for (unsigned j = 0; j + i + 1 < m; ++j) b = mul(b, b);
      m = i;
      c = mul(b, b);
      t = mul(t, c);
      r = mul(r, b);
    }
  }
  const Fe other = neg(r);
  return encode(other) < encode(r) ? other : r;
}

std::uint64_t GaloisField::mult_order(Fe a) const {
  if (a.v == 0) throw std::domain_error("order of zero");
  u64 ord = q_ - 1;
  for (u64 f : order_factors_) {
    while (ord % f == 0 && pow(a, ord / f) == Fe{1}) ord /= f;
  }
  return ord;
}

std::uint64_t GaloisField::log(Fe a) const {
  if (!table_) throw std::logic_error("discrete log needs a table field");
  if (a.v == 0) throw std::domain_error("log of zero");
  return a.v - 1;
}

namespace {

u64 inv_mod(u64 a, u64 m) {
  // m > 1, gcd(a, m) = 1
  __int128 t = 0, nt = 1, r = m, nr = a % m;
  while (nr) {
    __int128 qq = r / nr;
    __int128 tmp = t - qq * nt;
    t = nt;
    nt = tmp;
    tmp = r - qq * nr;
    r = nr;
    nr = tmp;
  }
  if (t < 0) t += m;
  return static_cast<u64>(t);
}

}  // namespace

std::optional<std::uint64_t> GaloisField::discrete_log(Fe base, Fe target) const {
  if (base.v == 0 || target.v == 0) throw std::domain_error("discrete log of zero");
  const u64 q1 = q_ - 1;
  if (table_) {
    // solve e*(lb) = lt mod q1
    const u64 lb = base.v - 1, lt = target.v - 1;
    const u64 g = std::gcd(lb, q1);
    if (lt % g) return std::nullopt;
    const u64 m = q1 / g;
    if (m == 1) return 0;
    return mulmod64(lt / g, inv_mod(lb / g, m), m);
  }
  const u64 n = mult_order(base);
  if (pow(target, n) != Fe{1}) return std::nullopt;
  // Pohlig-Hellman over the prime powers of n, then CRT
  u64 x = 0, mod = 1;
  for (u64 l : order_factors_) {
    if (n % l) continue;
    u64 lk = 1;
    unsigned k = 0;
    while ((n / lk) % l == 0) {
      lk *= l;
      ++k;
    }
    const Fe gamma = pow(base, n / l);
    // baby steps gamma^j
    const u64 m = static_cast<u64>(std::ceil(std::sqrt(static_cast<double>(l)))) + 1;
    std::unordered_map<u64, u64> baby;
    Fe cur{1};
    for (u64 j = 0; j < m; ++j) {
      baby.emplace(cur.v, j);
      cur = mul(cur, gamma);
    }
    const Fe giant = inv(pow(gamma, m));
    u64 xk = 0, lp = 1;
    for (unsigned i = 0; i < k; ++i) {
      const Fe h = pow(mul(pow(inv(base), xk), target), n / (lp * l));
      Fe y = h;
      std::optional<u64> d;
      for (u64 g = 0; g <= m; ++g) {
        auto it = baby.find(y.v);
        if (it != baby.end()) {
          d = (g * m + it->second) % l;
          break;
        }
        y = mul(y, giant);
      }
      if (!d) return std::nullopt;
      xk += *d * lp;
      lp *= l;
    }
    // combine x mod `mod` with xk mod lk
    const u64 t = mulmod64((xk + lk - x % lk) % lk, inv_mod(mod % lk, lk), lk);
    x += mod * t;
    mod *= lk;
  }
  return x % n;
}

std::string GaloisField::to_string(Fe a) const {
  if (n_ == 1) return std::to_string(encode(a));
  std::ostringstream os;
  os << '[';
  auto c = coords(a);
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  os << ']';
  return os.str();
}

std::string GaloisField::describe() const {
  std::ostringstream os;
  os << "GF(" << p_;
  if (n_ > 1) os << '^' << n_;
  os << ')';
  return os.str();
}

}  // namespace skewdual
