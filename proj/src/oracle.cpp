#include "skewdual/oracle.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <thread>

namespace skewdual::oracle {

namespace {

// calls fn on every RREF d x N matrix over F
void for_each_rref(const GaloisField& F, std::size_t N, std::size_t d, const std::function<void(const Matrix&)>& fn) {
  std::vector<std::size_t> piv(d);
  std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t i, std::size_t from) {
    if (i == d) {
      std::vector<std::pair<std::size_t, std::size_t>> cells;
      for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t j = piv[r] + 1; j < N; ++j) {
          bool is_piv = false;
          for (std::size_t t = r + 1; t < d; ++t) is_piv |= (piv[t] == j);
          if (!is_piv) cells.push_back({r, j});
        }
      }
      const std::uint64_t q = F.order();
      std::vector<std::uint64_t> idx(cells.size(), 0);
      for (;;) {
        Matrix m(d, N);
        for (std::size_t r = 0; r < d; ++r) m(r, piv[r]) = F.one();
        for (std::size_t c = 0; c < cells.size(); ++c) m(cells[c].first, cells[c].second) = F.element(idx[c]);
        fn(m);
        std::size_t c = 0;
        while (c < idx.size() && ++idx[c] == q) idx[c++] = 0;
        if (c == idx.size()) break;
      }
      return;
    }
    for (std::size_t j = from; j + (d - i) <= N; ++j) {
      piv[i] = j;
      choose(i + 1, j + 1);
    }
  };
  choose(0, 0);
}

BigInt gaussian(std::size_t n, std::size_t k, std::uint64_t q) {
  BigInt a = 1, b = 1, Q = q;
  for (std::size_t i = 0; i < k; ++i) {
    a *= boost::multiprecision::pow(Q, static_cast<unsigned>(n - i)) - 1;
    b *= boost::multiprecision::pow(Q, static_cast<unsigned>(i + 1)) - 1;
  }
  return a / b;
}

// coefficient vector of X * c in E
std::vector<Fe> shift(const QuotientAlgebra& E, const std::vector<Fe>& c) {
  const OreRing& R = *E.ring();
  const GaloisField& K = R.K();
  const std::uint64_t q = R.F().order();
  const std::size_t n = E.length();
  std::vector<Fe> out(n, K.zero());
  for (std::size_t i = 0; i + 1 < n; ++i) out[i + 1] = K.pow(c[i], q);
  const Fe top = K.pow(c[n - 1], q);
  const Poly& P = E.central_modulus();
  for (std::size_t j = 0; j + 1 < P.size(); ++j) {
    out[R.r() * j] = K.sub(out[R.r() * j], K.mul(top, R.from_F(P[j])));
  }
  return out;
}

bool gram_zero(const GaloisField& K, const Matrix& C) {
  for (std::size_t i = 0; i < C.rows; ++i) {
    for (std::size_t j = i; j < C.rows; ++j) {
      Fe s = K.zero();
      for (std::size_t t = 0; t < C.cols; ++t) s = K.add(s, K.mul(C(i, t), C(j, t)));
      if (s != K.zero()) return false;
    }
  }
  return true;
}

struct Scan {
  std::uint64_t scanned = 0;
  std::vector<std::uint64_t> at_least;  // at_least[l]: matrices reaching level l
  std::vector<Matrix> kept;             // top level, enumeration order
};

// fn(m) returns a level in [0, levels); work is dealt round-robin to threads
template <class Fn>
Scan scan_rref(const GaloisField& F, std::size_t N, std::size_t d, unsigned threads, std::size_t levels, Fn fn) {
  threads = std::max(1u, threads);
  std::vector<Scan> part(threads);
  std::vector<std::vector<std::uint64_t>> order(threads);
  auto work = [&](unsigned tid) {
    Scan& sc = part[tid];
    sc.at_least.assign(levels, 0);
    std::uint64_t i = 0;
    for_each_rref(F, N, d, [&](const Matrix& m) {
      const std::uint64_t at = i++;
      if (at % threads != tid) return;
      ++sc.scanned;
      const std::size_t lvl = fn(m);
      for (std::size_t l = 1; l <= lvl; ++l) ++sc.at_least[l];
      if (lvl + 1 == levels) {
        sc.kept.push_back(m);
        order[tid].push_back(at);
      }
    });
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
  }
  Scan out;
  out.at_least.assign(levels, 0);
  std::vector<std::pair<std::uint64_t, const Matrix*>> all;
  for (unsigned t = 0; t < threads; ++t) {
    out.scanned += part[t].scanned;
    for (std::size_t l = 0; l < levels; ++l) out.at_least[l] += part[t].at_least[l];
    for (std::size_t j = 0; j < part[t].kept.size(); ++j) all.push_back({order[t][j], &part[t].kept[j]});
  }
  std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [at, m] : all) out.kept.push_back(*m);
  return out;
}

}  // namespace

IsotropicReport brute_isotropic(const SesquiSpace& V, std::uint64_t budget, unsigned threads) {
  const GaloisField& F = V.field();
  const std::size_t N = V.dim(), s = N / 2;
  if (gaussian(N, s, F.order()) > budget) throw std::length_error("brute_isotropic: budget exceeded");
  const Matrix& G = V.gram();
  Scan sc = scan_rref(F, N, s, threads, 2, [&](const Matrix& m) -> std::size_t {
    for (std::size_t i = 0; i < s; ++i) {
      for (std::size_t j = 0; j < s; ++j) {
        Fe acc = F.zero();
        for (std::size_t a = 0; a < N; ++a) {
          if (m(i, a) == F.zero()) continue;
          for (std::size_t b = 0; b < N; ++b) acc = F.add(acc, F.mul(F.mul(m(i, a), G(a, b)), V.sigma(m(j, b))));
        }
        if (acc != F.zero()) return 0;
      }
    }
    return 1;
  });
  IsotropicReport rep;
  rep.scanned = sc.scanned;
  rep.witnesses = std::move(sc.kept);
  return rep;
}

Matrix code_matrix(const QuotientAlgebra& E, const OrePoly& f) {
  const GaloisField& K = E.ring()->K();
  const std::size_t n = E.length();
  std::vector<Fe> c = E.reduce(f).coeffs();
  c.resize(n, K.zero());
  Matrix m(0, n);
  for (std::size_t i = 0; i < n; ++i) {
    m.append_row(c);
    c = shift(E, c);
  }
  linalg::rref(K, m);
  return m;
}

bool coordinatewise_selforthogonal(const QuotientAlgebra& E, const OrePoly& f) {
  return gram_zero(E.ring()->K(), code_matrix(E, f));
}

bool coordinatewise_selfdual(const QuotientAlgebra& E, const OrePoly& f) {
  Matrix c = code_matrix(E, f);
  return 2 * c.rows == E.length() && gram_zero(E.ring()->K(), c);
}

CodeReport brute_codes(const QuotientAlgebra& E, std::uint64_t budget, unsigned threads) {
  const GaloisField& K = E.ring()->K();
  const std::size_t n = E.length();
  BigInt total = 0;
  for (std::size_t d = 0; d <= n; ++d) total += gaussian(n, d, K.order());
  if (total > budget) throw std::length_error("brute_codes: budget exceeded");
  CodeReport rep;
  rep.params = "q=" + std::to_string(E.ring()->F().order()) + " r=" + std::to_string(E.ring()->r()) +
               " n=" + std::to_string(n);
  for (std::size_t d = 0; d <= n; ++d) {
    // 1 = X-stable, 2 = selforthogonal, 3 = selfdual
    Scan sc = scan_rref(K, n, d, threads, 4, [&](const Matrix& m) -> std::size_t {
      Matrix ext = m;
      for (std::size_t i = 0; i < m.rows; ++i) ext.append_row(shift(E, m.row(i)));
      if (linalg::rank(K, ext) != d) return 0;
      if (!gram_zero(K, m)) return 1;
      return 2 * d == n ? 3 : 2;
    });
    rep.subspaces += sc.scanned;
    rep.ideals += sc.at_least[1];
    rep.selforthogonal += sc.at_least[2];
    for (auto& m : sc.kept) rep.selfdual.push_back(std::move(m));
  }
  return rep;
}

std::vector<OrePoly> brute_generators(const QuotientAlgebra& E, std::uint64_t budget) {
  const auto& ring = E.ring();
  const GaloisField& K = ring->K();
  const std::size_t n = E.length();
  if (n % 2) return {};
  const std::size_t h = n / 2;
  BigInt total = boost::multiprecision::pow(BigInt(K.order()), static_cast<unsigned>(h));
  if (total > budget) throw std::length_error("brute_generators: budget exceeded");
  std::vector<OrePoly> out;
  std::vector<std::uint64_t> idx(h, 0);
  for (;;) {
    std::vector<Fe> c(h + 1);
    for (std::size_t i = 0; i < h; ++i) c[i] = K.element(idx[i]);
    c[h] = K.one();
    OrePoly f(ring, c);
    if (coordinatewise_selfdual(E, f)) out.push_back(f);
    std::size_t t = 0;
    while (t < h && ++idx[t] == K.order()) idx[t++] = 0;
    if (t == h) break;
  }
  return out;
}

std::optional<std::size_t> min_weight(const QuotientAlgebra& E, const OrePoly& f, std::uint64_t budget) {
  const GaloisField& K = E.ring()->K();
  const Matrix C = code_matrix(E, f);
  if (C.rows == 0) return std::nullopt;
  if (boost::multiprecision::pow(BigInt(K.order()), static_cast<unsigned>(C.rows)) > budget) {
    throw std::length_error("min_weight: budget exceeded");
  }
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < C.rows; ++i) total *= K.order();
  std::size_t best = C.cols;
  for (std::uint64_t idx = 1; idx < total; ++idx) {
    std::uint64_t rest = idx;
    std::vector<Fe> v(C.cols, K.zero());
    for (std::size_t i = 0; i < C.rows; ++i) {
      const Fe a = K.element(rest % K.order());
      rest /= K.order();
      for (std::size_t j = 0; j < C.cols; ++j) v[j] = K.add(v[j], K.mul(a, C(i, j)));
    }
    std::size_t w = 0;
    for (Fe x : v) w += (x != K.zero());
    best = std::min(best, w);
  }
  return best;
}

}  // namespace skewdual::oracle
