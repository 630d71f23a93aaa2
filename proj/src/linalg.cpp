#include "skewdual/linalg.hpp"

#include <stdexcept>

namespace skewdual {

std::vector<Fe> Matrix::row(std::size_t i) const {
  return std::vector<Fe>(a.begin() + static_cast<std::ptrdiff_t>(i * cols),
                         a.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols));
}

void Matrix::append_row(const std::vector<Fe>& r) {
  if (rows == 0 && cols == 0) cols = r.size();
  if (r.size() != cols) throw std::invalid_argument("row length mismatch");
  a.insert(a.end(), r.begin(), r.end());
  ++rows;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Fe{1};
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Fe>>& rows, std::size_t cols) {
  Matrix m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

namespace linalg {

std::vector<std::size_t> rref(const GaloisField& F, Matrix& m) {
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t sel = r;
    while (sel < m.rows && m(sel, c) == Fe{0}) ++sel;
    if (sel == m.rows) continue;
    if (sel != r) {
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(sel, j), m(r, j));
    }
    const Fe iv = F.inv(m(r, c));
    for (std::size_t j = c; j < m.cols; ++j) m(r, j) = F.mul(m(r, j), iv);
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == r || m(i, c) == Fe{0}) continue;
      const Fe f = m(i, c);
      for (std::size_t j = c; j < m.cols; ++j) m(i, j) = F.sub(m(i, j), F.mul(f, m(r, j)));
    }
    piv.push_back(c);
    ++r;
  }
  m.rows = r;
  m.a.resize(r * m.cols);
  return piv;
}

Matrix rref_copy(const GaloisField& F, Matrix m) {
  rref(F, m);
  return m;
}

std::size_t rank(const GaloisField& F, Matrix m) { return rref(F, m).size(); }

Matrix kernel(const GaloisField& F, const Matrix& m0) {
  Matrix m = m0;
  auto piv = rref(F, m);
  std::vector<bool> is_piv(m.cols, false);
  for (auto c : piv) is_piv[c] = true;
  Matrix k(0, m.cols);
  for (std::size_t f = 0; f < m.cols; ++f) {
    if (is_piv[f]) continue;
    std::vector<Fe> v(m.cols, Fe{0});
    v[f] = Fe{1};
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = F.neg(m(i, f));
    k.append_row(v);
  }
  rref(F, k);
  return k;
}

Matrix left_kernel(const GaloisField& F, const Matrix& m) { return kernel(F, transpose(m)); }

Matrix mul(const GaloisField& F, const Matrix& a, const Matrix& b) {
  if (a.cols != b.rows) throw std::invalid_argument("matrix shape mismatch");
  Matrix c(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t k = 0; k < a.cols; ++k) {
      const Fe x = a(i, k);
      if (x == Fe{0}) continue;
      for (std::size_t j = 0; j < b.cols; ++j) c(i, j) = F.add(c(i, j), F.mul(x, b(k, j)));
    }
  }
  return c;
}

std::vector<Fe> mul_vec(const GaloisField& F, const Matrix& a, const std::vector<Fe>& v) {
  if (a.cols != v.size()) throw std::invalid_argument("matrix shape mismatch");
  std::vector<Fe> out(a.rows, Fe{0});
  for (std::size_t i = 0; i < a.rows; ++i) {
    Fe s{0};
    for (std::size_t j = 0; j < a.cols; ++j) s = F.add(s, F.mul(a(i, j), v[j]));
    out[i] = s;
  }
  return out;
}

std::vector<Fe> vec_mul(const GaloisField& F, const std::vector<Fe>& v, const Matrix& a) {
  if (a.rows != v.size()) throw std::invalid_argument("matrix shape mismatch");
  std::vector<Fe> out(a.cols, Fe{0});
  for (std::size_t i = 0; i < a.rows; ++i) {
    if (v[i] == Fe{0}) continue;
    for (std::size_t j = 0; j < a.cols; ++j) out[j] = F.add(out[j], F.mul(v[i], a(i, j)));
  }
  return out;
}

Matrix transpose(const Matrix& a) {
  Matrix t(a.cols, a.rows);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < a.cols; ++j) t(j, i) = a(i, j);
  return t;
}

Matrix add(const GaloisField& F, const Matrix& a, const Matrix& b) {
  if (a.rows != b.rows || a.cols != b.cols) throw std::invalid_argument("matrix shape mismatch");
  Matrix c = a;
  for (std::size_t i = 0; i < c.a.size(); ++i) c.a[i] = F.add(a.a[i], b.a[i]);
  return c;
}

Matrix scale(const GaloisField& F, const Matrix& a, Fe s) {
  Matrix c = a;
  for (auto& x : c.a) x = F.mul(x, s);
  return c;
}

std::optional<Matrix> inverse(const GaloisField& F, const Matrix& a) {
  if (a.rows != a.cols) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = a.rows;
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = Fe{1};
  }
  auto piv = rref(F, aug);
  if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

Fe det(const GaloisField& F, Matrix m) {
  if (m.rows != m.cols) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = m.rows;
  Fe d = Fe{1};
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t sel = c;
    while (sel < n && m(sel, c) == Fe{0}) ++sel;
    if (sel == n) return Fe{0};
    if (sel != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(sel, j), m(c, j));
      d = F.neg(d);
    }
    d = F.mul(d, m(c, c));
    const Fe iv = F.inv(m(c, c));
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c) == Fe{0}) continue;
      const Fe f = F.mul(m(i, c), iv);
      for (std::size_t j = c; j < n; ++j) m(i, j) = F.sub(m(i, j), F.mul(f, m(c, j)));
    }
  }
  return d;
}

std::optional<std::vector<Fe>> solve(const GaloisField& F, const Matrix& a, const std::vector<Fe>& b) {
  if (b.size() != a.rows) throw std::invalid_argument("right-hand side length mismatch");
  Matrix aug(a.rows, a.cols + 1);
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t j = 0; j < a.cols; ++j) aug(i, j) = a(i, j);
    aug(i, a.cols) = b[i];
  }
  auto piv = rref(F, aug);
  std::vector<Fe> x(a.cols, Fe{0});
  for (std::size_t i = 0; i < piv.size(); ++i) {
    if (piv[i] == a.cols) return std::nullopt;
    x[piv[i]] = aug(i, a.cols);
  }
  return x;
}

Matrix frobenius(const GaloisField& F, const Matrix& a, long long j) {
  Matrix c = a;
  for (auto& x : c.a) x = F.frobenius(x, j);
  return c;
}

bool is_zero(const Matrix& a) {
  for (auto x : a.a)
    if (x != Fe{0}) return false;
  return true;
}

Fe dot(const GaloisField& F, const std::vector<Fe>& u, const std::vector<Fe>& v) {
  Fe s{0};
  for (std::size_t i = 0; i < u.size(); ++i) s = F.add(s, F.mul(u[i], v[i]));
  return s;
}

}  // namespace linalg
}  // namespace skewdual
