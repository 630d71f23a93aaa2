#pragma once

#include <optional>
#include <vector>

#include "skewdual/field.hpp"

namespace skewdual {

struct Matrix {
  std::size_t rows = 0, cols = 0;
  std::vector<Fe> a;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, Fe{0}) {}

  Fe& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  Fe operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
  std::vector<Fe> row(std::size_t i) const;
  void append_row(const std::vector<Fe>& r);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<std::vector<Fe>>& rows, std::size_t cols);

  friend bool operator==(const Matrix&, const Matrix&) = default;
};

namespace linalg {

// In-place reduced row echelon form; returns pivot columns and drops
// zero rows.
std::vector<std::size_t> rref(const GaloisField& F, Matrix& m);
Matrix rref_copy(const GaloisField& F, Matrix m);
std::size_t rank(const GaloisField& F, Matrix m);
// rows span {x : m x = 0}, in reduced row echelon form
Matrix kernel(const GaloisField& F, const Matrix& m);
// rows span {x : x m = 0}
Matrix left_kernel(const GaloisField& F, const Matrix& m);
Matrix mul(const GaloisField& F, const Matrix& a, const Matrix& b);
std::vector<Fe> mul_vec(const GaloisField& F, const Matrix& a, const std::vector<Fe>& v);
std::vector<Fe> vec_mul(const GaloisField& F, const std::vector<Fe>& v, const Matrix& a);
Matrix transpose(const Matrix& a);
Matrix add(const GaloisField& F, const Matrix& a, const Matrix& b);
Matrix scale(const GaloisField& F, const Matrix& a, Fe c);
std::optional<Matrix> inverse(const GaloisField& F, const Matrix& a);
Fe det(const GaloisField& F, Matrix a);
// some solution of a x = b
std::optional<std::vector<Fe>> solve(const GaloisField& F, const Matrix& a, const std::vector<Fe>& b);
// entrywise a -> a^(p^j)
Matrix frobenius(const GaloisField& F, const Matrix& a, long long j);
bool is_zero(const Matrix& a);
Fe dot(const GaloisField& F, const std::vector<Fe>& u, const std::vector<Fe>& v);

}  // namespace linalg
}  // namespace skewdual
