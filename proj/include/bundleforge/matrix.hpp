#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "bundleforge/graph.hpp"
#include "bundleforge/perm.hpp"

namespace bundleforge {

inline constexpr double kSpectrumTolerance = 1e-9;

/// Dense row-major real matrix. Integer matrices (adjacency, permutation,
/// morphism matrices) are stored exactly as doubles.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n);
  /// Throws ShapeMismatch on ragged input.
  static Matrix from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const std::vector<double>& data() const { return data_; }
  std::vector<std::vector<double>> to_rows() const;

  Matrix transpose() const;
  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric(double tol = 0.0) const;
  /// Square, symmetric, zero diagonal, entries in {0,1}.
  bool is_adjacency() const;

  Matrix& operator+=(const Matrix& other);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(double s, Matrix a);

  /// Exact entrywise equality (shapes included).
  bool operator==(const Matrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

double max_abs_diff(const Matrix& a, const Matrix& b);

/// 0/1 adjacency matrix indexed by the graph's vertex order.
Matrix adjacency_matrix(const Graph& g);

/// Block matrix whose (i,j) block is a(i,j) * b.
Matrix kronecker(const Matrix& a, const Matrix& b);

/// Entrywise product; throws ShapeMismatch.
Matrix hadamard(const Matrix& a, const Matrix& b);

/// P with P[sigma(i)][i] = 1, so P e_i = e_sigma(i). Throws NotABijection.
Matrix perm_matrix(const Perm& sigma);

/// Eigenvalues of a symmetric matrix with multiplicity, sorted descending.
struct Spectrum {
  std::vector<double> values;

  std::size_t size() const { return values.size(); }
  double sum() const;
  /// (value, multiplicity) with values closer than tol merged.
  std::vector<std::pair<double, std::size_t>> grouped(double tol = kSpectrumTolerance) const;
};

Spectrum make_spectrum(std::vector<double> values);
bool spectra_equal(const Spectrum& a, const Spectrum& b, double tol = kSpectrumTolerance);

/// Cyclic Jacobi rotations until the off-diagonal Frobenius norm drops below
/// 1e-12 (scaled by the matrix norm when it exceeds 1), at most 100 sweeps.
/// Throws NotSymmetric or NoConvergence.
Spectrum spectrum(const Matrix& a);

}  // namespace bundleforge
