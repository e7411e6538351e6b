#include "bundleforge/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "bundleforge/error.hpp"

namespace bundleforge {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<double>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw Error(ErrorCode::ShapeMismatch, "ragged rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::vector<std::vector<double>> Matrix::to_rows() const {
  std::vector<std::vector<double>> out(rows_, std::vector<double>(cols_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i][j] = (*this)(i, j);
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Matrix::is_symmetric(double tol) const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if (std::abs((*this)(i, j) - (*this)(j, i)) > tol) return false;
  return true;
}

bool Matrix::is_adjacency() const {
  if (!is_symmetric()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    if ((*this)(i, i) != 0.0) return false;
    for (std::size_t j = 0; j < cols_; ++j) {
      double x = (*this)(i, j);
      if (x != 0.0 && x != 1.0) return false;
    }
  }
  return true;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw Error(ErrorCode::ShapeMismatch, "matrix sum");
  }
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::ShapeMismatch, "matrix product");
  Matrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      double x = a(i, k);
      if (x == 0.0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += x * b(k, j);
    }
  return c;
}

Matrix operator*(double s, Matrix a) {
  for (double& x : a.data_) x *= s;
  return a;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::ShapeMismatch, "max_abs_diff");
  }
  double d = 0.0;
  for (std::size_t k = 0; k < a.data().size(); ++k) {
    d = std::max(d, std::abs(a.data()[k] - b.data()[k]));
  }
  return d;
}

Matrix adjacency_matrix(const Graph& g) {
  Matrix a(g.order(), g.order());
  for (auto [x, y] : g.edges()) a(x, y) = a(y, x) = 1.0;
  return a;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  Matrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      double x = a(i, j);
      if (x == 0.0) continue;
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q)
          k(i * b.rows() + p, j * b.cols() + q) = x * b(p, q);
    }
  return k;
}

Matrix hadamard(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::ShapeMismatch, "hadamard product needs equal shapes");
  }
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) * b(i, j);
  return c;
}

Matrix perm_matrix(const Perm& sigma) {
  if (!is_permutation(sigma)) throw Error(ErrorCode::NotABijection, "perm_matrix");
  Matrix p(sigma.size(), sigma.size());
  for (std::size_t i = 0; i < sigma.size(); ++i) p(sigma[i], i) = 1.0;
  return p;
}

// ---------------------------------------------------------------------------
// Spectrum
// ---------------------------------------------------------------------------

double Spectrum::sum() const { return std::accumulate(values.begin(), values.end(), 0.0); }

std::vector<std::pair<double, std::size_t>> Spectrum::grouped(double tol) const {
  std::vector<std::pair<double, std::size_t>> out;
  for (double v : values) {
    if (!out.empty() && std::abs(out.back().first - v) <= tol) {
      ++out.back().second;
    } else {
      out.emplace_back(v, 1);
    }
  }
  return out;
}

Spectrum make_spectrum(std::vector<double> values) {
  std::sort(values.begin(), values.end(), std::greater<>());
  return Spectrum{std::move(values)};
}

bool spectra_equal(const Spectrum& a, const Spectrum& b, double tol) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::abs(a.values[i] - b.values[i]) > tol) return false;
  }
  return true;
}

Spectrum spectrum(const Matrix& input) {
  if (!input.is_symmetric(1e-12)) throw Error(ErrorCode::NotSymmetric, "spectrum");
  const std::size_t n = input.rows();
  Matrix a = input;

  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) s += a(i, j) * a(i, j);
    return std::sqrt(s);
  };
  double total = 0.0;
  for (double x : a.data()) total += x * x;
  const double threshold = 1e-12 * std::max(1.0, std::sqrt(total));

  constexpr int kMaxSweeps = 100;
  int sweep = 0;
  while (off_norm() >= threshold) {
    if (++sweep > kMaxSweeps) throw Error(ErrorCode::NoConvergence, "Jacobi sweeps exhausted");
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        double apq = a(p, q);
        if (apq == 0.0) continue;
        double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          double akp = a(k, p);
          double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          double apk = a(p, k);
          double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = a(i, i);
  return make_spectrum(std::move(ev));
}

}  // namespace bundleforge
