#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace cavitybec {

using Vector = std::vector<double>;

// Dense row-major square matrix. Used for orthogonal transforms (O, U) where
// no symmetry holds.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t dim) : dim_(dim), data_(dim * dim, 0.0) {}

  static Matrix identity(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }

  Vector column(std::size_t j) const;
  Matrix transposed() const;

 private:
  std::size_t dim_ = 0;
  std::vector<double> data_;
};

// Dense real symmetric matrix. Writes go through set(), which stores both
// (i,j) and (j,i), so storage symmetry is exact by construction.
class SymmetricMatrix {
 public:
  SymmetricMatrix() = default;
  explicit SymmetricMatrix(std::size_t dim) : dim_(dim), data_(dim * dim, 0.0) {}

  static SymmetricMatrix identity(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }
  void set(std::size_t i, std::size_t j, double value) {
    data_[i * dim_ + j] = value;
    data_[j * dim_ + i] = value;
  }

  // this += scale * other
  SymmetricMatrix& add_scaled(const SymmetricMatrix& other, double scale);

  double max_abs() const noexcept;
  double trace() const noexcept;

  Vector apply(std::span<const double> v) const;
  // vᵀ A v
  double quadratic_form(std::span<const double> v) const;

  Matrix to_matrix() const;

 private:
  std::size_t dim_ = 0;
  std::vector<double> data_;
};

double dot(std::span<const double> a, std::span<const double> b);
double norm2(std::span<const double> v);

}  // namespace cavitybec
