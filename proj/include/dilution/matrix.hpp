#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace dilution {

// Dense row-major matrix of doubles. Deliberately small: modules that need
// factorizations implement them locally with fixed accumulation order so
// results are reproducible.
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<double> data;

  Matrix() = default;
  Matrix(int r, int c, double fill = 0.0)
      : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, fill) {}

  double& at(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
  double at(int r, int c) const { return data[static_cast<std::size_t>(r) * cols + c]; }

  double* row(int r) { return data.data() + static_cast<std::size_t>(r) * cols; }
  const double* row(int r) const { return data.data() + static_cast<std::size_t>(r) * cols; }

  std::span<const double> row_span(int r) const {
    return {row(r), static_cast<std::size_t>(cols)};
  }

  bool operator==(const Matrix&) const = default;
};

// Per-dimension affine normalizer (zero mean, unit variance over the fitted
// data; population variance). Dimensions with zero spread pass through with
// scale 1 so constant inputs stay finite.
struct Standardizer {
  std::vector<double> mean;
  std::vector<double> stddev;

  static Standardizer fit(const Matrix& x);
  Matrix transform(const Matrix& x) const;
  std::vector<double> transform_row(std::span<const double> r) const;
  bool empty() const { return mean.empty(); }

  bool operator==(const Standardizer&) const = default;
};

}  // namespace dilution
