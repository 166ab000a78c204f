#include "dilution/matrix.hpp"

#include <cmath>

#include "dilution/error.hpp"

namespace dilution {

Standardizer Standardizer::fit(const Matrix& x) {
  if (x.rows < 1 || x.cols < 1) raise(Errc::insufficient_data, "standardizer needs at least one row");
  Standardizer s;
  s.mean.assign(x.cols, 0.0);
  s.stddev.assign(x.cols, 0.0);
  for (int r = 0; r < x.rows; ++r) {
    const double* p = x.row(r);
    for (int c = 0; c < x.cols; ++c) s.mean[c] += p[c];
  }
  for (int c = 0; c < x.cols; ++c) s.mean[c] /= x.rows;
  for (int r = 0; r < x.rows; ++r) {
    const double* p = x.row(r);
    for (int c = 0; c < x.cols; ++c) {
      const double d = p[c] - s.mean[c];
      s.stddev[c] += d * d;
    }
  }
  for (int c = 0; c < x.cols; ++c) {
    s.stddev[c] = std::sqrt(s.stddev[c] / x.rows);
    if (s.stddev[c] == 0.0) s.stddev[c] = 1.0;
  }
  return s;
}

Matrix Standardizer::transform(const Matrix& x) const {
  if (static_cast<std::size_t>(x.cols) != mean.size())
    raise(Errc::shape_mismatch, "standardizer dimension mismatch");
  Matrix out(x.rows, x.cols);
  for (int r = 0; r < x.rows; ++r) {
    const double* p = x.row(r);
    double* q = out.row(r);
    for (int c = 0; c < x.cols; ++c) q[c] = (p[c] - mean[c]) / stddev[c];
  }
  return out;
}

std::vector<double> Standardizer::transform_row(std::span<const double> r) const {
  if (r.size() != mean.size()) raise(Errc::shape_mismatch, "standardizer dimension mismatch");
  std::vector<double> out(r.size());
  for (std::size_t c = 0; c < r.size(); ++c) out[c] = (r[c] - mean[c]) / stddev[c];
  return out;
}

}  // namespace dilution
