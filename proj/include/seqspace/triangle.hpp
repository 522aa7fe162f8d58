#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "seqspace/numeric.hpp"

namespace seqspace {

/// Lower-triangular matrix over rows 0..N with materialized rows.  Row n
/// stores entries for columns 0..n; everything above the diagonal is an
/// implicit zero.
template <class S>
class TriangleMatrix {
 public:
  enum class Tag {
    generic,
    means,              // A(r,s,t)
    difference,         // Delta^(m)
    composite,          // A(r,s,t) * Delta^(m)
    inverse_means,      // A(r,s,t)^(-1)
    inverse_composite,  // (A(r,s,t) * Delta^(m))^(-1)
  };

  TriangleMatrix(std::size_t truncation, Tag tag = Tag::generic)
      : truncation_(truncation), tag_(tag), rows_(truncation + 1) {
    for (std::size_t n = 0; n <= truncation; ++n)
      rows_[n].assign(n + 1, scalar_of<S>(0));
  }

  std::size_t truncation() const noexcept { return truncation_; }
  Tag tag() const noexcept { return tag_; }

  S& at(std::size_t n, std::size_t k) {
    check(n, k);
    return rows_[n][k];
  }
  const S& at(std::size_t n, std::size_t k) const {
    check(n, k);
    return rows_[n][k];
  }

  /// Entry with the upper-triangle zeros made explicit.
  S entry(std::size_t n, std::size_t k) const {
    if (n > truncation_)
      raise(errc::index_out_of_range, "row beyond truncation");
    return k <= n ? rows_[n][k] : scalar_of<S>(0);
  }

  std::span<const S> row(std::size_t n) const {
    if (n > truncation_)
      raise(errc::index_out_of_range, "row beyond truncation");
    return rows_[n];
  }

  static TriangleMatrix identity(std::size_t truncation) {
    TriangleMatrix m(truncation);
    for (std::size_t n = 0; n <= truncation; ++n)
      m.rows_[n][n] = scalar_of<S>(1);
    return m;
  }

  /// Triangle product; the result is again lower triangular.
  TriangleMatrix multiply(const TriangleMatrix& other) const {
    if (other.truncation_ != truncation_)
      raise(errc::dimension_mismatch, "triangle product size mismatch");
    TriangleMatrix out(truncation_);
    for (std::size_t n = 0; n <= truncation_; ++n) {
      for (std::size_t j = 0; j <= n; ++j) {
        CompensatedSum<S> acc;
        for (std::size_t k = j; k <= n; ++k)
          acc.add(S(rows_[n][k] * other.rows_[k][j]));
        out.rows_[n][j] = acc.value();
      }
    }
    return out;
  }

  /// y = T x over the window.
  std::vector<S> apply(std::span<const S> x) const {
    if (x.size() != truncation_ + 1)
      raise(errc::dimension_mismatch,
            "vector length " + std::to_string(x.size()) +
                " does not match truncation window " +
                std::to_string(truncation_ + 1));
    std::vector<S> y(truncation_ + 1, scalar_of<S>(0));
    for (std::size_t n = 0; n <= truncation_; ++n) {
      S acc = scalar_of<S>(0);
      for (std::size_t k = 0; k <= n; ++k) acc += rows_[n][k] * x[k];
      y[n] = acc;
    }
    return y;
  }

  bool diagonal_nonzero() const {
    for (std::size_t n = 0; n <= truncation_; ++n)
      if (is_zero(rows_[n][n])) return false;
    return true;
  }

  double max_abs_deviation_from_identity() const {
    double worst = 0.0;
    for (std::size_t n = 0; n <= truncation_; ++n)
      for (std::size_t k = 0; k <= n; ++k) {
        double want = n == k ? 1.0 : 0.0;
        double dev = std::fabs(to_double(rows_[n][k]) - want);
        if (dev > worst) worst = dev;
      }
    return worst;
  }

  bool equals(const TriangleMatrix& other) const {
    if (other.truncation_ != truncation_) return false;
    for (std::size_t n = 0; n <= truncation_; ++n)
      for (std::size_t k = 0; k <= n; ++k)
        if (rows_[n][k] != other.rows_[n][k]) return false;
    return true;
  }

 private:
  void check(std::size_t n, std::size_t k) const {
    if (n > truncation_ || k > n)
      raise(errc::index_out_of_range,
            "triangle index (" + std::to_string(n) + "," + std::to_string(k) +
                ") outside the lower triangle");
  }

  std::size_t truncation_;
  Tag tag_;
  std::vector<std::vector<S>> rows_;
};

/// Dense rectangular window, used for condition checks and associated
/// matrices where entries above the diagonal are meaningful.
template <class S>
class DenseWindow {
 public:
  DenseWindow(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, scalar_of<S>(0)) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  S& at(std::size_t n, std::size_t k) { return data_[index(n, k)]; }
  const S& at(std::size_t n, std::size_t k) const { return data_[index(n, k)]; }

  DenseWindow<double> to_double() const {
    DenseWindow<double> out(rows_, cols_);
    for (std::size_t n = 0; n < rows_; ++n)
      for (std::size_t k = 0; k < cols_; ++k)
        out.at(n, k) = seqspace::to_double(at(n, k));
    return out;
  }

 private:
  std::size_t index(std::size_t n, std::size_t k) const {
    if (n >= rows_ || k >= cols_)
      raise(errc::index_out_of_range, "window index out of range");
    return n * cols_ + k;
  }

  std::size_t rows_;
  std::size_t cols_;
  std::vector<S> data_;
};

template <class S>
DenseWindow<double> triangle_to_window(const TriangleMatrix<S>& t) {
  DenseWindow<double> w(t.truncation() + 1, t.truncation() + 1);
  for (std::size_t n = 0; n <= t.truncation(); ++n)
    for (std::size_t k = 0; k <= n; ++k) w.at(n, k) = to_double(t.at(n, k));
  return w;
}

}  // namespace seqspace
