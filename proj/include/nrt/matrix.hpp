#pragma once

// Dense matrices over F_q with row reduction.

#include <cstddef>
#include <span>
#include <vector>

#include "nrt/gf.hpp"

namespace nrt {

class Matrix {
 public:
  Matrix(const Field& f, std::size_t rows, std::size_t cols)
      : field_(&f), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  const Field& field() const { return *field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Label& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Label at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<const Label> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Label> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

  void append_row(std::span<const Label> values);

  // In-place reduced row echelon form; zero rows are dropped. Returns the pivot columns.
  std::vector<std::size_t> rref();
  std::size_t rank() const;

  // Rows form a basis of {x : M x = 0} (right kernel), in RREF.
  Matrix nullspace() const;

  // y = x M for a row vector x of length rows().
  std::vector<Label> left_multiply(std::span<const Label> x) const;
  // y = M x for a column vector x of length cols().
  std::vector<Label> right_multiply(std::span<const Label> x) const;

  Matrix transpose() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  const Field* field_;
  std::size_t rows_, cols_;
  std::vector<Label> data_;
};

}  // namespace nrt
