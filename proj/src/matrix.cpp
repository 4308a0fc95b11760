#include "nrt/matrix.hpp"

#include <stdexcept>

namespace nrt {

void Matrix::append_row(std::span<const Label> values) {
  if (values.size() != cols_) throw std::invalid_argument("row length mismatch");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

std::vector<std::size_t> Matrix::rref() {
  const Field& f = *field_;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t sel = r;
    while (sel < rows_ && at(sel, c) == 0) ++sel;
    if (sel == rows_) continue;
    if (sel != r)
      for (std::size_t j = 0; j < cols_; ++j) std::swap(at(sel, j), at(r, j));
    const Label scale = f.inv(at(r, c));
    for (std::size_t j = c; j < cols_; ++j) at(r, j) = f.mul(at(r, j), scale);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r) continue;
      const Label factor = at(i, c);
      if (factor == 0) continue;
      for (std::size_t j = c; j < cols_; ++j) at(i, j) = f.sub(at(i, j), f.mul(factor, at(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  rows_ = r;
  data_.resize(rows_ * cols_);
  return pivots;
}

std::size_t Matrix::rank() const {
  Matrix copy = *this;
  return copy.rref().size();
}

Matrix Matrix::nullspace() const {
  Matrix reduced = *this;
  const auto pivots = reduced.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : pivots) is_pivot[c] = true;
  const Field& f = *field_;
  Matrix kernel(f, 0, cols_);
  std::vector<Label> v(cols_);
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::fill(v.begin(), v.end(), 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.neg(reduced.at(i, free));
    kernel.append_row(v);
  }
  kernel.rref();
  return kernel;
}

std::vector<Label> Matrix::left_multiply(std::span<const Label> x) const {
  if (x.size() != rows_) throw std::invalid_argument("vector length mismatch");
  const Field& f = *field_;
  std::vector<Label> y(cols_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < cols_; ++j) y[j] = f.add(y[j], f.mul(x[i], at(i, j)));
  }
  return y;
}

std::vector<Label> Matrix::right_multiply(std::span<const Label> x) const {
  if (x.size() != cols_) throw std::invalid_argument("vector length mismatch");
  const Field& f = *field_;
  std::vector<Label> y(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) y[i] = f.add(y[i], f.mul(at(i, j), x[j]));
  return y;
}

Matrix Matrix::transpose() const {
  Matrix t(*field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

}  // namespace nrt
