#pragma once

// The matrix space Mat_{n,s}(F_q) and the point space Q^n(q^s).
//
// A CodeWord stores entry (j, i) = xi_i(x_j), j = 0..n-1, i = 0..s-1 (0-based),
// so column s-1 is the most significant q-ary digit of coordinate j:
//   x_j = sum_i xi_i q^{i-s}   (i 0-based).

#include <cstdint>
#include <span>
#include <vector>

#include "nrt/bigint.hpp"
#include "nrt/gf.hpp"

namespace nrt {

struct SpaceParams {
  unsigned q = 2;
  std::size_t n = 1;
  std::size_t s = 1;

  std::size_t dim() const { return n * s; }
  friend bool operator==(const SpaceParams&, const SpaceParams&) = default;
};

class CodeWord {
 public:
  CodeWord(const Field& f, std::size_t n, std::size_t s);
  CodeWord(const Field& f, std::size_t n, std::size_t s, std::vector<Label> entries);
  // Rows given as vectors of labels in xi-order.
  static CodeWord from_rows(const Field& f, const std::vector<std::vector<Label>>& rows);

  const Field& field() const { return *field_; }
  std::size_t n() const { return n_; }
  std::size_t s() const { return s_; }
  SpaceParams params() const { return {field_->q(), n_, s_}; }

  Label at(std::size_t j, std::size_t i) const { return e_[j * s_ + i]; }
  Label& at(std::size_t j, std::size_t i) { return e_[j * s_ + i]; }
  std::span<const Label> row(std::size_t j) const { return {e_.data() + j * s_, s_}; }
  // Row-major flattening of length n*s.
  const std::vector<Label>& flat() const { return e_; }

  bool is_zero() const;

  friend bool operator==(const CodeWord& a, const CodeWord& b) {
    return a.field_ == b.field_ && a.n_ == b.n_ && a.s_ == b.s_ && a.e_ == b.e_;
  }
  friend bool operator<(const CodeWord& a, const CodeWord& b) { return a.e_ < b.e_; }

 private:
  const Field* field_;
  std::size_t n_, s_;
  std::vector<Label> e_;
};

// rho of a single row: 1-based index of the highest nonzero entry, 0 for the zero row.
std::size_t rho_row(std::span<const Label> row);
std::size_t rho_weight(const CodeWord& w);
std::size_t hamming_weight(const CodeWord& w);
// Same weights on a flattened n x s word.
std::size_t rho_weight(std::span<const Label> flat, std::size_t s);
std::size_t hamming_weight(std::span<const Label> flat);

// alpha X + beta Y, digitwise.
CodeWord linear_combine(Label alpha, const CodeWord& x, Label beta, const CodeWord& y);
CodeWord operator+(const CodeWord& a, const CodeWord& b);
CodeWord operator-(const CodeWord& a, const CodeWord& b);

// Sum over rows of sum_i a_{j,i} b_{j,s-1-i}.
Label inner_product(const CodeWord& a, const CodeWord& b);
Label inner_product(const Field& f, std::span<const Label> a, std::span<const Label> b, std::size_t s);

// A point of Q^n(q^s), stored exactly as its code word.
class Point {
 public:
  explicit Point(CodeWord w) : w_(std::move(w)) {}

  const CodeWord& word() const { return w_; }
  std::size_t n() const { return w_.n(); }
  std::size_t s() const { return w_.s(); }

  // Integer N_j with x_j = N_j / q^s.
  std::uint64_t numerator(std::size_t j) const;
  Rational coordinate(std::size_t j) const;

  // Most significant digit first: eta_1 .. eta_s.
  std::vector<Label> eta_digits(std::size_t j) const;

  static Point from_numerators(const Field& f, std::size_t s, std::span<const std::uint64_t> nums);
  static Point from_coordinates(const Field& f, std::size_t s, std::span<const Rational> xs);

  friend bool operator==(const Point& a, const Point& b) { return a.w_ == b.w_; }
  friend bool operator<(const Point& a, const Point& b) { return a.w_ < b.w_; }

 private:
  CodeWord w_;
};

inline std::size_t rho_weight(const Point& x) { return rho_weight(x.word()); }
inline std::size_t hamming_weight(const Point& x) { return hamming_weight(x.word()); }
Point linear_combine(Label alpha, const Point& x, Label beta, const Point& y);

// Truncation to the first s q-ary digits: floor(x q^s) / q^s, for x in [0, 1).
Rational tau_project(const Rational& x, unsigned q, std::size_t s);
// Coordinatewise projection of an arbitrary point of [0,1)^n onto Q^n(q^s).
Point tau_project(const Field& f, std::span<const Rational> xs, std::size_t s);

// Re-expresses every F_{p^e} digit xi_i as its e prime-field coordinates
// (mu_1, ..., mu_e), giving an n x (e s) word over F_p with the same real value.
CodeWord expand_to_prime_field(const CodeWord& w);
Point expand_to_prime_field(const Point& x);

// q^s as a 64-bit integer; throws when it does not fit.
std::uint64_t checked_power(unsigned q, std::size_t s);

}  // namespace nrt
