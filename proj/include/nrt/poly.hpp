#pragma once

// Univariate polynomials over F_q with Hasse hyperderivatives and
// Hermite interpolation at nodes in F_q and at infinity.

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

#include "nrt/gf.hpp"

namespace nrt {

// C(i, j) mod p by Lucas' theorem; zero for j > i.
unsigned binomial_mod_p(std::uint64_t i, std::uint64_t j, unsigned p);

class Poly {
 public:
  explicit Poly(const Field& f) : field_(&f) {}
  Poly(const Field& f, std::vector<Label> coeffs);
  Poly(const Field& f, std::initializer_list<Label> coeffs) : Poly(f, std::vector<Label>(coeffs)) {}

  static Poly monomial(const Field& f, std::size_t degree, Label c = 1);
  // (z - beta)^i
  static Poly linear_power(const Field& f, Label beta, std::size_t i);

  const Field& field() const { return *field_; }
  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  // f_i, zero beyond the degree.
  Label coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  const std::vector<Label>& coeffs() const { return c_; }

  Label operator()(Label x) const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly scaled(Label a) const;
  // Quotient and remainder.
  std::pair<Poly, Poly> divmod(const Poly& d) const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.field_ == b.field_ && a.c_ == b.c_; }
  friend std::ostream& operator<<(std::ostream& os, const Poly& f);

 private:
  void trim();
  const Field& checked(const Poly& o) const;

  const Field* field_;
  std::vector<Label> c_;
};

class Node {
 public:
  static Node infinity() { return Node(); }
  static Node at(Label v) { return Node(v); }

  bool is_infinity() const { return !v_.has_value(); }
  Label value() const;

  friend bool operator==(const Node&, const Node&) = default;

 private:
  Node() = default;
  explicit Node(Label v) : v_(v) {}
  std::optional<Label> v_;
};

std::ostream& operator<<(std::ostream& os, const Node& n);

struct HermiteProblem {
  std::vector<Node> nodes;
  std::vector<std::size_t> multiplicities;
  // targets[i][j] = prescribed value of the j-th hyperderivative at nodes[i].
  std::vector<std::vector<Label>> targets;
  std::size_t t = 0;
};

Poly hyperderivative(const Poly& f, std::size_t j);
// Usual formal derivative f'.
Poly formal_derivative(const Poly& f);

// j-th hyperderivative at beta. At infinity the value is f_{t-1-j} (zero for j > t-1),
// where t is the dimension of the ambient space M^t and must satisfy t >= deg f + 1.
Label eval(const Poly& f, const Node& beta, std::size_t j, std::size_t t);

// (hyperderivative_0(beta), ..., hyperderivative_{deg f}(beta)).
std::vector<Label> taylor_expand(const Poly& f, Label beta);
// Sum_j a_j (z - beta)^j.
Poly from_taylor(const Field& f, std::span<const Label> a, Label beta);

// The unique f with deg f < t satisfying every constraint.
Poly hermite_interpolate(const Field& f, const HermiteProblem& prob);

// Inverse of a modulo m (gcd must be 1).
Poly inverse_mod(const Poly& a, const Poly& m);

}  // namespace nrt
