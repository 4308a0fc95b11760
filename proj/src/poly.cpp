#include "nrt/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace nrt {

unsigned binomial_mod_p(std::uint64_t i, std::uint64_t j, unsigned p) {
  if (j > i) return 0;
  unsigned result = 1;
  while (i > 0 || j > 0) {
    const unsigned a = static_cast<unsigned>(i % p), b = static_cast<unsigned>(j % p);
    if (b > a) return 0;
    // C(a, b) mod p for digits a, b < p.
    std::uint64_t num = 1, den = 1;
    for (unsigned k = 0; k < b; ++k) {
      num = num * (a - k) % p;
      den = den * (k + 1) % p;
    }
    std::uint64_t den_inv = 1;
    for (unsigned e = p - 2, base = static_cast<unsigned>(den); e > 0; e >>= 1) {
      if (e & 1) den_inv = den_inv * base % p;
      base = static_cast<unsigned>(static_cast<std::uint64_t>(base) * base % p);
    }
    if (p == 2) den_inv = 1;
    result = static_cast<unsigned>(result * (num * den_inv % p) % p);
    i /= p;
    j /= p;
  }
  return result;
}

Poly::Poly(const Field& f, std::vector<Label> coeffs) : field_(&f), c_(std::move(coeffs)) {
  for (Label c : c_)
    if (c >= f.q()) throw std::out_of_range("coefficient label out of range");
  trim();
}

Poly Poly::monomial(const Field& f, std::size_t degree, Label c) {
  std::vector<Label> v(degree + 1, 0);
  v[degree] = c;
  return Poly(f, std::move(v));
}

Poly Poly::linear_power(const Field& f, Label beta, std::size_t i) {
  Poly base(f, {f.neg(beta), 1});
  Poly out(f, {1});
  for (std::size_t k = 0; k < i; ++k) out = out * base;
  return out;
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Field& Poly::checked(const Poly& o) const {
  if (field_ != o.field_) throw std::invalid_argument("field mismatch");
  return *field_;
}

Label Poly::operator()(Label x) const {
  Label acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = field_->add(field_->mul(acc, x), c_[i]);
  return acc;
}

Poly Poly::operator+(const Poly& o) const {
  const Field& f = checked(o);
  std::vector<Label> v(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.add(coeff(i), o.coeff(i));
  return Poly(f, std::move(v));
}

Poly Poly::operator-(const Poly& o) const {
  const Field& f = checked(o);
  std::vector<Label> v(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.sub(coeff(i), o.coeff(i));
  return Poly(f, std::move(v));
}

Poly Poly::operator*(const Poly& o) const {
  const Field& f = checked(o);
  if (is_zero() || o.is_zero()) return Poly(f);
  std::vector<Label> v(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] = f.add(v[i + j], f.mul(c_[i], o.c_[j]));
  }
  return Poly(f, std::move(v));
}

Poly Poly::scaled(Label a) const {
  std::vector<Label> v(c_);
  for (auto& x : v) x = field_->mul(x, a);
  return Poly(*field_, std::move(v));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
  const Field& f = checked(d);
  if (d.is_zero()) throw std::domain_error("division by zero");
  std::vector<Label> rem(c_);
  const std::size_t dd = d.c_.size() - 1;
  if (rem.size() <= dd) return {Poly(f), *this};
  std::vector<Label> quo(rem.size() - dd, 0);
  const Label lead_inv = f.inv(d.c_.back());
  for (std::size_t k = rem.size(); k-- > dd;) {
    const Label factor = f.mul(rem[k], lead_inv);
    quo[k - dd] = factor;
    if (factor == 0) continue;
    for (std::size_t i = 0; i <= dd; ++i) rem[k - dd + i] = f.sub(rem[k - dd + i], f.mul(factor, d.c_[i]));
  }
  rem.resize(dd);
  return {Poly(f, std::move(quo)), Poly(f, std::move(rem))};
}

std::ostream& operator<<(std::ostream& os, const Poly& f) {
  for (std::size_t i = 0; i < f.c_.size(); ++i) os << (i ? " " : "") << f.c_[i];
  if (f.c_.empty()) os << 0;
  return os;
}

Label Node::value() const {
  if (!v_) throw std::logic_error("node at infinity has no finite value");
  return *v_;
}

std::ostream& operator<<(std::ostream& os, const Node& n) {
  if (n.is_infinity()) return os << "inf";
  return os << n.value();
}

Poly hyperderivative(const Poly& f, std::size_t j) {
  const Field& F = f.field();
  const auto& c = f.coeffs();
  if (c.size() <= j) return Poly(F);
  std::vector<Label> v(c.size() - j, 0);
  for (std::size_t i = j; i < c.size(); ++i) {
    const unsigned b = binomial_mod_p(i, j, F.p());
    if (b != 0 && c[i] != 0) v[i - j] = F.mul(b, c[i]);
  }
  return Poly(F, std::move(v));
}

Poly formal_derivative(const Poly& f) {
  const Field& F = f.field();
  const auto& c = f.coeffs();
  if (c.size() <= 1) return Poly(F);
  std::vector<Label> v(c.size() - 1, 0);
  for (std::size_t i = 1; i < c.size(); ++i) v[i - 1] = F.mul(static_cast<Label>(i % F.p()), c[i]);
  return Poly(F, std::move(v));
}

Label eval(const Poly& f, const Node& beta, std::size_t j, std::size_t t) {
  if (beta.is_infinity()) {
    if (static_cast<long>(t) < f.degree() + 1) throw std::invalid_argument("ambient degree too small");
    if (j + 1 > t) return 0;
    return f.coeff(t - 1 - j);
  }
  const Field& F = f.field();
  const Label x = beta.value();
  const auto& c = f.coeffs();
  Label acc = 0;
  for (std::size_t i = c.size(); i-- > j;) {
    const unsigned b = binomial_mod_p(i, j, F.p());
    acc = F.add(F.mul(acc, x), b ? F.mul(b, c[i]) : 0);
  }
  return acc;
}

std::vector<Label> taylor_expand(const Poly& f, Label beta) {
  std::vector<Label> out;
  for (long j = 0; j <= f.degree(); ++j) out.push_back(eval(f, Node::at(beta), static_cast<std::size_t>(j), 0));
  return out;
}

Poly from_taylor(const Field& f, std::span<const Label> a, Label beta) {
  Poly out(f);
  Poly power(f, {1});
  const Poly base(f, {f.neg(beta), 1});
  for (Label aj : a) {
    out = out + power.scaled(aj);
    power = power * base;
  }
  return out;
}

Poly inverse_mod(const Poly& a, const Poly& m) {
  const Field& F = a.field();
  // Extended Euclid tracking only the coefficient of a.
  Poly r0 = m, r1 = a.divmod(m).second;
  Poly s0(F), s1(F, {1});
  while (!r1.is_zero()) {
    auto [quo, rem] = r0.divmod(r1);
    Poly s2 = s0 - quo * s1;
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.degree() != 0) throw std::domain_error("polynomials are not coprime");
  return s0.scaled(F.inv(r0.coeff(0))).divmod(m).second;
}

namespace {

void validate(const Field& F, const HermiteProblem& prob) {
  const std::size_t l = prob.nodes.size();
  if (prob.targets.size() != l || prob.multiplicities.size() != l)
    throw std::invalid_argument("hermite: inconsistent dimensions");
  std::size_t total = 0;
  for (std::size_t i = 0; i < l; ++i) {
    if (prob.multiplicities[i] == 0 || prob.targets[i].size() != prob.multiplicities[i])
      throw std::invalid_argument("hermite: inconsistent dimensions");
    for (Label a : prob.targets[i])
      if (a >= F.q()) throw std::out_of_range("hermite: target label out of range");
    total += prob.multiplicities[i];
  }
  if (prob.t < 1 || total != prob.t) throw std::invalid_argument("hermite: inconsistent dimensions");
  for (std::size_t i = 0; i < l; ++i) {
    if (!prob.nodes[i].is_infinity() && prob.nodes[i].value() >= F.q())
      throw std::out_of_range("hermite: node label out of range");
    for (std::size_t k = i + 1; k < l; ++k)
      if (prob.nodes[i] == prob.nodes[k]) throw std::invalid_argument("hermite: duplicate nodes");
  }
}

// All nodes finite: CRT over the moduli (z - beta_i)^{t_i}.
Poly solve_finite(const Field& F, const std::vector<Node>& nodes, const std::vector<std::vector<Label>>& targets) {
  Poly f(F);
  Poly modulus(F, {1});
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const Label beta = nodes[i].value();
    const Poly r = from_taylor(F, targets[i], beta);
    const Poly m = Poly::linear_power(F, beta, targets[i].size());
    if (i == 0) {
      f = r;
      modulus = m;
      continue;
    }
    // f + modulus * u with u = (r - f) modulus^{-1} mod m.
    const Poly u = ((r - f) * inverse_mod(modulus, m)).divmod(m).second;
    f = f + modulus * u;
    modulus = modulus * m;
  }
  return f;
}

}  // namespace

Poly hermite_interpolate(const Field& F, const HermiteProblem& prob) {
  validate(F, prob);
  const std::size_t t = prob.t;
  std::vector<Node> finite_nodes;
  std::vector<std::vector<Label>> finite_targets;
  std::optional<std::size_t> inf_index;
  for (std::size_t i = 0; i < prob.nodes.size(); ++i) {
    if (prob.nodes[i].is_infinity())
      inf_index = i;
    else {
      finite_nodes.push_back(prob.nodes[i]);
      finite_targets.push_back(prob.targets[i]);
    }
  }
  Poly tail(F);
  if (inf_index) {
    // f = g + r with r carrying the top t_l coefficients f_{t-1}, ..., f_{t-t_l}.
    const auto& a = prob.targets[*inf_index];
    std::vector<Label> v(t, 0);
    for (std::size_t j = 0; j < a.size(); ++j) v[t - 1 - j] = a[j];
    tail = Poly(F, std::move(v));
    for (std::size_t i = 0; i < finite_nodes.size(); ++i) {
      const Node& beta = finite_nodes[i];
      for (std::size_t j = 0; j < finite_targets[i].size(); ++j)
        finite_targets[i][j] = F.sub(finite_targets[i][j], eval(tail, beta, j, t));
    }
  }
  if (finite_nodes.empty()) return tail;
  return solve_finite(F, finite_nodes, finite_targets) + tail;
}

}  // namespace nrt
