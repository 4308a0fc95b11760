#pragma once

// Finite fields F_{p^e} in a fixed polynomial basis.
//
// Elements are identified with integer labels m = mu_1 + mu_2 p + ... + mu_e p^{e-1},
// where (mu_1, ..., mu_e) are the coordinates in the basis 1, z, ..., z^{e-1}.
// Field instances are interned: Field::get returns a reference that stays valid
// for the lifetime of the program, so FieldElement can hold a plain pointer.

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace nrt {

using Label = std::uint32_t;

inline constexpr unsigned kDefaultMaxQ = 1u << 16;
inline constexpr unsigned kLogTableMaxQ = 1u << 12;

bool is_prime(unsigned n);

struct FieldSpec {
  unsigned p = 2;
  unsigned e = 1;
  // e+1 coefficients, constant term first, leading coefficient 1.
  std::vector<unsigned> modulus;

  unsigned q() const;

  // "p e c_0 c_1 ... c_e"
  std::string to_string() const;
  static FieldSpec parse(const std::string& line);

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

// Polynomials over F_p as coefficient vectors (constant term first).
namespace prime_poly {
std::vector<unsigned> remainder(std::vector<unsigned> a, const std::vector<unsigned>& m, unsigned p);
bool is_irreducible(const std::vector<unsigned>& f, unsigned p);
// Smallest monic irreducible of degree e, ordering the lower e coefficients as
// the base-p integer c_0 + c_1 p + ... + c_{e-1} p^{e-1}.
std::vector<unsigned> smallest_irreducible(unsigned p, unsigned e);
}  // namespace prime_poly

class FieldElement;

class Field {
 public:
  static const Field& get(unsigned p, unsigned e);
  static const Field& get(const FieldSpec& spec, unsigned max_q = kDefaultMaxQ);
  // q must be a prime power.
  static const Field& of_order(unsigned q);

  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

  const FieldSpec& spec() const { return spec_; }
  unsigned p() const { return spec_.p; }
  unsigned e() const { return spec_.e; }
  unsigned q() const { return q_; }

  Label add(Label a, Label b) const;
  Label sub(Label a, Label b) const;
  Label neg(Label a) const;
  Label mul(Label a, Label b) const;
  Label inv(Label a) const;
  Label div(Label a, Label b) const { return mul(a, inv(b)); }
  Label pow(Label a, std::uint64_t k) const;
  Label frobenius(Label a) const { return pow(a, p()); }
  // Tr(a) = a + a^p + ... + a^{p^{e-1}}; the result is a label < p.
  Label trace(Label a) const;

  std::vector<unsigned> digits(Label a) const;
  Label from_digits(std::span<const unsigned> mu) const;

  FieldElement elem(std::uint64_t m) const;
  FieldElement zero() const;
  FieldElement one() const;

  // Smallest label of multiplicative order q-1.
  Label primitive() const { return primitive_; }
  bool uses_log_tables() const { return !log_.empty(); }

 private:
  explicit Field(FieldSpec spec);
  Label mul_schoolbook(Label a, Label b) const;
  Label add_digits(Label a, Label b, bool subtract) const;

  FieldSpec spec_;
  unsigned q_;
  Label primitive_ = 1;
  std::vector<std::uint32_t> log_;  // log_[a] for a != 0
  std::vector<Label> exp_;          // exp_[i] for 0 <= i < 2(q-1)
};

class FieldElement {
 public:
  FieldElement(const Field& f, Label v) : field_(&f), v_(v) {}

  const Field& field() const { return *field_; }
  Label label() const { return v_; }
  std::vector<unsigned> coeffs() const { return field_->digits(v_); }
  bool is_zero() const { return v_ == 0; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const { return {*field_, field_->neg(v_)}; }
  FieldElement inv() const { return {*field_, field_->inv(v_)}; }
  FieldElement pow(std::uint64_t k) const { return {*field_, field_->pow(v_, k)}; }
  FieldElement trace() const { return {*field_, field_->trace(v_)}; }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.field_ == b.field_ && a.v_ == b.v_;
  }
  friend std::ostream& operator<<(std::ostream& os, const FieldElement& a) { return os << a.v_; }

 private:
  const Field& checked(const FieldElement& o) const;

  const Field* field_;
  Label v_;
};

// Free-function forms.
inline FieldElement add(const FieldElement& a, const FieldElement& b) { return a + b; }
inline FieldElement mul(const FieldElement& a, const FieldElement& b) { return a * b; }
inline FieldElement inv(const FieldElement& a) { return a.inv(); }
inline FieldElement trace(const FieldElement& a) { return a.trace(); }
inline std::uint64_t int_of(const FieldElement& a) { return a.label(); }
inline FieldElement elem_of(const Field& f, std::uint64_t m) { return f.elem(m); }

// Returns (p, e) with q = p^e, or nullopt when q is not a prime power.
std::optional<std::pair<unsigned, unsigned>> prime_power(unsigned q);

}  // namespace nrt
