#include "nrt/gf.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace nrt {

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::optional<std::pair<unsigned, unsigned>> prime_power(unsigned q) {
  if (q < 2) return std::nullopt;
  unsigned p = 2;
  while (q % p != 0) ++p;
  unsigned e = 0;
  while (q % p == 0) {
    q /= p;
    ++e;
  }
  if (q != 1) return std::nullopt;
  return std::make_pair(p, e);
}

unsigned FieldSpec::q() const {
  unsigned q = 1;
  for (unsigned i = 0; i < e; ++i) q *= p;
  return q;
}

std::string FieldSpec::to_string() const {
  std::ostringstream os;
  os << p << ' ' << e;
  for (unsigned c : modulus) os << ' ' << c;
  return os.str();
}

FieldSpec FieldSpec::parse(const std::string& line) {
  std::istringstream is(line);
  FieldSpec spec;
  if (!(is >> spec.p >> spec.e)) throw std::invalid_argument("field line: expected 'p e modulus...'");
  unsigned c;
  while (is >> c) spec.modulus.push_back(c);
  if (!is.eof()) throw std::invalid_argument("field line: non-integer token");
  if (spec.modulus.size() != spec.e + 1)
    throw std::invalid_argument("field line: modulus must have e+1 coefficients");
  return spec;
}

namespace prime_poly {

std::vector<unsigned> remainder(std::vector<unsigned> a, const std::vector<unsigned>& m, unsigned p) {
  const std::size_t dm = m.size() - 1;
  // Inverse of the leading coefficient of m mod p.
  unsigned lead_inv = 1;
  while ((lead_inv * m[dm]) % p != 1) ++lead_inv;
  while (a.size() > dm) {
    unsigned c = a.back();
    if (c != 0) {
      const unsigned factor = (c * lead_inv) % p;
      const std::size_t shift = a.size() - 1 - dm;
      for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = (a[shift + i] + p * p - (factor * m[i]) % p) % p;
    }
    a.pop_back();
  }
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

bool is_irreducible(const std::vector<unsigned>& f, unsigned p) {
  const std::size_t deg = f.size() - 1;
  if (deg < 1 || f.back() == 0) return false;
  // Trial division by every monic polynomial of degree 1..deg/2.
  for (std::size_t d = 1; 2 * d <= deg; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t c = 0; c < count; ++c) {
      std::vector<unsigned> g(d + 1);
      std::uint64_t x = c;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<unsigned>(x % p);
        x /= p;
      }
      g[d] = 1;
      if (remainder(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::vector<unsigned> smallest_irreducible(unsigned p, unsigned e) {
  std::uint64_t count = 1;
  for (unsigned i = 0; i < e; ++i) count *= p;
  for (std::uint64_t c = 0; c < count; ++c) {
    std::vector<unsigned> f(e + 1);
    std::uint64_t x = c;
    for (unsigned i = 0; i < e; ++i) {
      f[i] = static_cast<unsigned>(x % p);
      x /= p;
    }
    f[e] = 1;
    if (is_irreducible(f, p)) return f;
  }
  throw std::logic_error("no irreducible polynomial found");
}

}  // namespace prime_poly

namespace {

struct Registry {
  std::mutex mu;
  std::map<std::tuple<unsigned, unsigned, std::vector<unsigned>>, std::unique_ptr<Field>> fields;
};

Registry& registry() {
  static Registry r;
  return r;
}

}  // namespace

const Field& Field::get(unsigned p, unsigned e) {
  if (!is_prime(p)) throw std::invalid_argument("characteristic is not prime");
  if (e < 1) throw std::invalid_argument("extension degree must be >= 1");
  FieldSpec spec{p, e, {}};
  if (spec.q() > kDefaultMaxQ || spec.q() == 0) throw std::invalid_argument("field order exceeds bound");
  spec.modulus = prime_poly::smallest_irreducible(p, e);
  return get(spec);
}

const Field& Field::of_order(unsigned q) {
  auto pe = prime_power(q);
  if (!pe) throw std::invalid_argument("q is not a prime power");
  return get(pe->first, pe->second);
}

const Field& Field::get(const FieldSpec& spec, unsigned max_q) {
  if (!is_prime(spec.p)) throw std::invalid_argument("characteristic is not prime");
  if (spec.e < 1) throw std::invalid_argument("extension degree must be >= 1");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < spec.e; ++i) {
    q *= spec.p;
    if (q > max_q) throw std::invalid_argument("field order exceeds bound");
  }
  if (spec.modulus.size() != spec.e + 1 || spec.modulus.back() != 1)
    throw std::invalid_argument("modulus must be monic of degree e");
  for (unsigned c : spec.modulus)
    if (c >= spec.p) throw std::invalid_argument("modulus coefficient out of range");
  if (!prime_poly::is_irreducible(spec.modulus, spec.p)) throw std::invalid_argument("modulus is reducible");

  auto& reg = registry();
  std::lock_guard lock(reg.mu);
  auto key = std::make_tuple(spec.p, spec.e, spec.modulus);
  auto it = reg.fields.find(key);
  if (it == reg.fields.end()) it = reg.fields.emplace(key, std::unique_ptr<Field>(new Field(spec))).first;
  return *it->second;
}

Field::Field(FieldSpec spec) : spec_(std::move(spec)), q_(spec_.q()) {
  // Multiplicative order search for the primitive element; done on the
  // schoolbook product so that the tables below can depend on it.
  for (Label g = 1; g < q_; ++g) {
    if (q_ == 2) {
      primitive_ = 1;
      break;
    }
    Label x = g;
    std::uint32_t order = 1;
    while (x != 1) {
      x = mul_schoolbook(x, g);
      ++order;
    }
    if (order == q_ - 1) {
      primitive_ = g;
      break;
    }
  }
  if (q_ <= kLogTableMaxQ) {
    log_.assign(q_, 0);
    exp_.assign(2 * (q_ - 1), 0);
    Label x = 1;
    for (std::uint32_t i = 0; i < q_ - 1; ++i) {
      exp_[i] = x;
      exp_[i + q_ - 1] = x;
      log_[x] = i;
      x = mul_schoolbook(x, primitive_);
    }
  }
}

Label Field::add_digits(Label a, Label b, bool subtract) const {
  const unsigned p = spec_.p;
  if (p == 2) return a ^ b;
  Label out = 0;
  Label scale = 1;
  for (unsigned i = 0; i < spec_.e; ++i) {
    const unsigned da = a % p, db = b % p;
    const unsigned d = subtract ? (da + p - db) % p : (da + db) % p;
    out += d * scale;
    scale *= p;
    a /= p;
    b /= p;
  }
  return out;
}

Label Field::add(Label a, Label b) const { return add_digits(a, b, false); }
Label Field::sub(Label a, Label b) const { return add_digits(a, b, true); }
Label Field::neg(Label a) const { return add_digits(0, a, true); }

Label Field::mul_schoolbook(Label a, Label b) const {
  const unsigned p = spec_.p, e = spec_.e;
  const auto da = digits(a), db = digits(b);
  std::vector<unsigned> prod(2 * e - 1, 0);
  for (unsigned i = 0; i < e; ++i) {
    if (da[i] == 0) continue;
    for (unsigned j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
  }
  auto r = prime_poly::remainder(std::move(prod), spec_.modulus, p);
  r.resize(e, 0);
  return from_digits(r);
}

Label Field::mul(Label a, Label b) const {
  if (a == 0 || b == 0) return 0;
  if (!log_.empty()) return exp_[log_[a] + log_[b]];
  return mul_schoolbook(a, b);
}

Label Field::inv(Label a) const {
  if (a == 0) throw std::domain_error("division by zero");
  if (!log_.empty()) return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
  return pow(a, q_ - 2);
}

Label Field::pow(Label a, std::uint64_t k) const {
  Label result = 1;
  Label base = a;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

Label Field::trace(Label a) const {
  Label sum = 0;
  Label term = a;
  for (unsigned i = 0; i < spec_.e; ++i) {
    sum = add(sum, term);
    term = frobenius(term);
  }
  return sum;
}

std::vector<unsigned> Field::digits(Label a) const {
  std::vector<unsigned> mu(spec_.e);
  for (unsigned i = 0; i < spec_.e; ++i) {
    mu[i] = a % spec_.p;
    a /= spec_.p;
  }
  return mu;
}

Label Field::from_digits(std::span<const unsigned> mu) const {
  if (mu.size() != spec_.e) throw std::invalid_argument("digit vector length must equal e");
  Label m = 0;
  for (std::size_t i = mu.size(); i-- > 0;) {
    if (mu[i] >= spec_.p) throw std::out_of_range("digit out of range");
    m = m * spec_.p + mu[i];
  }
  return m;
}

FieldElement Field::elem(std::uint64_t m) const {
  if (m >= q_) throw std::out_of_range("field label out of range");
  return {*this, static_cast<Label>(m)};
}

FieldElement Field::zero() const { return {*this, 0}; }
FieldElement Field::one() const { return {*this, 1}; }

const Field& FieldElement::checked(const FieldElement& o) const {
  if (field_ != o.field_) throw std::invalid_argument("field mismatch");
  return *field_;
}

FieldElement FieldElement::operator+(const FieldElement& o) const { return {checked(o), field_->add(v_, o.v_)}; }
FieldElement FieldElement::operator-(const FieldElement& o) const { return {checked(o), field_->sub(v_, o.v_)}; }
FieldElement FieldElement::operator*(const FieldElement& o) const { return {checked(o), field_->mul(v_, o.v_)}; }
FieldElement FieldElement::operator/(const FieldElement& o) const { return {checked(o), field_->div(v_, o.v_)}; }

}  // namespace nrt
