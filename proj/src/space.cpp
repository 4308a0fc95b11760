#include "nrt/space.hpp"

#include <stdexcept>

namespace nrt {

std::uint64_t checked_power(unsigned q, std::size_t s) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < s; ++i) {
    if (r > (std::uint64_t{1} << 62) / q) throw std::overflow_error("q^s does not fit in 64 bits");
    r *= q;
  }
  return r;
}

CodeWord::CodeWord(const Field& f, std::size_t n, std::size_t s) : field_(&f), n_(n), s_(s), e_(n * s, 0) {}

CodeWord::CodeWord(const Field& f, std::size_t n, std::size_t s, std::vector<Label> entries)
    : field_(&f), n_(n), s_(s), e_(std::move(entries)) {
  if (e_.size() != n * s) throw std::invalid_argument("code word: entry count must be n*s");
  for (Label x : e_)
    if (x >= f.q()) throw std::out_of_range("code word: label out of range");
}

CodeWord CodeWord::from_rows(const Field& f, const std::vector<std::vector<Label>>& rows) {
  if (rows.empty()) throw std::invalid_argument("code word: no rows");
  const std::size_t s = rows.front().size();
  std::vector<Label> flat;
  for (const auto& r : rows) {
    if (r.size() != s) throw std::invalid_argument("code word: ragged rows");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return CodeWord(f, rows.size(), s, std::move(flat));
}

bool CodeWord::is_zero() const {
  for (Label x : e_)
    if (x != 0) return false;
  return true;
}

std::size_t rho_row(std::span<const Label> row) {
  for (std::size_t i = row.size(); i-- > 0;)
    if (row[i] != 0) return i + 1;
  return 0;
}

std::size_t rho_weight(std::span<const Label> flat, std::size_t s) {
  std::size_t total = 0;
  for (std::size_t off = 0; off < flat.size(); off += s) total += rho_row(flat.subspan(off, s));
  return total;
}

std::size_t hamming_weight(std::span<const Label> flat) {
  std::size_t k = 0;
  for (Label x : flat) k += (x != 0);
  return k;
}

std::size_t rho_weight(const CodeWord& w) { return rho_weight(w.flat(), w.s()); }
std::size_t hamming_weight(const CodeWord& w) { return hamming_weight(w.flat()); }

namespace {
void require_same(const CodeWord& a, const CodeWord& b) {
  if (&a.field() != &b.field()) throw std::invalid_argument("field mismatch");
  if (a.n() != b.n() || a.s() != b.s()) throw std::invalid_argument("parameter mismatch");
}
}  // namespace

CodeWord linear_combine(Label alpha, const CodeWord& x, Label beta, const CodeWord& y) {
  require_same(x, y);
  const Field& f = x.field();
  std::vector<Label> out(x.flat().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.add(f.mul(alpha, x.flat()[i]), f.mul(beta, y.flat()[i]));
  return CodeWord(f, x.n(), x.s(), std::move(out));
}

CodeWord operator+(const CodeWord& a, const CodeWord& b) { return linear_combine(1, a, 1, b); }

CodeWord operator-(const CodeWord& a, const CodeWord& b) {
  return linear_combine(1, a, a.field().neg(1), b);
}

Label inner_product(const Field& f, std::span<const Label> a, std::span<const Label> b, std::size_t s) {
  if (a.size() != b.size() || a.size() % s != 0) throw std::invalid_argument("parameter mismatch");
  Label acc = 0;
  for (std::size_t off = 0; off < a.size(); off += s)
    for (std::size_t i = 0; i < s; ++i) acc = f.add(acc, f.mul(a[off + i], b[off + s - 1 - i]));
  return acc;
}

Label inner_product(const CodeWord& a, const CodeWord& b) {
  require_same(a, b);
  return inner_product(a.field(), a.flat(), b.flat(), a.s());
}

std::uint64_t Point::numerator(std::size_t j) const {
  const unsigned q = w_.field().q();
  std::uint64_t v = 0;
  for (std::size_t i = w_.s(); i-- > 0;) v = v * q + w_.at(j, i);
  return v;
}

Rational Point::coordinate(std::size_t j) const {
  const unsigned q = w_.field().q();
  BigInt num = 0;
  for (std::size_t i = w_.s(); i-- > 0;) num = num * q + w_.at(j, i);
  return Rational(num, big_pow(q, static_cast<unsigned>(w_.s())));
}

std::vector<Label> Point::eta_digits(std::size_t j) const {
  std::vector<Label> d(w_.s());
  for (std::size_t i = 0; i < w_.s(); ++i) d[i] = w_.at(j, w_.s() - 1 - i);
  return d;
}

Point Point::from_numerators(const Field& f, std::size_t s, std::span<const std::uint64_t> nums) {
  const unsigned q = f.q();
  const std::uint64_t bound = checked_power(q, s);
  CodeWord w(f, nums.size(), s);
  for (std::size_t j = 0; j < nums.size(); ++j) {
    if (nums[j] >= bound) throw std::out_of_range("coordinate outside [0,1)");
    std::uint64_t v = nums[j];
    for (std::size_t i = 0; i < s; ++i) {
      w.at(j, i) = static_cast<Label>(v % q);
      v /= q;
    }
  }
  return Point(std::move(w));
}

Point Point::from_coordinates(const Field& f, std::size_t s, std::span<const Rational> xs) {
  const BigInt scale = big_pow(f.q(), static_cast<unsigned>(s));
  std::vector<std::uint64_t> nums;
  for (const auto& x : xs) {
    if (x < 0 || x >= 1) throw std::out_of_range("coordinate outside [0,1)");
    const Rational scaled = x * scale;
    if (boost::multiprecision::denominator(scaled) != 1) throw std::invalid_argument("coordinate is not in Q(q^s)");
    nums.push_back(static_cast<std::uint64_t>(boost::multiprecision::numerator(scaled)));
  }
  return from_numerators(f, s, nums);
}

Point linear_combine(Label alpha, const Point& x, Label beta, const Point& y) {
  return Point(linear_combine(alpha, x.word(), beta, y.word()));
}

Rational tau_project(const Rational& x, unsigned q, std::size_t s) {
  if (x < 0 || x >= 1) throw std::out_of_range("tau_project: x outside [0,1)");
  const BigInt scale = big_pow(q, static_cast<unsigned>(s));
  const Rational scaled = x * scale;
  const BigInt fl = numerator(scaled) / denominator(scaled);
  return Rational(fl, scale);
}

Point tau_project(const Field& f, std::span<const Rational> xs, std::size_t s) {
  std::vector<Rational> proj;
  for (const auto& x : xs) proj.push_back(tau_project(x, f.q(), s));
  return Point::from_coordinates(f, s, proj);
}

CodeWord expand_to_prime_field(const CodeWord& w) {
  const Field& f = w.field();
  const Field& base = Field::get(f.p(), 1);
  const std::size_t e = f.e();
  CodeWord out(base, w.n(), e * w.s());
  for (std::size_t j = 0; j < w.n(); ++j)
    for (std::size_t i = 0; i < w.s(); ++i) {
      const auto mu = f.digits(w.at(j, i));
      for (std::size_t m = 0; m < e; ++m) out.at(j, e * i + m) = mu[m];
    }
  return out;
}

Point expand_to_prime_field(const Point& x) { return Point(expand_to_prime_field(x.word())); }

}  // namespace nrt
