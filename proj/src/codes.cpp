#include "nrt/codes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace nrt {

namespace {

Matrix reduced(Matrix m, std::vector<std::size_t>& pivots) {
  pivots = m.rref();
  return m;
}

// Reverses the digit order inside every row of a flattened n x s word.
std::vector<Label> reverse_rows(std::span<const Label> flat, std::size_t s) {
  std::vector<Label> out(flat.size());
  for (std::size_t off = 0; off < flat.size(); off += s)
    for (std::size_t i = 0; i < s; ++i) out[off + i] = flat[off + s - 1 - i];
  return out;
}

}  // namespace

LinearCode::LinearCode(const Field& f, std::size_t n, std::size_t s, Matrix generators)
    : n_(n), s_(s), basis_(f, 0, n * s) {
  if (&generators.field() != &f) throw std::invalid_argument("field mismatch");
  if (generators.cols() != n * s) throw std::invalid_argument("generator rows must have length n*s");
  basis_ = reduced(std::move(generators), pivots_);
}

LinearCode LinearCode::zero(const Field& f, std::size_t n, std::size_t s) { return LinearCode(f, n, s, Matrix(f, 0, n * s)); }

LinearCode LinearCode::whole_space(const Field& f, std::size_t n, std::size_t s) {
  Matrix m(f, n * s, n * s);
  for (std::size_t i = 0; i < n * s; ++i) m.at(i, i) = 1;
  return LinearCode(f, n, s, std::move(m));
}

LinearCode LinearCode::span_of(const Field& f, std::size_t n, std::size_t s, const std::vector<CodeWord>& words) {
  Matrix m(f, 0, n * s);
  for (const auto& w : words) {
    if (&w.field() != &f) throw std::invalid_argument("field mismatch");
    if (w.n() != n || w.s() != s) throw std::invalid_argument("parameter mismatch");
    m.append_row(w.flat());
  }
  return LinearCode(f, n, s, std::move(m));
}

CodeWord LinearCode::basis_word(std::size_t i) const {
  const auto r = basis_.row(i);
  return CodeWord(field(), n_, s_, std::vector<Label>(r.begin(), r.end()));
}

std::uint64_t LinearCode::size() const { return checked_power(field().q(), k()); }

bool LinearCode::contains(std::span<const Label> flat) const {
  if (flat.size() != n_ * s_) throw std::invalid_argument("parameter mismatch");
  const Field& f = field();
  std::vector<Label> v(flat.begin(), flat.end());
  for (std::size_t r = 0; r < k(); ++r) {
    const Label c = v[pivots_[r]];
    if (c == 0) continue;
    const auto row = basis_.row(r);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.sub(v[i], f.mul(c, row[i]));
  }
  return std::all_of(v.begin(), v.end(), [](Label x) { return x == 0; });
}

void LinearCode::for_each_word(const std::function<void(std::span<const Label>)>& fn) const {
  const Field& f = field();
  const unsigned q = f.q();
  const std::size_t len = n_ * s_;
  const std::size_t kk = k();
  // mult[r][a] = a * basis row r
  std::vector<std::vector<std::vector<Label>>> mult(kk, std::vector<std::vector<Label>>(q, std::vector<Label>(len)));
  for (std::size_t r = 0; r < kk; ++r)
    for (Label a = 0; a < q; ++a)
      for (std::size_t i = 0; i < len; ++i) mult[r][a][i] = f.mul(a, basis_.at(r, i));

  std::vector<Label> w(len, 0);
  std::vector<Label> coeff(kk, 0);
  while (true) {
    fn(w);
    std::size_t r = 0;
    while (r < kk) {
      const Label old = coeff[r];
      const Label nxt = (old + 1 == q) ? 0 : old + 1;
      for (std::size_t i = 0; i < len; ++i) w[i] = f.add(f.sub(w[i], mult[r][old][i]), mult[r][nxt][i]);
      coeff[r] = nxt;
      if (nxt != 0) break;
      ++r;
    }
    if (r == kk) break;
  }
}

std::vector<CodeWord> LinearCode::words() const {
  std::vector<CodeWord> out;
  out.reserve(size());
  for_each_word([&](std::span<const Label> w) { out.emplace_back(field(), n_, s_, std::vector<Label>(w.begin(), w.end())); });
  return out;
}

std::size_t word_weight(std::span<const Label> flat, std::size_t s, Metric m) {
  return m == Metric::rho ? rho_weight(flat, s) : hamming_weight(flat);
}

std::size_t code_weight_bruteforce(const LinearCode& c, Metric m) {
  if (c.k() == 0) throw std::invalid_argument("zero code has no weight");
  std::size_t best = std::numeric_limits<std::size_t>::max();
  c.for_each_word([&](std::span<const Label> w) {
    const std::size_t x = word_weight(w, c.s(), m);
    if (x > 0 && x < best) best = x;
  });
  return best;
}

std::size_t code_weight(const LinearCode& c, Metric m) {
  if (c.k() == 0) throw std::invalid_argument("zero code has no weight");
  if (c.k() == c.n() * c.s()) return 1;
  const double words = std::pow(static_cast<double>(c.field().q()), static_cast<double>(c.k()));
  if (words <= static_cast<double>(kEnumerationBound)) return code_weight_bruteforce(c, m);
  const ParityCheck h = parity_check(c);
  return *(m == Metric::rho ? rho_sharp(h) : kappa_sharp(h));
}

bool is_mds(const LinearCode& c) {
  if (c.k() == 0) return true;  // weight taken as infinite
  return code_weight(c, Metric::rho) == c.n() * c.s() - c.k() + 1;
}

std::optional<std::size_t> weight_or_infinity(const LinearCode& c, Metric m) {
  if (c.k() == 0) return std::nullopt;
  return code_weight(c, m);
}

LinearCode dual_code(const LinearCode& c) {
  // <x, y> = x . rev(y), so C^perp = rev(standard kernel of the basis).
  const Matrix ker = c.basis().nullspace();
  Matrix out(c.field(), 0, c.n() * c.s());
  for (std::size_t r = 0; r < ker.rows(); ++r) out.append_row(reverse_rows(ker.row(r), c.s()));
  return LinearCode(c.field(), c.n(), c.s(), std::move(out));
}

std::vector<Label> ParityCheck::column(std::size_t j, std::size_t i) const {
  std::vector<Label> col(h.rows());
  for (std::size_t r = 0; r < h.rows(); ++r) col[r] = h.at(r, j * s + i);
  return col;
}

ParityCheck parity_check(const LinearCode& c) { return {&c.field(), c.n(), c.s(), c.basis().nullspace()}; }

LinearCode code_of(const ParityCheck& h) { return LinearCode(*h.field, h.n, h.s, h.h.nullspace()); }

namespace {

bool columns_dependent(const ParityCheck& h, const std::vector<std::size_t>& cols) {
  Matrix m(*h.field, 0, h.h.rows());
  for (std::size_t c : cols) m.append_row(h.column(c / h.s, c % h.s));
  return m.rank() < cols.size();
}

}  // namespace

std::optional<std::size_t> rho_sharp(const ParityCheck& h) {
  const std::size_t ns = h.n * h.s;
  for (std::size_t w = 1; w <= ns; ++w) {
    bool found = false;
    for_each_composition(h.n, w, h.s, [&](const std::vector<std::size_t>& d) {
      if (found) return;
      std::vector<std::size_t> cols;
      for (std::size_t j = 0; j < h.n; ++j)
        for (std::size_t i = 0; i < d[j]; ++i) cols.push_back(j * h.s + i);
      found = columns_dependent(h, cols);
    });
    if (found) return w;
  }
  return std::nullopt;
}

std::optional<std::size_t> kappa_sharp(const ParityCheck& h) {
  const std::size_t ns = h.n * h.s;
  for (std::size_t w = 1; w <= ns; ++w) {
    std::vector<bool> pick(ns, false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(w), true);
    do {
      std::vector<std::size_t> cols;
      for (std::size_t c = 0; c < ns; ++c)
        if (pick[c]) cols.push_back(c);
      if (columns_dependent(h, cols)) return w;
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return std::nullopt;
}

std::size_t rho_of_distribution(const Distribution& d) {
  if (d.size() < 2) throw std::invalid_argument("weight needs at least two points");
  std::size_t best = std::numeric_limits<std::size_t>::max();
  const auto& pts = d.points();
  for (std::size_t a = 0; a < pts.size(); ++a)
    for (std::size_t b = a + 1; b < pts.size(); ++b) {
      best = std::min(best, rho_weight(pts[a].word() - pts[b].word()));
      if (best == 0) return 0;
    }
  return best;
}

Distribution distribution_of(const LinearCode& c) {
  Distribution d(c.field(), c.n(), c.s());
  c.for_each_word([&](std::span<const Label> w) {
    d.add(Point(CodeWord(c.field(), c.n(), c.s(), std::vector<Label>(w.begin(), w.end()))));
  });
  return d;
}

namespace {

// The span of D when D is exactly that span (distinct points, #D = q^dim).
std::optional<LinearCode> span_if_linear(const Distribution& d) {
  std::vector<CodeWord> words;
  words.reserve(d.size());
  for (const auto& x : d.points()) words.push_back(x.word());
  std::sort(words.begin(), words.end());
  if (std::adjacent_find(words.begin(), words.end()) != words.end()) return std::nullopt;
  LinearCode span = LinearCode::span_of(d.field(), d.n(), d.s(), words);
  std::uint64_t size = 1;
  for (std::size_t i = 0; i < span.k() && size <= d.size(); ++i) size *= d.field().q();
  if (size != d.size()) return std::nullopt;
  return span;
}

}  // namespace

bool is_linear(const Distribution& d) { return span_if_linear(d).has_value(); }

LinearCode linear_code_of(const Distribution& d) {
  auto span = span_if_linear(d);
  if (!span) throw std::invalid_argument("distribution is not a linear subspace");
  return std::move(*span);
}

LinearCode v_subspace(const Field& f, std::size_t s, const std::vector<std::size_t>& a) {
  const std::size_t n = a.size();
  Matrix m(f, 0, n * s);
  for (std::size_t j = 0; j < n; ++j) {
    if (a[j] > s) throw std::invalid_argument("box exponent exceeds s");
    for (std::size_t i = 0; i + a[j] < s; ++i) {
      std::vector<Label> row(n * s, 0);
      row[j * s + i] = 1;
      m.append_row(row);
    }
  }
  return LinearCode(f, n, s, std::move(m));
}

void for_each_subspace(const Field& f, std::size_t n, std::size_t s, const std::function<void(const LinearCode&)>& fn) {
  const std::size_t len = n * s;
  const unsigned q = f.q();
  for (std::size_t k = 0; k <= len; ++k) {
    std::vector<bool> pick(len, false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(k), true);
    do {
      std::vector<std::size_t> piv;
      for (std::size_t c = 0; c < len; ++c)
        if (pick[c]) piv.push_back(c);
      // free positions: (row r, column c) with c > piv[r] and c not a pivot
      std::vector<std::pair<std::size_t, std::size_t>> free;
      for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = piv[r] + 1; c < len; ++c)
          if (!pick[c]) free.emplace_back(r, c);
      std::vector<Label> vals(free.size(), 0);
      while (true) {
        Matrix m(f, k, len);
        for (std::size_t r = 0; r < k; ++r) m.at(r, piv[r]) = 1;
        for (std::size_t i = 0; i < free.size(); ++i) m.at(free[i].first, free[i].second) = vals[i];
        fn(LinearCode(f, n, s, std::move(m)));
        std::size_t i = 0;
        while (i < vals.size() && ++vals[i] == q) vals[i++] = 0;
        if (i == vals.size()) break;
      }
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
}

LinearCode random_code(const Field& f, std::size_t n, std::size_t s, std::size_t k, std::mt19937_64& rng) {
  if (k > n * s) throw std::invalid_argument("k exceeds ns");
  std::uniform_int_distribution<Label> digit(0, f.q() - 1);
  while (true) {
    Matrix m(f, k, n * s);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < n * s; ++c) m.at(r, c) = digit(rng);
    if (m.rank() == k) return LinearCode(f, n, s, std::move(m));
  }
}

SpectrumVector spectrum_of(const LinearCode& c) {
  SpectrumVector v;
  v.params = c.params();
  v.w.assign(c.n() * c.s() + 1, 0);
  v.anchor.assign(c.n() * c.s(), 0);
  v.source = "bruteforce";
  std::vector<std::uint64_t> hist(c.n() * c.s() + 1, 0);
  c.for_each_word([&](std::span<const Label> w) { ++hist[rho_weight(w, c.s())]; });
  for (std::size_t r = 0; r < hist.size(); ++r) v.w[r] = hist[r];
  return v;
}

}  // namespace nrt
