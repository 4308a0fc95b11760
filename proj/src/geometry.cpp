#include "nrt/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace nrt {

namespace {

using Key = unsigned __int128;

Key power128(unsigned q, std::size_t a) {
  Key r = 1;
  for (std::size_t i = 0; i < a; ++i) {
    if (r > (~Key{0}) / q / 2) throw std::overflow_error("box index space exceeds 127 bits");
    r *= q;
  }
  return r;
}

std::uint64_t power64(unsigned q, std::size_t a) { return checked_power(q, a); }

// Index m of the width-q^{-a} interval containing N / q^s.
std::uint64_t cell_index(std::uint64_t numerator, std::size_t a, std::size_t s, unsigned q) {
  if (a <= s) return numerator / power64(q, s - a);
  return numerator * power64(q, a - s);
}

struct BoxScanner {
  const Distribution& d;
  std::vector<std::vector<std::uint64_t>> numerators;  // per point, per coordinate

  explicit BoxScanner(const Distribution& dist) : d(dist) {
    numerators.reserve(d.size());
    for (const auto& x : d.points()) {
      std::vector<std::uint64_t> row(d.n());
      for (std::size_t j = 0; j < d.n(); ++j) row[j] = x.numerator(j);
      numerators.push_back(std::move(row));
    }
  }

  // Checks one A: each box count equals `expected`, or is at most `expected` when at_most.
  std::optional<BoxViolation> scan(const std::vector<std::size_t>& a, std::uint64_t expected, bool at_most,
                                   std::uint64_t& boxes) const {
    const unsigned q = d.field().q();
    const std::size_t n = d.n();
    std::vector<Key> radix(n);
    Key total = 1;
    for (std::size_t j = 0; j < n; ++j) {
      radix[j] = power128(q, a[j]);
      total *= radix[j];
      if (total > (~Key{0}) / 2) throw std::overflow_error("box index space exceeds 127 bits");
    }
    std::vector<Key> keys;
    keys.reserve(numerators.size());
    for (const auto& row : numerators) {
      Key key = 0;
      for (std::size_t j = 0; j < n; ++j) key = key * radix[j] + cell_index(row[j], a[j], d.s(), q);
      keys.push_back(key);
    }
    std::sort(keys.begin(), keys.end());
    boxes += total > Key{UINT64_MAX} ? UINT64_MAX : static_cast<std::uint64_t>(total);

    auto violation_at = [&](Key key, std::uint64_t count) {
      BoxViolation v;
      v.box.a = a;
      v.box.m.assign(n, 0);
      for (std::size_t j = n; j-- > 0;) {
        v.box.m[j] = static_cast<std::uint64_t>(key % radix[j]);
        key /= radix[j];
      }
      v.count = count;
      v.expected = expected;
      v.at_most = at_most;
      return v;
    };

    Key next = 0;  // smallest key not yet accounted for
    for (std::size_t i = 0; i < keys.size();) {
      std::size_t j = i;
      while (j < keys.size() && keys[j] == keys[i]) ++j;
      const std::uint64_t count = j - i;
      if (!at_most && keys[i] > next && expected > 0) return violation_at(next, 0);
      if (at_most ? count > expected : count != expected) return violation_at(keys[i], count);
      next = keys[i] + 1;
      i = j;
    }
    if (!at_most && next < total && expected > 0) return violation_at(next, 0);
    return std::nullopt;
  }
};

std::uint64_t require_power_size(const Distribution& d, std::size_t k, const char* what) {
  const std::uint64_t want = checked_power(d.field().q(), k);
  if (d.size() != want) throw std::invalid_argument(what);
  return want;
}

}  // namespace

std::size_t ElementaryBox::total_exponent() const { return std::accumulate(a.begin(), a.end(), std::size_t{0}); }

Rational ElementaryBox::volume(unsigned q) const {
  return Rational(1, big_pow(q, static_cast<unsigned>(total_exponent())));
}

std::string ElementaryBox::to_string() const {
  std::ostringstream os;
  os << "A=(";
  for (std::size_t j = 0; j < a.size(); ++j) os << (j ? "," : "") << a[j];
  os << ") M=(";
  for (std::size_t j = 0; j < m.size(); ++j) os << (j ? "," : "") << m[j];
  os << ")";
  return os.str();
}

Distribution::Distribution(const Field& f, std::size_t n, std::size_t s, std::vector<Point> points)
    : field_(&f), n_(n), s_(s) {
  points_.reserve(points.size());
  for (auto& x : points) add(std::move(x));
}

void Distribution::add(Point x) {
  if (&x.word().field() != field_) throw std::invalid_argument("field mismatch");
  if (x.n() != n_ || x.s() != s_) throw std::invalid_argument("parameter mismatch");
  points_.push_back(std::move(x));
}

bool in_box(const Point& x, const ElementaryBox& box) {
  if (box.a.size() != x.n() || box.m.size() != x.n()) throw std::invalid_argument("box dimension mismatch");
  const unsigned q = x.word().field().q();
  for (std::size_t j = 0; j < x.n(); ++j)
    if (cell_index(x.numerator(j), box.a[j], x.s(), q) != box.m[j]) return false;
  return true;
}

std::uint64_t box_count(const Distribution& d, const ElementaryBox& box) {
  std::uint64_t c = 0;
  for (const auto& x : d.points()) c += in_box(x, box);
  return c;
}

void for_each_composition(std::size_t n, std::size_t total, std::size_t max_part,
                          const std::function<void(const std::vector<std::size_t>&)>& fn) {
  if (n == 0) {
    if (total == 0) fn({});
    return;
  }
  std::vector<std::size_t> a(n, 0);
  // The last coordinate is the most significant in colex order.
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t j, std::size_t remaining) {
    if (j == 0) {
      if (remaining <= max_part) {
        a[0] = remaining;
        fn(a);
      }
      return;
    }
    for (std::size_t v = 0; v <= std::min(max_part, remaining); ++v) {
      a[j] = v;
      rec(j - 1, remaining - v);
    }
  };
  rec(n - 1, total);
}

BoxReport check_net(const Distribution& d, std::size_t delta, std::size_t s_net) {
  if (delta > s_net) throw std::invalid_argument("deficiency exceeds s");
  require_power_size(d, s_net, "not q^s points");
  BoxScanner scanner(d);
  BoxReport report;
  const std::uint64_t expected = checked_power(d.field().q(), delta);
  const std::size_t total = s_net - delta;
  for_each_composition(d.n(), total, total, [&](const std::vector<std::size_t>& a) {
    if (!report.ok) return;
    if (auto v = scanner.scan(a, expected, false, report.boxes_checked)) {
      report.ok = false;
      report.violation = std::move(v);
    }
  });
  return report;
}

bool is_net(const Distribution& d, std::size_t delta, std::size_t s_net) { return check_net(d, delta, s_net).ok; }
bool is_net(const Distribution& d, std::size_t delta) { return is_net(d, delta, d.s()); }

BoxReport check_box_regularity(const Distribution& d, std::size_t total, std::uint64_t expected) {
  BoxScanner scanner(d);
  BoxReport report;
  for_each_composition(d.n(), total, d.s(), [&](const std::vector<std::size_t>& a) {
    if (!report.ok) return;
    if (auto v = scanner.scan(a, expected, false, report.boxes_checked)) {
      report.ok = false;
      report.violation = std::move(v);
    }
  });
  return report;
}

BoxReport check_optimum(const Distribution& d, std::size_t k) {
  if (k > d.n() * d.s()) throw std::invalid_argument("k exceeds ns");
  require_power_size(d, k, "not q^k points");
  return check_box_regularity(d, k, 1);
}

bool is_optimum(const Distribution& d, std::size_t k) { return check_optimum(d, k).ok; }

BoxReport check_counts(const Distribution& d, std::size_t k) {
  if (k > d.n() * d.s()) throw std::invalid_argument("k exceeds ns");
  BoxScanner scanner(d);
  BoxReport report;
  const unsigned q = d.field().q();
  for (std::size_t total = 0; total <= d.n() * d.s() && report.ok; ++total) {
    const bool exact = total <= k;
    const std::uint64_t expected = exact ? checked_power(q, k - total) : 1;
    for_each_composition(d.n(), total, d.s(), [&](const std::vector<std::size_t>& a) {
      if (!report.ok) return;
      if (auto v = scanner.scan(a, expected, !exact, report.boxes_checked)) {
        report.ok = false;
        report.violation = std::move(v);
      }
    });
  }
  return report;
}

NetParams net_from_optimum(const Distribution& d, std::size_t k) {
  if (k < d.s()) throw std::invalid_argument("k < s: rescale to an optimum [nk,k]_k distribution instead");
  if (!is_optimum(d, k)) throw std::invalid_argument("distribution is not optimum");
  NetParams out{k - d.s(), k, d.n()};
  if (!is_net(d, out.delta, out.s)) throw std::logic_error("optimum distribution failed the net re-verification");
  return out;
}

BaseReduction base_reduce_net(const Distribution& d, std::size_t delta) {
  const std::size_t e = d.field().e();
  const Field& base = Field::get(d.field().p(), 1);
  Distribution reduced(base, d.n(), e * d.s());
  for (const auto& x : d.points()) reduced.add(expand_to_prime_field(x));
  BaseReduction out{std::move(reduced), e * delta + (e - 1) * (d.n() - 1), e * d.s(), {}};
  out.report = check_net(out.reduced, out.delta_prime, out.s_prime);
  return out;
}

namespace {

// Maximum over the critical grid of max(N vol - open count, closed count - N vol),
// scaled by Q^n where Q = q^s; returned together with the scale.
std::pair<BigInt, BigInt> discrepancy_scaled(const Distribution& d, std::uint64_t bound) {
  const std::size_t n = d.n();
  const std::uint64_t Q = checked_power(d.field().q(), d.s());
  const std::uint64_t N = d.size();
  if (N == 0) throw std::invalid_argument("empty distribution");
  std::vector<std::vector<std::uint64_t>> pts;
  std::vector<std::vector<std::uint64_t>> grid(n);
  for (const auto& x : d.points()) {
    std::vector<std::uint64_t> row(n);
    for (std::size_t j = 0; j < n; ++j) {
      row[j] = x.numerator(j);
      grid[j].push_back(row[j]);
    }
    pts.push_back(std::move(row));
  }
  long double work = static_cast<long double>(N);
  for (auto& g : grid) {
    g.push_back(Q);
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
    work *= static_cast<long double>(g.size());
  }
  if (work > static_cast<long double>(bound))
    throw std::length_error("discrepancy: size bound exceeded; exact evaluation unavailable (sampling mode not provided)");

  const BigInt scale = boost::multiprecision::pow(BigInt(Q), static_cast<unsigned>(n));
  BigInt best = 0;
  std::vector<std::size_t> idx(n, 0);
  while (true) {
    BigInt vol = 1;
    for (std::size_t j = 0; j < n; ++j) vol *= grid[j][idx[j]];
    std::uint64_t open = 0, closed = 0;
    for (const auto& p : pts) {
      bool in_open = true, in_closed = true;
      for (std::size_t j = 0; j < n; ++j) {
        const std::uint64_t y = grid[j][idx[j]];
        in_open = in_open && p[j] < y;
        in_closed = in_closed && p[j] <= y;
      }
      open += in_open;
      closed += in_closed;
    }
    const BigInt nvol = vol * N;
    const BigInt below = nvol - BigInt(open) * scale;
    const BigInt above = BigInt(closed) * scale - nvol;
    if (below > best) best = below;
    if (above > best) best = above;
    std::size_t j = 0;
    while (j < n && ++idx[j] == grid[j].size()) idx[j++] = 0;
    if (j == n) break;
  }
  return {best, scale};
}

}  // namespace

Rational star_discrepancy(const Distribution& d, std::uint64_t bound) {
  auto [num, scale] = discrepancy_scaled(d, bound);
  return Rational(num, scale * d.size());
}

Rational discrepancy_count_form(const Distribution& d, std::uint64_t bound) {
  auto [num, scale] = discrepancy_scaled(d, bound);
  return Rational(num, scale);
}

}  // namespace nrt
