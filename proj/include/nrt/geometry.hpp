#pragma once

// Elementary q-adic boxes, net and optimum-distribution verification,
// and exact star discrepancy of point sets in Q^n(q^s).

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "nrt/bigint.hpp"
#include "nrt/space.hpp"

namespace nrt {

// [m_1/q^{a_1}, (m_1+1)/q^{a_1}) x ... x [m_n/q^{a_n}, (m_n+1)/q^{a_n}).
struct ElementaryBox {
  std::vector<std::size_t> a;
  std::vector<std::uint64_t> m;

  std::size_t total_exponent() const;
  // q^{-(a_1+...+a_n)}
  Rational volume(unsigned q) const;
  std::string to_string() const;
};

// Point multiset; duplicates are kept and counted with multiplicity.
class Distribution {
 public:
  Distribution(const Field& f, std::size_t n, std::size_t s) : field_(&f), n_(n), s_(s) {}
  Distribution(const Field& f, std::size_t n, std::size_t s, std::vector<Point> points);

  const Field& field() const { return *field_; }
  std::size_t n() const { return n_; }
  std::size_t s() const { return s_; }
  SpaceParams params() const { return {field_->q(), n_, s_}; }
  std::size_t size() const { return points_.size(); }
  const std::vector<Point>& points() const { return points_; }

  void add(Point x);

 private:
  const Field* field_;
  std::size_t n_, s_;
  std::vector<Point> points_;
};

// Membership from the leading a_j digits of each coordinate.
bool in_box(const Point& x, const ElementaryBox& box);
std::uint64_t box_count(const Distribution& d, const ElementaryBox& box);

struct BoxViolation {
  ElementaryBox box;
  std::uint64_t count = 0;
  // Required count; when at_most is set the requirement is count <= expected.
  std::uint64_t expected = 0;
  bool at_most = false;
};

struct BoxReport {
  bool ok = true;
  std::uint64_t boxes_checked = 0;
  std::optional<BoxViolation> violation;
};

// Calls fn(A) for every A in [0, max_part]^n with a_1 + ... + a_n = total, in colex order.
void for_each_composition(std::size_t n, std::size_t total, std::size_t max_part,
                          const std::function<void(const std::vector<std::size_t>&)>& fn);

// Every box of volume q^{delta - s_net} holds exactly q^delta points; requires #D = q^{s_net}.
BoxReport check_net(const Distribution& d, std::size_t delta, std::size_t s_net);
bool is_net(const Distribution& d, std::size_t delta);
bool is_net(const Distribution& d, std::size_t delta, std::size_t s_net);

// Every box of E_s(q,n) (all a_j <= s) with volume q^{-k} holds exactly one point; requires #D = q^k.
BoxReport check_optimum(const Distribution& d, std::size_t k);
bool is_optimum(const Distribution& d, std::size_t k);

// Every box of E_s(q,n) with a_1 + ... + a_n = total holds exactly `expected` points.
BoxReport check_box_regularity(const Distribution& d, std::size_t total, std::uint64_t expected);

// Exact counts q^{k - sum a} for sum a <= k and at most one point otherwise, over all of E_s(q,n).
BoxReport check_counts(const Distribution& d, std::size_t k);

struct NetParams {
  std::size_t delta = 0;
  std::size_t s = 0;
  std::size_t n = 0;
};

// An optimum [ns,k]_s distribution with s <= k is a (k-s, k, n)-net; verified on return.
NetParams net_from_optimum(const Distribution& d, std::size_t k);

struct BaseReduction {
  Distribution reduced;
  std::size_t delta_prime = 0;
  std::size_t s_prime = 0;
  BoxReport report;
};

// Reads a (delta, s, n)-net in base p^e as a point set in base p and checks it is a
// (e delta + (e-1)(n-1), e s, n)-net there.
BaseReduction base_reduce_net(const Distribution& d, std::size_t delta);

inline constexpr std::uint64_t kDiscrepancyBound = 10'000'000;

// sup over anchored boxes [0,y) of |#(D in box)/N - vol|, exact.
Rational star_discrepancy(const Distribution& d, std::uint64_t bound = kDiscrepancyBound);
// The unnormalized form sup |#(D in box) - N vol| = N * star_discrepancy.
Rational discrepancy_count_form(const Distribution& d, std::uint64_t bound = kDiscrepancyBound);

}  // namespace nrt
