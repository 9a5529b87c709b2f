#pragma once

// Independent reference computations. None of these call the code paths
// they are used to check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

#include "rccs/engine.hpp"
#include "rccs/finite_space.hpp"
#include "rccs/interval_event.hpp"
#include "rccs/rational.hpp"

namespace rccs::testing {

/// Point-set arithmetic on interval events: refine [0,1) at every endpoint
/// and decide membership of each elementary piece by its midpoint.
class GridOracle {
 public:
  static bool contains(const IntervalEvent& e, const Rational& x) {
    for (const auto& iv : e.intervals()) {
      if (iv.lo <= x && x < iv.hi) return true;
    }
    return false;
  }

  static std::vector<Rational> breakpoints(std::initializer_list<const IntervalEvent*> events) {
    std::vector<Rational> pts{Rational(0), Rational(1)};
    for (const auto* e : events) {
      for (const auto& iv : e->intervals()) {
        pts.push_back(iv.lo);
        pts.push_back(iv.hi);
      }
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
  }

  /// Builds the event {x : keep(x)} on the grid, merging runs of kept pieces.
  static IntervalEvent build(const std::vector<Rational>& pts, const std::function<bool(const Rational&)>& keep) {
    std::vector<Interval> out;
    for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
      const Rational mid = (pts[k] + pts[k + 1]) / Rational(2);
      if (!keep(mid)) continue;
      if (!out.empty() && out.back().hi == pts[k]) {
        out.back().hi = pts[k + 1];
      } else {
        out.push_back({pts[k], pts[k + 1]});
      }
    }
    return IntervalEvent::from_intervals(std::move(out));
  }

  static IntervalEvent meet(const IntervalEvent& a, const IntervalEvent& b) {
    return build(breakpoints({&a, &b}), [&](const Rational& x) { return contains(a, x) && contains(b, x); });
  }
  static IntervalEvent join(const IntervalEvent& a, const IntervalEvent& b) {
    return build(breakpoints({&a, &b}), [&](const Rational& x) { return contains(a, x) || contains(b, x); });
  }
  static IntervalEvent complement(const IntervalEvent& a) {
    return build(breakpoints({&a}), [&](const Rational& x) { return !contains(a, x); });
  }
  static Rational measure(const IntervalEvent& a) {
    const auto pts = breakpoints({&a});
    Rational total(0);
    for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
      if (contains(a, (pts[k] + pts[k + 1]) / Rational(2))) total += pts[k + 1] - pts[k];
    }
    return total;
  }
  /// Left sweep over grid pieces of a, truncating the piece that overshoots.
  static IntervalEvent carve(const IntervalEvent& a, const Rational& x) {
    const auto pts = breakpoints({&a});
    Rational taken(0);
    Rational cut(1);
    for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
      if (!contains(a, (pts[k] + pts[k + 1]) / Rational(2))) continue;
      const Rational len = pts[k + 1] - pts[k];
      if (taken + len >= x) {
        cut = pts[k] + (x - taken);
        break;
      }
      taken += len;
    }
    return meet(a, IntervalEvent::interval(Rational(0), cut));
  }
};

/// S(m, n) by counting surjections {0..m-1} -> {0..n-1} and dividing by n!.
inline std::uint64_t stirling2_by_surjections(unsigned m, unsigned n) {
  if (n == 0) return m == 0 ? 1 : 0;
  std::vector<unsigned> f(m, 0);
  std::uint64_t surjections = 0;
  for (;;) {
    std::vector<bool> hit(n, false);
    for (auto v : f) hit[v] = true;
    if (std::all_of(hit.begin(), hit.end(), [](bool h) { return h; })) ++surjections;
    std::size_t k = 0;
    while (k < m && ++f[k] == n) f[k++] = 0;
    if (k == m) break;
  }
  std::uint64_t factorial = 1;
  for (unsigned k = 2; k <= n; ++k) factorial *= k;
  return surjections / factorial;
}

/// The size-3 construction evaluated on scalars only, step by step, using the
/// closed forms that hold because C1 <= a^b and C2 <= a'^b':
///   phi(x ^ C1') = phi(x) - phi(C1) for x in {a, b, a^b},
///   phi(C3) = 1 - phi(C1) - phi(C2),
///   P(x | C3) = (phi(x) - phi(C1)) / phi(C3).
struct ScalarConstruction {
  Rational t;
  Rational phi_c1;
  Rational x2;
  Rational phi_c2;
  Rational phi_c3;
  Rational cond_a_c3;
  Rational cond_b_c3;
  Rational cond_ab_c3;

  static ScalarConstruction evaluate(const Rational& phi_a, const Rational& phi_b, const Rational& phi_ab,
                                     const Rational& phi_a_or_b, const Rational& lambda) {
    ScalarConstruction s;
    const Rational one(1);
    s.t = (phi_ab - phi_a * phi_b) / (one - phi_a_or_b);
    s.phi_c1 = lambda * s.t;
    const Rational c1c = one - s.phi_c1;
    s.x2 = c1c - (phi_a - s.phi_c1) * (phi_b - s.phi_c1) / (phi_ab - s.phi_c1);
    s.phi_c2 = s.x2;
    s.phi_c3 = one - s.phi_c1 - s.phi_c2;
    s.cond_a_c3 = (phi_a - s.phi_c1) / s.phi_c3;
    s.cond_b_c3 = (phi_b - s.phi_c1) / s.phi_c3;
    s.cond_ab_c3 = (phi_ab - s.phi_c1) / s.phi_c3;
    return s;
  }
};

/// 1/2 sum over ordered pairs i != j, straight from the identity.
inline Rational decomposition_rhs_ordered(const std::vector<Rational>& measure, const std::vector<Rational>& cond_a,
                                          const std::vector<Rational>& cond_b) {
  Rational total(0);
  for (std::size_t i = 0; i < measure.size(); ++i) {
    for (std::size_t j = 0; j < measure.size(); ++j) {
      if (i == j) continue;
      total += measure[i] * measure[j] * (cond_a[i] - cond_a[j]) * (cond_b[i] - cond_b[j]);
    }
  }
  return total / Rational(2);
}

/// Every size-n partition accepted by the generic verifier.
inline std::vector<Partition<FiniteEvent>> brute_force_rccs(const FiniteSpace& s, const FiniteEvent& a,
                                                            const FiniteEvent& b, std::size_t n) {
  std::vector<Partition<FiniteEvent>> out;
  PartitionStream stream(s.points(), n);
  while (stream.next()) {
    auto p = stream.partition();
    if (verify_rccs(s, a, b, p).accepted()) out.push_back(std::move(p));
  }
  return out;
}

}  // namespace rccs::testing
