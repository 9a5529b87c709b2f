#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "rccs/rational.hpp"

namespace rccs {

/// Half-open interval [lo, hi) with rational endpoints.
struct Interval {
  Rational lo;
  Rational hi;

  Rational length() const { return hi - lo; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// How `IntervalEvent::from_intervals` treats input that is not already in
/// canonical form.
enum class Canonicalize { Strict, Normalize };

/// An event of the atomless measure algebra on [0,1): a finite union of
/// half-open rational intervals under Lebesgue measure.
///
/// The representation is canonical. Intervals lie in [0,1), are non-empty,
/// sorted, pairwise disjoint and non-adjacent, so two events are equal as
/// point sets exactly when their interval lists are equal. The empty list is
/// the bottom element 0 and [0,1) is the top element 1.
class IntervalEvent {
 public:
  /// The zero event.
  IntervalEvent() = default;

  /// Strict mode rejects anything non-canonical with an InputError that
  /// names the offending interval. Normalize mode sorts, merges overlapping
  /// or adjacent intervals and drops empty ones; endpoints outside [0,1]
  /// and reversed intervals are rejected in both modes.
  static IntervalEvent from_intervals(std::vector<Interval> intervals,
                                      Canonicalize mode = Canonicalize::Strict);

  static IntervalEvent zero() { return {}; }
  static IntervalEvent one();
  /// The single interval [lo, hi); empty when lo == hi.
  static IntervalEvent interval(const Rational& lo, const Rational& hi);

  std::span<const Interval> intervals() const { return intervals_; }
  bool is_zero() const { return intervals_.empty(); }
  bool is_one() const;

  std::string to_string() const;

  friend bool operator==(const IntervalEvent&, const IntervalEvent&) = default;
  friend std::ostream& operator<<(std::ostream& os, const IntervalEvent& e);

 private:
  explicit IntervalEvent(std::vector<Interval> canonical) : intervals_(std::move(canonical)) {}

  friend IntervalEvent meet(const IntervalEvent&, const IntervalEvent&);
  friend IntervalEvent join(const IntervalEvent&, const IntervalEvent&);
  friend IntervalEvent complement(const IntervalEvent&);
  friend IntervalEvent carve(const IntervalEvent&, const Rational&);

  std::vector<Interval> intervals_;
};

IntervalEvent meet(const IntervalEvent& a, const IntervalEvent& b);
IntervalEvent join(const IntervalEvent& a, const IntervalEvent& b);
IntervalEvent complement(const IntervalEvent& a);
/// Lebesgue measure: the exact sum of interval lengths.
Rational measure(const IntervalEvent& a);
bool leq(const IntervalEvent& a, const IntervalEvent& b);

/// Denseness: returns X < a with measure(X) == x exactly, for 0 < x < measure(a).
///
/// The result is deterministic. Intervals of `a` are taken whole from the
/// left until the remaining target is smaller than the next interval, which
/// is then truncated. Throws PreconditionError(CarveOutOfRange) carrying both
/// x and measure(a) otherwise.
IntervalEvent carve(const IntervalEvent& a, const Rational& x);

/// The atomless Boolean algebra of IntervalEvents as an event-lattice model.
struct IntervalAlgebra {
  using Event = IntervalEvent;

  Event zero() const { return IntervalEvent::zero(); }
  Event one() const { return IntervalEvent::one(); }
  Event meet(const Event& a, const Event& b) const { return rccs::meet(a, b); }
  Event join(const Event& a, const Event& b) const { return rccs::join(a, b); }
  Event complement(const Event& a) const { return rccs::complement(a); }
  bool leq(const Event& a, const Event& b) const { return rccs::leq(a, b); }
  Rational measure(const Event& a) const { return rccs::measure(a); }
  Event carve(const Event& a, const Rational& x) const { return rccs::carve(a, x); }
};

}  // namespace rccs
