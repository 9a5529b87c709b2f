#include "rccs/interval_event.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "rccs/errors.hpp"

namespace rccs {

namespace {

std::string describe(const Interval& iv) {
  return "[" + iv.lo.to_string() + ", " + iv.hi.to_string() + ")";
}

// Appends [lo, hi) to a canonical list that is sorted by lo, merging with the
// last interval when they touch or overlap.
void append_merged(std::vector<Interval>& out, const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) return;
  if (!out.empty() && lo <= out.back().hi) {
    if (out.back().hi < hi) out.back().hi = hi;
    return;
  }
  out.push_back({lo, hi});
}

}  // namespace

IntervalEvent IntervalEvent::from_intervals(std::vector<Interval> intervals, Canonicalize mode) {
  const Rational zero_point(0);
  const Rational one_point(1);
  for (const auto& iv : intervals) {
    if (iv.lo < zero_point || iv.hi > one_point) {
      throw InputError("interval " + describe(iv) + " leaves [0, 1)");
    }
    if (iv.hi < iv.lo) throw InputError("interval " + describe(iv) + " is reversed");
  }

  if (mode == Canonicalize::Normalize) {
    std::sort(intervals.begin(), intervals.end(),
              [](const Interval& x, const Interval& y) { return x.lo < y.lo; });
    std::vector<Interval> merged;
    merged.reserve(intervals.size());
    for (const auto& iv : intervals) append_merged(merged, iv.lo, iv.hi);
    return IntervalEvent(std::move(merged));
  }

  for (std::size_t k = 0; k < intervals.size(); ++k) {
    const auto& iv = intervals[k];
    if (iv.lo == iv.hi) throw InputError("interval " + describe(iv) + " is empty");
    if (k > 0) {
      const auto& prev = intervals[k - 1];
      if (iv.lo < prev.hi) {
        throw InputError("intervals " + describe(prev) + " and " + describe(iv) +
                         " overlap or are out of order");
      }
      if (iv.lo == prev.hi) {
        throw InputError("intervals " + describe(prev) + " and " + describe(iv) +
                         " are adjacent and must be merged");
      }
    }
  }
  return IntervalEvent(std::move(intervals));
}

IntervalEvent IntervalEvent::one() { return IntervalEvent({{Rational(0), Rational(1)}}); }

IntervalEvent IntervalEvent::interval(const Rational& lo, const Rational& hi) {
  if (lo == hi) return zero();
  return from_intervals({{lo, hi}});
}

bool IntervalEvent::is_one() const {
  return intervals_.size() == 1 && intervals_[0].lo == Rational(0) && intervals_[0].hi == Rational(1);
}

std::string IntervalEvent::to_string() const {
  if (intervals_.empty()) return "0";
  std::string out;
  for (const auto& iv : intervals_) {
    if (!out.empty()) out += " u ";
    out += describe(iv);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const IntervalEvent& e) { return os << e.to_string(); }

IntervalEvent meet(const IntervalEvent& a, const IntervalEvent& b) {
  std::vector<Interval> out;
  std::size_t i = 0;
  std::size_t j = 0;
  const auto& x = a.intervals_;
  const auto& y = b.intervals_;
  while (i < x.size() && j < y.size()) {
    const Rational& lo = max(x[i].lo, y[j].lo);
    const Rational& hi = min(x[i].hi, y[j].hi);
    // Pieces of two canonical lists never touch, so no merging is needed.
    if (lo < hi) out.push_back({lo, hi});
    if (x[i].hi < y[j].hi) {
      ++i;
    } else {
      ++j;
    }
  }
  return IntervalEvent(std::move(out));
}

IntervalEvent join(const IntervalEvent& a, const IntervalEvent& b) {
  std::vector<Interval> out;
  out.reserve(a.intervals_.size() + b.intervals_.size());
  std::size_t i = 0;
  std::size_t j = 0;
  const auto& x = a.intervals_;
  const auto& y = b.intervals_;
  while (i < x.size() || j < y.size()) {
    const bool take_x = j == y.size() || (i < x.size() && x[i].lo <= y[j].lo);
    const Interval& next = take_x ? x[i++] : y[j++];
    append_merged(out, next.lo, next.hi);
  }
  return IntervalEvent(std::move(out));
}

IntervalEvent complement(const IntervalEvent& a) {
  std::vector<Interval> out;
  Rational cursor(0);
  for (const auto& iv : a.intervals_) {
    if (cursor < iv.lo) out.push_back({cursor, iv.lo});
    cursor = iv.hi;
  }
  if (cursor < Rational(1)) out.push_back({cursor, Rational(1)});
  return IntervalEvent(std::move(out));
}

Rational measure(const IntervalEvent& a) {
  Rational total(0);
  for (const auto& iv : a.intervals()) total += iv.length();
  return total;
}

bool leq(const IntervalEvent& a, const IntervalEvent& b) { return meet(a, b) == a; }

IntervalEvent carve(const IntervalEvent& a, const Rational& x) {
  const Rational total = measure(a);
  if (x <= Rational(0) || x >= total) {
    throw PreconditionError(Gate::CarveOutOfRange,
                            "cannot carve a sub-event of measure " + x.to_string() +
                                " from an event of measure " + total.to_string() +
                                ": need 0 < x < measure");
  }
  std::vector<Interval> out;
  Rational remaining = x;
  for (const auto& iv : a.intervals_) {
    const Rational len = iv.length();
    if (remaining < len) {
      out.push_back({iv.lo, iv.lo + remaining});
      break;
    }
    out.push_back(iv);
    remaining -= len;
    if (remaining.is_zero()) break;
  }
  return IntervalEvent(std::move(out));
}

}  // namespace rccs
