#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rccs/errors.hpp"
#include "rccs/interval_event.hpp"
#include "rccs/lattice.hpp"
#include "rccs/rational.hpp"

namespace rccs {

/// An ordered list of cells, meant to be pairwise orthogonal and to join to 1.
template <class Event>
struct Partition {
  std::vector<Event> cells;

  std::size_t size() const { return cells.size(); }
  friend bool operator==(const Partition&, const Partition&) = default;
};

/// Conditional probabilities of a, b and a^b given one cell.
struct CellCheck {
  Rational measure;
  Rational cond_a;
  Rational cond_b;
  Rational cond_ab;
  /// cond_ab == cond_a * cond_b
  bool screening_off = false;
};

/// Differences of conditionals between cells i and j.
struct PairCheck {
  std::size_t i = 0;
  std::size_t j = 0;
  Rational diff_a;
  Rational diff_b;
  bool ok = false;
};

enum class FailureKind { SizeBelowTwo, ScreeningOff, CrossCondition };

struct Failure {
  FailureKind kind;
  std::size_t cell = 0;   // offending cell, or first cell of the pair
  std::size_t other = 0;  // second cell of the pair for CrossCondition
  std::string message;
};

/// Outcome of checking a common cause or common cause system. All entries
/// are exact.
struct VerificationReport {
  std::vector<CellCheck> cells;
  std::vector<PairCheck> pairs;
  /// phi(a^b) - phi(a)phi(b), from the raw measures.
  Rational decomposition_lhs;
  /// 1/2 sum_{i != j} phi(C_i)phi(C_j)(cond_a_i - cond_a_j)(cond_b_i - cond_b_j).
  /// Equal to the lhs whenever every cell screens off.
  Rational decomposition_rhs;
  std::optional<Failure> first_failure;

  bool accepted() const { return !first_failure.has_value(); }
};

/// A verified common cause system with its per-cell conditionals.
template <class Event>
struct Rccs {
  Partition<Event> cells;
  std::vector<Rational> cond_a;
  std::vector<Rational> cond_b;
  std::vector<Rational> cond_ab;
};

namespace detail {

template <EventLattice M>
CellCheck check_cell(const M& m, const EventOf<M>& a, const EventOf<M>& b, const EventOf<M>& ab,
                     const EventOf<M>& cell) {
  CellCheck out;
  out.measure = m.measure(cell);
  out.cond_a = m.measure(m.meet(a, cell)) / out.measure;
  out.cond_b = m.measure(m.meet(b, cell)) / out.measure;
  out.cond_ab = m.measure(m.meet(ab, cell)) / out.measure;
  out.screening_off = out.cond_ab == out.cond_a * out.cond_b;
  return out;
}

inline Rational decomposition_rhs(const std::vector<CellCheck>& cells) {
  // Each unordered pair appears twice in the sum over i != j, cancelling the 1/2.
  Rational total(0);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    for (std::size_t j = i + 1; j < cells.size(); ++j) {
      total += cells[i].measure * cells[j].measure * (cells[i].cond_a - cells[j].cond_a) *
               (cells[i].cond_b - cells[j].cond_b);
    }
  }
  return total;
}

template <EventLattice M>
void require_valid_partition(const M& m, const EventOf<M>& a, const EventOf<M>& b,
                             const std::vector<EventOf<M>>& cells) {
  if (!is_partition<M>(m, cells)) {
    throw InputError("cells do not form a partition: they must be pairwise disjoint and cover 1");
  }
  for (std::size_t k = 0; k < cells.size(); ++k) {
    if (m.measure(cells[k]).is_zero()) {
      throw PreconditionError(Gate::ZeroMeasure,
                              "C" + std::to_string(k + 1) + " has measure 0; conditionals are undefined");
    }
  }
  require_compatible(m, a, b, "verification");
  for (const auto& cell : cells) {
    require_compatible(m, a, cell, "verification");
    require_compatible(m, b, cell, "verification");
  }
}

template <EventLattice M>
void require_correlated(const M& m, const EventOf<M>& a, const EventOf<M>& b) {
  const Rational corr = correlation(m, a, b);
  if (corr <= Rational(0)) {
    throw PreconditionError(Gate::NotCorrelated, "no correlation to explain: phi(a^b) - phi(a)phi(b) = " +
                                                     corr.to_string() + " is not positive");
  }
}

inline void find_first_failure(VerificationReport& report) {
  for (std::size_t k = 0; k < report.cells.size(); ++k) {
    if (!report.cells[k].screening_off) {
      const auto& c = report.cells[k];
      report.first_failure = Failure{FailureKind::ScreeningOff, k, 0,
                                     "screening-off fails on C" + std::to_string(k + 1) + ": P(ab|C) = " +
                                         c.cond_ab.to_string() + " but P(a|C)P(b|C) = " +
                                         (c.cond_a * c.cond_b).to_string()};
      return;
    }
  }
  for (const auto& p : report.pairs) {
    if (!p.ok) {
      report.first_failure =
          Failure{FailureKind::CrossCondition, p.i, p.j,
                  "cross-condition fails on C" + std::to_string(p.i + 1) + " and C" + std::to_string(p.j + 1) +
                      ": (P(a|Ci) - P(a|Cj))(P(b|Ci) - P(b|Cj)) = " + (p.diff_a * p.diff_b).to_string() +
                      " is not positive"};
      return;
    }
  }
}

}  // namespace detail

/// Checks whether the partition screens off the correlation between a and b
/// in every cell and orders every pair of cells the same way for a and b.
///
/// Throws InputError if the cells are not a partition,
/// PreconditionError(ZeroMeasure) for a null cell, and
/// PreconditionError(NotCorrelated) if a and b are not positively correlated.
/// A partition of size 1 is evaluated but rejected.
template <EventLattice M>
VerificationReport verify_rccs(const M& m, const EventOf<M>& a, const EventOf<M>& b,
                               const Partition<EventOf<M>>& p) {
  detail::require_valid_partition(m, a, b, p.cells);
  detail::require_correlated(m, a, b);

  VerificationReport report;
  const auto ab = m.meet(a, b);
  for (const auto& cell : p.cells) report.cells.push_back(detail::check_cell(m, a, b, ab, cell));
  for (std::size_t i = 0; i < report.cells.size(); ++i) {
    for (std::size_t j = i + 1; j < report.cells.size(); ++j) {
      PairCheck pair{i, j, report.cells[i].cond_a - report.cells[j].cond_a,
                     report.cells[i].cond_b - report.cells[j].cond_b, false};
      pair.ok = pair.diff_a * pair.diff_b > Rational(0);
      report.pairs.push_back(std::move(pair));
    }
  }
  report.decomposition_lhs = m.measure(ab) - m.measure(a) * m.measure(b);
  report.decomposition_rhs = detail::decomposition_rhs(report.cells);

  if (p.size() < 2) {
    report.first_failure = Failure{FailureKind::SizeBelowTwo, 0, 0,
                                   "size < 2: a common cause system needs at least two cells"};
    return report;
  }
  detail::find_first_failure(report);
  return report;
}

/// Checks c as a two-cell common cause: screening-off on c and on c', and
/// P(a|c) > P(a|c'), P(b|c) > P(b|c'). The report has cells {c, c'} and a
/// single pair whose `ok` flag requires both strict inequalities.
template <EventLattice M>
VerificationReport verify_common_cause(const M& m, const EventOf<M>& a, const EventOf<M>& b,
                                       const EventOf<M>& c) {
  const Rational pc = m.measure(c);
  if (pc.is_zero() || pc == Rational(1)) {
    throw PreconditionError(Gate::ZeroMeasure, "a common cause needs 0 < phi(c) < 1, got phi(c) = " +
                                                   pc.to_string());
  }
  const Partition<EventOf<M>> split{{c, m.complement(c)}};
  auto report = verify_rccs(m, a, b, split);
  auto& pair = report.pairs.front();
  pair.ok = pair.diff_a > Rational(0) && pair.diff_b > Rational(0);
  report.first_failure.reset();
  detail::find_first_failure(report);
  if (report.first_failure && report.first_failure->kind == FailureKind::CrossCondition) {
    report.first_failure->message =
        "c does not raise both probabilities: P(a|c) - P(a|c') = " + pair.diff_a.to_string() +
        ", P(b|c) - P(b|c') = " + pair.diff_b.to_string();
  }
  return report;
}

/// Both sides of phi(a^b) - phi(a)phi(b) = 1/2 sum_{i != j} phi(C_i)phi(C_j)
/// (P(a|C_i) - P(a|C_j))(P(b|C_i) - P(b|C_j)), computed independently.
///
/// Requires screening-off in every cell; throws
/// PreconditionError(ScreeningOffFails) naming the first offending cell.
template <EventLattice M>
std::pair<Rational, Rational> lemma5_decomposition(const M& m, const EventOf<M>& a, const EventOf<M>& b,
                                                   const Partition<EventOf<M>>& p) {
  detail::require_valid_partition(m, a, b, p.cells);
  const auto ab = m.meet(a, b);
  std::vector<CellCheck> cells;
  for (std::size_t k = 0; k < p.cells.size(); ++k) {
    cells.push_back(detail::check_cell(m, a, b, ab, p.cells[k]));
    if (!cells.back().screening_off) {
      throw PreconditionError(Gate::ScreeningOffFails,
                              "C" + std::to_string(k + 1) + " does not screen off the correlation");
    }
  }
  return {m.measure(ab) - m.measure(a) * m.measure(b), detail::decomposition_rhs(cells)};
}

template <EventLattice M>
Rccs<EventOf<M>> to_rccs(const Partition<EventOf<M>>& p, const VerificationReport& report) {
  Rccs<EventOf<M>> out{p, {}, {}, {}};
  for (const auto& c : report.cells) {
    out.cond_a.push_back(c.cond_a);
    out.cond_b.push_back(c.cond_b);
    out.cond_ab.push_back(c.cond_ab);
  }
  return out;
}

/// Intermediate quantities of the size-3 construction.
struct ConstructionTrace {
  Rational phi_a;
  Rational phi_b;
  Rational phi_ab;
  Rational phi_a_or_b;
  Rational correlation;
  /// (phi(a^b) - phi(a)phi(b)) / (1 - phi(a v b)), the upper bound for phi(C1).
  Rational t;
  Rational lambda;
  Rational phi_c1;
  Rational phi_c1_complement;
  Rational phi_a_c1_complement;
  Rational phi_b_c1_complement;
  Rational phi_ab_c1_complement;
  /// phi(C1') - phi(a^C1')phi(b^C1')/phi(a^b^C1'), the required measure of C2.
  Rational x2;
  Rational phi_na_nb;
  /// x2 == phi(a'^b'), so C2 is all of a'^b'.
  bool c2_is_whole_quadrant = false;
  Rational phi_c2;
  Rational phi_c3;
};

template <class Event>
struct Construction {
  Rccs<Event> rccs;
  ConstructionTrace trace;
  VerificationReport report;
};

inline Rational default_lambda() { return Rational(1, 2); }

/// Builds a size-3 common cause system {C1, C2, C3} for a correlated,
/// logically independent pair in an atomless model:
///
///   C1 = carve(a^b, lambda * t), t = corr / (1 - phi(a v b)),
///   C2 = carve(a'^b', x2) (or all of a'^b' when x2 equals its measure),
///   C3 = (C1 v C2)'.
///
/// Conditionals come out as (1, 1) on C1, (0, 0) on C2 and strictly inside
/// (0, 1) on C3. The result is re-verified exactly; a rejection is an
/// InvariantViolation.
///
/// Throws InputError unless 0 < lambda < 1,
/// PreconditionError(NotCorrelated) and
/// PreconditionError(NotLogicallyIndependent) when the pair is ineligible.
template <AtomlessEventLattice M>
Construction<EventOf<M>> construct_size3(const M& m, const EventOf<M>& a, const EventOf<M>& b,
                                         const Rational& lambda = default_lambda()) {
  const Rational zero(0);
  const Rational one(1);
  if (lambda <= zero || lambda >= one) {
    throw InputError("lambda must lie strictly between 0 and 1, got " + lambda.to_string());
  }
  detail::require_correlated(m, a, b);
  if (!logically_independent(m, a, b)) {
    throw PreconditionError(Gate::NotLogicallyIndependent,
                            "a and b are correlated but not logically independent; no common cause system "
                            "of size 3 or more can exist for such a pair");
  }

  ConstructionTrace tr;
  const auto ab = m.meet(a, b);
  tr.phi_a = m.measure(a);
  tr.phi_b = m.measure(b);
  tr.phi_ab = m.measure(ab);
  tr.phi_a_or_b = m.measure(m.join(a, b));
  tr.correlation = tr.phi_ab - tr.phi_a * tr.phi_b;
  if (tr.phi_a_or_b >= one) throw InvariantViolation("correlated pair with phi(a v b) = 1");
  tr.t = tr.correlation / (one - tr.phi_a_or_b);
  if (tr.t > tr.phi_ab) throw InvariantViolation("bound t exceeds phi(a^b)");
  tr.lambda = lambda;

  const auto c1 = m.carve(ab, lambda * tr.t);
  const auto c1_complement = m.complement(c1);
  tr.phi_c1 = m.measure(c1);
  tr.phi_c1_complement = m.measure(c1_complement);
  tr.phi_a_c1_complement = m.measure(m.meet(a, c1_complement));
  tr.phi_b_c1_complement = m.measure(m.meet(b, c1_complement));
  tr.phi_ab_c1_complement = m.measure(m.meet(ab, c1_complement));
  tr.x2 = tr.phi_c1_complement - tr.phi_a_c1_complement * tr.phi_b_c1_complement / tr.phi_ab_c1_complement;

  const auto na_nb = m.meet(m.complement(a), m.complement(b));
  tr.phi_na_nb = m.measure(na_nb);
  if (tr.x2 <= zero || tr.x2 > tr.phi_na_nb) {
    throw InvariantViolation("required measure of C2 (" + tr.x2.to_string() + ") is outside (0, phi(a'^b') = " +
                             tr.phi_na_nb.to_string() + "]");
  }
  tr.c2_is_whole_quadrant = tr.x2 == tr.phi_na_nb;
  const auto c2 = tr.c2_is_whole_quadrant ? na_nb : m.carve(na_nb, tr.x2);
  const auto c3 = m.complement(m.join(c1, c2));
  tr.phi_c2 = m.measure(c2);
  tr.phi_c3 = m.measure(c3);

  Partition<EventOf<M>> cells{{c1, c2, c3}};
  auto report = verify_rccs(m, a, b, cells);
  if (!report.accepted()) {
    throw InvariantViolation("constructed partition was rejected: " + report.first_failure->message);
  }
  auto rccs = to_rccs<M>(cells, report);
  return {std::move(rccs), std::move(tr), std::move(report)};
}

/// Interval-model convenience overloads.
Construction<IntervalEvent> construct_size3(const IntervalEvent& a, const IntervalEvent& b,
                                            const Rational& lambda = default_lambda());
VerificationReport verify_rccs(const IntervalEvent& a, const IntervalEvent& b,
                               const Partition<IntervalEvent>& p);
VerificationReport verify_common_cause(const IntervalEvent& a, const IntervalEvent& b,
                                       const IntervalEvent& c);

}  // namespace rccs
