#pragma once

#include <concepts>
#include <span>
#include <string>
#include <vector>

#include "rccs/errors.hpp"
#include "rccs/rational.hpp"

namespace rccs {

/// A model of an orthocomplemented event lattice carrying a probability
/// measure. Only finite lattice operations are required; every construction
/// in this library uses finitely many events.
template <class M>
concept EventLattice = requires(const M& m, const typename M::Event& a, const typename M::Event& b) {
  typename M::Event;
  { m.zero() } -> std::convertible_to<typename M::Event>;
  { m.one() } -> std::convertible_to<typename M::Event>;
  { m.meet(a, b) } -> std::convertible_to<typename M::Event>;
  { m.join(a, b) } -> std::convertible_to<typename M::Event>;
  { m.complement(a) } -> std::convertible_to<typename M::Event>;
  { m.leq(a, b) } -> std::convertible_to<bool>;
  { m.measure(a) } -> std::convertible_to<Rational>;
  { a == b } -> std::convertible_to<bool>;
};

/// An event lattice in which every event of positive measure contains
/// sub-events of every smaller measure, found by `carve`.
template <class M>
concept AtomlessEventLattice = EventLattice<M> && requires(const M& m, const typename M::Event& a, const Rational& x) {
  { m.carve(a, x) } -> std::convertible_to<typename M::Event>;
};

template <EventLattice M>
using EventOf = typename M::Event;

/// a < b in the lattice order.
template <EventLattice M>
bool strictly_below(const M& m, const EventOf<M>& a, const EventOf<M>& b) {
  return m.leq(a, b) && !(a == b);
}

/// For a <= b: b == a v (a' ^ b).
template <EventLattice M>
bool orthomodular_law_holds(const M& m, const EventOf<M>& a, const EventOf<M>& b) {
  return m.join(a, m.meet(m.complement(a), b)) == b;
}

/// a == (a ^ b) v (a ^ b'). Both one-sided tests are evaluated; they agree in
/// every orthomodular lattice, so a mismatch is reported as InvariantViolation.
template <EventLattice M>
bool compatible(const M& m, const EventOf<M>& a, const EventOf<M>& b) {
  const bool a_side = m.join(m.meet(a, b), m.meet(a, m.complement(b))) == a;
  const bool b_side = m.join(m.meet(b, a), m.meet(b, m.complement(a))) == b;
  if (a_side != b_side) {
    throw InvariantViolation("compatibility is not symmetric in this model");
  }
  return a_side;
}

namespace detail {

template <EventLattice M>
void require_compatible(const M& m, const EventOf<M>& a, const EventOf<M>& b, const char* what) {
  if (!compatible(m, a, b)) {
    throw PreconditionError(Gate::Incompatible, std::string(what) + " requires compatible events");
  }
}

}  // namespace detail

/// All four quadrants a^b, a'^b', a^b', a'^b are non-zero.
template <EventLattice M>
bool logically_independent(const M& m, const EventOf<M>& a, const EventOf<M>& b) {
  const auto zero = m.zero();
  const auto na = m.complement(a);
  const auto nb = m.complement(b);
  return !(m.meet(a, b) == zero) && !(m.meet(na, nb) == zero) && !(m.meet(a, nb) == zero) &&
         !(m.meet(na, b) == zero);
}

/// The order-theoretic characterisation of logical independence for
/// compatible events: a v b > a, a v b > b, a v b' > a, a v b' > b'.
template <EventLattice M>
bool logical_independence_equiv(const M& m, const EventOf<M>& a, const EventOf<M>& b) {
  detail::require_compatible(m, a, b, "logical_independence_equiv");
  const auto nb = m.complement(b);
  const auto a_or_b = m.join(a, b);
  const auto a_or_nb = m.join(a, nb);
  return strictly_below(m, a, a_or_b) && strictly_below(m, b, a_or_b) &&
         strictly_below(m, a, a_or_nb) && strictly_below(m, nb, a_or_nb);
}

/// phi(a ^ b) - phi(a) phi(b); positive means a and b are correlated.
template <EventLattice M>
Rational correlation(const M& m, const EventOf<M>& a, const EventOf<M>& b) {
  detail::require_compatible(m, a, b, "correlation");
  return m.measure(m.meet(a, b)) - m.measure(a) * m.measure(b);
}

template <EventLattice M>
bool correlated(const M& m, const EventOf<M>& a, const EventOf<M>& b) {
  return correlation(m, a, b) > Rational(0);
}

/// Both sides of phi(a^c) phi(b^c) >= phi(a^b^c) phi((a v b)^c).
struct Lemma1Terms {
  Rational lhs;
  Rational rhs;
  bool holds() const { return lhs >= rhs; }
};

template <EventLattice M>
Lemma1Terms lemma1_terms(const M& m, const EventOf<M>& a, const EventOf<M>& b, const EventOf<M>& c) {
  detail::require_compatible(m, a, b, "check_lemma1");
  detail::require_compatible(m, a, c, "check_lemma1");
  detail::require_compatible(m, b, c, "check_lemma1");
  return {m.measure(m.meet(a, c)) * m.measure(m.meet(b, c)),
          m.measure(m.meet(m.meet(a, b), c)) * m.measure(m.meet(m.join(a, b), c))};
}

/// Returns true, or throws InvariantViolation: the inequality is a theorem
/// for mutually compatible triples, so a failure means the model is broken.
/// Use lemma1_terms to inspect the two sides without throwing.
template <EventLattice M>
bool check_lemma1(const M& m, const EventOf<M>& a, const EventOf<M>& b, const EventOf<M>& c) {
  const auto terms = lemma1_terms(m, a, b, c);
  if (!terms.holds()) {
    throw InvariantViolation("phi(a^c)phi(b^c) = " + terms.lhs.to_string() + " < " + terms.rhs.to_string() +
                             " = phi(a^b^c)phi((a v b)^c)");
  }
  return true;
}

/// Cells are pairwise orthogonal and join to 1. Empty cells are allowed here;
/// callers that need positive measure check it separately.
template <EventLattice M>
bool is_partition(const M& m, std::span<const EventOf<M>> cells) {
  if (cells.empty()) return false;
  auto cover = m.zero();
  for (std::size_t i = 0; i < cells.size(); ++i) {
    for (std::size_t j = i + 1; j < cells.size(); ++j) {
      if (!m.leq(cells[i], m.complement(cells[j]))) return false;
    }
    cover = m.join(cover, cells[i]);
  }
  return cover == m.one();
}

}  // namespace rccs
