#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "rccs/engine.hpp"
#include "rccs/rational.hpp"

namespace rccs {

/// A subset of the sample points of a FiniteSpace, stored as sorted indices.
class FiniteEvent {
 public:
  FiniteEvent() = default;
  /// Sorts and deduplicates.
  explicit FiniteEvent(std::vector<std::uint32_t> members);
  FiniteEvent(std::initializer_list<std::uint32_t> members)
      : FiniteEvent(std::vector<std::uint32_t>(members)) {}

  std::span<const std::uint32_t> members() const { return members_; }
  bool empty() const { return members_.empty(); }
  std::size_t size() const { return members_.size(); }
  bool contains(std::uint32_t point) const;

  std::string to_string() const;

  friend bool operator==(const FiniteEvent&, const FiniteEvent&) = default;
  friend auto operator<=>(const FiniteEvent&, const FiniteEvent&) = default;

 private:
  std::vector<std::uint32_t> members_;
};

/// A classical probability space on m points with strictly positive
/// weights summing to exactly 1. Faithfulness means every non-empty event
/// has positive probability.
class FiniteSpace {
 public:
  using Event = FiniteEvent;

  /// Throws InputError for an empty weight list, a non-positive weight, or
  /// weights that do not sum to 1.
  explicit FiniteSpace(std::vector<Rational> weights);

  std::size_t points() const { return weights_.size(); }
  std::span<const Rational> weights() const { return weights_; }

  /// Throws InputError naming the first index outside 0..m-1.
  void validate(const Event& e) const;

  Event zero() const { return {}; }
  Event one() const;
  Event meet(const Event& a, const Event& b) const;
  Event join(const Event& a, const Event& b) const;
  Event complement(const Event& a) const;
  bool leq(const Event& a, const Event& b) const;
  /// Exact sum of member weights; validates the indices first.
  Rational measure(const Event& a) const;

 private:
  std::vector<Rational> weights_;
};

inline Rational finite_measure(const FiniteSpace& s, const FiniteEvent& e) { return s.measure(e); }

/// Stirling number of the second kind S(m, n), by the standard recurrence.
std::uint64_t stirling2(unsigned m, unsigned n);

/// Streams every partition of {0..m-1} into exactly n non-empty unlabeled
/// cells, each once. Cells are ordered by their smallest member and the
/// stream follows lexicographic order of restricted growth strings, so the
/// order is deterministic.
class PartitionStream {
 public:
  /// Throws InputError unless 1 <= n <= m.
  PartitionStream(std::size_t m, std::size_t n);

  /// Advances to the next partition; false once the stream is exhausted.
  bool next();

  /// Cell label of each point for the current partition (values 0..n-1,
  /// first occurrences in increasing order).
  std::span<const std::uint32_t> labels() const { return labels_; }
  Partition<FiniteEvent> partition() const;

 private:
  bool first_ = true;
  bool done_ = false;
  std::size_t m_;
  std::size_t n_;
  std::vector<std::uint32_t> labels_;
  // prefix_max_[i] = max(labels_[0..i-1]), with prefix_max_[0] unused
  std::vector<std::uint32_t> prefix_max_;

  bool fill_from(std::size_t position);
};

/// Collects every partition of s's points into n cells.
std::vector<Partition<FiniteEvent>> enumerate_partitions(const FiniteSpace& s, std::size_t n);

struct SearchOptions {
  /// Spaces with more points are refused; the partition count grows like
  /// the Bell numbers.
  std::size_t max_points = 14;
};

/// Every size-n partition of s that is a common cause system for (a, b),
/// in stream order. An empty result is a proof of non-existence.
///
/// Throws PreconditionError(NotCorrelated) if a and b are not correlated,
/// and InputError for invalid events, n outside 1..m, or m > max_points.
std::vector<Partition<FiniteEvent>> search_rccs(const FiniteSpace& s, const FiniteEvent& a, const FiniteEvent& b,
                                                std::size_t n, const SearchOptions& options = {});

}  // namespace rccs
