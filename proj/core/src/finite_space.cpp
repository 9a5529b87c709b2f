#include "rccs/finite_space.hpp"

#include <algorithm>
#include <limits>

#include "rccs/errors.hpp"

namespace rccs {

FiniteEvent::FiniteEvent(std::vector<std::uint32_t> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool FiniteEvent::contains(std::uint32_t point) const {
  return std::binary_search(members_.begin(), members_.end(), point);
}

std::string FiniteEvent::to_string() const {
  std::string out = "{";
  for (std::size_t k = 0; k < members_.size(); ++k) {
    if (k > 0) out += ",";
    out += std::to_string(members_[k]);
  }
  return out + "}";
}

FiniteSpace::FiniteSpace(std::vector<Rational> weights) : weights_(std::move(weights)) {
  if (weights_.empty()) throw InputError("a finite space needs at least one sample point");
  Rational total(0);
  for (std::size_t k = 0; k < weights_.size(); ++k) {
    if (weights_[k] <= Rational(0)) {
      throw InputError("weight " + std::to_string(k) + " is " + weights_[k].to_string() +
                       "; every weight must be positive");
    }
    total += weights_[k];
  }
  if (total != Rational(1)) throw InputError("weights sum to " + total.to_string() + ", not 1");
}

void FiniteSpace::validate(const Event& e) const {
  for (auto point : e.members()) {
    if (point >= weights_.size()) {
      throw InputError("sample point " + std::to_string(point) + " out of range for a space of " +
                       std::to_string(weights_.size()) + " points");
    }
  }
}

FiniteEvent FiniteSpace::one() const {
  std::vector<std::uint32_t> all(weights_.size());
  for (std::size_t k = 0; k < all.size(); ++k) all[k] = static_cast<std::uint32_t>(k);
  return FiniteEvent(std::move(all));
}

FiniteEvent FiniteSpace::meet(const Event& a, const Event& b) const {
  std::vector<std::uint32_t> out;
  std::set_intersection(a.members().begin(), a.members().end(), b.members().begin(), b.members().end(),
                        std::back_inserter(out));
  return FiniteEvent(std::move(out));
}

FiniteEvent FiniteSpace::join(const Event& a, const Event& b) const {
  std::vector<std::uint32_t> out;
  std::set_union(a.members().begin(), a.members().end(), b.members().begin(), b.members().end(),
                 std::back_inserter(out));
  return FiniteEvent(std::move(out));
}

FiniteEvent FiniteSpace::complement(const Event& a) const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t k = 0; k < weights_.size(); ++k) {
    if (!a.contains(k)) out.push_back(k);
  }
  return FiniteEvent(std::move(out));
}

bool FiniteSpace::leq(const Event& a, const Event& b) const {
  return std::includes(b.members().begin(), b.members().end(), a.members().begin(), a.members().end());
}

Rational FiniteSpace::measure(const Event& a) const {
  validate(a);
  Rational total(0);
  for (auto point : a.members()) total += weights_[point];
  return total;
}

std::uint64_t stirling2(unsigned m, unsigned n) {
  if (n > m) return 0;
  // row[k] = S(i, k)
  std::vector<std::uint64_t> row(n + 1, 0);
  row[0] = 1;
  for (unsigned i = 1; i <= m; ++i) {
    for (unsigned k = std::min(i, n); k >= 1; --k) row[k] = k * row[k] + row[k - 1];
    row[0] = 0;
  }
  return row[n];
}

PartitionStream::PartitionStream(std::size_t m, std::size_t n)
    : m_(m), n_(n), labels_(m, 0), prefix_max_(m + 1, 0) {
  if (n < 1 || n > m) {
    throw InputError("cell count " + std::to_string(n) + " must lie in 1.." + std::to_string(m));
  }
}

bool PartitionStream::fill_from(std::size_t position) {
  auto top = prefix_max_[position];
  for (std::size_t k = position; k < m_; ++k) {
    const std::size_t remaining = m_ - k;
    const std::size_t needed = n_ - 1 - top;
    if (remaining > needed) {
      labels_[k] = 0;
    } else {
      labels_[k] = ++top;
    }
    prefix_max_[k + 1] = top;
  }
  return top + 1 == n_;
}

bool PartitionStream::next() {
  if (done_) return false;
  if (first_) {
    first_ = false;
    labels_[0] = 0;
    prefix_max_[1] = 0;
    fill_from(1);
    return true;
  }
  for (std::size_t i = m_; i-- > 1;) {
    const auto before = prefix_max_[i];
    const auto candidate = labels_[i] + 1;
    if (candidate > before + 1 || candidate > n_ - 1) continue;
    const auto top = std::max(before, candidate);
    if (n_ - 1 - top > m_ - 1 - i) continue;
    labels_[i] = candidate;
    prefix_max_[i + 1] = top;
    fill_from(i + 1);
    return true;
  }
  done_ = true;
  return false;
}

Partition<FiniteEvent> PartitionStream::partition() const {
  std::vector<std::vector<std::uint32_t>> cells(n_);
  for (std::size_t k = 0; k < m_; ++k) cells[labels_[k]].push_back(static_cast<std::uint32_t>(k));
  Partition<FiniteEvent> out;
  out.cells.reserve(n_);
  for (auto& c : cells) out.cells.emplace_back(std::move(c));
  return out;
}

std::vector<Partition<FiniteEvent>> enumerate_partitions(const FiniteSpace& s, std::size_t n) {
  std::vector<Partition<FiniteEvent>> out;
  PartitionStream stream(s.points(), n);
  while (stream.next()) out.push_back(stream.partition());
  return out;
}

namespace {

__extension__ using Int128 = __int128;

// Both screening-off and the cross condition are homogeneous of degree two
// in the weights, so after scaling every weight by the common denominator
// they can be decided on integers.
template <class Int>
struct ScaledSearch {
  std::vector<Int> weight;
  std::vector<bool> in_a;
  std::vector<bool> in_b;

  static int sign(const Int& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

  bool accepts(std::span<const std::uint32_t> labels, std::size_t n, std::vector<Int>& pc, std::vector<Int>& pa,
               std::vector<Int>& pb, std::vector<Int>& pab) const {
    std::fill(pc.begin(), pc.end(), Int(0));
    std::fill(pa.begin(), pa.end(), Int(0));
    std::fill(pb.begin(), pb.end(), Int(0));
    std::fill(pab.begin(), pab.end(), Int(0));
    for (std::size_t k = 0; k < labels.size(); ++k) {
      const auto c = labels[k];
      pc[c] += weight[k];
      if (in_a[k]) pa[c] += weight[k];
      if (in_b[k]) pb[c] += weight[k];
      if (in_a[k] && in_b[k]) pab[c] += weight[k];
    }
    // P(ab|C) = P(a|C)P(b|C)  <=>  pab * pc == pa * pb
    for (std::size_t c = 0; c < n; ++c) {
      if (pab[c] * pc[c] != pa[c] * pb[c]) return false;
    }
    // sign(P(a|Ci) - P(a|Cj)) = sign(pa_i pc_j - pa_j pc_i) as pc > 0
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const int sa = sign(Int(pa[i] * pc[j] - pa[j] * pc[i]));
        const int sb = sign(Int(pb[i] * pc[j] - pb[j] * pc[i]));
        if (sa * sb <= 0) return false;
      }
    }
    return true;
  }

  std::vector<Partition<FiniteEvent>> run(std::size_t m, std::size_t n) const {
    std::vector<Partition<FiniteEvent>> found;
    std::vector<Int> pc(n), pa(n), pb(n), pab(n);
    PartitionStream stream(m, n);
    while (stream.next()) {
      if (accepts(stream.labels(), n, pc, pa, pb, pab)) found.push_back(stream.partition());
    }
    return found;
  }
};

template <class Int>
ScaledSearch<Int> scale(const FiniteSpace& s, const BigInt& lcm, const FiniteEvent& a, const FiniteEvent& b) {
  ScaledSearch<Int> out;
  for (std::uint32_t k = 0; k < s.points(); ++k) {
    const auto& w = s.weights()[k];
    const BigInt scaled = w.numerator() * (lcm / w.denominator());
    out.weight.push_back(static_cast<Int>(scaled));
    out.in_a.push_back(a.contains(k));
    out.in_b.push_back(b.contains(k));
  }
  return out;
}

}  // namespace

std::vector<Partition<FiniteEvent>> search_rccs(const FiniteSpace& s, const FiniteEvent& a, const FiniteEvent& b,
                                                std::size_t n, const SearchOptions& options) {
  s.validate(a);
  s.validate(b);
  if (s.points() > options.max_points) {
    throw InputError("space has " + std::to_string(s.points()) + " points, above the search limit of " +
                     std::to_string(options.max_points));
  }
  if (n < 1 || n > s.points()) {
    throw InputError("cell count " + std::to_string(n) + " must lie in 1.." + std::to_string(s.points()));
  }
  detail::require_correlated(s, a, b);
  if (n < 2) return {};

  BigInt lcm = 1;
  for (const auto& w : s.weights()) lcm = boost::multiprecision::lcm(lcm, w.denominator());
  // Cell sums are bounded by lcm, products by lcm^2.
  if (lcm < (BigInt(1) << 62)) return scale<Int128>(s, lcm, a, b).run(s.points(), n);
  return scale<BigInt>(s, lcm, a, b).run(s.points(), n);
}

}  // namespace rccs
