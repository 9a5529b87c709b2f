#include "json_io.hpp"

#include <cstdio>

#include "rccs/errors.hpp"

namespace rccs::io {

namespace {

std::string at(std::string_view where, std::string_view what) {
  return std::string(where) + ": " + std::string(what);
}

const char* failure_kind(FailureKind kind) {
  switch (kind) {
    case FailureKind::SizeBelowTwo: return "size-below-two";
    case FailureKind::ScreeningOff: return "screening-off";
    case FailureKind::CrossCondition: return "cross-condition";
  }
  return "unknown";
}

}  // namespace

ordered_json parse_document(std::string_view text) {
  try {
    return ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw InputError("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

const ordered_json& require(const ordered_json& j, std::string_view key, std::string_view where) {
  if (!j.is_object()) throw InputError(at(where, "expected a JSON object"));
  const auto it = j.find(std::string(key));
  if (it == j.end()) throw InputError(at(where, "missing member \"" + std::string(key) + "\""));
  return *it;
}

Rational rational_from_json(const ordered_json& j, std::string_view where) {
  if (!j.is_string()) throw InputError(at(where, "rationals must be JSON strings such as \"1/2\""));
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const InputError& e) {
    throw InputError(at(where, e.what()));
  }
}

ordered_json to_json(const Rational& r) { return r.to_string(); }

IntervalEvent interval_event_from_json(const ordered_json& j, Canonicalize mode, std::string_view where) {
  const auto& list = require(j, "intervals", where);
  if (!list.is_array()) throw InputError(at(where, "\"intervals\" must be an array"));
  std::vector<Interval> intervals;
  for (std::size_t k = 0; k < list.size(); ++k) {
    const std::string here = std::string(where) + ".intervals[" + std::to_string(k) + "]";
    const auto& pair = list[k];
    if (!pair.is_array() || pair.size() != 2) throw InputError(at(here, "expected [\"lo\", \"hi\"]"));
    intervals.push_back({rational_from_json(pair[0], here), rational_from_json(pair[1], here)});
  }
  try {
    return IntervalEvent::from_intervals(std::move(intervals), mode);
  } catch (const InputError& e) {
    throw InputError(at(where, e.what()));
  }
}

ordered_json to_json(const IntervalEvent& e) {
  ordered_json list = ordered_json::array();
  for (const auto& iv : e.intervals()) list.push_back({to_json(iv.lo), to_json(iv.hi)});
  return {{"intervals", std::move(list)}};
}

FiniteSpace finite_space_from_json(const ordered_json& j) {
  const auto& list = require(j, "weights", "space");
  if (!list.is_array()) throw InputError("space: \"weights\" must be an array");
  std::vector<Rational> weights;
  for (std::size_t k = 0; k < list.size(); ++k) {
    weights.push_back(rational_from_json(list[k], "weights[" + std::to_string(k) + "]"));
  }
  return FiniteSpace(std::move(weights));
}

FiniteEvent finite_event_from_json(const ordered_json& j, std::string_view where) {
  const auto& list = require(j, "members", where);
  if (!list.is_array()) throw InputError(at(where, "\"members\" must be an array"));
  std::vector<std::uint32_t> members;
  for (const auto& v : list) {
    if (!v.is_number_unsigned()) throw InputError(at(where, "members must be non-negative integers"));
    members.push_back(v.get<std::uint32_t>());
  }
  return FiniteEvent(std::move(members));
}

ordered_json to_json(const FiniteEvent& e) {
  ordered_json list = ordered_json::array();
  for (auto m : e.members()) list.push_back(m);
  return {{"members", std::move(list)}};
}

ordered_json to_json(const VerificationReport& report) {
  ordered_json cells = ordered_json::array();
  for (const auto& c : report.cells) {
    cells.push_back({{"measure", to_json(c.measure)},
                     {"cond_a", to_json(c.cond_a)},
                     {"cond_b", to_json(c.cond_b)},
                     {"cond_ab", to_json(c.cond_ab)},
                     {"screening_off", c.screening_off}});
  }
  ordered_json pairs = ordered_json::array();
  for (const auto& p : report.pairs) {
    pairs.push_back({{"i", p.i},
                     {"j", p.j},
                     {"diff_a", to_json(p.diff_a)},
                     {"diff_b", to_json(p.diff_b)},
                     {"ok", p.ok}});
  }
  ordered_json out{{"verdict", report.accepted() ? "accepted" : "rejected"},
                   {"cells", std::move(cells)},
                   {"pairs", std::move(pairs)},
                   {"decomposition",
                    {{"lhs", to_json(report.decomposition_lhs)}, {"rhs", to_json(report.decomposition_rhs)}}}};
  if (report.first_failure) {
    const auto& f = *report.first_failure;
    out["failure"] = {{"kind", failure_kind(f.kind)}, {"cell", f.cell}, {"other", f.other}, {"message", f.message}};
  }
  return out;
}

ordered_json to_json(const ConstructionTrace& t) {
  return {{"phi_a", to_json(t.phi_a)},
          {"phi_b", to_json(t.phi_b)},
          {"phi_ab", to_json(t.phi_ab)},
          {"phi_a_or_b", to_json(t.phi_a_or_b)},
          {"correlation", to_json(t.correlation)},
          {"t", to_json(t.t)},
          {"lambda", to_json(t.lambda)},
          {"phi_c1", to_json(t.phi_c1)},
          {"phi_c1_complement", to_json(t.phi_c1_complement)},
          {"phi_a_c1_complement", to_json(t.phi_a_c1_complement)},
          {"phi_b_c1_complement", to_json(t.phi_b_c1_complement)},
          {"phi_ab_c1_complement", to_json(t.phi_ab_c1_complement)},
          {"x2", to_json(t.x2)},
          {"phi_na_nb", to_json(t.phi_na_nb)},
          {"c2_is_whole_quadrant", t.c2_is_whole_quadrant},
          {"phi_c2", to_json(t.phi_c2)},
          {"phi_c3", to_json(t.phi_c3)}};
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

ordered_json to_json(const bell::BellTerms& t) {
  return {{"phi_A1", format_double(t.a1)},     {"phi_A2", format_double(t.a2)},
          {"phi_B1B2", format_double(t.b1b2)}, {"phi_A1A2", format_double(t.a1a2)},
          {"phi_B1A2", format_double(t.b1a2)}, {"phi_A1B2", format_double(t.a1b2)},
          {"value", format_double(t.value())}};
}

ordered_json to_json(const bell::NoCommonCauseReport& r) {
  ordered_json pairs = ordered_json::array();
  for (const auto& p : r.pairs) {
    pairs.push_back({{"pair", p.first + "," + p.second},
                     {"joint", format_double(p.joint)},
                     {"correlation", format_double(p.correlation)}});
  }
  return {{"terms", to_json(r.terms)},
          {"violation", r.violation},
          {"classical_bound",
           {{"seed", r.bound.seed},
            {"samples", r.bound.samples},
            {"failures", r.bound.failures},
            {"max_residual", format_double(r.bound.max_residual)}}},
          {"pairs", std::move(pairs)},
          {"verdict", r.violation && r.bound.failures == 0 ? "common CCS impossible" : "inconclusive"},
          {"narrative", r.narrative}};
}

}  // namespace rccs::io
