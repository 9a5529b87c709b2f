#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "rccs/bell.hpp"
#include "rccs/engine.hpp"
#include "rccs/finite_space.hpp"
#include "rccs/interval_event.hpp"
#include "rccs/rational.hpp"

namespace rccs::io {

using nlohmann::ordered_json;

/// Parses text as JSON, turning syntax errors into InputError with the byte
/// offset of the failure.
ordered_json parse_document(std::string_view text);

/// Rationals travel as strings, "p/q" or "n"; JSON numbers are rejected.
Rational rational_from_json(const ordered_json& j, std::string_view where);
ordered_json to_json(const Rational& r);

/// {"intervals": [["lo", "hi"], ...]}
IntervalEvent interval_event_from_json(const ordered_json& j, Canonicalize mode, std::string_view where);
ordered_json to_json(const IntervalEvent& e);

/// {"weights": ["1/4", ...]}
FiniteSpace finite_space_from_json(const ordered_json& j);
/// {"members": [0, 1]}
FiniteEvent finite_event_from_json(const ordered_json& j, std::string_view where);
ordered_json to_json(const FiniteEvent& e);

/// Looks up a required member, throwing InputError when absent.
const ordered_json& require(const ordered_json& j, std::string_view key, std::string_view where);

ordered_json to_json(const VerificationReport& report);
ordered_json to_json(const ConstructionTrace& trace);

/// 17 significant digits, enough to round-trip any double.
std::string format_double(double v);

ordered_json to_json(const bell::BellTerms& terms);
ordered_json to_json(const bell::NoCommonCauseReport& report);

}  // namespace rccs::io
