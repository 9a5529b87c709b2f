#include "commands.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "json_io.hpp"
#include "rccs/bell.hpp"
#include "rccs/engine.hpp"
#include "rccs/errors.hpp"
#include "rccs/finite_space.hpp"

namespace rccs::cli {

namespace {

using io::ordered_json;

struct Options {
  std::string input;
  bool json = false;
  bool explain = false;
  bool normalize = false;
  std::string lambda_text;
  std::size_t max_points = SearchOptions{}.max_points;
};

std::string num(const Rational& r) { return r.to_string() + " (" + r.to_decimal(6) + ")"; }

std::string read_input(const std::string& source, std::istream& in) {
  if (source == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  const auto first = source.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && source[first] == '{') return source;
  std::ifstream file(source, std::ios::binary);
  if (!file) throw InputError("cannot open input file \"" + source + "\"");
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

Rational parse_lambda(const std::string& text) {
  Rational lambda = Rational::parse(text);
  if (lambda <= Rational(0) || lambda >= Rational(1)) {
    throw InputError("--lambda must lie strictly between 0 and 1, got " + lambda.to_string());
  }
  return lambda;
}

Canonicalize mode(const Options& opt) { return opt.normalize ? Canonicalize::Normalize : Canonicalize::Strict; }

std::pair<IntervalEvent, IntervalEvent> worked_example() {
  const Rational half(1, 2);
  const Rational tenth(1, 10);
  const Rational nine_tenths(9, 10);
  return {IntervalEvent::interval(Rational(0), half),
          IntervalEvent::from_intervals({{tenth, half}, {nine_tenths, Rational(1)}})};
}

void print_cells(std::ostream& out, const std::vector<IntervalEvent>& cells, const VerificationReport& report) {
  for (std::size_t k = 0; k < report.cells.size(); ++k) {
    const auto& c = report.cells[k];
    out << "  C" << k + 1 << " = " << cells[k] << '\n'
        << "      phi(C)   = " << num(c.measure) << '\n'
        << "      P(a|C)   = " << num(c.cond_a) << '\n'
        << "      P(b|C)   = " << num(c.cond_b) << '\n'
        << "      P(ab|C)  = " << num(c.cond_ab) << (c.screening_off ? "  screens off" : "  does NOT screen off")
        << '\n';
  }
  for (const auto& p : report.pairs) {
    out << "  cells " << p.i + 1 << "," << p.j + 1 << ": (P(a|Ci)-P(a|Cj))(P(b|Ci)-P(b|Cj)) = "
        << num(p.diff_a * p.diff_b) << (p.ok ? "" : "  FAILS") << '\n';
  }
  out << "  phi(a^b) - phi(a)phi(b) = " << num(report.decomposition_lhs) << '\n'
      << "  1/2 sum_{i!=j} phi(Ci)phi(Cj)(..)(..) = " << num(report.decomposition_rhs) << '\n';
  out << "verdict: " << (report.accepted() ? "accepted" : "rejected") << '\n';
  if (report.first_failure) out << "  first failure: " << report.first_failure->message << '\n';
}

void print_explanation(std::ostream& out, const ConstructionTrace& t) {
  out << "construction steps\n"
      << "  1. phi(a) = " << num(t.phi_a) << ", phi(b) = " << num(t.phi_b) << '\n'
      << "     phi(a^b) = " << num(t.phi_ab) << ", phi(a v b) = " << num(t.phi_a_or_b) << '\n'
      << "     correlation phi(a^b) - phi(a)phi(b) = " << num(t.correlation) << '\n'
      << "  2. t = correlation / (1 - phi(a v b)) = " << num(t.t) << '\n'
      << "     phi(C1) = lambda * t with lambda = " << t.lambda << ": " << num(t.phi_c1)
      << ", C1 carved from a^b\n"
      << "  3. phi(C1') = " << num(t.phi_c1_complement) << '\n'
      << "     phi(a^C1') = " << num(t.phi_a_c1_complement) << ", phi(b^C1') = " << num(t.phi_b_c1_complement)
      << ", phi(a^b^C1') = " << num(t.phi_ab_c1_complement) << '\n'
      << "     x2 = phi(C1') - phi(a^C1')phi(b^C1')/phi(a^b^C1') = " << num(t.x2) << '\n'
      << "     phi(a'^b') = " << num(t.phi_na_nb) << ", C2 "
      << (t.c2_is_whole_quadrant ? "is all of a'^b'" : "carved from a'^b'") << '\n'
      << "  4. C3 = (C1 v C2)', phi(C3) = " << num(t.phi_c3) << '\n';
}

ordered_json construction_json(const IntervalEvent& a, const IntervalEvent& b, const Construction<IntervalEvent>& c) {
  ordered_json partition = ordered_json::array();
  for (const auto& cell : c.rccs.cells.cells) partition.push_back(io::to_json(cell));
  ordered_json out{{"command", "construct"},
                   {"a", io::to_json(a)},
                   {"b", io::to_json(b)},
                   {"lambda", io::to_json(c.trace.lambda)},
                   {"trace", io::to_json(c.trace)},
                   {"partition", std::move(partition)}};
  const auto report = io::to_json(c.report);
  for (const auto& [key, value] : report.items()) out[key] = value;
  return out;
}

void print_construction(std::ostream& out, const IntervalEvent& a, const IntervalEvent& b,
                        const Construction<IntervalEvent>& c, bool explain) {
  out << "size-3 common cause system\n  a = " << a << "\n  b = " << b << '\n';
  if (explain) print_explanation(out, c.trace);
  print_cells(out, c.rccs.cells.cells, c.report);
}

int run_construct(const Options& opt, std::istream& in, std::ostream& out) {
  const auto doc = io::parse_document(read_input(opt.input, in));
  const auto a = io::interval_event_from_json(io::require(doc, "a", "input"), mode(opt), "a");
  const auto b = io::interval_event_from_json(io::require(doc, "b", "input"), mode(opt), "b");
  Rational lambda = default_lambda();
  if (!opt.lambda_text.empty()) {
    lambda = parse_lambda(opt.lambda_text);
  } else if (doc.contains("lambda")) {
    lambda = io::rational_from_json(doc["lambda"], "lambda");
  }
  const auto c = construct_size3(a, b, lambda);
  if (opt.json) {
    out << construction_json(a, b, c).dump(2) << '\n';
  } else {
    print_construction(out, a, b, c, opt.explain);
  }
  return kSuccess;
}

int run_verify(const Options& opt, std::istream& in, std::ostream& out, std::ostream& err) {
  const auto doc = io::parse_document(read_input(opt.input, in));
  const auto a = io::interval_event_from_json(io::require(doc, "a", "input"), mode(opt), "a");
  const auto b = io::interval_event_from_json(io::require(doc, "b", "input"), mode(opt), "b");
  const auto& cells_json = io::require(doc, "partition", "input");
  if (!cells_json.is_array()) throw InputError("input: \"partition\" must be an array of events");
  Partition<IntervalEvent> p;
  for (std::size_t k = 0; k < cells_json.size(); ++k) {
    p.cells.push_back(io::interval_event_from_json(cells_json[k], mode(opt), "partition[" + std::to_string(k) + "]"));
  }
  const auto report = verify_rccs(a, b, p);
  if (opt.json) {
    ordered_json partition = ordered_json::array();
    for (const auto& cell : p.cells) partition.push_back(io::to_json(cell));
    ordered_json j{{"command", "verify"}, {"a", io::to_json(a)}, {"b", io::to_json(b)}, {"partition", partition}};
    const auto report_json = io::to_json(report);
    for (const auto& [key, value] : report_json.items()) j[key] = value;
    out << j.dump(2) << '\n';
  } else {
    out << "common cause system check, size " << p.size() << "\n  a = " << a << "\n  b = " << b << '\n';
    print_cells(out, p.cells, report);
  }
  if (!report.accepted()) {
    err << "rejected: " << report.first_failure->message << '\n';
    return kRejected;
  }
  return kSuccess;
}

int run_search(const Options& opt, std::istream& in, std::ostream& out, std::ostream& err) {
  const auto doc = io::parse_document(read_input(opt.input, in));
  const auto space = io::finite_space_from_json(doc);
  const auto a = io::finite_event_from_json(io::require(doc, "a", "input"), "a");
  const auto b = io::finite_event_from_json(io::require(doc, "b", "input"), "b");
  const auto& n_json = io::require(doc, "n", "input");
  if (!n_json.is_number_unsigned()) throw InputError("input: \"n\" must be a positive integer");
  const auto n = n_json.get<std::size_t>();
  if (opt.max_points > SearchOptions{}.max_points && space.points() > SearchOptions{}.max_points) {
    err << "warning: searching " << space.points() << " points; the number of partitions grows like the Bell "
        << "numbers and this may take very long\n";
  }
  const auto found = search_rccs(space, a, b, n, SearchOptions{opt.max_points});
  const auto candidates = stirling2(static_cast<unsigned>(space.points()), static_cast<unsigned>(n));
  if (opt.json) {
    ordered_json list = ordered_json::array();
    for (const auto& p : found) {
      ordered_json cells = ordered_json::array();
      for (const auto& c : p.cells) cells.push_back(io::to_json(c));
      list.push_back(std::move(cells));
    }
    out << ordered_json{{"command", "search"},
                        {"points", space.points()},
                        {"n", n},
                        {"candidates", candidates},
                        {"found", std::move(list)}}
               .dump(2)
        << '\n';
  } else {
    out << "searched " << candidates << " partitions of " << space.points() << " points into " << n
        << " cells: " << found.size() << " common cause system" << (found.size() == 1 ? "" : "s") << '\n';
    for (const auto& p : found) {
      out << " ";
      for (const auto& c : p.cells) out << ' ' << c.to_string();
      out << '\n';
    }
  }
  return kSuccess;
}

void print_bell_terms(std::ostream& out, const bell::BellTerms& t) {
  out << "  phi(A1)   = " << io::format_double(t.a1) << '\n'
      << "  phi(A2)   = " << io::format_double(t.a2) << '\n'
      << "  phi(B1B2) = " << io::format_double(t.b1b2) << '\n'
      << "  phi(A1A2) = " << io::format_double(t.a1a2) << '\n'
      << "  phi(B1A2) = " << io::format_double(t.b1a2) << '\n'
      << "  phi(A1B2) = " << io::format_double(t.a1b2) << '\n'
      << "  phi(A1) + phi(A2) + phi(B1B2) - phi(A1A2) - phi(B1A2) - phi(A1B2) = " << io::format_double(t.value())
      << '\n';
}

int run_bell(const Options& opt, std::ostream& out) {
  const auto w = bell::build_witness();
  if (!bell::observables_are_valid(w.obs)) throw InvariantViolation("witness observables are not valid");
  const auto terms = bell::bell_terms(w.phi, w.obs);
  if (opt.json) {
    out << ordered_json{{"command", "bell"}, {"terms", io::to_json(terms)}}.dump(2) << '\n';
  } else {
    out << "Bell witness on two qubits, state Phi = (e1(x)e1 + e0(x)e0)/sqrt(2)\n";
    print_bell_terms(out, terms);
  }
  return kSuccess;
}

int run_demo(const Options& opt, std::ostream& out) {
  const auto [a, b] = worked_example();
  const Rational lambda = opt.lambda_text.empty() ? default_lambda() : parse_lambda(opt.lambda_text);
  const auto c = construct_size3(a, b, lambda);
  const auto report = bell::no_common_ccs_demo();
  if (opt.json) {
    out << ordered_json{{"command", "demo"}, {"construction", construction_json(a, b, c)},
                        {"bell", io::to_json(report)}}
               .dump(2)
        << '\n';
    return kSuccess;
  }
  out << "== part 1: a correlated, logically independent pair in the interval algebra ==\n";
  print_construction(out, a, b, c, true);
  out << "\n== part 2: Bell witness ==\n";
  print_bell_terms(out, report.terms);
  out << "  value = -1/8 within 1e-12: " << (std::abs(report.terms.value() + 0.125) < 1e-12 ? "yes" : "no") << '\n';
  out << "  per-pair correlations phi(XY) - phi(X)phi(Y):\n";
  for (const auto& p : report.pairs) {
    out << "    (" << p.first << "," << p.second << "): " << io::format_double(p.correlation) << '\n';
  }
  for (const auto& line : report.narrative) out << "  " << line << '\n';
  out << "verdict: " << (report.violation && report.bound.failures == 0 ? "common CCS impossible" : "inconclusive")
      << '\n';
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Construct, verify and search for Reichenbachian common cause systems", "rccs"};
  app.require_subcommand(1);
  Options opt;

  auto* construct = app.add_subcommand("construct", "build a size-3 common cause system for two interval events");
  construct->add_option("input", opt.input, "JSON file, '-' for stdin, or inline JSON")->required();
  construct->add_flag("--json", opt.json, "machine-readable output");
  construct->add_flag("--explain", opt.explain, "print every intermediate quantity");
  construct->add_flag("--normalize", opt.normalize, "accept non-canonical interval lists");
  construct->add_option("--lambda", opt.lambda_text, "phi(C1) as a fraction of its upper bound, in (0,1)");

  auto* verify = app.add_subcommand("verify", "check a partition against two interval events");
  verify->add_option("input", opt.input, "JSON file, '-' for stdin, or inline JSON")->required();
  verify->add_flag("--json", opt.json, "machine-readable output");
  verify->add_flag("--normalize", opt.normalize, "accept non-canonical interval lists");

  auto* search = app.add_subcommand("search", "exhaustively search a finite space for common cause systems");
  search->add_option("input", opt.input, "JSON file, '-' for stdin, or inline JSON")->required();
  search->add_flag("--json", opt.json, "machine-readable output");
  search->add_option("--max-points", opt.max_points, "refuse spaces with more points than this")
      ->check(CLI::PositiveNumber);

  auto* bell_cmd = app.add_subcommand("bell", "evaluate the Bell witness");
  bell_cmd->add_flag("--json", opt.json, "machine-readable output");

  auto* demo = app.add_subcommand("demo", "worked example plus the Bell argument");
  demo->add_flag("--json", opt.json, "machine-readable output");
  demo->add_option("--lambda", opt.lambda_text, "phi(C1) as a fraction of its upper bound, in (0,1)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInputError;
  }

  try {
    if (!opt.lambda_text.empty()) parse_lambda(opt.lambda_text);
    if (construct->parsed()) return run_construct(opt, in, out);
    if (verify->parsed()) return run_verify(opt, in, out, err);
    if (search->parsed()) return run_search(opt, in, out, err);
    if (bell_cmd->parsed()) return run_bell(opt, out);
    if (demo->parsed()) return run_demo(opt, out);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const PreconditionError& e) {
    err << "precondition failed (" << to_string(e.gate()) << "): " << e.what() << '\n';
    return kPreconditionFailed;
  } catch (const InvariantViolation& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
  return kInputError;
}

}  // namespace rccs::cli
