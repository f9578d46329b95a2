#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "monreg/betti.hpp"
#include "monreg/dfixed.hpp"
#include "monreg/document.hpp"
#include "monreg/error.hpp"
#include "monreg/hilbert.hpp"
#include "monreg/regularity.hpp"
#include "monreg/structure.hpp"

namespace monreg::cli {

namespace {

using nlohmann::json;

struct Options {
  bool json_output = false;
  std::string input;
  std::string property;
  std::string dseq;
  std::string method = "all";
  std::string monomial;
  int ring = 0;
};

/// What a command produced: the fixed JSON envelope plus a text rendering.
struct Report {
  std::string command;
  int num_vars = 0;
  std::vector<Monomial> generators;
  json result;
  json evidence = json::object();
  std::string text;
};

json to_json(const std::vector<Monomial>& gens) {
  json out = json::array();
  for (const auto& g : gens) out.push_back(to_string(g));
  return out;
}

json to_json(const MonomialIdeal& ideal) { return to_json(ideal.generators()); }

json optional_json(const std::optional<int>& v) { return v ? json(*v) : json(nullptr); }

std::string optional_text(const std::optional<int>& v) { return v ? std::to_string(*v) : "none"; }

json bundle(const MethodDisagreement& e) {
  json values = json::object();
  const auto& r = e.report();
  if (r.chain) values["chain"] = r.chain->value;
  if (r.truncation) values["truncation"] = r.truncation->value;
  if (r.oracle) values["oracle"] = r.oracle->value;
  return {{"error", "method disagreement"},
          {"n", e.ideal().num_vars()},
          {"generators", to_json(e.ideal())},
          {"values", values},
          {"ground_truth", r.oracle ? json(r.oracle->value) : json(nullptr)}};
}

IdealDocument read_document(const Options& opts, std::istream& in) {
  std::string text;
  if (opts.input.empty() || opts.input == "-") {
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  } else {
    std::ifstream file(opts.input);
    if (!file) throw PreconditionError("cannot open input file '" + opts.input + "'");
    text.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
  }
  return parse_document(text);
}

DSequence resolve_dseq(const Options& opts, const IdealDocument* doc) {
  if (opts.dseq.empty()) throw PreconditionError("--dseq is required");
  if (doc) {
    if (const DSequence* named = doc->find_dsequence(opts.dseq)) return *named;
  }
  return DSequence::parse(opts.dseq);
}

Report base_report(const std::string& command, const IdealDocument& doc) {
  Report r;
  r.command = command;
  r.num_vars = doc.num_vars;
  r.generators = doc.ideal().generators();
  return r;
}

Report cmd_check(const Options& opts, const IdealDocument& doc) {
  Report r = base_report("check", doc);
  const MonomialIdeal ideal = doc.ideal();
  const bool trivial = ideal.is_zero() || ideal.is_unit();
  bool verdict = false;
  if (opts.property == "borel-type") {
    auto violation = first_borel_type_violation(ideal);
    bool by_exchange = is_borel_type_by_exchange(ideal);
    verdict = !violation.has_value();
    if (verdict != by_exchange) {
      throw ContractViolation("Borel-type tests disagree on " + to_string(ideal));
    }
    r.evidence["saturation_test"] = verdict;
    r.evidence["exchange_test"] = by_exchange;
    r.evidence["first_violation"] = optional_json(violation);
    if (violation) {
      r.text = "(I : x" + std::to_string(*violation) + "^inf) != (I : (x1..x" +
               std::to_string(*violation) + ")^inf)\n";
    }
  } else if (opts.property == "stable") {
    verdict = is_stable(ideal);
  } else if (opts.property == "strongly-stable") {
    verdict = is_strongly_stable(ideal);
  } else if (opts.property == "d-fixed") {
    DSequence d = resolve_dseq(opts, &doc);
    verdict = is_d_fixed(ideal, d);
    r.evidence["dseq"] = to_string(d);
    MonomialIdeal closure = MonomialIdeal::zero(ideal.num_vars());
    for (const auto& g : ideal.generators()) closure = sum(closure, principal_dfixed(g, d));
    r.evidence["closure"] = to_json(closure);
    if (!verdict) r.text = "d-fixed closure for d = " + to_string(d) + ": " + to_string(closure) + "\n";
  } else if (opts.property == "ass-chain") {
    auto primes = ass_primes(ideal);
    verdict = is_ass_chain(ideal);
    json list = json::array();
    for (const auto& p : primes) list.push_back(to_string(p));
    r.evidence["ass"] = list;
  } else {
    throw PreconditionError("unknown property '" + opts.property + "'");
  }
  if (trivial) {
    r.evidence["convention"] = "zero and unit ideals are stable, strongly stable and of Borel type";
  }
  r.result = verdict;
  r.text = opts.property + ": " + (verdict ? "true" : "false") + "\n" + r.text;
  return r;
}

Report cmd_reg(const Options& opts, const IdealDocument& doc) {
  Report r = base_report("reg", doc);
  auto method = parse_regularity_method(opts.method);
  if (!method) throw PreconditionError("unknown method '" + opts.method + "'");
  const MonomialIdeal ideal = doc.ideal();
  RegularityReport rep = regularity(ideal, *method);
  r.result = rep.value;
  r.evidence["method"] = to_string(*method);
  std::ostringstream text;
  text << "reg = " << rep.value << "\n";
  if (rep.chain) {
    json s = json::array();
    std::string s_text;
    for (const auto& step : rep.chain->chain.steps) {
      s.push_back(optional_json(step.top_degree));
      if (!s_text.empty()) s_text += ", ";
      s_text += optional_text(step.top_degree);
    }
    r.evidence["chain"] = rep.chain->value;
    r.evidence["s_values"] = s;
    r.evidence["chain_fallback"] = rep.chain->fallback;
    text << "  chain:      " << rep.chain->value << "  (s-values " << s_text << ")"
         << (rep.chain->fallback ? "  [fallback to deg(I)]" : "") << "\n";
  }
  if (rep.truncation) {
    r.evidence["truncation"] = rep.truncation->value;
    r.evidence["unstable_truncations"] = rep.truncation->unstable;
    text << "  truncation: " << rep.truncation->value << "  (I_{>=e} first stable at e = "
         << rep.truncation->value << ")\n";
  }
  if (rep.oracle) {
    r.evidence["oracle"] = rep.oracle->value;
    r.evidence["betti_witness"] = {{"i", rep.oracle->homological},
                                   {"multidegree", to_string(rep.oracle->multidegree)}};
    text << "  oracle:     " << rep.oracle->value << "  (beta_{" << rep.oracle->homological << ", "
         << to_string(rep.oracle->multidegree) << "} != 0)\n";
  }
  r.text = text.str();
  return r;
}

Report cmd_chain(const Options&, const IdealDocument& doc) {
  Report r = base_report("chain", doc);
  SequentialChain chain = sequential_chain(doc.ideal());
  r.result = chain.length();
  json steps = json::array();
  std::ostringstream text;
  text << "r = " << chain.length() << "\n";
  for (const auto& step : chain.steps) {
    steps.push_back({{"index", step.index},
                     {"n", step.active_vars},
                     {"ideal", to_json(step.ideal)},
                     {"J", to_json(step.restricted)},
                     {"J_sat", to_json(step.saturated)},
                     {"s", optional_json(step.top_degree)}});
    text << "  I_" << step.index << " = " << to_string(step.ideal) << "  n_" << step.index
         << " = " << step.active_vars << "  J^sat = " << to_string(step.saturated)
         << "  s = " << optional_text(step.top_degree) << "\n";
  }
  text << "  I_" << chain.length() << " = " << to_string(chain.last) << "\n";
  r.evidence["steps"] = steps;
  r.text = text.str();
  return r;
}

Report cmd_hilbert(const Options&, const IdealDocument& doc) {
  Report r = base_report("hilbert", doc);
  const MonomialIdeal ideal = doc.ideal();
  IntPolynomial numerator = hilbert_numerator(ideal);
  r.result = to_string(numerator);
  r.evidence["coefficients"] = numerator.coefficients();
  r.evidence["hilbert_function"] = hilbert_function(ideal, 12);
  r.text = "HS(S/I) = (" + to_string(numerator) + ") / (1 - t)^" +
           std::to_string(ideal.num_vars()) + "\n";
  return r;
}

Report cmd_ass(const Options&, const IdealDocument& doc) {
  Report r = base_report("ass", doc);
  const MonomialIdeal ideal = doc.ideal();
  auto primes = ass_primes(ideal);
  json list = json::array();
  std::string text;
  for (const auto& p : primes) {
    list.push_back(to_string(p));
    text += "  " + to_string(p) + "\n";
  }
  bool chain = is_ass_chain(ideal);
  r.result = list;
  r.evidence["totally_ordered"] = chain;
  r.text = "Ass(S/I):\n" + text + "totally ordered: " + (chain ? "true" : "false") + "\n";
  return r;
}

Monomial resolve_monomial(const Options& opts) {
  if (opts.monomial.empty()) throw PreconditionError("--monomial is required");
  Monomial u = parse_monomial(opts.monomial);
  if (opts.ring > 0) {
    if (opts.ring < u.num_vars()) {
      throw PreconditionError("--ring " + std::to_string(opts.ring) + " is too small for " +
                              opts.monomial);
    }
    u = parse_monomial(opts.monomial, opts.ring);
  }
  if (u.is_one()) throw PreconditionError("principal d-fixed ideals need a non-constant monomial");
  return u;
}

Report cmd_dfixed_expand(const Options& opts) {
  Monomial u = resolve_monomial(opts);
  DSequence d = resolve_dseq(opts, nullptr);
  MonomialIdeal ideal = principal_dfixed(u, d);
  Report r;
  r.command = "dfixed-expand";
  r.num_vars = u.num_vars();
  r.generators = {u};
  r.result = to_json(ideal);
  r.evidence["dseq"] = to_string(d);
  r.evidence["size"] = ideal.size();
  r.text = "<" + to_string(u) + ">_" + to_string(d) + " = " + to_string(ideal) + "\n";
  return r;
}

Report cmd_dfixed_reg(const Options& opts) {
  Monomial u = resolve_monomial(opts);
  DSequence d = resolve_dseq(opts, nullptr);
  PrincipalSpec spec = make_principal_spec(u, d);
  Report r;
  r.command = "dfixed-reg";
  r.num_vars = u.num_vars();
  r.generators = {u};
  r.result = pardue_regularity(spec);
  json factors = json::array();
  std::ostringstream text;
  text << "reg(<" << to_string(u) << ">_" << to_string(d) << ") = " << pardue_regularity(spec) << "\n";
  if (spec.inert_degree > 0) text << "  x1 shift: " << spec.inert_degree << "\n";
  for (const auto& f : spec.factors) {
    factors.push_back({{"var", f.var},
                       {"exponent", f.exponent},
                       {"digits", f.digits.digits},
                       {"s", f.top_digit},
                       {"partial_degree", f.partial_degree},
                       {"D", f.bound}});
    text << "  x" << f.var << "^" << f.exponent << ": s = " << f.top_digit
         << ", d = " << f.partial_degree << ", D = " << f.bound << "\n";
  }
  r.evidence["dseq"] = to_string(d);
  r.evidence["inert_degree"] = spec.inert_degree;
  r.evidence["factors"] = factors;
  r.text = text.str();
  return r;
}

Report cmd_bound(const Options&, const IdealDocument& doc) {
  Report r = base_report("bound", doc);
  const MonomialIdeal ideal = doc.ideal();
  r.result = regularity_upper_bound(ideal);
  r.evidence["deg"] = ideal.max_degree();
  r.text = "n (deg(I) - 1) + 1 = " + std::to_string(ideal.num_vars()) + " * (" +
           std::to_string(ideal.max_degree()) + " - 1) + 1 = " +
           std::to_string(regularity_upper_bound(ideal)) + "\n";
  return r;
}

void emit(const Report& r, const Options& opts, std::ostream& out) {
  if (opts.json_output) {
    json j = {{"command", r.command},
              {"n", r.num_vars},
              {"generators", to_json(r.generators)},
              {"result", r.result},
              {"evidence", r.evidence}};
    out << j.dump(2) << "\n";
  } else {
    out << r.text;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Options opts;
  CLI::App app{"Monomial ideal classifier and regularity calculator", "monreg"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", opts.json_output, "Emit a JSON report");
  app.add_option("--input", opts.input, "Ideal description file (default: stdin)");

  auto* check = app.add_subcommand("check", "Test a structural property");
  check->add_option("--property", opts.property, "borel-type|stable|strongly-stable|d-fixed|ass-chain")
      ->required()
      ->check(CLI::IsMember({"borel-type", "stable", "strongly-stable", "d-fixed", "ass-chain"}));
  check->add_option("--dseq", opts.dseq, "d-sequence, e.g. 1,2,4, or a name declared in the input");

  auto* reg = app.add_subcommand("reg", "Castelnuovo-Mumford regularity");
  reg->add_option("--method", opts.method, "chain|truncation|oracle|all")
      ->check(CLI::IsMember({"chain", "truncation", "oracle", "all"}));

  auto* chain = app.add_subcommand("chain", "Sequential chain of a Borel-type ideal");
  auto* hilbert = app.add_subcommand("hilbert", "Hilbert series numerator of S/I");
  auto* ass = app.add_subcommand("ass", "Associated primes of S/I");
  auto* bound = app.add_subcommand("bound", "Print n (deg(I) - 1) + 1");

  auto* expand = app.add_subcommand("dfixed-expand", "Expand a principal d-fixed ideal");
  auto* dreg = app.add_subcommand("dfixed-reg", "Regularity of a principal d-fixed ideal by formula");
  for (auto* sub : {expand, dreg}) {
    sub->add_option("--monomial", opts.monomial, "Generator, e.g. \"x2^2 x3\"")->required();
    sub->add_option("--dseq", opts.dseq, "d-sequence, e.g. 1,2,4")->required();
    sub->add_option("--ring", opts.ring, "Variable count (default: largest index used)");
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  }

  try {
    Report report;
    if (expand->parsed()) {
      report = cmd_dfixed_expand(opts);
    } else if (dreg->parsed()) {
      report = cmd_dfixed_reg(opts);
    } else {
      IdealDocument doc = read_document(opts, in);
      if (check->parsed()) report = cmd_check(opts, doc);
      else if (reg->parsed()) report = cmd_reg(opts, doc);
      else if (chain->parsed()) report = cmd_chain(opts, doc);
      else if (hilbert->parsed()) report = cmd_hilbert(opts, doc);
      else if (ass->parsed()) report = cmd_ass(opts, doc);
      else if (bound->parsed()) report = cmd_bound(opts, doc);
    }
    emit(report, opts, out);
    return kOk;
  } catch (const MethodDisagreement& e) {
    err << "error: " << e.what() << "\n" << bundle(e).dump(2) << "\n";
    return kContractViolation;
  } catch (const ContractViolation& e) {
    err << "internal error: " << e.what() << "\n";
    return kContractViolation;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kBadInput;
  } catch (const PreconditionError& e) {
    err << "precondition violated: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kContractViolation;
  }
}

}  // namespace monreg::cli
