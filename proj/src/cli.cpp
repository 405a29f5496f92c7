// SPDX-License-Identifier: Apache-2.0

#include "ordcalc/cli.hpp"

#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ordcalc/corpus.hpp"
#include "ordcalc/embed.hpp"
#include "ordcalc/facts.hpp"
#include "ordcalc/laver.hpp"
#include "ordcalc/ordinal.hpp"
#include "ordcalc/rank.hpp"
#include "ordcalc/spectrum.hpp"
#include "ordcalc/term.hpp"

namespace ordcalc::cli {

using nlohmann::json;

SelftestSummary selftest(std::uint64_t seed, std::size_t samples) {
  SelftestSummary s;
  for (const auto& f : hand_facts()) {
    if (holds(f)) {
      ++s.facts_passed;
    } else {
      ++s.facts_failed;
      s.failures.push_back(std::string(f.id) + ": " + std::string(f.left) + " vs " +
                           std::string(f.right));
    }
  }

  std::mt19937_64 rng(seed);
  RandomOptions opts;
  opts.max_depth = 2;
  std::vector<Term> corpus;
  for (std::size_t i = 0; i < samples; ++i) corpus.push_back(random_term(rng, opts));
  auto check = [&](bool ok, const std::string& what) {
    ++s.property_checks;
    if (!ok) {
      ++s.property_violations;
      s.failures.push_back(what);
    }
  };
  std::uniform_int_distribution<std::size_t> pick(0, corpus.size() - 1);
  for (const auto& t : corpus) {
    const std::string name = render(t);
    check(normalize(t) == t, "idempotence: " + name);
    check(parse(name) == t, "round trip: " + name);
    check(reverse(reverse(t)) == t, "involution: " + name);
    check(embeds(t, t), "reflexivity: " + name);
  }
  for (std::size_t k = 0; k < samples; ++k) {
    const Term& a = corpus[pick(rng)];
    const Term& b = corpus[pick(rng)];
    const Term& c = corpus[pick(rng)];
    const std::string ab = render(a) + " , " + render(b);
    bool e = embeds(a, b);
    check(e == embeds(reverse(a), reverse(b)), "duality: " + ab);
    if (e) check(hausdorff_rank(a) <= hausdorff_rank(b), "rank monotonicity: " + ab);
    if (e && embeds(b, c)) check(embeds(a, c), "transitivity: " + ab + " , " + render(c));
  }
  return s;
}

namespace {

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::Syntax:
    case ErrorCode::EmptyBlock:
    case ErrorCode::BadNat: return kParseError;
    default: return kUnsupported;
  }
}

json rank_json(const Rank& r) {
  if (r.is_infinite()) return "INFINITE";
  return r.value();
}

json cnf_json(const Cnf& c) {
  auto arr = json::array();
  for (const auto& m : c.monomials()) arr.push_back({m.exponent, m.coefficient});
  return arr;
}

struct Options {
  bool json = false;
  bool exit_status = false;
  std::uint64_t max_rank = 2;
  bool raw = false;
  std::string a, b;
  std::uint64_t level = 0;
  std::vector<std::string> set, prefix, cycle;
  std::string direction = "fwd";
  std::uint64_t seed = 20240501;
  std::size_t samples = 200;
};

std::vector<Term> parse_all(const std::vector<std::string>& texts) {
  std::vector<Term> out;
  for (const auto& t : texts) out.push_back(normalize(parse(t)));
  return out;
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

}  // namespace

CommandResult run(std::span<const std::string> args) {
  CommandResult result;
  Options o;
  CLI::App app{"Symbolic calculator for countable order types", "ordcalc"};
  app.require_subcommand(1, 1);
  app.add_flag("--json", o.json, "Emit one JSON document on stdout");
  app.add_flag("--exit-status", o.exit_status, "Exit 1 when a predicate is false");
  app.add_option("--max-rank", o.max_rank, "Highest Laver level to enumerate (ceiling 3)");

  auto term_cmd = [&](const char* name, const char* help, int arity) {
    auto* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    sub->add_option("term", o.a, "Term")->required();
    if (arity == 2) sub->add_option("other", o.b, "Second term")->required();
    return sub;
  };
  auto* parse_cmd = term_cmd("parse", "Parse and normalize a term", 1);
  parse_cmd->add_flag("--raw", o.raw, "Print the tree as parsed, before normalization");
  term_cmd("rank", "Hausdorff rank", 1);
  term_cmd("rev", "Reverse order type", 1);
  term_cmd("embeds", "Does the first term embed into the second?", 2);
  term_cmd("equi", "Are the terms biembeddable?", 2);
  term_cmd("cnf", "Cantor normal form of a well-ordered term", 1);
  term_cmd("classify", "Big Ramsey spectrum finiteness of a chain", 1);
  term_cmd("classify-chainable", "Spectrum finiteness of a structure chained by the term", 1);
  app.add_subcommand("laver", "Census of Laver representatives up to --max-rank")->fallthrough();
  auto* vb = app.add_subcommand("verify-bound", "Check the counting bound at a level");
  vb->fallthrough();
  vb->add_option("level", o.level, "Level >= 1")->required();
  auto* cp = app.add_subcommand("check-periodic", "Check the periodic-sum lemma on one instance");
  cp->fallthrough();
  cp->add_option("--set", o.set, "Members of U (repeatable)")->required();
  cp->add_option("--prefix", o.prefix, "Prefix summands (repeatable)");
  cp->add_option("--cycle", o.cycle, "Cycle summands (repeatable)")->required();
  cp->add_option("--direction", o.direction, "fwd or back")
      ->check(CLI::IsMember({"fwd", "back"}));
  auto* st = app.add_subcommand("selftest", "Run the hand-fact table and property samples");
  st->fallthrough();
  st->add_option("--seed", o.seed, "Random seed for property samples");
  st->add_option("--samples", o.samples, "Number of sampled terms and pairs");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  std::ostringstream out, err;
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    result.out = out.str();
    result.err = err.str();
    result.exit_code = code == 0 ? kSuccess : kParseError;
    if (o.json && code != 0) result.out = json{{"error", "E_USAGE"}, {"message", e.what()}}.dump() + "\n";
    return result;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  json doc;
  std::string text;
  bool predicate = true;
  bool is_predicate = false;
  std::string current;
  auto read = [&](const std::string& input) {
    current = input;
    return parse(input);
  };

  try {
    if (cmd == "parse") {
      Term raw = read(o.a);
      Term n = normalize(raw);
      text = render(o.raw ? raw : n);
      doc = {{"input", o.a}, {"parsed", to_json(raw)}, {"normalized", to_json(n)}, {"text", render(n)}};
    } else if (cmd == "rank") {
      Rank r = hausdorff_rank(read(o.a));
      text = r.to_string();
      doc = {{"term", render(normalize(read(o.a)))}, {"rank", rank_json(r)}};
    } else if (cmd == "rev") {
      Term r = reverse(read(o.a));
      text = render(r);
      doc = {{"term", render(normalize(read(o.a)))}, {"reverse", to_json(r)}, {"text", text}};
    } else if (cmd == "embeds" || cmd == "equi") {
      Term a = normalize(read(o.a)), b = normalize(read(o.b));
      predicate = cmd == "embeds" ? embeds(a, b) : equimorphic(a, b);
      is_predicate = true;
      text = bool_text(predicate);
      doc = {{"a", render(a)}, {"b", render(b)}, {"relation", cmd}, {"result", predicate}};
    } else if (cmd == "cnf") {
      auto c = ordinal_cnf(read(o.a));
      text = c ? c->to_string() : "none";
      doc = {{"term", render(normalize(read(o.a)))}, {"cnf", c ? cnf_json(*c) : json(nullptr)}};
    } else if (cmd == "classify" || cmd == "classify-chainable") {
      Term t = read(o.a);
      SpectrumReport r = cmd == "classify" ? classify(t) : classify_chainable(t);
      text = render_text(r);
      doc = to_json(r);
      doc["term"] = render(normalize(t));
    } else if (cmd == "laver") {
      auto levels = enumerate_reps(o.max_rank);
      doc = census_json(levels);
      std::ostringstream s;
      for (const auto& entry : doc) {
        s << "level " << entry["level"].get<std::uint64_t>() << ": {";
        bool first = true;
        for (const auto& r : entry["reps"]) {
          s << (first ? "" : ", ") << r.get<std::string>();
          first = false;
        }
        s << "} total=" << entry["total"] << " new=" << entry["new_count"] << " bound="
          << (entry["bound"].is_null() ? std::string("-") : entry["bound"].dump())
          << " pass=" << bool_text(entry["pass"].get<bool>()) << "\n";
      }
      text = s.str();
      if (!text.empty()) text.pop_back();
    } else if (cmd == "verify-bound") {
      BoundReport r = verify_bound(o.level);
      predicate = r.pass;
      is_predicate = true;
      doc = {{"level", o.level}, {"t_prev", r.t_prev}, {"bound", r.bound},
             {"new_count", r.new_count}, {"total", r.total}, {"pass", r.pass}};
      text = "t_prev=" + std::to_string(r.t_prev) + " bound=" + std::to_string(r.bound) +
             " new_count=" + std::to_string(r.new_count) + " total=" + std::to_string(r.total) +
             " pass=" + bool_text(r.pass);
    } else if (cmd == "check-periodic") {
      auto set = parse_all(o.set), prefix = parse_all(o.prefix), cycle = parse_all(o.cycle);
      Direction d = o.direction == "back" ? Direction::Back : Direction::Fwd;
      predicate = check_periodic_lemma(set, prefix, cycle, d);
      is_predicate = true;
      text = bool_text(predicate);
      doc = {{"result", predicate}, {"direction", o.direction}};
      if (!predicate) err << "periodic-sum lemma instance failed: engine or precondition defect\n";
    } else if (cmd == "selftest") {
      SelftestSummary s = selftest(o.seed, o.samples);
      doc = {{"facts_passed", s.facts_passed},     {"facts_failed", s.facts_failed},
             {"property_checks", s.property_checks}, {"property_violations", s.property_violations},
             {"failures", s.failures},              {"ok", s.ok()}};
      text = "facts: " + std::to_string(s.facts_passed) + " passed, " +
             std::to_string(s.facts_failed) + " failed\nproperties: " +
             std::to_string(s.property_checks) + " checks, " +
             std::to_string(s.property_violations) + " violations";
      for (const auto& f : s.failures) err << "FAIL " << f << "\n";
      if (!s.ok()) result.exit_code = kInternal;
    }
  } catch (const TermError& e) {
    result.exit_code = exit_code_for(e.code());
    err << e.what() << "\n";
    if (e.position()) err << "  " << current << "\n  " << std::string(*e.position(), ' ') << "^\n";
    json j{{"error", error_code_name(e.code())}, {"message", e.what()}};
    if (e.position()) j["position"] = *e.position();
    result.out = o.json ? j.dump() + "\n" : "";
    result.err = err.str();
    return result;
  } catch (const std::exception& e) {
    result.exit_code = kInternal;
    err << "internal error: " << e.what() << "\n";
    result.out = o.json ? json{{"error", "E_INTERNAL"}, {"message", e.what()}}.dump() + "\n" : "";
    result.err = err.str();
    return result;
  }

  result.out = (o.json ? doc.dump() : text) + "\n";
  result.err = err.str();
  if (is_predicate && !predicate && o.exit_status) result.exit_code = kPredicateFalse;
  return result;
}

}  // namespace ordcalc::cli
