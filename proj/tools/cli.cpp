#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "kaestner/algebra.hpp"
#include "kaestner/bracket.hpp"
#include "kaestner/gauss.hpp"
#include "kaestner/invariant.hpp"
#include "kaestner/moves.hpp"
#include "kaestner/search.hpp"

namespace kaestner::cli {

namespace {

using Json = nlohmann::ordered_json;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json violations_json(const std::vector<Violation>& vs) {
  Json arr = Json::array();
  for (const auto& v : vs) arr.push_back({{"rule", v.rule}, {"witness", v.witness}, {"detail", v.detail}});
  return arr;
}

void write_violations(std::ostream& os, const std::vector<Violation>& vs) {
  for (const auto& v : vs) {
    os << "  " << v.rule << " [";
    for (std::size_t i = 0; i < v.witness.size(); ++i) os << (i ? "," : "") << v.witness[i];
    os << "]: " << v.detail << '\n';
  }
}

Json table_json(const CoeffTable& t) {
  Json arr = Json::array();
  for (const auto& row : t) arr.push_back(row);
  return arr;
}

std::string sign_text(Sign s) { return s == Sign::Positive ? "+" : "-"; }

// Options shared by every subcommand.
struct Common {
  bool json = false;
  std::string output;
};

struct KnotSource {
  std::string knots;
  std::string code;
  bool has_code = false;
};

std::vector<NamedCode> load_knots(const KnotSource& src) {
  if (!src.knots.empty() && src.has_code) throw InputError("give either --knots or --code, not both");
  if (src.has_code) return {{"code", src.code}};
  if (src.knots.empty()) throw InputError("one of --knots or --code is required");
  return parse_knot_list(read_file(src.knots));
}

ParityBiquandle load_parity_biquandle(const std::string& path) {
  const auto f = parse_structure(read_file(path));
  const auto rep = verify_parity_biquandle(f.parity_tables());
  if (!rep.passed()) {
    throw InputError("structure in '" + path + "' is not a parity biquandle (" +
                     rep.violations.front().rule + ": " + rep.violations.front().detail +
                     "); run verify-parity-biquandle for details");
  }
  return ParityBiquandle::from_tables(f.parity_tables());
}

// Parses one --apply spec and applies it.
MoveRecord apply_spec(const GaussCode& code, const std::string& spec) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  auto num = [&](std::size_t i) -> long long {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(parts.at(i), &used);
      if (used != parts[i].size() || v < 0) throw std::invalid_argument("");
      return v;
    } catch (const std::exception&) {
      throw InputError("bad number in move spec '" + spec + "'");
    }
  };
  auto sign = [&](std::size_t i) {
    if (parts.at(i) == "+") return Sign::Positive;
    if (parts.at(i) == "-") return Sign::Negative;
    throw InputError("bad sign in move spec '" + spec + "'");
  };
  auto flag = [&](std::size_t i, const char* yes, const char* no) {
    if (parts.at(i) == yes) return true;
    if (parts.at(i) == no) return false;
    throw InputError("bad flag in move spec '" + spec + "'");
  };
  auto arity = [&](std::size_t n) {
    if (parts.size() != n) throw InputError("move spec '" + spec + "' has the wrong number of fields");
  };
  if (parts.empty()) throw InputError("empty move spec");
  const std::string& kind = parts[0];
  const int fresh = code.max_label() + 1;
  if (kind == "r1+") {
    arity(5);
    const Gap g{static_cast<std::size_t>(num(1)), static_cast<std::size_t>(num(2))};
    return {MoveKind::R1Insert, {fresh}, r1_insert(code, g, flag(3, "o", "u"), sign(4))};
  }
  if (kind == "r1-") {
    arity(2);
    const int l = static_cast<int>(num(1));
    return {MoveKind::R1Delete, {l}, r1_delete(code, l)};
  }
  if (kind == "r2+") {
    arity(7);
    const Gap go{static_cast<std::size_t>(num(1)), static_cast<std::size_t>(num(2))};
    const Gap gu{static_cast<std::size_t>(num(3)), static_cast<std::size_t>(num(4))};
    return {MoveKind::R2Insert, {fresh, fresh + 1}, r2_insert(code, go, gu, flag(5, "a", "p"), sign(6))};
  }
  if (kind == "r2-") {
    arity(3);
    const int a = static_cast<int>(num(1)), b = static_cast<int>(num(2));
    return {MoveKind::R2Delete, {a, b}, r2_delete(code, a, b)};
  }
  if (kind == "r3") {
    arity(4);
    const int a = static_cast<int>(num(1)), b = static_cast<int>(num(2)), c = static_cast<int>(num(3));
    return {MoveKind::R3, {a, b, c}, r3_apply(code, a, b, c)};
  }
  throw InputError("unknown move kind '" + kind + "' in spec '" + spec + "'");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Kaestner bracket invariants of virtual knots: parsing, verification, evaluation, search",
               "kaestner"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for all subcommands");

  Common common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", common.json, "Emit one JSON document instead of text");
    sub->add_option("-o,--output", common.output, "Write the report to this file instead of stdout");
  };
  KnotSource knots;
  auto add_knots = [&](CLI::App* sub) {
    sub->add_option("--knots", knots.knots, "Knot list file (NAME: CODE per line)");
    sub->add_option("--code", knots.code, "A single Gauss code")->each([&](const std::string&) {
      knots.has_code = true;
    });
  };
  std::string structure_path, bracket_path, even_path;

  auto* parse_cmd = app.add_subcommand("parse", "Validate a Gauss code and print its canonical form");
  std::string code_text;
  parse_cmd->add_option("--code", code_text, "Gauss code")->required();
  add_common(parse_cmd);

  auto* parity_cmd = app.add_subcommand("parity", "Per-crossing sign and parity");
  parity_cmd->add_option("--code", code_text, "Gauss code")->required();
  add_common(parity_cmd);

  auto* colorings_cmd = app.add_subcommand("colorings", "Count colorings per knot");
  add_knots(colorings_cmd);
  colorings_cmd->add_option("--structure", structure_path, "Parity biquandle file")->required();
  add_common(colorings_cmd);

  auto* invariant_cmd = app.add_subcommand("invariant", "Bracket polynomial per knot");
  add_knots(invariant_cmd);
  invariant_cmd->add_option("--structure", structure_path, "Parity biquandle file")->required();
  invariant_cmd->add_option("--bracket", bracket_path, "Bracket file")->required();
  add_common(invariant_cmd);

  auto* classify_cmd = app.add_subcommand("classify", "Group knots by bracket polynomial");
  add_knots(classify_cmd);
  classify_cmd->add_option("--structure", structure_path, "Parity biquandle file")->required();
  classify_cmd->add_option("--bracket", bracket_path, "Bracket file")->required();
  add_common(classify_cmd);

  auto* vb_cmd = app.add_subcommand("verify-biquandle", "Check the biquandle axioms of utr0/otr0");
  vb_cmd->add_option("--structure", structure_path, "Structure file")->required();
  add_common(vb_cmd);

  auto* vpb_cmd = app.add_subcommand("verify-parity-biquandle", "Check the parity biquandle axioms");
  vpb_cmd->add_option("--structure", structure_path, "Structure file")->required();
  add_common(vpb_cmd);

  auto* vbr_cmd = app.add_subcommand("verify-bracket", "Check the biquandle bracket axioms (A0, B0)");
  vbr_cmd->add_option("--structure", structure_path, "Structure file")->required();
  vbr_cmd->add_option("--bracket", bracket_path, "Bracket file")->required();
  add_common(vbr_cmd);

  auto* vk_cmd = app.add_subcommand("verify-kaestner", "Check the Kaestner bracket axioms");
  vk_cmd->add_option("--structure", structure_path, "Parity biquandle file")->required();
  vk_cmd->add_option("--bracket", bracket_path, "Bracket file")->required();
  add_common(vk_cmd);

  auto* moves_cmd = app.add_subcommand("moves", "Apply Reidemeister moves to a Gauss code");
  std::vector<std::string> apply_specs;
  bool random = false;
  std::optional<std::uint64_t> seed;
  std::size_t count = 1;
  std::optional<std::size_t> max_crossings;
  moves_cmd->add_option("--code", code_text, "Gauss code")->required();
  moves_cmd->add_option("--apply", apply_specs,
                        "Move spec: r1+:C:S:o|u:+|-, r1-:L, r2+:C1:S1:C2:S2:p|a:+|-, r2-:L1:L2, r3:L1:L2:L3");
  moves_cmd->add_flag("--random", random, "Apply random moves (requires --seed)");
  moves_cmd->add_option("--seed", seed, "Seed for --random");
  moves_cmd->add_option("--count", count, "Number of random moves")->check(CLI::NonNegativeNumber);
  moves_cmd->add_option("--max-crossings", max_crossings, "Do not insert beyond this many crossings");
  add_common(moves_cmd);

  auto* search_cmd = app.add_subcommand("search", "Enumerate brackets over Z_n");
  std::uint64_t modulus = 0;
  std::string mode = "full";
  std::optional<std::uint64_t> max_results, max_work;
  std::uint64_t start_task = 0;
  search_cmd->add_option("--structure", structure_path, "Parity biquandle file")->required();
  search_cmd->add_option("--modulus", modulus, "Ring modulus n")->required()->check(CLI::Range(2, 1 << 20));
  search_cmd->add_option("--mode", mode, "full or odd-only")->check(CLI::IsMember({"full", "odd-only"}));
  search_cmd->add_option("--even", even_path, "Bracket file with the fixed A0/B0 (odd-only mode)");
  search_cmd->add_option("--max-results", max_results, "Stop after this many brackets");
  search_cmd->add_option("--max-work", max_work, "Stop at the first task boundary past this many instance evaluations");
  search_cmd->add_option("--start-task", start_task, "Resume from this task index");
  add_common(search_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kInputError;
  }

  std::ostringstream text;
  Json doc;
  int status = kOk;

  try {
    if (parse_cmd->parsed()) {
      const auto code = parse_gauss(code_text);
      doc = {{"command", "parse"}, {"code", serialize_gauss(code)}};
      text << serialize_gauss(code) << '\n';
    } else if (parity_cmd->parsed()) {
      const auto code = parse_gauss(code_text);
      Json rows = Json::array();
      for (int label : code.labels()) {
        const int p = parity(code, label);
        const Sign s = code.sign_of(label);
        rows.push_back({{"label", label}, {"sign", sign_text(s)}, {"parity", p}});
        text << label << ' ' << sign_text(s) << ' ' << (p ? "odd" : "even") << '\n';
      }
      doc = {{"command", "parity"}, {"crossings", rows}};
    } else if (colorings_cmd->parsed()) {
      const auto pb = load_parity_biquandle(structure_path);
      Json rows = Json::array();
      Json errors = Json::array();
      for (const auto& k : load_knots(knots)) {
        try {
          const auto n = count_colorings(build_diagram(parse_gauss(k.code)), pb);
          rows.push_back({{"name", k.name}, {"count", n}});
          text << k.name << ": " << n << '\n';
        } catch (const Error& e) {
          errors.push_back({{"name", k.name}, {"message", e.what()}});
          err << "error: " << k.name << ": " << e.what() << '\n';
          status = kInputError;
        }
      }
      doc = {{"command", "colorings"}, {"knots", rows}, {"errors", errors}};
    } else if (invariant_cmd->parsed()) {
      const auto pb = load_parity_biquandle(structure_path);
      const auto kb = KaestnerBracket::from_tables(pb, parse_bracket(read_file(bracket_path)).kaestner_tables());
      Json rows = Json::array();
      Json errors = Json::array();
      for (const auto& k : load_knots(knots)) {
        try {
          const auto poly = phi(parse_gauss(k.code), kb);
          Json terms = Json::array();
          for (const auto& [e, m] : poly.terms()) terms.push_back({{"exponent", e}, {"multiplicity", m}});
          rows.push_back({{"name", k.name}, {"polynomial", poly.render()}, {"terms", terms}});
          text << k.name << ": " << poly.render() << '\n';
        } catch (const Error& e) {
          errors.push_back({{"name", k.name}, {"message", e.what()}});
          err << "error: " << k.name << ": " << e.what() << '\n';
          status = kInputError;
        }
      }
      doc = {{"command", "invariant"}, {"knots", rows}, {"errors", errors}};
    } else if (classify_cmd->parsed()) {
      const auto pb = load_parity_biquandle(structure_path);
      const auto kb = KaestnerBracket::from_tables(pb, parse_bracket(read_file(bracket_path)).kaestner_tables());
      const auto cls = classify(load_knots(knots), kb);
      Json classes = Json::array();
      for (const auto& [poly, names] : cls.classes) {
        classes.push_back({{"polynomial", poly}, {"names", names}});
        text << poly << ':';
        for (std::size_t i = 0; i < names.size(); ++i) text << (i ? ", " : " ") << names[i];
        text << '\n';
      }
      Json errors = Json::array();
      for (const auto& [name, msg] : cls.errors) {
        errors.push_back({{"name", name}, {"message", msg}});
        err << "error: " << name << ": " << msg << '\n';
        status = kInputError;
      }
      doc = {{"command", "classify"}, {"classes", classes}, {"errors", errors}};
    } else if (vb_cmd->parsed() || vpb_cmd->parsed()) {
      const auto f = parse_structure(read_file(structure_path));
      const bool parity_mode = vpb_cmd->parsed();
      if (parity_mode && !f.has_odd()) throw InputError("structure file has no utr1/otr1 blocks");
      const Report r = parity_mode ? verify_parity_biquandle(f.parity_tables())
                                   : verify_biquandle({f.utr0, f.otr0});
      doc = {{"command", parity_mode ? "verify-parity-biquandle" : "verify-biquandle"},
             {"pass", r.passed()},
             {"violations", violations_json(r.violations)}};
      if (r.passed()) {
        text << "PASS\n";
      } else {
        text << "FAIL violations=" << r.violations.size() << '\n';
        write_violations(text, r.violations);
        status = kVerificationFailed;
      }
    } else if (vbr_cmd->parsed() || vk_cmd->parsed()) {
      const bool kaestner_mode = vk_cmd->parsed();
      const auto bf = parse_bracket(read_file(bracket_path));
      BracketReport r;
      if (kaestner_mode) {
        r = verify_kaestner_bracket(load_parity_biquandle(structure_path), bf.kaestner_tables());
      } else {
        const auto f = parse_structure(read_file(structure_path));
        const BiquandleTables bt{f.utr0, f.otr0};
        const auto rep = verify_biquandle(bt);
        if (!rep.passed()) {
          throw InputError("structure in '" + structure_path +
                           "' is not a biquandle; run verify-biquandle for details");
        }
        r = verify_biquandle_bracket(Biquandle::from_tables(bt), bf.even_tables());
      }
      doc = {{"command", kaestner_mode ? "verify-kaestner" : "verify-bracket"}, {"pass", r.passed()}};
      if (r.w) doc["w"] = r.w->value();
      if (r.delta) doc["delta"] = r.delta->value();
      doc["violations"] = violations_json(r.violations);
      if (r.passed()) {
        text << "PASS w=" << r.w->value() << " delta=" << r.delta->value() << '\n';
      } else {
        text << "FAIL violations=" << r.violations.size();
        if (r.w) text << " w=" << r.w->value() << " delta=" << r.delta->value();
        text << '\n';
        write_violations(text, r.violations);
        status = kVerificationFailed;
      }
    } else if (moves_cmd->parsed()) {
      GaussCode code = parse_gauss(code_text);
      Json applied = Json::array();
      auto record = [&](const MoveRecord& m) {
        applied.push_back({{"move", to_string(m.kind)}, {"labels", m.labels}});
        code = m.result;
      };
      if (random) {
        if (!apply_specs.empty()) throw InputError("--random and --apply are exclusive");
        if (!seed) throw InputError("--random requires --seed");
        Rng rng(*seed);
        RandomMoveOptions opts;
        opts.max_crossings = max_crossings;
        for (std::size_t i = 0; i < count; ++i) record(random_move(code, rng, opts));
      } else {
        if (seed || max_crossings || moves_cmd->count("--count")) {
          throw InputError("--seed, --count and --max-crossings need --random");
        }
        for (const auto& spec : apply_specs) record(apply_spec(code, spec));
      }
      doc = {{"command", "moves"}, {"code", serialize_gauss(code)}, {"applied", applied}};
      text << serialize_gauss(code) << '\n';
    } else if (search_cmd->parsed()) {
      const auto pb = load_parity_biquandle(structure_path);
      SearchSpec spec{pb, modulus};
      spec.mode = mode == "odd-only" ? SearchMode::OddOnly : SearchMode::Full;
      if (!even_path.empty()) {
        const auto bf = parse_bracket(read_file(even_path));
        spec.fixed_even = bf.even_tables();
      }
      spec.max_results = max_results;
      spec.max_work = max_work;
      spec.start_task = start_task;
      Json found = Json::array();
      const auto summary = search_brackets(spec, [&](const FoundBracket& b) {
        text << format_bracket(b.tables) << "%%\n";
        found.push_back({{"w", b.w.value()},
                         {"delta", b.delta.value()},
                         {"A0", table_json(b.tables.A0)},
                         {"B0", table_json(b.tables.B0)},
                         {"A1", table_json(b.tables.A1)},
                         {"B1", table_json(b.tables.B1)}});
      });
      const char* st = summary.status == SearchStatus::Complete      ? "complete"
                       : summary.status == SearchStatus::WorkLimit ? "work-limit"
                                                                    : "result-limit";
      text << "status=" << st << " tasks=" << summary.task_count << " next_task=" << summary.next_task
           << " work_units=" << summary.work_units << '\n';
      text << "found=" << summary.found << " pruned_instances=" << summary.pruned_instances << '\n';
      doc = {{"command", "search"},
             {"modulus", modulus},
             {"brackets", found},
             {"status", st},
             {"task_count", summary.task_count},
             {"next_task", summary.next_task},
             {"work_units", summary.work_units},
             {"found", summary.found},
             {"pruned_instances", summary.pruned_instances}};
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  const std::string payload = common.json ? doc.dump(2) + "\n" : text.str();
  if (common.output.empty()) {
    out << payload;
  } else {
    std::ofstream f(common.output, std::ios::binary);
    if (!f || !(f << payload)) {
      err << "error: cannot write '" << common.output << "'\n";
      return kInputError;
    }
  }
  return status;
}

}  // namespace kaestner::cli
