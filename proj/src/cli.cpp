#include "linca/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "linca/engine.hpp"
#include "linca/equiv.hpp"
#include "linca/oracle.hpp"
#include "linca/render.hpp"
#include "linca/rule.hpp"
#include "linca/zmod.hpp"

namespace linca::cli {

namespace {

constexpr const char* kDefaultRule = "1@(-1);1@(1)";
constexpr std::int64_t kDefaultSteps = 15;

std::string format_site(const Site& s, int dimension) {
  std::string out;
  for (int a = 0; a < dimension; ++a) {
    out += (a ? "," : "") + std::to_string(s[a]);
  }
  return out;
}

struct RuleOptions {
  std::string rule = kDefaultRule;
  int dim = 1;
  std::int64_t steps = kDefaultSteps;

  void attach(CLI::App& cmd) {
    cmd.add_option("--rule", rule, "Linear rule, e.g. \"1@(-1);1@(1)\"")->capture_default_str();
    cmd.add_option("--dim", dim, "Spatial dimension (1-3)")->capture_default_str();
    cmd.add_option("--steps", steps, "Number of time steps")->capture_default_str();
  }

  TransitionRule parsed() const { return parse_rule(rule, dim); }
};

// --------------------------------------------------------------------------
// evolve

struct EvolveOptions {
  std::int64_t states = 0;
  std::int64_t seed = 0;
  RuleOptions rule;
  std::string out_path;
  std::string format = "text";
  bool oracle = false;
};

int cmd_evolve(const EvolveOptions& o, std::ostream& out, std::ostream& err) {
  const Modulus n(o.states);
  const Pattern p = evolve(n, o.rule.parsed(), Residue(n, o.seed), o.rule.steps);

  if (o.format == "text") {
    const std::string text = render_text(p);
    if (o.out_path.empty()) {
      out << text;
    } else {
      std::ofstream file(o.out_path, std::ios::binary | std::ios::trunc);
      if (!(file << text)) {
        throw Error("cannot write " + o.out_path);
      }
    }
  } else if (o.out_path.empty()) {
    if (p.dimension() != 1) {
      throw Error("--format pgm with --dim 2 needs --out for the frame stem");
    }
    out << render_pgm(p);
  } else {
    for (const auto& written : render_image(p, o.out_path)) {
      err << "wrote " << written.string() << "\n";
    }
  }

  if (o.oracle) {
    if (const auto failure = oracle::cross_check(p)) {
      err << "oracle disagreement at t=" << failure->t
          << " i=" << format_site(failure->site, p.dimension()) << "\n";
      return kOracleDisagreement;
    }
    err << "oracle: agree on rows 0.." << std::min(p.horizon(), oracle::kMaxNaiveSteps) << "\n";
  }
  return kSuccess;
}

// --------------------------------------------------------------------------
// canon

struct CanonOptions {
  std::int64_t states = 0;
  std::int64_t seed = 0;
  RuleOptions rule;
  bool certify = false;
};

int cmd_canon(const CanonOptions& o, std::ostream& out) {
  const Modulus n(o.states);
  const Residue a(n, o.seed);
  const Canonical canon = canonicalize(n, a);
  out << "r=" << canon.r.value() << " d=" << canon.d << "\n";
  for (const auto& [b, gb] : canon.map.table()) {
    out << "map " << b << "->" << gb << "\n";
  }
  if (!o.certify) {
    return kSuccess;
  }
  const TransitionRule rule = o.rule.parsed();
  const Certificate cert = verify_isomorphism(evolve(n, rule, a, o.rule.steps),
                                              evolve(canon.r, rule, Residue(canon.r, 1), o.rule.steps),
                                              canon.map);
  out << serialize(cert);
  out << "justification: holds for all t by the scaling law and the quotient law; "
         "checked here up to t="
      << cert.horizon << "\n";
  return cert.verified() ? kSuccess : kFalsified;
}

// --------------------------------------------------------------------------
// verify

struct VerifyOptions {
  std::int64_t states = 0;
  std::int64_t seed_a = 0;
  std::int64_t seed_b = 0;
  RuleOptions rule;
  bool search = false;
};

int cmd_verify(const VerifyOptions& o, std::ostream& out) {
  const Modulus n(o.states);
  const Residue a(n, o.seed_a);
  const Residue b(n, o.seed_b);
  const TransitionRule rule = o.rule.parsed();

  StateMap f = StateMap::identity(n);
  try {
    f = seed_pair_map(n, a, b);
  } catch (const IncomparableSeeds& e) {
    out << e.what() << "\n";
    return kIncomparableSeeds;
  }

  const Pattern p = evolve(n, rule, a, o.rule.steps);
  const Pattern q = evolve(n, rule, b, o.rule.steps);
  const Certificate cert = verify_isomorphism(p, q, f);
  out << serialize(cert);

  if (o.search) {
    try {
      const auto witnesses = oracle::search_state_maps(p, q);
      out << "witnesses " << witnesses.size() << "\n";
      for (const auto& w : witnesses) {
        out << "witness " << w.to_string() << "\n";
      }
      out << "constructed map among witnesses: "
          << (oracle::is_witness(witnesses, f) ? "yes" : "no") << "\n";
    } catch (const Error& e) {
      out << "search skipped: " << e.what() << "\n";
    }
  }
  return cert.verified() ? kSuccess : kFalsified;
}

// --------------------------------------------------------------------------
// sweep

struct SweepOptions {
  std::int64_t states_max = 0;
  std::string rules_path;
  RuleOptions rule;
};

std::vector<TransitionRule> read_rules(const SweepOptions& o) {
  if (o.rules_path.empty()) {
    return {o.rule.parsed()};
  }
  std::ifstream file(o.rules_path);
  if (!file) {
    throw Error("cannot read rules file " + o.rules_path);
  }
  std::vector<TransitionRule> rules;
  std::string line;
  for (std::size_t line_no = 1; std::getline(file, line); ++line_no) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') {
      continue;
    }
    try {
      rules.push_back(parse_rule(line, o.rule.dim));
    } catch (const Error& e) {
      throw Error("rules file line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (rules.empty()) {
    throw Error("rules file " + o.rules_path + " contains no rules");
  }
  return rules;
}

std::string describe_class(const SeedClass& cls, int dimension) {
  std::string s = "{";
  for (std::size_t k = 0; k < cls.seeds.size(); ++k) {
    s += (k ? "," : "") + std::to_string(cls.seeds[k]);
  }
  s += "}->r=" + std::to_string(cls.r.value()) + ":";
  for (std::size_t k = 0; k < cls.seeds.size(); ++k) {
    const auto& failure = cls.certificates[k].failure;
    if (failure) {
      return s + "falsified(a=" + std::to_string(cls.seeds[k]) + " t=" +
             std::to_string(failure->t) + " i=" + format_site(failure->site, dimension) + ")";
    }
  }
  return s + "verified";
}

int cmd_sweep(const SweepOptions& o, std::ostream& out) {
  if (o.states_max < 2) {
    throw Error("--states-max must be at least 2");
  }
  const auto rules = read_rules(o);

  std::size_t certificates = 0;
  std::size_t falsified = 0;
  out << "linca-sweep v1 states-max=" << o.states_max << " steps=" << o.rule.steps
      << " dim=" << o.rule.dim << "\n";
  for (const auto& rule : rules) {
    out << "rule \"" << format_rule(rule) << "\"\n";
    for (std::int64_t n = 2; n <= o.states_max; ++n) {
      const auto classes = equivalence_classes(Modulus(n), rule, o.rule.steps);
      out << "n=" << n;
      for (std::size_t k = 0; k < classes.size(); ++k) {
        out << (k ? " | " : " ") << describe_class(classes[k], rule.dimension());
        for (const auto& c : classes[k].certificates) {
          ++certificates;
          falsified += c.verified() ? 0 : 1;
        }
      }
      out << "\n";
    }
  }
  out << "summary rules=" << rules.size() << " certificates=" << certificates
      << " falsified=" << falsified << "\n";
  return falsified == 0 ? kSuccess : kFalsified;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Linear cellular automata from single-site seeds", "linca"};
  app.require_subcommand(1);

  EvolveOptions evolve_opts;
  auto* evolve_cmd = app.add_subcommand("evolve", "Evolve a single-site seed and write the pattern");
  evolve_cmd->add_option("--states", evolve_opts.states, "Number of states n")->required();
  evolve_cmd->add_option("--seed", evolve_opts.seed, "Seed state a at the origin")->required();
  evolve_opts.rule.attach(*evolve_cmd);
  evolve_cmd->add_option("--out", evolve_opts.out_path, "Output file (stdout when omitted)");
  evolve_cmd->add_option("--format", evolve_opts.format, "text or pgm")
      ->check(CLI::IsMember({"text", "pgm"}))
      ->capture_default_str();
  evolve_cmd->add_flag("--oracle", evolve_opts.oracle, "Cross-check against the naive evaluator");

  CanonOptions canon_opts;
  auto* canon_cmd = app.add_subcommand("canon", "Reduce (n, a) to (n/gcd(n,a), 1)");
  canon_cmd->add_option("--states", canon_opts.states, "Number of states n")->required();
  canon_cmd->add_option("--seed", canon_opts.seed, "Seed state a")->required();
  canon_opts.rule.attach(*canon_cmd);
  canon_cmd->add_flag("--certify", canon_opts.certify, "Evolve both patterns and print a certificate");

  VerifyOptions verify_opts;
  auto* verify_cmd = app.add_subcommand("verify", "Verify the patterns of two seeds are isomorphic");
  verify_cmd->add_option("--states", verify_opts.states, "Number of states n")->required();
  verify_cmd->add_option("--seed-a", verify_opts.seed_a, "First seed")->required();
  verify_cmd->add_option("--seed-b", verify_opts.seed_b, "Second seed")->required();
  verify_opts.rule.attach(*verify_cmd);
  verify_cmd->add_flag("--search", verify_opts.search, "Also list every witness by exhaustive search");

  SweepOptions sweep_opts;
  auto* sweep_cmd = app.add_subcommand("sweep", "Certify seed classes for every n up to a bound");
  sweep_cmd->add_option("--states-max", sweep_opts.states_max, "Largest n")->required();
  sweep_cmd->add_option("--rules", sweep_opts.rules_path, "File with one rule per line");
  sweep_opts.rule.attach(*sweep_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (evolve_cmd->parsed()) {
      return cmd_evolve(evolve_opts, out, err);
    }
    if (canon_cmd->parsed()) {
      return cmd_canon(canon_opts, out);
    }
    if (verify_cmd->parsed()) {
      return cmd_verify(verify_opts, out);
    }
    return cmd_sweep(sweep_opts, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace linca::cli
