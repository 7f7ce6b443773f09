#include "shufrob/cli.hpp"

#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "shufrob/analysis.hpp"
#include "shufrob/cofiniteness.hpp"
#include "shufrob/errors.hpp"
#include "shufrob/frobenius.hpp"
#include "shufrob/membership.hpp"
#include "shufrob/words.hpp"

namespace shufrob::cli {

namespace {

template <typename Range>
std::string join(const Range& values, const char* sep = ",") {
  std::ostringstream out;
  bool first = true;
  for (const auto& v : values) {
    if (!first) out << sep;
    first = false;
    out << v;
  }
  return out.str();
}

std::string words_list(const std::vector<Word>& words) {
  std::vector<std::string> text;
  for (const Word& w : words) text.push_back(w.str());
  return join(text);
}

std::string describe(const TiFamily& f) {
  return std::string(f.kind == TiKind::Singleton ? "singleton " : "full ") + words_list(f.words());
}

const char* flag(bool b) { return b ? "true" : "false"; }

std::uint64_t node_budget(const RunConfig& config) {
  if (config.budget) return *config.budget;
  if (const char* env = std::getenv("SHUFROB_BUDGET"); env && *env) {
    char* end = nullptr;
    errno = 0;
    auto value = std::strtoull(env, &end, 10);
    if (errno != 0 || *end != '\0' || env[0] == '-') throw FormatError("SHUFROB_BUDGET is not a non-negative integer");
    return value;
  }
  return kDefaultNodeBudget;
}

MembershipOptions membership_options(const RunConfig& config) {
  MembershipOptions options;
  options.node_budget = node_budget(config);
  options.prefilter = config.prefilter;
  return options;
}

SearchOptions search_options(const RunConfig& config) {
  SearchOptions options;
  options.membership = membership_options(config);
  options.jobs = config.jobs == 0 ? 1 : config.jobs;
  if (config.max_words) options.max_words = *config.max_words;
  if (config.max_bound) options.max_bound = *config.max_bound;
  return options;
}

void need_inputs(const RunConfig& config, std::size_t n, const char* usage) {
  if (config.inputs.size() != n) throw FormatError(std::string("usage: ") + usage);
}

int run_member(const RunConfig& config, std::ostream& out) {
  need_inputs(config, 2, "member <set-file> <word>");
  const WordSet s = WordSet::load(config.inputs[0]);
  const Word y = parse_word(config.inputs[1]);
  if (config.oracle) {
    const bool member = is_member_bruteforce(y, s);
    out << "member: " << flag(member) << "\n";
    out << "method: oracle\n";
    return member ? kComputed : kNegative;
  }
  MembershipResult result;
  try {
    result = is_member(y, s, membership_options(config));
  } catch (const BudgetExceeded& e) {
    out << "member: unknown\n";
    out << "nodes: " << e.stats().nodes << "\n";
    throw;
  }
  out << "member: " << flag(result.member) << "\n";
  out << "method: search\n";
  out << "nodes: " << result.stats.nodes << "\n";
  out << "cache_hits: " << result.stats.cache_hits << "\n";
  if (config.certificate && result.certificate) {
    for (const Match& m : result.certificate->matches) out << "match: " << format_match(m) << "\n";
  }
  return result.member ? kComputed : kNegative;
}

int run_cofinite(const RunConfig& config, std::ostream& out) {
  need_inputs(config, 1, "cofinite <set-file>");
  const WordSet s = WordSet::load(config.inputs[0]);
  const bool cofinite = is_cofinite(s);
  out << "cofinite: " << flag(cofinite) << "\n";
  out << "alphabet: " << s.alphabet() << "\n";
  for (Letter a : s.alphabet()) {
    auto candidates = ti_candidates(s, a);
    if (candidates.empty()) {
      out << "missing." << a << ": " << *missing_family_reason(s, a) << "\n";
      continue;
    }
    for (const TiFamily& f : candidates) out << "ti." << a << ": " << describe(f) << "\n";
  }
  return cofinite ? kComputed : kNegative;
}

int run_bound(const RunConfig& config, std::ostream& out) {
  need_inputs(config, 1, "bound <set-file>");
  const WordSet s = WordSet::load(config.inputs[0]);
  if (!is_cofinite(s)) {
    out << "cofinite: false\n";
    for (Letter a : s.alphabet()) {
      if (auto why = missing_family_reason(s, a)) out << "missing." << a << ": " << *why << "\n";
    }
    return kNegative;
  }
  const BoundReport report = coverage_bound(s);
  out << "alphabet: " << report.alphabet << "\n";
  out << "g: " << join(report.g) << "\n";
  out << "max_smallest_exponent: " << report.max_smallest_exponent << "\n";
  out << "max_bridge: " << report.max_bridge << "\n";
  out << "lambda: " << report.lambda << "\n";
  out << "bound: " << report.bound << "\n";
  out << "quadratic_bound: "
      << quadratic_bound(static_cast<std::int64_t>(s.alphabet().size()),
                         static_cast<std::int64_t>(s.max_word_length()))
      << "\n";
  for (const TiFamily& f : report.choices) out << "ti." << f.letter << ": " << describe(f) << "\n";
  return kComputed;
}

int run_construct(const RunConfig& config, std::ostream& out) {
  need_inputs(config, 2, "construct <set-file> <word>");
  const WordSet s = WordSet::load(config.inputs[0]);
  const Word y = parse_word(config.inputs[1]);
  const BoundReport plan = coverage_bound(s);
  const ConstructionReport report = constructive_match(y, s, plan, membership_options(config));
  out << "length: " << y.size() << "\n";
  out << "bound: " << plan.bound << "\n";
  out << "scarce: " << report.scarce << "\n";
  out << "plentiful: " << report.plentiful << "\n";
  for (const auto& [d, gamma] : report.gamma) out << "gamma." << d << ": " << gamma << "\n";
  for (const auto& [c, d] : report.partner) out << "partner." << c << ": " << d << "\n";
  out << "fallback: " << flag(report.fallback) << "\n";
  if (report.fallback) out << "fallback_reason: " << report.fallback_reason << "\n";
  out << "verified: " << flag(static_cast<bool>(verify_certificate(y, s, report.certificate))) << "\n";
  for (const Match& m : report.trace) out << "step: " << format_match(m) << "\n";
  for (const Match& m : report.certificate.matches) out << "match: " << format_match(m) << "\n";
  return kComputed;
}

void print_sample(const SampleReport& r, std::ostream& out) {
  out << "exhaustive: false\n";
  out << "bound: " << r.bound << "\n";
  out << "sampled_per_length: " << r.per_length << "\n";
  out << "seed: " << r.seed << "\n";
  out << "longest_sampled_nonmember_length: " << r.longest_sampled_length << "\n";
  if (r.witness) out << "witness: " << r.witness->str() << "\n";
  out << "estimated_nonmember_count: " << std::fixed << std::setprecision(1) << r.estimated_nonmembers << "\n";
  out << "undecided: " << r.undecided << "\n";
}

int run_search(const RunConfig& config, std::ostream& out, bool census) {
  need_inputs(config, 1, census ? "count <set-file>" : "longest <set-file>");
  const WordSet s = WordSet::load(config.inputs[0]);
  const SearchOptions options = search_options(config);
  GapReport report;
  try {
    report = census ? nonmember_census(s, options) : longest_nonmember(s, options);
  } catch (const ResourceError& e) {
    if (!config.sample) throw;
    out << "note: " << e.what() << "\n";
    print_sample(sample_nonmembers(s, *config.sample, config.seed, options.membership), out);
    return kComputed;
  }
  if (report.nonmember_count) out << "nonmember_count: " << *report.nonmember_count << "\n";
  out << "longest_length: " << report.longest_length << "\n";
  if (report.witness) out << "witness: " << report.witness->str() << "\n";
  out << "searched_up_to: " << report.searched_up_to << "\n";
  out << "exhaustive: true\n";
  return kComputed;
}

int run_shuffle(const RunConfig& config, std::ostream& out) {
  std::set<Word> result;
  if (config.closure_file) {
    if (!config.max_len) throw FormatError("usage: shuffle --closure <set-file> --max-len L");
    result = enumerate_closure(WordSet::load(*config.closure_file), *config.max_len);
  } else {
    need_inputs(config, 2, "shuffle <u> <v>");
    result = shuffle(parse_word(config.inputs[0]), parse_word(config.inputs[1]));
  }
  out << "count: " << result.size() << "\n";
  for (const Word& w : result) out << "word: " << w.str() << "\n";
  return kComputed;
}

std::int64_t parse_integer(const std::string& text) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty()) throw FormatError("not an integer: '" + text + "'");
  return v;
}

int run_frobenius(const RunConfig& config, std::ostream& out) {
  if (config.inputs.empty()) throw FormatError("usage: frobenius <m1> [m2 ...]");
  std::vector<std::int64_t> values;
  for (const auto& text : config.inputs) values.push_back(parse_integer(text));
  const Moduli ms(values);
  out << "moduli: " << join(ms.values()) << "\n";
  out << "gcd: " << ms.gcd() << "\n";
  if (ms.gcd() == 1) out << "frobenius: " << frobenius_number(ms) << "\n";
  if (ms.size() >= 2 && ms.gcd() == 1) out << "schur_bound: " << schur_bound(ms) << "\n";
  if (ms.size() == 2 && ms.smallest() >= 2 && ms.gcd() == 1) {
    out << "sylvester: " << sylvester(ms.values()[0], ms.values()[1]) << "\n";
  }
  if (config.represent) {
    const bool ok = representable(*config.represent, ms);
    out << "representable: " << flag(ok) << "\n";
    if (ok) out << "decomposition: " << join(decompose(*config.represent, ms)) << "\n";
  }
  return ms.gcd() == 1 ? kComputed : kNegative;
}

int run_proto(const RunConfig& config, std::ostream& out) {
  const WordSet s = prototypical_set(config.q, config.m);
  out << "q: " << config.q << "\n";
  out << "m: " << config.m << "\n";
  const bool all = !config.emit_set && !config.witness && !config.formula;
  const bool exact = config.m == 2 || (config.q >= 2 && config.m >= 3);
  if (config.formula || all) {
    out << "size: " << s.size() << "\n";
    out << "coverage_bound: " << coverage_bound(s).bound << "\n";
    if (exact) out << "longest_gap: " << prototypical_longest_gap(config.q, config.m) << "\n";
    if (config.q >= 2 && config.m >= 3) {
      out << "t_lower_bound: " << t_lower_bound(config.q, config.m) << "\n";
      out << "t_lower_bound_census: " << t_lower_bound_census(config.q, config.m) << "\n";
    }
  }
  if ((config.witness || all) && exact) {
    const Word w = witness_word(config.q, config.m);
    out << "witness: " << w.str() << "\n";
    out << "witness_length: " << w.size() << "\n";
  }
  if (config.emit_set) {
    for (const Word& w : s.words()) out << "word: " << w.str() << "\n";
  }
  return kComputed;
}

int run_extremal(const RunConfig& config, std::ostream& out) {
  const WordSet s = extremal_set(config.q, config.m);
  out << "q: " << config.q << "\n";
  out << "m: " << config.m << "\n";
  out << "size: " << s.size() << "\n";
  out << "min_size_bound: " << min_size_bound(config.q, config.m) << "\n";
  out << "cofinite: " << flag(is_cofinite(s)) << "\n";
  for (const Word& w : s.words()) out << "word: " << w.str() << "\n";
  return kComputed;
}

std::string one_line(std::string text) {
  for (char& c : text) {
    if (c == '\n' || c == '\r') c = ' ';
  }
  return text;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out) {
  try {
    switch (config.command) {
      case Command::Member: return run_member(config, out);
      case Command::Cofinite: return run_cofinite(config, out);
      case Command::Bound: return run_bound(config, out);
      case Command::Construct: return run_construct(config, out);
      case Command::Longest: return run_search(config, out, false);
      case Command::Count: return run_search(config, out, true);
      case Command::Shuffle: return run_shuffle(config, out);
      case Command::Frobenius: return run_frobenius(config, out);
      case Command::Proto: return run_proto(config, out);
      case Command::Extremal: return run_extremal(config, out);
    }
  } catch (const SearchBudgetExceeded& e) {
    out << "lowest_complete_length: " << e.lowest_complete_length() << "\n";
    out << "error: budget: " << one_line(e.what()) << "\n";
    return kBudgetExceeded;
  } catch (const ResourceError& e) {
    out << "error: budget: " << one_line(e.what()) << "\n";
    return kBudgetExceeded;
  } catch (const FormatError& e) {
    out << "error: format: " << one_line(e.what()) << "\n";
    return kUsageError;
  } catch (const DomainError& e) {
    out << "error: domain: " << one_line(e.what()) << "\n";
    return kUsageError;
  } catch (const InternalError& e) {
    out << "error: internal: " << one_line(e.what()) << "\n";
    return kUsageError;
  }
  return kUsageError;
}

int main(const std::vector<std::string>& args, std::ostream& out) {
  CLI::App app{"Iterated shuffle membership, co-finiteness and Frobenius bounds", "shufrob"};
  app.require_subcommand(1);
  RunConfig config;

  auto* member = app.add_subcommand("member", "decide whether a word is in S-dagger");
  member->add_option("inputs", config.inputs, "<set-file> <word>")->expected(2)->allow_extra_args(false);
  member->add_flag("--certificate", config.certificate, "print the matches");
  member->add_flag("--oracle", config.oracle, "decide by closure enumeration");
  member->add_flag("--prefilter", config.prefilter, "reject early on letter-count infeasibility");
  member->add_option("--budget", config.budget, "search node budget");

  auto* cofinite = app.add_subcommand("cofinite", "decide whether S-dagger is co-finite");
  cofinite->add_option("inputs", config.inputs, "<set-file>")->expected(1);

  auto* bound = app.add_subcommand("bound", "length beyond which every word is a member");
  bound->add_option("inputs", config.inputs, "<set-file>")->expected(1);

  auto* construct = app.add_subcommand("construct", "match a long word constructively");
  construct->add_option("inputs", config.inputs, "<set-file> <word>")->expected(2);
  construct->add_option("--budget", config.budget, "node budget for the fallback decider");

  auto add_search = [&](const char* name, const char* help) {
    auto* cmd = app.add_subcommand(name, help);
    cmd->add_option("inputs", config.inputs, "<set-file>")->expected(1);
    cmd->add_option("--jobs", config.jobs, "worker threads");
    cmd->add_option("--budget", config.budget, "node budget per membership decision");
    cmd->add_option("--max-words", config.max_words, "limit on words examined");
    cmd->add_option("--max-bound", config.max_bound, "limit on the coverage bound");
    cmd->add_option("--sample", config.sample, "words per length to sample when beyond the limits");
    cmd->add_option("--seed", config.seed, "seed for --sample");
    return cmd;
  };
  auto* longest = add_search("longest", "length of a longest non-member (exhaustive)");
  auto* count = add_search("count", "number of non-members (exhaustive)");

  auto* shuffle_cmd = app.add_subcommand("shuffle", "interleavings of two words, or a bounded closure");
  shuffle_cmd->add_option("inputs", config.inputs, "<u> <v>")->expected(0, 2);
  shuffle_cmd->add_option("--closure", config.closure_file, "set file whose closure to enumerate");
  shuffle_cmd->add_option("--max-len", config.max_len, "closure length limit");

  auto* frobenius = app.add_subcommand("frobenius", "Frobenius number of integers");
  frobenius->add_option("inputs", config.inputs, "<m1> [m2 ...]")->expected(1, 1 << 20);
  frobenius->add_option("--represent", config.represent, "also decompose this number");

  auto* proto = app.add_subcommand("proto", "the prototypical family");
  proto->add_option("--q", config.q, "alphabet size")->required();
  proto->add_option("--m", config.m, "shortest word length")->required();
  proto->add_flag("--emit-set", config.emit_set, "print the words");
  proto->add_flag("--witness", config.witness, "print the longest non-member");
  proto->add_flag("--formula", config.formula, "print exact values and bounds");

  auto* extremal = app.add_subcommand("extremal", "smallest co-finite set for given q and m");
  extremal->add_option("--q", config.q, "alphabet size")->required();
  extremal->add_option("--m", config.m, "shortest word length")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kComputed;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kComputed;
  } catch (const CLI::ParseError& e) {
    out << "error: usage: " << one_line(e.what()) << "\n";
    return kUsageError;
  }

  const std::pair<CLI::App*, Command> table[] = {
      {member, Command::Member},     {cofinite, Command::Cofinite},     {bound, Command::Bound},
      {construct, Command::Construct}, {longest, Command::Longest},     {count, Command::Count},
      {shuffle_cmd, Command::Shuffle}, {frobenius, Command::Frobenius}, {proto, Command::Proto},
      {extremal, Command::Extremal}};
  for (const auto& [cmd, command] : table) {
    if (cmd->parsed()) config.command = command;
  }
  return run(config, out);
}

}  // namespace shufrob::cli
