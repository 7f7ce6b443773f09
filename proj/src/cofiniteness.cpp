#include "shufrob/cofiniteness.hpp"

#include <algorithm>
#include <numeric>

#include "shufrob/errors.hpp"
#include "shufrob/frobenius.hpp"

namespace shufrob {

namespace {

bool is_pure_power(const Word& w, Letter x) {
  return std::all_of(w.begin(), w.end(), [x](Letter a) { return a == x; });
}

// x z^a with a >= 1
std::optional<std::int64_t> right_bridge_exponent(const Word& w, Letter x, Letter z) {
  if (w.size() < 2 || w[0] != x) return std::nullopt;
  for (std::size_t t = 1; t < w.size(); ++t) {
    if (w[t] != z) return std::nullopt;
  }
  return static_cast<std::int64_t>(w.size() - 1);
}

// z^b x with b >= 1
std::optional<std::int64_t> left_bridge_exponent(const Word& w, Letter x, Letter z) {
  if (w.size() < 2 || w[w.size() - 1] != x) return std::nullopt;
  for (std::size_t t = 0; t + 1 < w.size(); ++t) {
    if (w[t] != z) return std::nullopt;
  }
  return static_cast<std::int64_t>(w.size() - 1);
}

std::vector<std::int64_t> pure_power_exponents(const WordSet& s, Letter x) {
  std::vector<std::int64_t> out;
  for (const Word& w : s.words()) {
    if (w.size() >= 2 && is_pure_power(w, x)) out.push_back(static_cast<std::int64_t>(w.size()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t gcd_of(const std::vector<std::int64_t>& v) {
  std::int64_t g = 0;
  for (auto e : v) g = std::gcd(g, e);
  return g;
}

Word bridge_word(Letter first, std::int64_t first_count, Letter second, std::int64_t second_count) {
  return Word::repeat(first, static_cast<std::size_t>(first_count)) +
         Word::repeat(second, static_cast<std::size_t>(second_count));
}

void require_letter(const WordSet& s, Letter letter) {
  if (!s.has_letter(letter)) throw DomainError(std::string("letter '") + letter + "' is not in the alphabet");
}

}  // namespace

std::vector<Word> TiFamily::words() const {
  if (kind == TiKind::Singleton) return {Word::repeat(letter, 1)};
  std::vector<Word> out;
  for (auto e : exponents) out.push_back(Word::repeat(letter, static_cast<std::size_t>(e)));
  for (const auto& [z, a] : right) out.push_back(bridge_word(letter, 1, z, a));
  for (const auto& [z, b] : left) out.push_back(bridge_word(z, b, letter, 1));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::int64_t TiFamily::smallest_exponent() const {
  return kind == TiKind::Singleton || exponents.empty() ? 0 : exponents.front();
}

std::int64_t TiFamily::largest_bridge() const {
  if (kind == TiKind::Singleton) return 0;
  std::int64_t best = 0;
  for (const auto& [z, a] : right) best = std::max(best, a);
  for (const auto& [z, b] : left) best = std::max(best, b);
  return best;
}

std::vector<TiFamily> ti_candidates(const WordSet& s, Letter letter) {
  require_letter(s, letter);
  std::vector<TiFamily> out;
  if (s.contains(Word::repeat(letter, 1))) out.push_back(TiFamily{letter, TiKind::Singleton, {}, {}, {}});

  TiFamily full{letter, TiKind::Full, pure_power_exponents(s, letter), {}, {}};
  if (full.exponents.size() < 2 || gcd_of(full.exponents) != 1) return out;
  for (Letter z : s.alphabet()) {
    if (z == letter) continue;
    std::optional<std::int64_t> a, b;
    for (const Word& w : s.words()) {
      if (auto e = right_bridge_exponent(w, letter, z); e && (!a || *e < *a)) a = e;
      if (auto e = left_bridge_exponent(w, letter, z); e && (!b || *e < *b)) b = e;
    }
    if (!a || !b) return out;
    full.right[z] = *a;
    full.left[z] = *b;
  }
  out.push_back(std::move(full));
  return out;
}

std::optional<std::string> missing_family_reason(const WordSet& s, Letter letter) {
  require_letter(s, letter);
  if (!ti_candidates(s, letter).empty()) return std::nullopt;
  const std::string x(1, letter);
  auto exps = pure_power_exponents(s, letter);
  if (exps.empty()) return "no pure power of " + x + " in the set";
  if (exps.size() < 2) return "only one pure power of " + x + " (exponent " + std::to_string(exps[0]) + ")";
  if (auto g = gcd_of(exps); g != 1) return "pure powers of " + x + " have exponent gcd " + std::to_string(g);
  for (Letter z : s.alphabet()) {
    if (z == letter) continue;
    bool right = false, left = false;
    for (const Word& w : s.words()) {
      right = right || right_bridge_exponent(w, letter, z).has_value();
      left = left || left_bridge_exponent(w, letter, z).has_value();
    }
    if (!right) return "no word " + x + z + "^a in the set";
    if (!left) return std::string("no word ") + z + "^b" + x + " in the set";
  }
  return "no candidate family";
}

void validate_family(const WordSet& s, const TiFamily& family) {
  require_letter(s, family.letter);
  const std::string x(1, family.letter);
  if (family.kind == TiKind::Singleton) {
    if (!s.contains(Word::repeat(family.letter, 1))) throw DomainError("singleton family: " + x + " is not in the set");
    return;
  }
  const auto& e = family.exponents;
  if (e.size() < 2) throw DomainError("full family for " + x + " needs at least two pure powers");
  if (e.front() < 2) throw DomainError("full family for " + x + " has a pure-power exponent below 2");
  if (!std::is_sorted(e.begin(), e.end()) || std::adjacent_find(e.begin(), e.end()) != e.end()) {
    throw DomainError("full family for " + x + " needs strictly increasing exponents");
  }
  if (gcd_of(e) != 1) throw DomainError("full family for " + x + " has exponent gcd above 1");
  for (auto m : e) {
    if (!s.contains(Word::repeat(family.letter, static_cast<std::size_t>(m)))) {
      throw DomainError("full family for " + x + ": " + x + "^" + std::to_string(m) + " is not in the set");
    }
  }
  const std::size_t others = s.alphabet().size() - 1;
  if (family.right.size() != others || family.left.size() != others) {
    throw DomainError("full family for " + x + " needs one bridge on each side for every other letter");
  }
  for (Letter z : s.alphabet()) {
    if (z == family.letter) continue;
    auto a = family.right.find(z);
    auto b = family.left.find(z);
    if (a == family.right.end() || b == family.left.end() || a->second < 1 || b->second < 1) {
      throw DomainError("full family for " + x + " lacks a bridge with " + std::string(1, z));
    }
    if (!s.contains(bridge_word(family.letter, 1, z, a->second)) || !s.contains(bridge_word(z, b->second, family.letter, 1))) {
      throw DomainError("full family for " + x + ": a bridge with " + std::string(1, z) + " is not in the set");
    }
  }
}

bool is_cofinite(const WordSet& s) {
  return std::all_of(s.alphabet().begin(), s.alphabet().end(),
                     [&](Letter a) { return !ti_candidates(s, a).empty(); });
}

const TiFamily& BoundReport::family(Letter a) const {
  auto at = alphabet.find(a);
  if (at == std::string::npos) throw DomainError(std::string("letter '") + a + "' is not in the alphabet");
  return choices[at];
}

BoundReport coverage_bound(const WordSet& s) {
  std::vector<TiFamily> choices;
  for (Letter a : s.alphabet()) {
    auto candidates = ti_candidates(s, a);
    if (candidates.empty()) {
      throw DomainError("S-dagger is not co-finite: " + *missing_family_reason(s, a));
    }
    choices.push_back(std::move(candidates.front()));
  }
  return coverage_bound(s, choices);
}

BoundReport coverage_bound(const WordSet& s, std::span<const TiFamily> choices) {
  BoundReport report;
  report.alphabet = s.alphabet();
  for (Letter a : s.alphabet()) {
    auto it = std::find_if(choices.begin(), choices.end(), [a](const TiFamily& f) { return f.letter == a; });
    if (it == choices.end()) throw DomainError(std::string("no family chosen for letter '") + a + "'");
    validate_family(s, *it);
    report.choices.push_back(*it);
  }
  if (choices.size() != s.alphabet().size()) throw DomainError("expected exactly one family per letter");

  std::int64_t sum_g = 0;
  for (const TiFamily& f : report.choices) {
    std::int64_t g = f.kind == TiKind::Singleton ? -1 : frobenius_number(Moduli(f.exponents));
    report.g.push_back(g);
    sum_g += g;
    report.max_smallest_exponent = std::max(report.max_smallest_exponent, f.smallest_exponent());
    report.max_bridge = std::max(report.max_bridge, f.largest_bridge());
  }
  const auto q = static_cast<std::int64_t>(s.alphabet().size());
  report.lambda = report.max_smallest_exponent * report.max_bridge;
  report.bound = sum_g + q + (q > 0 ? (q - 1) * report.lambda : 0);
  return report;
}

std::int64_t quadratic_bound(std::int64_t q, std::int64_t n) {
  if (q < 1 || n < 1) throw DomainError("quadratic_bound needs q >= 1 and n >= 1");
  return (2 * q - 1) * n * n - (5 * q - 2) * n + 3 * q - 2;
}

// ---------------------------------------------------------------------------
// Matching procedures

namespace {

class Board {
 public:
  Board(const Word& y, std::vector<bool> matched) : y_(y), matched_(std::move(matched)) {}

  bool is_free(std::size_t p) const { return !matched_[p]; }

  std::vector<std::size_t> free_positions(Letter a) const {
    std::vector<std::size_t> out;
    for (std::size_t p = 0; p < y_.size(); ++p) {
      if (y_[p] == a && !matched_[p]) out.push_back(p);
    }
    return out;
  }

  std::vector<std::size_t> free_before(Letter a, std::size_t limit) const {
    std::vector<std::size_t> out;
    for (std::size_t p = 0; p < limit; ++p) {
      if (y_[p] == a && !matched_[p]) out.push_back(p);
    }
    return out;
  }

  std::vector<std::size_t> free_after(Letter a, std::size_t from) const {
    std::vector<std::size_t> out;
    for (std::size_t p = from + 1; p < y_.size(); ++p) {
      if (y_[p] == a && !matched_[p]) out.push_back(p);
    }
    return out;
  }

  Match take(std::vector<std::size_t> positions) {
    std::sort(positions.begin(), positions.end());
    std::string letters;
    for (auto p : positions) {
      matched_[p] = true;
      letters.push_back(y_[p]);
    }
    return Match{Word(letters), std::move(positions)};
  }

  /// Bridges the x at `pos` with `before` z's on its left (leftmost free
  /// ones) or else `after` z's on its right (nearest free ones).
  std::optional<Match> bridge(std::size_t pos, Letter z, std::int64_t before, std::int64_t after) {
    auto left = free_before(z, pos);
    if (static_cast<std::int64_t>(left.size()) >= before) {
      left.resize(static_cast<std::size_t>(before));
      left.push_back(pos);
      return take(std::move(left));
    }
    auto right = free_after(z, pos);
    if (static_cast<std::int64_t>(right.size()) >= after) {
      right.resize(static_cast<std::size_t>(after));
      right.insert(right.begin(), pos);
      return take(std::move(right));
    }
    return std::nullopt;
  }

  const std::vector<bool>& matched() const noexcept { return matched_; }

 private:
  const Word& y_;
  std::vector<bool> matched_;
};

struct ProcedureFailure {
  std::string reason;
};

}  // namespace

std::optional<std::vector<Match>> match_run(const Word& y, const std::vector<bool>& matched, Letter x, Letter z,
                                            std::int64_t r, std::int64_t gamma, std::int64_t m,
                                            bool final_takes_last) {
  if (matched.size() != y.size()) throw DomainError("match_run: matched mask has the wrong length");
  if (r < 0 || gamma < 0 || m < 2) throw DomainError("match_run needs r >= 0, gamma >= 0, m >= 2");
  Board board(y, matched);
  std::vector<Match> out;
  for (std::int64_t k = 0; k < r; ++k) {
    auto xs = board.free_positions(x);
    if (xs.empty()) return std::nullopt;
    const std::size_t pos = final_takes_last && k + 1 == r ? xs.back() : xs.front();
    auto match = board.bridge(pos, z, m - 1, m - 1);
    if (!match) return std::nullopt;
    out.push_back(std::move(*match));
  }
  for (std::int64_t k = 0; k < gamma; ++k) {
    auto xs = board.free_positions(x);
    if (static_cast<std::int64_t>(xs.size()) < m) return std::nullopt;
    xs.resize(static_cast<std::size_t>(m));
    out.push_back(board.take(std::move(xs)));
  }
  return out;
}

namespace {

ConstructionReport run_construction(const Word& y, const WordSet& s, const BoundReport& plan) {
  ConstructionReport report;
  const std::string& alphabet = plan.alphabet;
  const auto lambda = plan.lambda;

  std::map<Letter, std::int64_t> count;
  for (Letter a : y) ++count[a];

  for (std::size_t i = 0; i < alphabet.size(); ++i) {
    const Letter a = alphabet[i];
    if (count[a] <= plan.g[i]) {
      report.scarce.push_back(a);
    } else {
      report.plentiful.push_back(a);
      const std::int64_t excess = count[a] - plan.g[i] - 1;
      report.gamma[a] = lambda > 0 ? excess / lambda : 0;
    }
  }

  // Each plentiful letter takes up to gamma scarce letters, in order.
  {
    std::size_t next = 0;
    for (Letter d : report.plentiful) {
      for (std::int64_t k = 0; k < report.gamma[d] && next < report.scarce.size(); ++k) {
        report.partner[report.scarce[next++]] = d;
      }
    }
    if (next < report.scarce.size()) {
      throw ProcedureFailure{"plentiful letters lack capacity for scarce letter '" +
                             std::string(1, report.scarce[next]) + "'"};
    }
  }

  Board board(y, std::vector<bool>(y.size(), false));
  auto record = [&](Match m) { report.trace.push_back(std::move(m)); };

  for (Letter c : report.scarce) {
    const TiFamily& family = plan.family(c);
    const Letter d = report.partner.at(c);
    const std::int64_t unit = family.smallest_exponent();
    const std::int64_t total = count[c];
    const std::int64_t blocks = total / unit;
    const std::int64_t leftover = total % unit;
    const std::int64_t before = family.left.at(d);
    const std::int64_t after = family.right.at(d);

    auto xs = board.free_positions(c);
    for (std::int64_t k = 0; k < leftover; ++k) {
      auto match = board.bridge(xs[static_cast<std::size_t>(k)], d, before, after);
      if (!match) {
        throw ProcedureFailure{"occurrence " + std::to_string(k + 1) + " of '" + std::string(1, c) +
                               "' has no room for a bridge with '" + std::string(1, d) + "'"};
      }
      record(std::move(*match));
    }
    for (std::int64_t k = 0; k < blocks; ++k) {
      auto rest = board.free_positions(c);
      rest.resize(static_cast<std::size_t>(unit));
      record(board.take(std::move(rest)));
    }
  }

  for (Letter d : report.plentiful) {
    const TiFamily& family = plan.family(d);
    auto rest = board.free_positions(d);
    if (family.kind == TiKind::Singleton) {
      for (auto p : rest) record(board.take({p}));
      continue;
    }
    const auto n = static_cast<std::int64_t>(rest.size());
    const Moduli moduli(family.exponents);
    if (!representable(n, moduli)) {
      throw ProcedureFailure{std::to_string(n) + " remaining '" + std::string(1, d) +
                             "' cannot be split into its pure powers"};
    }
    auto coeffs = decompose(n, moduli);
    std::size_t cursor = 0;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      const auto len = static_cast<std::size_t>(moduli.values()[k]);
      for (std::int64_t t = 0; t < coeffs[k]; ++t) {
        std::vector<std::size_t> chunk(rest.begin() + static_cast<std::ptrdiff_t>(cursor),
                                       rest.begin() + static_cast<std::ptrdiff_t>(cursor + len));
        cursor += len;
        record(board.take(std::move(chunk)));
      }
    }
  }

  report.certificate.matches = report.trace;
  report.certificate.normalize();
  if (auto check = verify_certificate(y, s, report.certificate); !check) {
    throw ProcedureFailure{"constructed certificate does not verify: " + check.reason};
  }
  return report;
}

}  // namespace

ConstructionReport constructive_match(const Word& y, const WordSet& s, const MembershipOptions& fallback_options) {
  return constructive_match(y, s, coverage_bound(s), fallback_options);
}

ConstructionReport constructive_match(const Word& y, const WordSet& s, const BoundReport& plan,
                                      const MembershipOptions& fallback_options) {
  if (plan.alphabet != s.alphabet() || plan.g.size() != plan.alphabet.size() ||
      plan.choices.size() != plan.alphabet.size()) {
    throw DomainError("construction plan does not belong to this word set");
  }
  for (Letter a : y) {
    if (!s.has_letter(a)) throw DomainError(std::string("letter '") + a + "' is not in the alphabet");
  }
  if (static_cast<std::int64_t>(y.size()) < plan.bound) {
    throw DomainError("word length " + std::to_string(y.size()) + " is below the coverage bound " +
                      std::to_string(plan.bound));
  }

  try {
    return run_construction(y, s, plan);
  } catch (const ProcedureFailure& failure) {
    ConstructionReport report;
    report.fallback = true;
    report.fallback_reason = failure.reason;
    auto decided = is_member(y, s, fallback_options);
    if (!decided.member) {
      throw InternalError("word above the coverage bound was rejected by the exact decider: " + y.str());
    }
    report.certificate = *decided.certificate;
    report.trace = report.certificate.matches;
    return report;
  }
}

}  // namespace shufrob
