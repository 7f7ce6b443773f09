// cofiniteness.hpp -- when S-dagger is co-finite, the length beyond which
// every word is a member, and how to match such long words.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "shufrob/membership.hpp"
#include "shufrob/words.hpp"

namespace shufrob {

enum class TiKind { Singleton, Full };

/// A subset of S witnessing that all long words "around" one letter x can be
/// matched. Either the one-letter word x itself, or
///   pure powers x^e (at least two exponents >= 2 with gcd 1), plus for every
///   other letter z a right bridge x z^a and a left bridge z^b x.
struct TiFamily {
  Letter letter{};
  TiKind kind = TiKind::Singleton;
  std::vector<std::int64_t> exponents;    // ascending
  std::map<Letter, std::int64_t> right;   // z -> a, word x z^a
  std::map<Letter, std::int64_t> left;    // z -> b, word z^b x

  /// The words of S this family consists of.
  std::vector<Word> words() const;
  /// Smallest pure-power exponent; 0 for a singleton.
  std::int64_t smallest_exponent() const;
  /// Largest bridge exponent; 0 for a singleton.
  std::int64_t largest_bridge() const;

  friend bool operator==(const TiFamily&, const TiFamily&) = default;
};

/// Candidate families for a letter: the singleton when x is in S, and the
/// largest full family (every pure power in S, the shortest bridge on each
/// side for every other letter) when all its parts exist.
/// Throws DomainError when the letter is not in S's alphabet.
std::vector<TiFamily> ti_candidates(const WordSet& s, Letter letter);

/// Throws DomainError unless the family is well formed and contained in S.
void validate_family(const WordSet& s, const TiFamily& family);

bool is_cofinite(const WordSet& s);

/// Human-readable reason why a letter has no candidate family, or nullopt
/// when it has one.
std::optional<std::string> missing_family_reason(const WordSet& s, Letter letter);

struct BoundReport {
  std::string alphabet;
  std::vector<std::int64_t> g;                // per letter, -1 for singletons
  std::int64_t max_smallest_exponent = 0;
  std::int64_t max_bridge = 0;
  std::int64_t lambda = 0;                    // max_smallest_exponent * max_bridge
  std::int64_t bound = 0;                     // sum(g) + q + (q-1) * lambda
  std::vector<TiFamily> choices;              // one per letter, alphabet order

  const TiFamily& family(Letter a) const;
};

/// Every word over the alphabet of length >= bound is in S-dagger. Uses the
/// singleton where available and otherwise the largest full family, which
/// minimizes the bound. Throws DomainError when S-dagger is not co-finite.
BoundReport coverage_bound(const WordSet& s);

/// Same bound computed from explicitly chosen families (one per letter).
BoundReport coverage_bound(const WordSet& s, std::span<const TiFamily> choices);

/// (2q-1) n^2 - (5q-2) n + 3q - 2: an upper bound on the longest non-member
/// in terms of the alphabet size q and the longest word length n of S.
std::int64_t quadratic_bound(std::int64_t q, std::int64_t n);

struct ConstructionReport {
  MatchCertificate certificate;
  /// Matches in the order the procedure created them.
  std::vector<Match> trace;
  std::string scarce;                          // letters with count <= g
  std::string plentiful;                       // the others
  std::map<Letter, std::int64_t> gamma;        // plentiful letter -> capacity
  std::map<Letter, Letter> partner;            // scarce letter -> plentiful letter
  bool fallback = false;
  std::string fallback_reason;
};

/// Matches a word of length >= coverage_bound(s).bound letter class by
/// letter class: scarce letters are paired with a plentiful partner and
/// absorbed with bridges plus pure powers, then plentiful letters are
/// absorbed by their pure powers. The result always verifies; if any step
/// fails the exact decider is used instead and the report says so.
/// Throws DomainError on a violated precondition and InternalError if even
/// the exact decider rejects the word.
ConstructionReport constructive_match(const Word& y, const WordSet& s,
                                      const MembershipOptions& fallback_options = {});

/// As above with an explicit plan (normally coverage_bound(s)).
ConstructionReport constructive_match(const Word& y, const WordSet& s, const BoundReport& plan,
                                      const MembershipOptions& fallback_options = {});

/// The bridge-then-powers step used on prototypical sets with word length m:
/// the first r unmatched x's each take a left bridge z^(m-1) x when m-1
/// unmatched z's precede them (the leftmost ones), otherwise a right bridge
/// x z^(m-1) with the next m-1 unmatched z's after them; then gamma pure
/// powers x^m absorb the next unmatched x's. With final_takes_last the r-th
/// bridge is placed on the last x of y instead. Returns the new matches, or
/// nullopt if some step has no room. `matched` is not modified.
std::optional<std::vector<Match>> match_run(const Word& y, const std::vector<bool>& matched, Letter x, Letter z,
                                            std::int64_t r, std::int64_t gamma, std::int64_t m,
                                            bool final_takes_last = false);

}  // namespace shufrob
