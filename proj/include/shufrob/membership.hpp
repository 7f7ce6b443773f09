// membership.hpp -- deciding y in S-dagger, with certificates

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "shufrob/errors.hpp"
#include "shufrob/words.hpp"

namespace shufrob {

inline constexpr std::uint64_t kDefaultNodeBudget = 20'000'000;
inline constexpr std::size_t kDefaultOracleLimit = 12;

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t cache_hits = 0;
};

struct MembershipOptions {
  std::uint64_t node_budget = kDefaultNodeBudget;
  bool use_cache = true;
  /// Run parikh_feasible() first and reject early when it fails.
  bool prefilter = false;
};

struct MembershipResult {
  bool member = false;
  std::optional<MatchCertificate> certificate;  // present iff member
  SearchStats stats;
};

/// Thrown when the node budget runs out. The decision is unknown.
class BudgetExceeded : public ResourceError {
 public:
  BudgetExceeded(const std::string& what, SearchStats stats) : ResourceError(what), stats_(stats) {}
  const SearchStats& stats() const noexcept { return stats_; }

 private:
  SearchStats stats_;
};

/// Exact decision by a left-to-right scan. Every letter of y either opens a
/// new occurrence of some word of S or extends one of the currently open
/// occurrences; y is accepted when no occurrence is left open at the end.
/// Failed states (position, multiset of open occurrences) are memoized.
MembershipResult is_member(const Word& y, const WordSet& s, const MembershipOptions& options = {});

/// Reference decision via enumerate_closure(). Throws ResourceError when
/// |y| exceeds oracle_limit.
bool is_member_bruteforce(const Word& y, const WordSet& s, std::size_t oracle_limit = kDefaultOracleLimit);

/// Whether letter_counts(y) is a non-negative integer combination of the
/// letter counts of the words of S. A false answer proves y is not a member.
bool parikh_feasible(const Word& y, const WordSet& s);

/// Reusable form of parikh_feasible() for many targets over one set: the
/// per-word count vectors are computed once and answers are cached by
/// count vector.
class ParikhChecker {
 public:
  explicit ParikhChecker(const WordSet& s);

  bool feasible(const Word& y);
  /// Counts indexed like alphabet(); letters outside it make the target infeasible.
  bool feasible_counts(const std::vector<std::uint32_t>& counts);
  const std::string& alphabet() const noexcept { return alphabet_; }

 private:
  bool search(std::size_t index, std::vector<std::uint32_t>& rest);

  std::string alphabet_;
  std::vector<std::vector<std::uint32_t>> word_counts_;
  std::vector<std::vector<bool>> letter_available_;  // [index][letter]: some word at >= index has it
  std::map<std::vector<std::uint32_t>, bool> cache_;
  std::set<std::pair<std::size_t, std::vector<std::uint32_t>>> failed_;
};

}  // namespace shufrob
