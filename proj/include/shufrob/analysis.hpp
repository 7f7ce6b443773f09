// analysis.hpp -- longest non-members, non-member counts, and the
// prototypical and minimum-size families.

#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "shufrob/cofiniteness.hpp"
#include "shufrob/errors.hpp"
#include "shufrob/membership.hpp"
#include "shufrob/words.hpp"

namespace shufrob {

using BigInt = boost::multiprecision::cpp_int;

/// Letters used for x_1, x_2, ... in generated families: '1'..'9' then 'a'..'z'.
std::string standard_letters(int q);

/// { x_i^m, x_i^(m+1) } for every i, plus x_i x_j^(m-1) and x_j^(m-1) x_i
/// for every ordered pair i != j.
WordSet prototypical_set(int q, int m);

/// Exact length of the longest non-member of prototypical_set(q, m):
/// 2q-1 for m = 2, and q m^2 - 2qm + 2m - 1 for q >= 2, m >= 3.
std::int64_t prototypical_longest_gap(int q, int m);

/// An explicit non-member of prototypical_set(q, m) of that length.
Word witness_word(int q, int m);

/// Matches a binary word of length m^2 - m over prototypical_set(2, m) by
/// bridging the letter whose count is not a multiple of m. Letters are
/// standard_letters(2). Returns nullopt if a step has no room.
std::optional<MatchCertificate> match_prototypical_binary(const Word& y, int m);

/// Singletons (m = 1), squares and cubes plus all two-letter words x_i x_j
/// (m = 2), prototypical_set(q, m) (m >= 3).
WordSet extremal_set(int q, int m);

/// Smallest possible |S| for a co-finite S whose shortest word has length m.
std::int64_t min_size_bound(int q, int m);

/// Lower bound on the number of non-members of prototypical_set(q, m),
/// closed form. Throws InternalError if the division is not exact.
BigInt t_lower_bound(int q, int m);

/// The same bound as a sum of q^len over lengths len that are not
/// combinations of m and m+1.
BigInt t_lower_bound_census(int q, int m);

struct GapReport {
  std::int64_t longest_length = -1;      // -1: every word is a member
  std::optional<Word> witness;           // lexicographically first at that length
  std::optional<std::uint64_t> nonmember_count;
  std::int64_t searched_up_to = -1;      // all longer words are members by the coverage bound
  std::uint64_t words_examined = 0;
};

struct SearchOptions {
  std::size_t max_alphabet = 4;
  std::int64_t max_bound = 20;
  std::uint64_t max_words = 50'000'000;
  unsigned jobs = 1;
  bool prefilter = true;
  MembershipOptions membership;
};

/// Thrown when an exhaustive search runs out of budget. Carries what was
/// established: every length from lowest_complete_length to bound-1 was
/// searched completely and found to contain only members.
class SearchBudgetExceeded : public ResourceError {
 public:
  SearchBudgetExceeded(const std::string& what, GapReport partial, std::int64_t lowest_complete_length)
      : ResourceError(what), partial_(std::move(partial)), lowest_complete_length_(lowest_complete_length) {}
  const GapReport& partial() const noexcept { return partial_; }
  std::int64_t lowest_complete_length() const noexcept { return lowest_complete_length_; }

 private:
  GapReport partial_;
  std::int64_t lowest_complete_length_;
};

/// Longest non-member by descending exhaustive search below the coverage
/// bound. Requires a co-finite S within the configured limits.
GapReport longest_nonmember(const WordSet& s, const SearchOptions& options = {});

/// Every length below the coverage bound, counting all non-members. Also
/// fills longest_length and witness.
GapReport nonmember_census(const WordSet& s, const SearchOptions& options = {});

std::uint64_t count_nonmembers(const WordSet& s, const SearchOptions& options = {});

/// Non-exhaustive estimate for sets beyond the exhaustive limits: for every
/// length below the coverage bound, decides per_length uniformly drawn words
/// (or all of them when there are fewer). Deterministic for a given seed.
struct SampleReport {
  std::int64_t bound = 0;
  std::uint64_t per_length = 0;
  std::uint64_t seed = 0;
  std::int64_t longest_sampled_length = -1;
  std::optional<Word> witness;
  double estimated_nonmembers = 0;
  std::uint64_t undecided = 0;  // draws that hit the node budget
};

SampleReport sample_nonmembers(const WordSet& s, std::uint64_t per_length, std::uint64_t seed,
                               const MembershipOptions& membership = {});

}  // namespace shufrob
