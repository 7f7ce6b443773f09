#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "shufrob/analysis.hpp"
#include "shufrob/errors.hpp"
#include "support/oracles.hpp"

using namespace shufrob;

namespace {

WordSet set_of(std::initializer_list<const char*> texts) {
  std::vector<Word> words;
  for (const char* t : texts) words.emplace_back(t);
  return WordSet(words);
}

// q^(len) summed over lengths that are not combinations of m and m+1,
// using the coefficient-enumeration oracle.
BigInt census_oracle(int q, int m) {
  BigInt total = 0;
  const std::int64_t frob = static_cast<std::int64_t>(m) * m - m - 1;
  for (std::int64_t len = 1; len <= frob; ++len) {
    if (!oracle::representable(len, {m, m + 1})) total += boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(len));
  }
  return total;
}

}  // namespace

TEST_CASE("standard letters") {
  CHECK(standard_letters(3) == "123");
  CHECK(standard_letters(11) == "123456789ab");
}

TEST_CASE("prototypical_set") {
  const WordSet s = prototypical_set(2, 3);
  CHECK(s == set_of({"111", "1111", "222", "2222", "122", "221", "211", "112"}));
  CHECK(prototypical_set(3, 4).size() == 18);
  CHECK(prototypical_set(1, 3) == set_of({"111", "1111"}));
}

TEST_CASE("prototypical_longest_gap") {
  CHECK(prototypical_longest_gap(1, 2) == 1);
  CHECK(prototypical_longest_gap(2, 2) == 3);
  CHECK(prototypical_longest_gap(3, 2) == 5);
  CHECK(prototypical_longest_gap(2, 3) == 11);
  CHECK(prototypical_longest_gap(3, 3) == 14);
  CHECK(prototypical_longest_gap(2, 4) == 23);
  CHECK_THROWS_AS(prototypical_longest_gap(1, 3), DomainError);
  CHECK_THROWS_AS(prototypical_longest_gap(2, 1), DomainError);
}

TEST_CASE("witness words are non-members of the right length") {
  CHECK(witness_word(2, 3) == Word("12222222221"));
  CHECK(witness_word(2, 2) == Word("112"));
  CHECK(witness_word(1, 2) == Word("1"));
  for (auto [q, m] : {std::pair{1, 2}, {2, 2}, {3, 2}, {4, 2}, {2, 3}, {3, 3}, {2, 4}}) {
    const Word w = witness_word(q, m);
    CHECK(static_cast<std::int64_t>(w.size()) == prototypical_longest_gap(q, m));
    CHECK_FALSE(is_member(w, prototypical_set(q, m)).member);
  }
}

TEST_CASE("exhaustive longest non-member for m = 2") {
  for (int q = 1; q <= 3; ++q) {
    const auto report = longest_nonmember(prototypical_set(q, 2));
    CHECK(report.longest_length == 2 * q - 1);
    REQUIRE(report.witness);
    CHECK_FALSE(is_member(*report.witness, prototypical_set(q, 2)).member);
  }
}

TEST_CASE("every binary word of length 4 is in prototypical_set(2, 2)-dagger") {
  const WordSet s = prototypical_set(2, 2);
  oracle::for_each_word("12", 4, [&](const std::string& y) { CHECK(is_member(Word(y), s).member); });
}

TEST_CASE("every binary word of length 12 is in prototypical_set(2, 3)-dagger") {
  const WordSet s = prototypical_set(2, 3);
  oracle::for_each_word("12", 12, [&](const std::string& y) { REQUIRE_MESSAGE(is_member(Word(y), s).member, y); });
}

TEST_CASE("census on the binary co-finite example") {
  const WordSet s = set_of({"00", "000", "11", "111", "01", "10"});
  const auto report = nonmember_census(s);
  CHECK(report.nonmember_count == 8u);
  CHECK(report.longest_length == 3);
  CHECK(report.witness == Word("001"));
  CHECK(count_nonmembers(s) == 8u);
  const auto longest = longest_nonmember(s);
  CHECK(longest.longest_length == 3);
  CHECK(longest.witness == Word("001"));
}

TEST_CASE("search results do not depend on the number of jobs") {
  const WordSet s = prototypical_set(3, 2);
  SearchOptions serial, parallel;
  parallel.jobs = 3;
  const auto a = nonmember_census(s, serial);
  const auto b = nonmember_census(s, parallel);
  CHECK(a.nonmember_count == b.nonmember_count);
  CHECK(a.longest_length == b.longest_length);
  CHECK(a.witness == b.witness);
  CHECK(a.words_examined == b.words_examined);
  const auto c = longest_nonmember(s, serial);
  const auto d = longest_nonmember(s, parallel);
  CHECK(c.witness == d.witness);
  CHECK(c.words_examined == d.words_examined);
}

TEST_CASE("search limits") {
  CHECK_THROWS_AS(longest_nonmember(set_of({"01", "2"})), DomainError);
  SearchOptions small;
  small.max_bound = 5;
  CHECK_THROWS_AS(longest_nonmember(prototypical_set(2, 3), small), ResourceError);
  SearchOptions few;
  few.max_words = 10;
  CHECK_THROWS_AS(nonmember_census(prototypical_set(3, 2), few), SearchBudgetExceeded);
}

TEST_CASE("sampling is deterministic") {
  const WordSet s = prototypical_set(2, 3);
  const auto a = sample_nonmembers(s, 50, 7);
  const auto b = sample_nonmembers(s, 50, 7);
  CHECK(a.witness == b.witness);
  CHECK(a.estimated_nonmembers == b.estimated_nonmembers);
  CHECK(a.bound == 18);
  CHECK(a.longest_sampled_length <= 11);
}

TEST_CASE("extremal sets") {
  CHECK(extremal_set(3, 1).size() == 3);
  CHECK(extremal_set(2, 2).size() == 6);
  CHECK(extremal_set(2, 3).size() == 8);
  CHECK(min_size_bound(4, 3) == 32);
  CHECK(min_size_bound(1, 2) == 2);
  for (int q = 1; q <= 3; ++q) {
    for (int m = 1; m <= 4; ++m) {
      const WordSet s = extremal_set(q, m);
      CHECK(static_cast<std::int64_t>(s.size()) == min_size_bound(q, m));
      CHECK(is_cofinite(s));
      std::size_t shortest = s.words().front().size();
      CHECK(shortest == static_cast<std::size_t>(m));
    }
  }
}

TEST_CASE("t_lower_bound") {
  CHECK(t_lower_bound(2, 3) == 38);
  CHECK(t_lower_bound_census(2, 3) == 38);
  for (int q = 2; q <= 3; ++q) {
    for (int m = 3; m <= 5; ++m) {
      CHECK(t_lower_bound(q, m) == t_lower_bound_census(q, m));
      CHECK(t_lower_bound(q, m) == census_oracle(q, m));
    }
  }
  CHECK(t_lower_bound(2, 4) == 2254);
  CHECK(t_lower_bound(3, 5) == BigInt("1168667310"));
}

TEST_CASE("long words over q letters repeat some letter more than m times") {
  auto threshold = [](int q, int m) { return (q - 1) * m * m - 2 * q * m + 3 * m + 1; };
  int cases = 0;
  REQUIRE(threshold(2, 3) == 7);
  for (std::size_t len = 7; len <= 10; ++len) {
    oracle::for_each_word("12", len, [&](const std::string& y) {
      const auto c = letter_counts(Word(y));
      CHECK(std::max(c['1'], c['2']) >= 4);
      ++cases;
    });
  }
  std::mt19937_64 rng(31);
  REQUIRE(threshold(3, 3) == 10);
  for (int k = 0; k < 1000; ++k) {
    const auto c = letter_counts(Word(oracle::random_word(rng, "123", 10 + static_cast<std::size_t>(k % 8))));
    CHECK(std::max({c['1'], c['2'], c['3']}) >= 4);
    ++cases;
  }
  CHECK(cases >= 1000);
}

TEST_CASE("peeling x^m blocks down to length 6 keeps the verdict") {
  const WordSet s = prototypical_set(2, 3);
  for (std::size_t len : {9u, 12u}) {
    oracle::for_each_word("12", len, [&](const std::string& y) {
      std::string rest = y;
      while (rest.size() > 6) {
        const char a = std::count(rest.begin(), rest.end(), '1') >= 3 ? '1' : '2';
        for (int k = 0; k < 3; ++k) rest.erase(rest.find(a), 1);
      }
      REQUIRE_MESSAGE(is_member(Word(rest), s).member == is_member(Word(y), s).member, y);
    });
  }
}

TEST_CASE("match_prototypical_binary covers every word of length m^2 - m") {
  for (int m = 3; m <= 4; ++m) {
    const WordSet s = prototypical_set(2, m);
    oracle::for_each_word("12", static_cast<std::size_t>(m * m - m), [&](const std::string& y) {
      auto cert = match_prototypical_binary(Word(y), m);
      REQUIRE_MESSAGE(cert, y);
      CHECK(verify_certificate(Word(y), s, *cert));
    });
  }
  CHECK_THROWS_AS(match_prototypical_binary(Word("121"), 3), DomainError);
  CHECK_THROWS_AS(match_prototypical_binary(Word("123122"), 3), DomainError);
}
