#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "shufrob/errors.hpp"
#include "shufrob/membership.hpp"
#include "support/oracles.hpp"

using namespace shufrob;

namespace {

WordSet set_of(std::initializer_list<const char*> texts) {
  std::vector<Word> words;
  for (const char* t : texts) words.emplace_back(t);
  return WordSet(words);
}

// {01, 2}-dagger: drop the 2's and what is left must be balanced with 0 as
// the opening letter.
bool dyck_with_twos(const std::string& y) {
  long depth = 0;
  for (char c : y) {
    if (c == '0') ++depth;
    if (c == '1' && --depth < 0) return false;
  }
  return depth == 0;
}

}  // namespace

TEST_CASE("membership examples") {
  const WordSet s = set_of({"011", "012"});
  auto yes = is_member(Word("010121"), s);
  CHECK(yes.member);
  REQUIRE(yes.certificate);
  CHECK(verify_certificate(Word("010121"), s, *yes.certificate));

  auto no = is_member(Word("01012112"), s);
  CHECK_FALSE(no.member);
  CHECK_FALSE(no.certificate);

  auto empty = is_member(Word(), s);
  CHECK(empty.member);
  REQUIRE(empty.certificate);
  CHECK(empty.certificate->matches.empty());

  CHECK_FALSE(is_member(Word("3"), s).member);
  CHECK_FALSE(is_member(Word("0"), WordSet{}).member);
  CHECK(is_member(Word(), WordSet{}).member);
}

TEST_CASE("binary co-finite set") {
  const WordSet s = set_of({"00", "000", "11", "111", "01", "10"});
  const std::set<std::string> expected{"0", "1", "001", "010", "011", "100", "101", "110"};
  for (const auto& y : oracle::all_words("01", 1, 9)) {
    CHECK_MESSAGE(is_member(Word(y), s).member == !expected.contains(y), y);
  }
}

TEST_CASE("budget") {
  const WordSet s = set_of({"00", "000", "11", "111", "01", "10"});
  MembershipOptions tiny;
  tiny.node_budget = 3;
  CHECK_THROWS_AS(is_member(Word("0101010101010101"), s, tiny), BudgetExceeded);
  try {
    is_member(Word("0101010101010101"), s, tiny);
  } catch (const BudgetExceeded& e) {
    CHECK(e.stats().nodes >= 3);
  }
}

TEST_CASE("bruteforce oracle limit") {
  const WordSet s = set_of({"0"});
  CHECK(is_member_bruteforce(Word("000"), s));
  CHECK_THROWS_AS(is_member_bruteforce(Word(std::string(13, '0')), s), ResourceError);
}

TEST_CASE("is_member agrees with closure enumeration on random sets") {
  std::mt19937_64 rng(20240601);
  constexpr std::size_t kLen = 8;
  int cases = 0;
  for (int round = 0; round < 120; ++round) {
    const int q = round % 2 == 0 ? 2 : 3;
    const WordSet s = oracle::random_set(rng, q, 4, 3);
    const auto closure = enumerate_closure(s, q == 2 ? kLen : 6);
    for (const auto& y : oracle::all_words(s.alphabet(), 0, q == 2 ? kLen : 6)) {
      const Word w(y);
      auto result = is_member(w, s);
      REQUIRE_MESSAGE(result.member == closure.contains(w), s.to_text(), " / ", y);
      if (result.member) CHECK(verify_certificate(w, s, *result.certificate));
      ++cases;
    }
  }
  CHECK(cases >= 1000);
}

TEST_CASE("{01, 2} characterization") {
  const WordSet s = set_of({"01", "2"});
  for (std::size_t len = 0; len <= 8; ++len) {
    oracle::for_each_word("012", len, [&](const std::string& y) {
      REQUIRE_MESSAGE(is_member(Word(y), s).member == dyck_with_twos(y), y);
    });
  }
}

TEST_CASE("parikh prefilter never rejects a member") {
  std::mt19937_64 rng(17);
  for (int round = 0; round < 60; ++round) {
    const WordSet s = oracle::random_set(rng, 3, 4, 3);
    ParikhChecker checker(s);
    for (int k = 0; k < 40; ++k) {
      const Word y(oracle::random_word(rng, "012", 1 + k % 9));
      const bool feasible = parikh_feasible(y, s);
      CHECK(checker.feasible(y) == feasible);
      auto plain = is_member(y, s);
      if (plain.member) CHECK(feasible);
      MembershipOptions pre;
      pre.prefilter = true;
      CHECK(is_member(y, s, pre).member == plain.member);
    }
  }
}

TEST_CASE("cache does not change answers") {
  std::mt19937_64 rng(23);
  MembershipOptions no_cache;
  no_cache.use_cache = false;
  for (int round = 0; round < 60; ++round) {
    const WordSet s = oracle::random_set(rng, 2, 5, 3);
    for (int k = 0; k < 30; ++k) {
      const Word y(oracle::random_word(rng, "01", 1 + k % 12));
      CHECK(is_member(y, s).member == is_member(y, s, no_cache).member);
    }
  }
}

TEST_CASE("closure is closed under shuffle") {
  std::mt19937_64 rng(29);
  for (int round = 0; round < 30; ++round) {
    const WordSet s = oracle::random_set(rng, 2, 3, 3);
    const auto members = enumerate_closure(s, 4);
    for (const Word& u : members) {
      for (const Word& v : members) {
        for (const Word& w : shuffle(u, v)) REQUIRE(is_member(w, s).member);
      }
    }
  }
}
