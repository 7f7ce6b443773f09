#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "shufrob/errors.hpp"
#include "shufrob/words.hpp"
#include "support/oracles.hpp"

using namespace shufrob;

namespace {

std::set<Word> words_of(std::initializer_list<const char*> texts) {
  std::set<Word> out;
  for (const char* t : texts) out.insert(Word(t));
  return out;
}

WordSet set_of(std::initializer_list<const char*> texts) {
  std::vector<Word> words;
  for (const char* t : texts) words.emplace_back(t);
  return WordSet(words);
}

}  // namespace

TEST_CASE("parse_word") {
  Word w = parse_word("011");
  CHECK(w.size() == 3);
  CHECK(w[0] == '0');
  CHECK(w[2] == '1');
  CHECK(parse_word("").empty());
  CHECK_THROWS_AS(parse_word("0 1"), FormatError);
  CHECK_THROWS_AS(parse_word("0\t1"), FormatError);
  CHECK_THROWS_AS(parse_word("\x7f"), FormatError);
}

TEST_CASE("shortlex order") {
  CHECK(Word("1") < Word("00"));
  CHECK(Word("01") < Word("10"));
  CHECK(Word("") < Word("0"));
}

TEST_CASE("shuffle examples") {
  CHECK(shuffle_sets(words_of({"01", "011"}), words_of({"0"})) == words_of({"001", "010", "0011", "0101", "0110"}));
  CHECK(shuffle(Word("0110"), Word()) == words_of({"0110"}));
  CHECK(shuffle(Word("ab"), Word("cd")).size() == 6);
  CHECK(shuffle_sets(words_of({"01"}), {}).empty());
  CHECK(shuffle_sets(words_of({""}), words_of({"01", "2"})) == words_of({"01", "2"}));
}

TEST_CASE("shuffle agrees with position-choice oracle, is commutative, and respects the binomial bound") {
  const auto small = oracle::all_words("ab", 0, 4);
  for (const auto& u : small) {
    for (const auto& v : small) {
      auto got = shuffle(Word(u), Word(v));
      std::set<std::string> text;
      for (const Word& w : got) text.insert(w.str());
      REQUIRE(text == oracle::shuffle(u, v));
      CHECK(got == shuffle(Word(v), Word(u)));
      CHECK(got.size() <= oracle::binomial(u.size() + v.size(), u.size()));
      for (const Word& w : got) CHECK(letter_counts(w) == letter_counts(Word(u)) + letter_counts(Word(v)));
    }
  }
  // Disjoint letters: every interleaving is distinct.
  for (const auto& u : oracle::all_words("ab", 0, 4)) {
    for (const auto& v : oracle::all_words("cd", 0, 4)) {
      CHECK(shuffle(Word(u), Word(v)).size() == oracle::binomial(u.size() + v.size(), u.size()));
    }
  }
}

TEST_CASE("letter_counts") {
  auto c = letter_counts(Word("010121"));
  CHECK(c['0'] == 2);
  CHECK(c['1'] == 3);
  CHECK(c['2'] == 1);
  CHECK(c['9'] == 0);
  CHECK(c.total() == 6);
  CHECK(letter_counts(Word()).total() == 0);
  CHECK(letter_counts(Word()) == LetterCounts{});
}

TEST_CASE("WordSet construction and file format") {
  WordSet s = set_of({"011", "012", "011"});
  CHECK(s.size() == 2);
  CHECK(s.alphabet() == "012");
  CHECK(s.contains(Word("012")));
  CHECK_FALSE(s.contains(Word("0")));
  CHECK_THROWS_AS(WordSet(std::vector<Word>{Word()}), FormatError);

  WordSet parsed = WordSet::parse("alphabet: 0123\n# comment\n\n011\r\n  012  \n");
  CHECK(parsed.alphabet() == "0123");
  CHECK(parsed.words() == s.words());
  CHECK(WordSet::parse(parsed.to_text()) == parsed);
  CHECK_THROWS_AS(WordSet::parse("01\n0 1\n"), FormatError);
  CHECK(WordSet::parse("").empty());
}

TEST_CASE("verify_certificate") {
  const WordSet s = set_of({"011", "012"});
  const Word y("010121");
  MatchCertificate good{{{Word("011"), {0, 1, 5}}, {Word("012"), {2, 3, 4}}}};
  CHECK(verify_certificate(y, s, good));
  CHECK(verify_certificate(Word(), s, MatchCertificate{}));

  MatchCertificate overlap{{{Word("011"), {0, 1, 5}}, {Word("012"), {0, 3, 4}}}};
  auto v = verify_certificate(y, s, overlap);
  CHECK_FALSE(v);
  CHECK_FALSE(v.reason.empty());

  MatchCertificate short_cover{{{Word("011"), {0, 1, 5}}}};
  CHECK_FALSE(verify_certificate(y, s, short_cover));
  MatchCertificate foreign{{{Word("010"), {0, 1, 2}}, {Word("121"), {3, 4, 5}}}};
  CHECK_FALSE(verify_certificate(y, s, foreign));
  MatchCertificate unordered{{{Word("011"), {1, 0, 5}}, {Word("012"), {2, 3, 4}}}};
  CHECK_FALSE(verify_certificate(y, s, unordered));
}

TEST_CASE("moving one position breaks a certificate") {
  const WordSet s = set_of({"011", "012"});
  const Word y("010121");
  const MatchCertificate good{{{Word("011"), {0, 1, 5}}, {Word("012"), {2, 3, 4}}}};
  for (std::size_t m = 0; m < good.matches.size(); ++m) {
    for (std::size_t t = 0; t < good.matches[m].positions.size(); ++t) {
      for (std::size_t target = 0; target < y.size(); ++target) {
        if (target == good.matches[m].positions[t]) continue;
        MatchCertificate moved = good;
        moved.matches[m].positions[t] = target;
        CHECK_FALSE(verify_certificate(y, s, moved));
      }
    }
  }
}

TEST_CASE("enumerate_closure") {
  const WordSet s = set_of({"00", "000", "11", "111", "01", "10"});
  CHECK(enumerate_closure(s, 3) == words_of({"", "00", "11", "01", "10", "000", "111"}));
  CHECK(enumerate_closure(s, 0) == words_of({""}));

  const WordSet unary = set_of({"xx", "xxx"});
  CHECK(enumerate_closure(unary, 6) == words_of({"", "xx", "xxx", "xxxx", "xxxxx", "xxxxxx"}));

  ClosureLimits tight;
  tight.max_length = 4;
  CHECK_THROWS_AS(enumerate_closure(s, 5, tight), ResourceError);
  tight.max_length = 10;
  tight.max_words = 10;
  CHECK_THROWS_AS(enumerate_closure(s, 8, tight), ResourceError);
}

TEST_CASE("closure is monotone in the length limit") {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 40; ++round) {
    const WordSet s = oracle::random_set(rng, 2, 4, 3);
    for (std::size_t len = 0; len < 7; ++len) {
      auto shorter = enumerate_closure(s, len);
      auto longer = enumerate_closure(s, len + 1);
      for (const Word& w : shorter) CHECK(longer.contains(w));
      for (const Word& w : longer) {
        if (w.size() <= len) CHECK(shorter.contains(w));
      }
    }
  }
}
