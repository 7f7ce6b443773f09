// words.hpp -- letters, words, finite word sets, shuffle and certificates

#pragma once

#include <compare>
#include <cstddef>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace shufrob {

/// A letter is a single printable, non-whitespace ASCII character.
using Letter = char;

bool is_valid_letter(char c) noexcept;

/// A finite sequence of letters. Ordered shortlex (length first, then
/// lexicographically), which is the order every report prints sets in.
class Word {
 public:
  Word() = default;

  /// Throws FormatError if any character is not a valid letter.
  explicit Word(std::string letters);

  static Word repeat(Letter a, std::size_t n);

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  const std::string& str() const noexcept { return letters_; }

  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  Word operator+(const Word& other) const { return Word(Raw{}, letters_ + other.letters_); }

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    return a.letters_.compare(b.letters_) <=> 0;
  }

 private:
  struct Raw {};
  Word(Raw, std::string letters) : letters_(std::move(letters)) {}

  std::string letters_;
};

/// Parses a word from text. The empty string is the empty word.
Word parse_word(std::string_view text);

/// Occurrence count of each letter. Letters that do not occur are absent
/// from the map and read as zero.
class LetterCounts {
 public:
  LetterCounts() = default;
  explicit LetterCounts(const Word& w);

  std::size_t operator[](Letter a) const;
  std::size_t total() const noexcept;
  const std::map<Letter, std::size_t>& entries() const noexcept { return counts_; }

  LetterCounts& operator+=(const LetterCounts& other);
  friend LetterCounts operator+(LetterCounts a, const LetterCounts& b) { return a += b; }
  friend bool operator==(const LetterCounts&, const LetterCounts&) = default;

 private:
  std::map<Letter, std::size_t> counts_;
};

LetterCounts letter_counts(const Word& w);

/// A finite set of distinct non-empty words together with its alphabet.
/// The alphabet is the union of the letters of the words, optionally
/// extended by an explicit declaration.
class WordSet {
 public:
  WordSet() = default;

  /// Duplicates are merged. Throws FormatError on the empty word or an
  /// invalid letter in extra_alphabet.
  explicit WordSet(const std::vector<Word>& words, std::string_view extra_alphabet = {});

  /// Parses the word-set file format: one word per line, blank lines and
  /// `#` comments ignored, optional first line `alphabet: <chars>`.
  static WordSet parse(std::string_view text);
  static WordSet load(const std::filesystem::path& path);

  /// Words in shortlex order.
  const std::vector<Word>& words() const noexcept { return words_; }
  /// Sorted distinct letters.
  const std::string& alphabet() const noexcept { return alphabet_; }

  std::size_t size() const noexcept { return words_.size(); }
  bool empty() const noexcept { return words_.empty(); }
  bool contains(const Word& w) const;
  bool has_letter(Letter a) const noexcept;
  std::optional<std::size_t> index_of(const Word& w) const;
  std::size_t max_word_length() const noexcept;

  /// Serialized form accepted by parse().
  std::string to_text() const;

  friend bool operator==(const WordSet&, const WordSet&) = default;

 private:
  std::vector<Word> words_;
  std::string alphabet_;
};

/// Calls sink for every interleaving of u and v (with repetitions when
/// different interleavings spell the same word).
void for_each_interleaving(const Word& u, const Word& v,
                           const std::function<void(const std::string&)>& sink);

std::set<Word> shuffle(const Word& u, const Word& v);
std::set<Word> shuffle_sets(const std::set<Word>& a, const std::set<Word>& b);

/// One subsequence occurrence of a word of S inside a target word.
struct Match {
  Word word;
  std::vector<std::size_t> positions;  // strictly increasing, 0-based

  friend bool operator==(const Match&, const Match&) = default;
};

/// A partition of the target's positions into matches of words of S.
struct MatchCertificate {
  std::vector<Match> matches;

  /// Sorts matches by first position (empty matches first).
  void normalize();
};

/// Renders a match as `word@p1,p2,...`.
std::string format_match(const Match& m);

struct Verification {
  bool ok = false;
  std::string reason;

  explicit operator bool() const noexcept { return ok; }
};

Verification verify_certificate(const Word& y, const WordSet& s, const MatchCertificate& cert);

struct ClosureLimits {
  std::size_t max_length = 16;
  std::size_t max_words = 4'000'000;
};

/// All words of S-dagger of length at most max_len. Throws ResourceError if
/// max_len or the number of collected words exceeds the limits.
std::set<Word> enumerate_closure(const WordSet& s, std::size_t max_len,
                                 const ClosureLimits& limits = {});

}  // namespace shufrob

template <>
struct std::hash<shufrob::Word> {
  std::size_t operator()(const shufrob::Word& w) const noexcept {
    return std::hash<std::string>{}(w.str());
  }
};
