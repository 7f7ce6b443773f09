#include "shufrob/words.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "shufrob/errors.hpp"

namespace shufrob {

bool is_valid_letter(char c) noexcept {
  auto u = static_cast<unsigned char>(c);
  return u > 0x20 && u < 0x7f;
}

namespace {

void check_letters(std::string_view text) {
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (!is_valid_letter(text[i])) {
      std::ostringstream msg;
      msg << "invalid letter at offset " << i << " (code " << static_cast<int>(static_cast<unsigned char>(text[i]))
          << "); letters must be printable non-whitespace ASCII";
      throw FormatError(msg.str());
    }
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

Word::Word(std::string letters) : letters_(std::move(letters)) { check_letters(letters_); }

Word Word::repeat(Letter a, std::size_t n) { return Word(std::string(n, a)); }

Word parse_word(std::string_view text) { return Word(std::string(text)); }

LetterCounts::LetterCounts(const Word& w) {
  for (Letter a : w) ++counts_[a];
}

std::size_t LetterCounts::operator[](Letter a) const {
  auto it = counts_.find(a);
  return it == counts_.end() ? 0 : it->second;
}

std::size_t LetterCounts::total() const noexcept {
  std::size_t n = 0;
  for (const auto& [a, c] : counts_) n += c;
  return n;
}

LetterCounts& LetterCounts::operator+=(const LetterCounts& other) {
  for (const auto& [a, c] : other.counts_) counts_[a] += c;
  return *this;
}

LetterCounts letter_counts(const Word& w) { return LetterCounts(w); }

// ---------------------------------------------------------------------------
// WordSet

WordSet::WordSet(const std::vector<Word>& words, std::string_view extra_alphabet) {
  check_letters(extra_alphabet);
  std::set<Word> unique;
  std::set<Letter> letters(extra_alphabet.begin(), extra_alphabet.end());
  for (const Word& w : words) {
    if (w.empty()) throw FormatError("the empty word cannot be an element of a word set");
    unique.insert(w);
    letters.insert(w.begin(), w.end());
  }
  words_.assign(unique.begin(), unique.end());
  alphabet_.assign(letters.begin(), letters.end());
}

WordSet WordSet::parse(std::string_view text) {
  std::vector<Word> words;
  std::string extra;
  bool seen_content = false;
  std::size_t line_no = 0;
  while (!text.empty()) {
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;

    line = trim(line);
    if (line.empty() || line.front() == '#') continue;

    constexpr std::string_view header = "alphabet:";
    if (!seen_content && line.starts_with(header)) {
      seen_content = true;
      std::string_view chars = line.substr(header.size());
      for (char c : chars) {
        if (c == ' ' || c == '\t') continue;
        if (!is_valid_letter(c)) throw FormatError("line " + std::to_string(line_no) + ": invalid letter in alphabet header");
        extra.push_back(c);
      }
      continue;
    }
    seen_content = true;
    try {
      words.push_back(parse_word(line));
    } catch (const FormatError& e) {
      throw FormatError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return WordSet(words, extra);
}

WordSet WordSet::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open word-set file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

bool WordSet::contains(const Word& w) const { return std::binary_search(words_.begin(), words_.end(), w); }

bool WordSet::has_letter(Letter a) const noexcept { return alphabet_.find(a) != std::string::npos; }

std::optional<std::size_t> WordSet::index_of(const Word& w) const {
  auto it = std::lower_bound(words_.begin(), words_.end(), w);
  if (it == words_.end() || *it != w) return std::nullopt;
  return static_cast<std::size_t>(it - words_.begin());
}

std::size_t WordSet::max_word_length() const noexcept {
  std::size_t n = 0;
  for (const Word& w : words_) n = std::max(n, w.size());
  return n;
}

std::string WordSet::to_text() const {
  std::string out;
  std::set<Letter> used;
  for (const Word& w : words_) used.insert(w.begin(), w.end());
  if (used.size() != alphabet_.size()) out += "alphabet: " + alphabet_ + "\n";
  for (const Word& w : words_) out += w.str() + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// Shuffle

namespace {

void interleave(const std::string& u, std::size_t i, const std::string& v, std::size_t j, std::string& buf,
                const std::function<void(const std::string&)>& sink) {
  if (i == u.size() && j == v.size()) {
    sink(buf);
    return;
  }
  if (i < u.size()) {
    buf.push_back(u[i]);
    interleave(u, i + 1, v, j, buf, sink);
    buf.pop_back();
  }
  if (j < v.size()) {
    buf.push_back(v[j]);
    interleave(u, i, v, j + 1, buf, sink);
    buf.pop_back();
  }
}

}  // namespace

void for_each_interleaving(const Word& u, const Word& v, const std::function<void(const std::string&)>& sink) {
  std::string buf;
  buf.reserve(u.size() + v.size());
  interleave(u.str(), 0, v.str(), 0, buf, sink);
}

std::set<Word> shuffle(const Word& u, const Word& v) {
  std::unordered_set<std::string> seen;
  for_each_interleaving(u, v, [&](const std::string& w) { seen.insert(w); });
  std::set<Word> out;
  for (const auto& w : seen) out.insert(Word(w));
  return out;
}

std::set<Word> shuffle_sets(const std::set<Word>& a, const std::set<Word>& b) {
  std::set<Word> out;
  for (const Word& u : a) {
    for (const Word& v : b) {
      auto part = shuffle(u, v);
      out.insert(part.begin(), part.end());
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Certificates

void MatchCertificate::normalize() {
  std::stable_sort(matches.begin(), matches.end(), [](const Match& a, const Match& b) {
    if (a.positions.empty() || b.positions.empty()) return a.positions.empty() && !b.positions.empty();
    return a.positions.front() < b.positions.front();
  });
}

std::string format_match(const Match& m) {
  std::string out = m.word.str() + "@";
  for (std::size_t k = 0; k < m.positions.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(m.positions[k]);
  }
  return out;
}

Verification verify_certificate(const Word& y, const WordSet& s, const MatchCertificate& cert) {
  std::vector<bool> covered(y.size(), false);
  std::size_t total = 0;
  for (std::size_t k = 0; k < cert.matches.size(); ++k) {
    const Match& m = cert.matches[k];
    const std::string where = "match " + std::to_string(k) + " (" + format_match(m) + "): ";
    if (!s.contains(m.word)) return {false, where + "word is not in the set"};
    if (m.positions.size() != m.word.size()) return {false, where + "position count differs from word length"};
    for (std::size_t t = 0; t < m.positions.size(); ++t) {
      std::size_t p = m.positions[t];
      if (p >= y.size()) return {false, where + "position out of range"};
      if (t > 0 && m.positions[t - 1] >= p) return {false, where + "positions not strictly increasing"};
      if (y[p] != m.word[t]) return {false, where + "letter mismatch at position " + std::to_string(p)};
      if (covered[p]) return {false, where + "position " + std::to_string(p) + " covered twice"};
      covered[p] = true;
    }
    total += m.positions.size();
  }
  if (total != y.size()) return {false, "certificate leaves " + std::to_string(y.size() - total) + " positions uncovered"};
  return {true, {}};
}

// ---------------------------------------------------------------------------
// Closure

std::set<Word> enumerate_closure(const WordSet& s, std::size_t max_len, const ClosureLimits& limits) {
  if (max_len > limits.max_length) {
    throw ResourceError("closure length " + std::to_string(max_len) + " exceeds safety limit " +
                        std::to_string(limits.max_length));
  }
  std::unordered_set<std::string> seen{std::string{}};
  std::vector<std::string> frontier{std::string{}};
  while (!frontier.empty()) {
    std::vector<std::string> next;
    for (const std::string& w : frontier) {
      for (const Word& piece : s.words()) {
        if (w.size() + piece.size() > max_len) continue;
        std::string buf;
        buf.reserve(w.size() + piece.size());
        interleave(w, 0, piece.str(), 0, buf, [&](const std::string& x) {
          if (seen.insert(x).second) next.push_back(x);
        });
        if (seen.size() > limits.max_words) {
          throw ResourceError("closure exceeds " + std::to_string(limits.max_words) + " words");
        }
      }
    }
    frontier = std::move(next);
  }
  std::set<Word> out;
  for (const auto& w : seen) out.insert(Word(w));
  return out;
}

}  // namespace shufrob
