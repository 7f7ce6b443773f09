#include "shufrob/membership.hpp"

#include <algorithm>
#include <array>
#include <cstring>
#include <unordered_set>

namespace shufrob {

namespace {

constexpr std::size_t kNoLetter = static_cast<std::size_t>(-1);

struct Open {
  std::uint16_t word;
  std::uint16_t consumed;
  std::uint32_t id;

  std::uint32_t code() const noexcept { return (std::uint32_t{word} << 16) | consumed; }
};

class Search {
 public:
  Search(const Word& y, const WordSet& s, const MembershipOptions& options)
      : y_(y), s_(s), options_(options) {
    std::array<std::size_t, 128> index{};
    index.fill(kNoLetter);
    for (const Word& w : s.words()) {
      for (Letter a : w) {
        auto u = static_cast<unsigned char>(a);
        if (index[u] == kNoLetter) {
          index[u] = letters_.size();
          letters_.push_back(a);
        }
      }
    }
    letter_index_ = index;

    const std::size_t k = letters_.size();
    for (const Word& w : s.words()) {
      std::vector<std::uint8_t> coded;
      for (Letter a : w) coded.push_back(static_cast<std::uint8_t>(letter_index_[static_cast<unsigned char>(a)]));
      words_.push_back(std::move(coded));
    }
    starting_with_.assign(k, {});
    for (std::size_t w = 0; w < words_.size(); ++w) starting_with_[words_[w][0]].push_back(w);

    suffix_.assign((y.size() + 1) * k, 0);
    for (std::size_t p = y.size(); p-- > 0;) {
      for (std::size_t l = 0; l < k; ++l) suffix_[p * k + l] = suffix_[(p + 1) * k + l];
      if (auto l = coded_letter(y[p]); l != kNoLetter) suffix_[p * k + l] += 1;
    }
    need_.assign(k, 0);
  }

  bool coverable() const {
    for (Letter a : y_) {
      if (letter_index_[static_cast<unsigned char>(a)] == kNoLetter) return false;
    }
    return true;
  }

  bool run() { return dfs(0); }

  MatchCertificate certificate() const {
    MatchCertificate cert;
    for (auto id : completed_) cert.matches.push_back({s_.words()[word_of_[id]], positions_[id]});
    cert.normalize();
    return cert;
  }

  const SearchStats& stats() const noexcept { return stats_; }

 private:
  std::size_t coded_letter(Letter a) const { return letter_index_[static_cast<unsigned char>(a)]; }

  bool within_supply(std::size_t p) const {
    const std::size_t k = letters_.size();
    for (std::size_t l = 0; l < k; ++l) {
      if (need_[l] > suffix_[p * k + l]) return false;
    }
    return true;
  }

  std::string state_key(std::size_t p) const {
    std::vector<std::uint32_t> codes;
    codes.reserve(open_.size());
    for (const Open& o : open_) codes.push_back(o.code());
    std::sort(codes.begin(), codes.end());
    std::string key(sizeof(std::uint32_t) * (codes.size() + 1), '\0');
    auto pos32 = static_cast<std::uint32_t>(p);
    std::memcpy(key.data(), &pos32, sizeof pos32);
    if (!codes.empty()) std::memcpy(key.data() + sizeof pos32, codes.data(), codes.size() * sizeof(std::uint32_t));
    return key;
  }

  std::uint32_t new_id(std::size_t word) {
    auto id = static_cast<std::uint32_t>(positions_.size());
    positions_.emplace_back();
    word_of_.push_back(static_cast<std::uint16_t>(word));
    return id;
  }

  void drop_id() {
    positions_.pop_back();
    word_of_.pop_back();
  }

  bool dfs(std::size_t p) {
    if (++stats_.nodes > options_.node_budget) {
      throw BudgetExceeded("membership search exceeded node budget of " + std::to_string(options_.node_budget),
                           stats_);
    }
    if (p == y_.size()) return open_.empty();

    std::string key;
    if (options_.use_cache) {
      key = state_key(p);
      if (failed_.contains(key)) {
        ++stats_.cache_hits;
        return false;
      }
    }

    const auto letter = static_cast<std::uint8_t>(coded_letter(y_[p]));

    // Extend an open occurrence; occurrences with identical (word, progress)
    // are interchangeable, so only the oldest of each kind is tried.
    std::vector<std::uint32_t> tried;
    for (std::size_t idx = 0; idx < open_.size(); ++idx) {
      const Open o = open_[idx];
      if (words_[o.word][o.consumed] != letter) continue;
      if (std::find(tried.begin(), tried.end(), o.code()) != tried.end()) continue;
      tried.push_back(o.code());

      positions_[o.id].push_back(p);
      --need_[letter];
      const bool completes = o.consumed + 1u == words_[o.word].size();
      if (completes) {
        open_.erase(open_.begin() + static_cast<std::ptrdiff_t>(idx));
        completed_.push_back(o.id);
      } else {
        ++open_[idx].consumed;
      }

      if (dfs(p + 1)) return true;

      if (completes) {
        completed_.pop_back();
        open_.insert(open_.begin() + static_cast<std::ptrdiff_t>(idx), o);
      } else {
        --open_[idx].consumed;
      }
      ++need_[letter];
      positions_[o.id].pop_back();
    }

    // Open a new occurrence of a word starting with this letter.
    for (std::size_t w : starting_with_[letter]) {
      const auto& word = words_[w];
      for (std::size_t t = 1; t < word.size(); ++t) ++need_[word[t]];
      const std::uint32_t id = new_id(w);
      positions_[id].push_back(p);
      const bool single = word.size() == 1;
      if (single) {
        completed_.push_back(id);
      } else {
        open_.push_back({static_cast<std::uint16_t>(w), 1, id});
      }

      if (within_supply(p + 1) && dfs(p + 1)) return true;

      if (single) {
        completed_.pop_back();
      } else {
        open_.pop_back();
      }
      drop_id();
      for (std::size_t t = 1; t < word.size(); ++t) --need_[word[t]];
    }

    if (options_.use_cache) failed_.insert(std::move(key));
    return false;
  }

  const Word& y_;
  const WordSet& s_;
  const MembershipOptions& options_;

  std::array<std::size_t, 128> letter_index_{};
  std::vector<Letter> letters_;
  std::vector<std::vector<std::uint8_t>> words_;
  std::vector<std::vector<std::size_t>> starting_with_;
  std::vector<std::uint32_t> suffix_;
  std::vector<std::uint32_t> need_;

  std::vector<Open> open_;
  std::vector<std::vector<std::size_t>> positions_;
  std::vector<std::uint16_t> word_of_;
  std::vector<std::uint32_t> completed_;

  std::unordered_set<std::string> failed_;
  SearchStats stats_;
};

}  // namespace

MembershipResult is_member(const Word& y, const WordSet& s, const MembershipOptions& options) {
  MembershipResult result;
  if (y.empty()) {
    result.member = true;
    result.certificate = MatchCertificate{};
    return result;
  }
  if (options.prefilter && !parikh_feasible(y, s)) return result;

  Search search(y, s, options);
  if (!search.coverable()) return result;
  result.member = search.run();
  result.stats = search.stats();
  if (result.member) result.certificate = search.certificate();
  return result;
}

bool is_member_bruteforce(const Word& y, const WordSet& s, std::size_t oracle_limit) {
  if (y.size() > oracle_limit) {
    throw ResourceError("word length " + std::to_string(y.size()) + " exceeds oracle limit " +
                        std::to_string(oracle_limit));
  }
  ClosureLimits limits;
  limits.max_length = oracle_limit;
  return enumerate_closure(s, y.size(), limits).contains(y);
}

// ---------------------------------------------------------------------------
// Parikh feasibility

ParikhChecker::ParikhChecker(const WordSet& s) : alphabet_(s.alphabet()) {
  const std::size_t k = alphabet_.size();
  for (const Word& w : s.words()) {
    std::vector<std::uint32_t> counts(k, 0);
    for (Letter a : w) ++counts[alphabet_.find(a)];
    word_counts_.push_back(std::move(counts));
  }
  // Words with more letters first: fewer branches near the root.
  std::sort(word_counts_.begin(), word_counts_.end(), [](const auto& a, const auto& b) {
    std::uint32_t sa = 0, sb = 0;
    for (auto c : a) sa += c;
    for (auto c : b) sb += c;
    return sa != sb ? sa > sb : a < b;
  });
  letter_available_.assign(word_counts_.size() + 1, std::vector<bool>(k, false));
  for (std::size_t i = word_counts_.size(); i-- > 0;) {
    for (std::size_t l = 0; l < k; ++l) {
      letter_available_[i][l] = letter_available_[i + 1][l] || word_counts_[i][l] > 0;
    }
  }
}

bool ParikhChecker::feasible(const Word& y) {
  std::vector<std::uint32_t> counts(alphabet_.size(), 0);
  for (Letter a : y) {
    auto at = alphabet_.find(a);
    if (at == std::string::npos) return false;
    ++counts[at];
  }
  return feasible_counts(counts);
}

bool ParikhChecker::feasible_counts(const std::vector<std::uint32_t>& counts) {
  if (auto it = cache_.find(counts); it != cache_.end()) return it->second;
  std::vector<std::uint32_t> rest = counts;
  failed_.clear();
  bool ok = search(0, rest);
  cache_.emplace(counts, ok);
  return ok;
}

bool ParikhChecker::search(std::size_t index, std::vector<std::uint32_t>& rest) {
  const std::size_t k = alphabet_.size();
  bool done = true;
  for (std::size_t l = 0; l < k; ++l) {
    if (rest[l] == 0) continue;
    done = false;
    if (!letter_available_[index][l]) return false;
  }
  if (done) return true;
  if (failed_.contains({index, rest})) return false;

  const auto& wc = word_counts_[index];
  std::uint32_t most = UINT32_MAX;
  for (std::size_t l = 0; l < k; ++l) {
    if (wc[l] > 0) most = std::min(most, rest[l] / wc[l]);
  }
  for (std::uint32_t c = most + 1; c-- > 0;) {
    for (std::size_t l = 0; l < k; ++l) rest[l] -= c * wc[l];
    bool ok = search(index + 1, rest);
    for (std::size_t l = 0; l < k; ++l) rest[l] += c * wc[l];
    if (ok) return true;
  }
  failed_.insert({index, rest});
  return false;
}

bool parikh_feasible(const Word& y, const WordSet& s) {
  ParikhChecker checker(s);
  return checker.feasible(y);
}

}  // namespace shufrob
