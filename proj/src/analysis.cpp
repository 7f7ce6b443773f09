#include "shufrob/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <random>
#include <thread>

#include "shufrob/frobenius.hpp"

namespace shufrob {

namespace {

constexpr std::string_view kLetters = "123456789abcdefghijklmnopqrstuvwxyz";

Word power(Letter a, std::int64_t n) { return Word::repeat(a, static_cast<std::size_t>(n)); }

void require(bool ok, const std::string& message) {
  if (!ok) throw DomainError(message);
}

}  // namespace

std::string standard_letters(int q) {
  require(q >= 0 && static_cast<std::size_t>(q) <= kLetters.size(),
          "alphabet size must be between 0 and " + std::to_string(kLetters.size()));
  return std::string(kLetters.substr(0, static_cast<std::size_t>(q)));
}

WordSet prototypical_set(int q, int m) {
  require(q >= 1 && m >= 2, "prototypical_set needs q >= 1 and m >= 2");
  const std::string x = standard_letters(q);
  std::vector<Word> words;
  for (Letter a : x) {
    words.push_back(power(a, m));
    words.push_back(power(a, m + 1));
    for (Letter b : x) {
      if (a == b) continue;
      words.push_back(power(a, 1) + power(b, m - 1));
      words.push_back(power(b, m - 1) + power(a, 1));
    }
  }
  return WordSet(words);
}

std::int64_t prototypical_longest_gap(int q, int m) {
  if (m == 2 && q >= 1) return 2 * std::int64_t{q} - 1;
  require(q >= 2 && m >= 3, "exact gap known only for m = 2, q >= 1 or q >= 2, m >= 3");
  const std::int64_t qq = q, mm = m;
  return qq * mm * mm - 2 * qq * mm + 2 * mm - 1;
}

Word witness_word(int q, int m) {
  const std::int64_t length = prototypical_longest_gap(q, m);
  const std::string x = standard_letters(q);
  Word w;
  if (m == 2) {
    for (int i = 0; i + 1 < q; ++i) w = w + power(x[static_cast<std::size_t>(i)], 2);
    w = w + power(x.back(), 1);
  } else {
    const std::int64_t qq = q, mm = m;
    for (int i = 0; i + 1 < q; ++i) w = w + power(x[static_cast<std::size_t>(i)], m - 2);
    w = w + power(x.back(), qq * mm * mm - 3 * qq * mm + 3 * mm + 2 * qq - 4) + power(x.front(), 1);
  }
  if (static_cast<std::int64_t>(w.size()) != length) throw InternalError("witness length disagrees with gap formula");
  return w;
}

std::optional<MatchCertificate> match_prototypical_binary(const Word& y, int m) {
  require(m >= 3, "binary prototypical matching needs m >= 3");
  const std::int64_t mm = m;
  require(static_cast<std::int64_t>(y.size()) == mm * mm - mm, "word length must be m^2 - m");
  const Letter x1 = '1', x2 = '2';
  std::int64_t ones = 0;
  for (Letter a : y) {
    require(a == x1 || a == x2, "word must be over the letters 1 and 2");
    ones += a == x1;
  }

  std::vector<Match> matches;
  std::vector<bool> matched(y.size(), false);
  auto apply = [&](const std::optional<std::vector<Match>>& step) {
    if (!step) return false;
    for (const Match& mt : *step) {
      for (auto p : mt.positions) matched[p] = true;
      matches.push_back(mt);
    }
    return true;
  };

  if (ones % mm != 0) {
    const std::int64_t gamma = ones / mm;
    const std::int64_t r = ones % mm;
    bool ok;
    if (r <= mm - 2 - gamma) {
      ok = apply(match_run(y, matched, x1, x2, r, gamma, mm));
    } else if (r >= mm - gamma) {
      ok = apply(match_run(y, matched, x2, x1, mm - r, mm - 2 - gamma, mm));
    } else if (y[y.size() - 1] == x1) {
      ok = apply(match_run(y, matched, x1, x2, mm - gamma - 1, gamma, mm, true));
    } else {
      ok = apply(match_run(y, matched, x2, x1, gamma + 1, mm - 2 - gamma, mm, true));
    }
    if (!ok) return std::nullopt;
  }

  // Whatever is left of each letter goes into pure powers of length m.
  for (Letter a : {x1, x2}) {
    std::vector<std::size_t> rest;
    for (std::size_t p = 0; p < y.size(); ++p) {
      if (!matched[p] && y[p] == a) rest.push_back(p);
    }
    if (rest.size() % static_cast<std::size_t>(mm) != 0) return std::nullopt;
    for (std::size_t k = 0; k < rest.size(); k += static_cast<std::size_t>(mm)) {
      std::vector<std::size_t> chunk(rest.begin() + static_cast<std::ptrdiff_t>(k),
                                     rest.begin() + static_cast<std::ptrdiff_t>(k + static_cast<std::size_t>(mm)));
      for (auto p : chunk) matched[p] = true;
      matches.push_back({power(a, mm), std::move(chunk)});
    }
  }
  MatchCertificate cert{std::move(matches)};
  cert.normalize();
  return cert;
}

WordSet extremal_set(int q, int m) {
  require(q >= 1 && m >= 1, "extremal_set needs q >= 1 and m >= 1");
  if (m >= 3) return prototypical_set(q, m);
  const std::string x = standard_letters(q);
  std::vector<Word> words;
  for (Letter a : x) {
    if (m == 1) {
      words.push_back(power(a, 1));
      continue;
    }
    words.push_back(power(a, 2));
    words.push_back(power(a, 3));
    for (Letter b : x) {
      if (a != b) words.push_back(power(a, 1) + power(b, 1));
    }
  }
  return WordSet(words);
}

std::int64_t min_size_bound(int q, int m) {
  require(q >= 1 && m >= 1, "min_size_bound needs q >= 1 and m >= 1");
  const std::int64_t qq = q;
  if (m == 1) return qq;
  if (m == 2) return qq * qq + qq;
  return 2 * qq * qq;
}

BigInt t_lower_bound(int q, int m) {
  require(q >= 2 && m >= 3, "t_lower_bound needs q >= 2 and m >= 3");
  using boost::multiprecision::pow;
  const BigInt b(q);
  const auto um = static_cast<unsigned>(m);
  BigInt numerator = pow(b, um * um + um + 1) - pow(b, um * um + um) + pow(b, um + 1) - pow(b, 2 * um + 1) +
                     pow(b, um) - b;
  BigInt denominator = (b - 1) * (pow(b, um) - 1) * (pow(b, um + 1) - 1);
  if (numerator % denominator != 0) throw InternalError("closed-form non-member bound is not an integer");
  return numerator / denominator;
}

BigInt t_lower_bound_census(int q, int m) {
  require(q >= 2 && m >= 3, "t_lower_bound_census needs q >= 2 and m >= 3");
  const Moduli lengths{m, m + 1};
  const std::int64_t g = frobenius_number(lengths);
  BigInt total = 0;
  for (std::int64_t len = 0; len <= g; ++len) {
    if (!representable(len, lengths)) total += boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(len));
  }
  return total;
}

// ---------------------------------------------------------------------------
// Exhaustive search

namespace {

struct ChunkResult {
  std::optional<std::uint64_t> first_nonmember;  // index within the length
  std::uint64_t nonmembers = 0;
  std::uint64_t examined = 0;
};

std::optional<std::uint64_t> checked_power(std::uint64_t base, std::int64_t exp) {
  std::uint64_t out = 1;
  for (std::int64_t k = 0; k < exp; ++k) {
    if (base != 0 && out > std::numeric_limits<std::uint64_t>::max() / base) return std::nullopt;
    out *= base;
  }
  return out;
}

// Examines words of the given length with lexicographic index in [lo, hi).
ChunkResult scan_chunk(const WordSet& s, std::size_t length, std::uint64_t lo, std::uint64_t hi, bool stop_at_first,
                       const SearchOptions& options) {
  const std::string& alphabet = s.alphabet();
  const std::size_t q = alphabet.size();
  ChunkResult result;
  if (lo >= hi) return result;
  ParikhChecker parikh(s);

  std::vector<std::size_t> digits(length, 0);
  std::vector<std::uint32_t> counts(q, 0);
  {
    std::uint64_t v = lo;
    for (std::size_t p = length; p-- > 0;) {
      digits[p] = static_cast<std::size_t>(v % q);
      v /= q;
    }
    for (auto d : digits) ++counts[d];
  }

  std::string text(length, ' ');
  for (std::uint64_t index = lo; index < hi; ++index) {
    ++result.examined;
    bool member;
    if (options.prefilter && !parikh.feasible_counts(counts)) {
      member = false;
    } else {
      for (std::size_t p = 0; p < length; ++p) text[p] = alphabet[digits[p]];
      member = is_member(Word(text), s, options.membership).member;
    }
    if (!member) {
      ++result.nonmembers;
      if (!result.first_nonmember) result.first_nonmember = index;
      if (stop_at_first) break;
    }
    // Odometer increment.
    for (std::size_t p = length; p-- > 0;) {
      --counts[digits[p]];
      if (++digits[p] < q) {
        ++counts[digits[p]];
        break;
      }
      digits[p] = 0;
      ++counts[0];
    }
  }
  return result;
}

ChunkResult scan_length(const WordSet& s, std::size_t length, std::uint64_t total, bool stop_at_first,
                        const SearchOptions& options) {
  const std::uint64_t jobs = std::max<std::uint64_t>(1, std::min<std::uint64_t>(options.jobs, total));
  if (jobs == 1) return scan_chunk(s, length, 0, total, stop_at_first, options);

  std::vector<std::future<ChunkResult>> parts;
  for (std::uint64_t k = 0; k < jobs; ++k) {
    const std::uint64_t lo = total / jobs * k + std::min(k, total % jobs);
    const std::uint64_t hi = total / jobs * (k + 1) + std::min(k + 1, total % jobs);
    parts.push_back(std::async(std::launch::async, scan_chunk, std::cref(s), length, lo, hi, stop_at_first,
                               std::cref(options)));
  }
  ChunkResult merged;
  for (auto& part : parts) {
    ChunkResult r = part.get();
    merged.nonmembers += r.nonmembers;
    merged.examined += r.examined;
    if (!merged.first_nonmember && r.first_nonmember) merged.first_nonmember = r.first_nonmember;
  }
  if (stop_at_first && merged.first_nonmember) {
    // Later chunks may have scanned past the first hit; report what a
    // sequential scan would have.
    merged.nonmembers = 1;
    merged.examined = *merged.first_nonmember + 1;
  }
  return merged;
}

Word word_at(const std::string& alphabet, std::size_t length, std::uint64_t index) {
  std::string text(length, ' ');
  for (std::size_t p = length; p-- > 0;) {
    text[p] = alphabet[static_cast<std::size_t>(index % alphabet.size())];
    index /= alphabet.size();
  }
  return Word(text);
}

std::int64_t checked_bound(const WordSet& s, const SearchOptions& options) {
  if (!is_cofinite(s)) throw DomainError("S-dagger is not co-finite; the search would not terminate");
  if (s.alphabet().size() > options.max_alphabet) {
    throw ResourceError("alphabet size " + std::to_string(s.alphabet().size()) + " exceeds search limit " +
                        std::to_string(options.max_alphabet));
  }
  const std::int64_t bound = coverage_bound(s).bound;
  if (bound > options.max_bound) {
    throw ResourceError("coverage bound " + std::to_string(bound) + " exceeds search limit " +
                        std::to_string(options.max_bound));
  }
  return bound;
}

GapReport search(const WordSet& s, const SearchOptions& options, bool census) {
  const std::int64_t bound = checked_bound(s, options);
  GapReport report;
  report.searched_up_to = bound - 1;
  if (census) report.nonmember_count = 0;
  const std::size_t q = s.alphabet().size();

  for (std::int64_t len = bound - 1; len >= 0; --len) {
    auto total = checked_power(q, len);
    if (!total || report.words_examined + *total > options.max_words) {
      throw SearchBudgetExceeded("exhaustive search would exceed " + std::to_string(options.max_words) +
                                     " words at length " + std::to_string(len),
                                 report, len + 1);
    }
    ChunkResult r;
    try {
      r = scan_length(s, static_cast<std::size_t>(len), *total, !census, options);
    } catch (const BudgetExceeded& e) {
      throw SearchBudgetExceeded(std::string(e.what()) + " at length " + std::to_string(len), report, len + 1);
    }
    report.words_examined += r.examined;
    if (census) *report.nonmember_count += r.nonmembers;
    if (r.first_nonmember && !report.witness) {
      report.longest_length = len;
      report.witness = word_at(s.alphabet(), static_cast<std::size_t>(len), *r.first_nonmember);
      if (!census) break;
    }
  }
  return report;
}

}  // namespace

GapReport longest_nonmember(const WordSet& s, const SearchOptions& options) { return search(s, options, false); }

GapReport nonmember_census(const WordSet& s, const SearchOptions& options) { return search(s, options, true); }

std::uint64_t count_nonmembers(const WordSet& s, const SearchOptions& options) {
  return *nonmember_census(s, options).nonmember_count;
}

SampleReport sample_nonmembers(const WordSet& s, std::uint64_t per_length, std::uint64_t seed,
                               const MembershipOptions& membership) {
  if (!is_cofinite(s)) throw DomainError("S-dagger is not co-finite");
  if (per_length == 0) throw DomainError("sample size must be positive");
  SampleReport report;
  report.bound = coverage_bound(s).bound;
  report.per_length = per_length;
  report.seed = seed;
  const std::string& alphabet = s.alphabet();
  const std::size_t q = alphabet.size();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, q == 0 ? 0 : q - 1);

  for (std::int64_t len = report.bound - 1; len >= 0; --len) {
    const auto length = static_cast<std::size_t>(len);
    const auto total = checked_power(q, len);
    const bool complete = total && *total <= per_length;
    const std::uint64_t draws = complete ? *total : per_length;
    std::uint64_t misses = 0;
    std::optional<Word> first_miss;
    for (std::uint64_t k = 0; k < draws; ++k) {
      Word w;
      if (complete) {
        w = word_at(alphabet, length, k);
      } else {
        std::string text(length, ' ');
        for (auto& c : text) c = alphabet[pick(rng)];
        w = Word(text);
      }
      try {
        if (!is_member(w, s, membership).member) {
          ++misses;
          if (!first_miss || w < *first_miss) first_miss = w;
        }
      } catch (const BudgetExceeded&) {
        ++report.undecided;
      }
    }
    if (first_miss && report.longest_sampled_length < 0) {
      report.longest_sampled_length = len;
      report.witness = first_miss;
    }
    const double space = std::pow(static_cast<double>(q), static_cast<double>(len));
    report.estimated_nonmembers += space * static_cast<double>(misses) / static_cast<double>(draws);
  }
  return report;
}

}  // namespace shufrob
