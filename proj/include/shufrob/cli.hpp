// cli.hpp -- the `shufrob` command line front end

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace shufrob::cli {

enum class Command { Member, Cofinite, Bound, Construct, Longest, Count, Shuffle, Frobenius, Proto, Extremal };

/// Exit statuses.
inline constexpr int kComputed = 0;
inline constexpr int kNegative = 1;
inline constexpr int kUsageError = 2;
inline constexpr int kBudgetExceeded = 3;

struct RunConfig {
  Command command = Command::Member;
  std::vector<std::string> inputs;  // positional arguments after the command

  std::optional<std::uint64_t> budget;  // membership node budget
  bool oracle = false;
  bool certificate = false;
  bool prefilter = false;

  int q = 0;
  int m = 0;
  bool emit_set = false;
  bool witness = false;
  bool formula = false;

  std::optional<std::string> closure_file;
  std::optional<std::size_t> max_len;
  std::optional<std::int64_t> represent;

  unsigned jobs = 1;
  std::optional<std::uint64_t> max_words;
  std::optional<std::int64_t> max_bound;
  std::optional<std::uint64_t> sample;
  std::uint64_t seed = 0;
};

/// Executes one command, writing a `key: value` report to out.
int run(const RunConfig& config, std::ostream& out);

/// Parses argv (argv[0] is the program name) and runs. Usage problems are
/// reported on out as an `error:` line with status kUsageError.
int main(const std::vector<std::string>& args, std::ostream& out);

}  // namespace shufrob::cli
