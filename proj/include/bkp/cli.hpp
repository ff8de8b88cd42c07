#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bkp {

// Parameters shared by the subcommands, before validation. Precedence when
// parsing: command-line flags, then an optional config file, then these
// defaults.
struct RunConfig {
  int r = 2;
  int beta_order = 4;
  long depth = 25;
  int weight = 7;
  long kmax = 5;
  int threads = 1;
  std::string format = "json";
};

// Throws std::invalid_argument when r is odd or < 2, a cutoff is < 1,
// threads < 1, or format is not json/csv.
void validate_config(const RunConfig& cfg);

// "5,3,1" -> {5,3,1}; throws std::invalid_argument on empty text,
// non-numeric pieces, or nonpositive parts.
std::vector<long> parse_mu(const std::string& text);

// Full command-line driver; streams are injectable so tests can run it
// in-process. Returns the process exit code: 0 pass, 1 verification failure,
// 2 usage error.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace bkp
