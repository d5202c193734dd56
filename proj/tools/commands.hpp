#ifndef TORICCTL_COMMANDS_HPP
#define TORICCTL_COMMANDS_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace toricctl {

inline constexpr const char* kToolVersion = "0.3.1";
inline constexpr std::uint64_t kDefaultSeed = 20240917;

/// Exit statuses.
enum Exit : int {
  kOk = 0,
  kOracleFailure = 1,
  kParse = 2,
  kInvalidFan = 3,
  kShapeMismatch = 4,
  kCapExceeded = 5,
};

/// Runs one command line (without the program name). Results go to `out` as JSON,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Hex SHA-256 of the given bytes.
std::string sha256_hex(const std::string& bytes);

}  // namespace toricctl

#endif  // TORICCTL_COMMANDS_HPP
