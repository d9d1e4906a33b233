#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace lucaspi {

enum class OutputFormat { text, csv, json };

struct RunConfig {
  int precision_digits = 50;
  OutputFormat format = OutputFormat::text;
  std::uint64_t seed = 20240607;

  // ceil(digits * log2 10) + 32
  int precision_bits() const;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lucaspi
