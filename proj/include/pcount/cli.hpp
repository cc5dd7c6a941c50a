#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace pcount::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsage = 2,
  kCapacity = 3,
};

struct RunConfig {
  std::string command;
  // Second word for reduce / witness / verify / gen.
  std::string mode;
  std::string quantity;

  std::string graphPath;
  std::string patternPath;
  std::string colouringPath;
  std::string propertyPath;
  std::string labelledPath;
  std::string outputPath;
  std::string transcriptPath;
  std::vector<int> core;

  int k = -1;
  int kPrime = -1;
  int kMax = -1;
  int n = -1;
  std::string probability = "1/2";
  std::uint64_t seed = 1;
  int samples = 100;
  int maxN = 8;
  int workers = 1;
  bool json = false;
};

// Parses argv into a RunConfig and runs it. Errors are reported on `err` as a
// single `error: <code>: <message>` line.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace pcount::cli
