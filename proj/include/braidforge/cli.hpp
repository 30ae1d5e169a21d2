#ifndef BRAIDFORGE_CLI_HPP
#define BRAIDFORGE_CLI_HPP

#include <string>
#include <vector>

namespace braidforge::cli {

// Deterministic command result: identical inputs produce byte-identical
// payloads. The payload always ends with a machine-parsable line
// `status=... key=value ...`.
struct CommandResult {
  std::string status;   // ok | refuted | aborted | error
  std::string payload;  // report text, summary line last
  int exit_code = 0;    // 0 ok, 1 refuted/aborted, 2 usage or domain errors
};

CommandResult run(const std::vector<std::string>& args);

}  // namespace braidforge::cli

#endif
