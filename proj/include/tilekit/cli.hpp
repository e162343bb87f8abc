#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tilekit {

/**
 * Command-line front door. Args exclude the program name. Payload goes to
 * `out`, diagnostics to `err`; `in` serves subcommands reading stdin.
 * Exit codes: 0 verified/matched, 1 verified-false/no-match, 2 input error.
 */
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace tilekit
