// Command-line front end. Every command prints one JSON report on stdout.
//
// Exit codes: 0 decided and consistent, 1 suite row failed its expectation,
// 2 undecided, 3 input error, 4 theorem and oracle disagree.

#ifndef REGULUS_CLI_HPP_
#define REGULUS_CLI_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "regulus/io.hpp"

namespace regulus::cli {

  inline constexpr char const* version = "0.1.0";

  enum ExitCode : int {
    ok               = 0,
    expectation_fail = 1,
    undecided        = 2,
    input_error      = 3,
    disagreement     = 4,
  };

  struct Options {
    std::string                  command;  // e.g. "invsgp decide"
    std::string                  ring = "Q";
    std::string                  input;
    std::string                  from_semigroup;
    std::string                  from_groupoid;
    std::string                  manifest;
    std::optional<std::uint64_t> budget;
    std::optional<std::uint64_t> cap;
    std::uint64_t                seed = 20240917;
    std::optional<bool>          verify;
    bool                         timing = false;
  };

  struct Outcome {
    io::Json report;
    int      code = ok;
  };

  // Runs one command; input errors are reported, not thrown.
  Outcome execute(Options const& opts);

  // Parses argv and prints the report.
  int dispatch(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);
  int main(int argc, char** argv);

}  // namespace regulus::cli

#endif  // REGULUS_CLI_HPP_
