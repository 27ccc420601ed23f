#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ldsets/digraph.hpp"
#include "ldsets/ld_core.hpp"

namespace ldsets {

// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitMalformed = 2;

// auto, tournament, roundable, nonroundable or supervising. The returned
// set's trace_tag names the branch that produced it.
CertifiedSet solve_by_name(const Digraph& d, const std::string& algorithm, const SolveOptions& options = {});

// Runs the tool with `args` (program name excluded) and returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ldsets
