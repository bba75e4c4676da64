#pragma once

// Label parsing and the command-line front end.
//
// Label grammar:
//   L(r)  V(r)  coV(r)  I(r)                       global weights
//   M(t,s)@b<r0>  M'(t,s)@b<r0>  N(t,s)@b<r0>  N'(t,s)@b<r0>
//                                                  block-local vertices
//
// Exit codes: 0 success, 2 parse error, 3 domain error, 4 window overflow.

#include "sbc/errors.hpp"
#include "sbc/quantum_sl2.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace sbc {

/// Throws ParseError (with the offending byte offset) on malformed text or
/// violated family constraints.
ComoduleLabel parse_label(const std::string& text, int ell);

/// The text with a caret line under the error position.
std::string caret_diagnostic(const std::string& text, const ParseError& e);

enum ExitCode : int { exit_ok = 0, exit_parse = 2, exit_domain = 3, exit_window = 4 };

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sbc
