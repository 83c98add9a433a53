#pragma once

// tmcurve command dispatch, kept out of main() so tests can run commands
// in-process.
//
// Exit codes: 0 success, 1 verification counterexample or bound violation,
// 2 invalid input (including violated theorem hypotheses).

#include <iosfwd>
#include <string>
#include <vector>

#include "tmc/cyclotomic.hpp"
#include "tmc/turtle.hpp"

namespace tmc::cli {

constexpr int kOk = 0;
constexpr int kCounterexample = 1;
constexpr int kInvalidInput = 2;

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "z@rot": translation z in the literal grammar, rotation rot one of
/// "e/m" (ζ_m^e), "1", "-1" or "z(m,e)". "@rot" may be omitted.
GroupElement parse_instruction(const std::string& text);
RootOfUnity parse_rotation(const std::string& text);

/// Segment cap from TMC_SEGMENT_CAP, else the library default.
std::uint64_t segment_cap_from_env();

}  // namespace tmc::cli
