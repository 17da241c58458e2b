#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gridhfk::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 1;
inline constexpr int kExitInternalAlarm = 2;

// Runs one command. `args` excludes the program name. Reports go to `out`,
// diagnostics to `err`; `in` is read when the input path is "-".
//
//   gridhfk <verb> [path | --grid TEXT] [--format text|records] [--jobs K]
//           [--max-n K] [--seed U64] [--size N] [--knot] [--move KIND:INDEX]
//           [--verbose]
//
// Verbs: validate, info, homology, hfk, unknot, genus, fibered, alexander,
// verify, move, random.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace gridhfk::cli
