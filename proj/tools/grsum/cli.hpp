#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace grsum::cli {

enum ExitCode : int {
    ok = 0,
    usage = 2,
    disagreement = 3,
    identity_failure = 4,
};

inline constexpr long max_table_k = 10000;
inline constexpr long max_value_k = 200000;

// args excludes the program name. Output goes to out unless --out is given.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace grsum::cli
