#pragma once

// The `scrolls` command line: classify, table, project, verify.
// Exit status 0 on success, 1 for a domain error (inconsistent or infeasible
// data, failed verification), 2 for a usage error (bad flags, grammar, or a
// parameter outside the supported range).

#include <iosfwd>
#include <string>
#include <vector>

#include "scrolls/elem_transform.hpp"

namespace scrolls {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PointToken {
    PointSpec spec;
    bool singular = false;  // the isolated singular point of a genus-2 R_b
};

/// Parses the --points grammar: comma-separated points, each a '+'-joined
/// list of X0, X1, Yc:<c>, generic, singular, fiber:<label>. Points without
/// a fiber label get P1, P2, ... by position. Throws UsageError.
std::vector<PointToken> parse_points(const std::string& text);

/// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace scrolls
