#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ptm {

/// Runs one CLI invocation. Results go to `out`, diagnostics to `err`.
/// Exit status: 0 ok, 1 contract or parse error, 2 inconclusive.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
/// Same, with `forge --stream` reading from `in`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
             std::istream& in);

}  // namespace ptm
