#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace flipcut {
namespace cli {

/// Runs one CLI command. Exit code 0 on success, 1 for domain errors (with an
/// error JSON on the error stream), 2 for usage errors.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace cli
}  // namespace flipcut
