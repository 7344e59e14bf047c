#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace deformlab::cli {

/// Runs the command-line tool. Exit codes: 0 success, 1 domain errors
/// (NotAssociative, poles under --strict, a failed phi-criterion), 2 parse
/// and usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace deformlab::cli
