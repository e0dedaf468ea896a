#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "frobcrit/json_io.hpp"

namespace frobcrit {

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kMismatch = 1;
inline constexpr int kInputError = 2;
}  // namespace exit_code

/// args excludes the program name. `in` backs the "-" input path.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

/// Names accepted by `examples run`, with one-line descriptions.
std::vector<std::pair<std::string, std::string>> example_catalog();

/// The JSON document `examples run <name>` prints, plus whether every
/// expectation matched. Throws Error for unknown names.
std::pair<json, bool> run_example(const std::string& name, std::int64_t p);

std::string sp4_dot();

json verify_identities(int max_rank);

}  // namespace frobcrit
