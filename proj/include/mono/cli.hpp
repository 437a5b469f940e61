#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mono {

/// Dispatches a CLI invocation (argv without the program name).
/// Exit codes: 0 success (and mirror equal); 1 parse/validation error;
/// 2 divergent/Bad theory; 3 mirror mismatch; 4 uncertified-pruning result
/// requested without --allow-uncertified.
int run_command(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace mono
