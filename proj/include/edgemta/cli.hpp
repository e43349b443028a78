#ifndef EDGEMTA_CLI_HPP
#define EDGEMTA_CLI_HPP

#include <iosfwd>

namespace edgemta::cli {

// Subcommands: gen, solve, sweep, round, oracle. Returns 0 on success, 1 on
// runtime errors (bad input files, refused searches) and 2 on usage errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace edgemta::cli

#endif // EDGEMTA_CLI_HPP
