#ifndef SRCOT_CLI_HPP
#define SRCOT_CLI_HPP

#include <iosfwd>

namespace srcot {

/// Full command-line surface. Exit codes: 0 success, 1 usage or parse
/// error, 2 enumeration cap exceeded, 3 cross-route disagreement.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

} // namespace srcot

#endif
