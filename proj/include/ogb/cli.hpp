#ifndef OGB_CLI_HPP
#define OGB_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace ogb {

// Exit codes: 0 success, 1 verification failure, 2 parse error, 3 I/O error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

// Fixed-width float formatting used for all CSV output (15 significant
// digits, '.' separator).
std::string format_float(double v);

} // namespace ogb

#endif
