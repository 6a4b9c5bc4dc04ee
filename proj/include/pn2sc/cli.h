#ifndef PN2SC_CLI_H_
#define PN2SC_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace pn2sc {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitInvariantFailure = 2;

// Entry point of the pn2sc tool. `args` excludes the program name. Reports
// go to `out`, diagnostics to `err`; models are only ever written to files.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace pn2sc

#endif  // PN2SC_CLI_H_
