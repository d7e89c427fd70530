#ifndef FMETHOD_CLI_HPP
#define FMETHOD_CLI_HPP

namespace fmethod {

// Command-line entry point. Subcommands: solve, verify, compare, fourier,
// dump-setting. Exit codes: 0 success, 1 a mathematical check failed,
// 2 invalid usage or an unsupported request, 3 the search found nothing.
// The last stdout line is always "RESULT <subcommand> key=value ...".
int run_cli(int argc, char** argv);

} // namespace fmethod

#endif
