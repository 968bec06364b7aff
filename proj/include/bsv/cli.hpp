#ifndef BSV_CLI_HPP
#define BSV_CLI_HPP

namespace bsv {

// Exit codes: 0 success / all checks passed, 1 a verification failed,
// 2 usage or input error.
int run_command(int argc, const char* const* argv);

}  // namespace bsv

#endif
