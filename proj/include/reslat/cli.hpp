#ifndef RESLAT_CLI_HPP
#define RESLAT_CLI_HPP

namespace reslat::cli {

// Exit codes: 0 success, 1 usage, 2 validation, 3 resource guard,
// 4 oracle discrepancy.
int run(int argc, const char* const* argv);

}  // namespace reslat::cli

#endif
