#ifndef FRACPOW_CLI_HPP
#define FRACPOW_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace fracpow::cli
{

// Exit codes: 0 success, 1 domain or hypothesis failure, 2 usage error.
inline constexpr int k_exit_ok = 0;
inline constexpr int k_exit_domain = 1;
inline constexpr int k_exit_usage = 2;

// args excludes the program name. Results go to `out`; errors go to `err`
// as {"error": {"kind": ..., "message": ...}} and leave `out` untouched.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

int main_entry(int argc, char **argv);

} // namespace fracpow::cli

#endif
