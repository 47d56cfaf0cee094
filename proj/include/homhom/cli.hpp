#ifndef HOMHOM_CLI_HPP
#define HOMHOM_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace homhom::cli {

// Exit codes: 0 success / decision "yes", 1 decision "no", 2 errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace homhom::cli

#endif
