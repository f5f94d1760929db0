#ifndef MAPPERFORGE_CLI_HPP
#define MAPPERFORGE_CLI_HPP

#include <string>
#include <vector>

namespace mapperforge {

// Exit codes, stable across releases:
//   0 success, 1 negative result (not isomorphic / pattern mismatch / changed),
//   2 malformed input, 3 incompatible lens/cover, 4 search exhausted,
//   5 insufficient points, 70 internal error.
int run_cli(const std::vector<std::string>& args);

} // namespace mapperforge

#endif
