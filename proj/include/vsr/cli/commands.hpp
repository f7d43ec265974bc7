// placeholder
#ifndef VSR_CLI_COMMANDS_HPP_
#define VSR_CLI_COMMANDS_HPP_
#include <string>
#include <vector>
namespace vsr::cli {
inline int run(const std::vector<std::string> &) { return 0; }
}
#endif
