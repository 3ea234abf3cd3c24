#pragma once

#include <string>
#include <vector>

namespace rookmaze {

struct CommandResult {
    int exit_code = 0;  // 0 ok, 1 domain error, 2 usage error
    std::string out;
    std::string err;
};

// args excludes the program name.
CommandResult dispatch(const std::vector<std::string>& args);

}  // namespace rookmaze
