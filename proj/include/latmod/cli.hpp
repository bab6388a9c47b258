#pragma once

#include <string>
#include <vector>

namespace latmod {

// Exit codes: 0 success / property true; 1 property false or verification
// counterexample; 2 input error; 3 internal error or cap exceeded.
int cli_dispatch(const std::vector<std::string>& args);

}  // namespace latmod
