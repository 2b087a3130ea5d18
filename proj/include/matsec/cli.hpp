#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace matsec {

// Batch front end. Exit codes: 0 pass, 1 bound/verification failure,
// 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace matsec
