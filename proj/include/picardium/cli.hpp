#pragma once
// Command-line entry point.  Returns the process exit status:
//   0  every certificate passed
//   1  at least one certificate failed
//   2  input error (parse/schema/pipeline precondition)

#include <string>
#include <vector>

namespace picardium {

int run_command(const std::vector<std::string>& args);

}  // namespace picardium
