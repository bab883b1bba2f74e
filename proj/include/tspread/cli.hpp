#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tspread {

inline constexpr int kExitOk = 0;
inline constexpr int kExitPrecondition = 2;
inline constexpr int kExitInconsistent = 3;

/// Environment variable holding the default field characteristic.
inline constexpr const char* kFieldCharEnv = "TSPREAD_FIELD_CHAR";

/// Runs one command. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tspread
