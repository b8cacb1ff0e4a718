#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace panofold::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitUsage = 2;

// Runs one CLI invocation. args excludes the program name. Artifact bytes go to `out` only
// when the output path is "-"; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// CLI flag spelling for a parameter field name ("minimap_fraction" -> "--minimap-fraction").
std::string flag_for_field(const std::string& field);

}  // namespace panofold::cli
