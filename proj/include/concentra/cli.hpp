#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace concentra {

/// Runs one CLI command. Returns 0 when the checked property holds, 1 when
/// it fails (a witness is printed), and 2 on malformed input. All output is
/// deterministic: identical arguments and files produce identical bytes.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace concentra
