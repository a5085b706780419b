#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace kmink {

enum ExitCode : int
{
	kExitOk = 0,
	kExitCheckFailed = 1,
	kExitUsage = 2
};

/// Runs one command line (without the program name) and returns the exit code.
/// 0 = success / all checks pass, 1 = verification failure, 2 = usage or parse error.
int run_command(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace kmink
