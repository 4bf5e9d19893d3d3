#pragma once

#include <vector>
#include <string>

// Entry point for the melon_rsk command line; returns the process exit code
// (0 success, 1 domain error with a JSON report on stderr, 2 usage error).
int cli_run(const std::vector<std::string>& args);
