#include "cli.hpp"

#include <iostream>

// Subcommands land here as the modules behind them are finished.
int cli_run(const std::vector<std::string>& args) {
  (void)args;
  std::cerr << "melon_rsk: no subcommands wired up yet\n";
  return 2;
}
