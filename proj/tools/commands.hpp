#pragma once

namespace moshop::cli {

// Exit codes shared by every subcommand.
enum Exit : int {
  ok = 0,
  runtime_failure = 1,
  bad_arguments = 2,
  bad_input = 3,
  solver_contract = 4,
  refused = 5,
};

int run(int argc, char** argv);

} // namespace moshop::cli
