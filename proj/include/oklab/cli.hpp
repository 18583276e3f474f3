#pragma once

#include <map>
#include <string>

namespace oklab {

/* A parsed CLI invocation. Supported commands: body, weights, transform,
 * pushforward, converge, normal-cone, f0, check. params carries the
 * command-specific options as strings (k, k_list, c, a). */
struct CommandRequest {
    std::string command;
    std::string input_path;
    std::string output_path;
    std::map<std::string, std::string> params;
};

/* Dispatch a request: parse the input file against the target module's
 * schema, run the operation, write deterministic output files. Returns the
 * process exit code: 0 on success, 2 on validation errors (unparseable or
 * schema-violating input, bad parameters), 3 on mathematical precondition
 * failures. Diagnostics go to stderr. */
int run(const CommandRequest& req);

} // namespace oklab
