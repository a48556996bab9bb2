#pragma once

#include <string>
#include <vector>

namespace hilbforest::cli {

enum ExitStatus { kOk = 0, kInternal = 1, kValidation = 2, kResource = 3 };

struct Outcome {
    int status = kOk;
    std::string out;
    std::string err;
};

/// Runs one command line (without the program name). Never throws; errors
/// are rendered to `err` (or to `out` as JSON with --format json).
Outcome run(const std::vector<std::string>& args);

}  // namespace hilbforest::cli
