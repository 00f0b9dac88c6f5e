#pragma once

#include <stdexcept>
#include <string>

namespace qecstat {

// Exit-code mapping: validation_error -> 1, runtime_failure -> 2,
// undetermined_error -> 3 (e.g. no crossing found).
struct validation_error : std::runtime_error {
    explicit validation_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct runtime_failure : std::runtime_error {
    explicit runtime_failure(const std::string& msg) : std::runtime_error(msg) {}
};

struct undetermined_error : std::runtime_error {
    explicit undetermined_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace qecstat
