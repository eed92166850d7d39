#pragma once

#include <stdexcept>
#include <string>

namespace physlab {

// Configuration/validation problems: bad presets, shape mismatches, invalid
// flags. CLI maps these to exit code 1.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Runtime failures: I/O, diverged simulation, corrupt files. Exit code 2.
class RuntimeError : public std::runtime_error {
public:
    explicit RuntimeError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace physlab
