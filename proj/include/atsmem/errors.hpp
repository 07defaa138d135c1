#ifndef ATSMEM_ERRORS_HPP
#define ATSMEM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace atsmem {

// Invalid or inconsistent user configuration (CLI exit code 2).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// A numerical routine failed to converge to its tolerance (CLI exit code 3).
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace atsmem

#endif  // ATSMEM_ERRORS_HPP
