#pragma once

#include <stdexcept>
#include <string>

namespace hh {

// Parameter outside a documented precondition (bad λ, q < 1, a > b, ...).
class ParameterError : public std::invalid_argument {
public:
    explicit ParameterError(const std::string& what) : std::invalid_argument(what) {}
};

// A function cannot be evaluated where it is asked to be, or a
// nonnegativity requirement fails.
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// A case or preset was asked for outside its branch (T33_qgt1 with q = 1,
// s = -1 outside T31_s_minus1, preset parameter mismatch, ...).
class BranchError : public std::invalid_argument {
public:
    explicit BranchError(const std::string& what) : std::invalid_argument(what) {}
};

// Integrand is not integrable on the requested support.
class SingularityError : public std::domain_error {
public:
    explicit SingularityError(const std::string& what) : std::domain_error(what) {}
};

class QuadratureError : public std::runtime_error {
public:
    explicit QuadratureError(const std::string& what) : std::runtime_error(what) {}
};

// Suite configuration rejected; `path` names the offending field
// (e.g. "grid.lambda[2]").
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string path, const std::string& what)
        : std::runtime_error(path + ": " + what), path_(std::move(path)) {}

    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

}  // namespace hh
