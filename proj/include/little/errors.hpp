#pragma once

#include <stdexcept>
#include <string>

namespace little {

/// Base class for all errors thrown by this library.
/// The category tag is stable and machine-greppable; the CLI prints it
/// as `error: <category>: <detail>` and maps it to a process exit code.
class error : public std::runtime_error {
public:
    error(std::string category, const std::string& detail)
        : std::runtime_error("error: " + category + ": " + detail),
          category_(std::move(category)),
          detail_(detail) {}

    const std::string& category() const noexcept { return category_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    std::string category_;
    std::string detail_;
};

/// A requested size exceeds a hard cap (enumeration ceilings, entry budgets).
class size_error : public error {
public:
    explicit size_error(const std::string& detail) : error("size", detail) {}
};

/// Matrix dimensions do not match what an operation requires.
class shape_error : public error {
public:
    explicit shape_error(const std::string& detail) : error("shape", detail) {}
};

/// Input values are out of domain (non-finite entries, bad parameters).
class data_error : public error {
public:
    explicit data_error(const std::string& detail) : error("data", detail) {}
};

/// A scalar optimization failed loudly (no interior bracket found).
class optimizer_error : public error {
public:
    explicit optimizer_error(const std::string& detail) : error("optimizer", detail) {}
};

/// A solver aborted mid-run; the message carries the failing trial index.
class solver_error : public error {
public:
    explicit solver_error(const std::string& detail) : error("solver", detail) {}
};

/// File I/O failed; the message carries the offending path.
class io_error : public error {
public:
    explicit io_error(const std::string& detail) : error("io", detail) {}
};

/// Command-line arguments are inconsistent beyond what flag parsing catches.
class usage_error : public error {
public:
    explicit usage_error(const std::string& detail) : error("usage", detail) {}
};

} // namespace little
