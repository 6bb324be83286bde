#pragma once

#include <stdexcept>
#include <string>

namespace infl {

/// Base class for all library errors.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Bad command-line usage (unknown flag, missing argument, empty range).
class usage_error : public error {
public:
    explicit usage_error(const std::string& what) : error(what) {}
};

/// Malformed input data; the message names the offending line.
class parse_error : public error {
public:
    explicit parse_error(const std::string& what) : error(what) {}
};

/// Invalid argument or evaluation outside a function's domain.
class domain_error : public error {
public:
    explicit domain_error(const std::string& what) : error(what) {}
};

/// A rate value violates 1 + iota > 0, so ln(1 + iota) does not exist.
class rate_domain_error : public domain_error {
public:
    explicit rate_domain_error(const std::string& what) : domain_error(what) {}
};

/// Requested accuracy could not be reached; carries the best estimate.
class accuracy_error : public error {
public:
    accuracy_error(const std::string& what, double best_estimate, double error_estimate)
        : error(what), best_estimate_(best_estimate), error_estimate_(error_estimate) {}

    double best_estimate() const { return best_estimate_; }
    double error_estimate() const { return error_estimate_; }

private:
    double best_estimate_;
    double error_estimate_;
};

}  // namespace infl
