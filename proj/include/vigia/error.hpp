#pragma once

#include <stdexcept>
#include <string>

namespace vigia {

// Unusable input: bad geometry, bad config, out-of-range values. CLI exit code 2.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// A file that does not conform to its declared format. CLI exit code 2.
class FormatError : public ValidationError {
public:
    explicit FormatError(const std::string& msg) : ValidationError(msg) {}
};

// Training cannot proceed (e.g. single-class training labels). CLI exit code 3.
class TrainingError : public std::runtime_error {
public:
    explicit TrainingError(const std::string& msg) : std::runtime_error(msg) {}
};

// Metric or fold evaluation is undefined for the given inputs. CLI exit code 3.
class EvalError : public std::runtime_error {
public:
    explicit EvalError(const std::string& msg) : std::runtime_error(msg) {}
};

// Transport failure that survived the retry budget. CLI exit code 4.
class NetworkError : public std::runtime_error {
public:
    NetworkError(const std::string& msg, std::string url, int attempts)
        : std::runtime_error(msg), url(std::move(url)), attempts(attempts) {}

    std::string url;
    int attempts;
};

}  // namespace vigia
