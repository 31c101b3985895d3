#pragma once

#include <stdexcept>
#include <string>

namespace riskpipe {

// Error classes map 1:1 onto CLI exit codes:
//   2 usage, 3 data validation, 4 training failure, 5 I/O.

class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class TrainingError : public std::runtime_error {
public:
    explicit TrainingError(const std::string& msg, long long step = -1)
        : std::runtime_error(msg), step_(step) {}
    // Epoch or iteration index at failure, -1 when not applicable.
    long long step() const { return step_; }

private:
    long long step_;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace riskpipe
