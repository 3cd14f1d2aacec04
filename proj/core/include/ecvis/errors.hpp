#pragma once

#include <stdexcept>
#include <string>

namespace ecvis {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ec
struct SingularModelError : Error {
    SingularModelError() : Error("singular model: discriminant is zero") {}
};
struct NonMinimalModelError : Error {
    explicit NonMinimalModelError(const std::string& what) : Error(what) {}
};

// hecke
struct LevelMismatchError : Error {
    explicit LevelMismatchError(const std::string& what) : Error(what) {}
};
struct IdenticalTracesError : Error {
    explicit IdenticalTracesError(const std::string& what) : Error(what) {}
};

// gate
struct SearchExhaustedError : Error {
    explicit SearchExhaustedError(const std::string& what) : Error(what) {}
};
struct NotCongruentError : Error {
    explicit NotCongruentError(const std::string& what) : Error(what) {}
};
struct UnknownLabelError : Error {
    explicit UnknownLabelError(const std::string& what) : Error(what) {}
};

// cohomology
struct BudgetExceededError : Error {
    explicit BudgetExceededError(const std::string& what) : Error(what) {}
};
struct NotCoveringError : Error {
    explicit NotCoveringError(const std::string& what) : Error(what) {}
};
struct PreconditionViolatedError : Error {
    explicit PreconditionViolatedError(const std::string& what) : Error(what) {}
};

// ingest
struct ParseError : Error {
    long line;
    ParseError(long line_, const std::string& reason)
        : Error("parse error at line " + std::to_string(line_) + ": " + reason), line(line_) {}
};
struct DuplicateLabelError : Error {
    explicit DuplicateLabelError(const std::string& what) : Error(what) {}
};

}  // namespace ecvis
