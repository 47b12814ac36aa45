#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace germcalc {

/// Base class for every error raised by the library.
class GermError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed germ-expression text. Line and column are 1-based.
class ParseError : public GermError {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : GermError(what + " at line " + std::to_string(line) + ", column " +
                    std::to_string(column)),
          line_(line),
          column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// Input that parses but violates a data-model invariant (arity, constant
/// term, dimension range, parameter range).
class ValidationError : public GermError {
public:
    using GermError::GermError;
};

/// A truncated computation did not settle before the degree cap.
class NotStabilized : public GermError {
public:
    NotStabilized(std::vector<long> values, int d_max)
        : GermError(describe(values, d_max)), values_(std::move(values)), d_max_(d_max) {}

    const std::vector<long>& values() const { return values_; }
    int d_max() const { return d_max_; }

private:
    static std::string describe(const std::vector<long>& values, int d_max) {
        std::string s = "not stabilized up to degree " + std::to_string(d_max);
        if (!values.empty()) {
            s += " (values:";
            for (long v : values) s += " " + std::to_string(v);
            s += ")";
        }
        return s;
    }

    std::vector<long> values_;
    int d_max_;
};

class NotCorankOne : public GermError {
public:
    using GermError::GermError;
};

class NotStableType : public GermError {
public:
    using GermError::GermError;
};

/// (n, p) pair outside the range an operation is defined for.
class UnsupportedDimensions : public GermError {
public:
    using GermError::GermError;
};

}  // namespace germcalc
