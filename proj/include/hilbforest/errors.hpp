#pragma once

#include <stdexcept>
#include <string>

namespace hilbforest {

/// Broad classes of failure; the CLI maps these onto exit statuses.
enum class ErrorKind {
    Validation,  // bad input or violated precondition (exit 2)
    Resource,    // a configured guard was exceeded (exit 3)
    Internal,    // a broken internal invariant (exit 1)
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string code, const std::string& what)
        : std::runtime_error(what), kind_(kind), code_(std::move(code)) {}

    ErrorKind kind() const noexcept { return kind_; }
    const std::string& code() const noexcept { return code_; }

private:
    ErrorKind kind_;
    std::string code_;
};

class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& what, std::string code = "validation")
        : Error(ErrorKind::Validation, std::move(code), what) {}
};

/// Syntax error in one of the text formats; `position` is a 0-based byte offset.
class ParseError : public ValidationError {
public:
    ParseError(const std::string& what, std::size_t position, std::string token = {})
        : ValidationError(what + " at position " + std::to_string(position), "parse"),
          position_(position), token_(std::move(token)) {}

    std::size_t position() const noexcept { return position_; }
    const std::string& token() const noexcept { return token_; }

private:
    std::size_t position_;
    std::string token_;
};

/// Stage at which the recursive admissibility test rejected a polynomial.
enum class AdmissibilityStage {
    ZeroPolynomial,
    NonIntegerConstant,
    NonPositiveConstant,
    NegativeConstantGap,
    NonAdmissibleDifference,
};

const char* to_string(AdmissibilityStage stage) noexcept;

class NotAdmissible : public ValidationError {
public:
    NotAdmissible(AdmissibilityStage stage, const std::string& what)
        : ValidationError(what, "not-admissible"), stage_(stage) {}

    AdmissibilityStage stage() const noexcept { return stage_; }

private:
    AdmissibilityStage stage_;
};

class DimensionError : public ValidationError {
public:
    explicit DimensionError(const std::string& what) : ValidationError(what, "dimension") {}
};

class ExpansionError : public ValidationError {
public:
    explicit ExpansionError(const std::string& what) : ValidationError(what, "expansion") {}
};

/// An operation was called outside the hypotheses under which it is defined
/// (e.g. the Borel K-polynomial formula on a non-Borel ideal).
class ContractViolation : public ValidationError {
public:
    explicit ContractViolation(const std::string& what) : ValidationError(what, "contract") {}
};

/// The ideal defines the empty scheme (Hilbert polynomial 0).
class EmptySchemeError : public ValidationError {
public:
    explicit EmptySchemeError(const std::string& what) : ValidationError(what, "empty-scheme") {}
};

class ResourceError : public Error {
public:
    explicit ResourceError(const std::string& what)
        : Error(ErrorKind::Resource, "resource", what) {}
};

}  // namespace hilbforest
