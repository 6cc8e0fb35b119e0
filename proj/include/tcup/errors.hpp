#ifndef TCUP_ERRORS_HPP
#define TCUP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tcup {

/** Structurally impossible fan input (bad indices, non-primitive rays, ...). */
class InvalidFanError : public std::runtime_error {
public:
    explicit InvalidFanError(const std::string& what) : std::runtime_error(what) {}
};

/** Well-formed input outside the supported class (e.g. non-full-dimensional cones). */
class UnsupportedFanError : public std::runtime_error {
public:
    explicit UnsupportedFanError(const std::string& what) : std::runtime_error(what) {}
};

/** An operation was called outside its stated precondition. */
class ContractViolation : public std::logic_error {
public:
    explicit ContractViolation(const std::string& what) : std::logic_error(what) {}
};

/** Malformed input file; message carries a line-anchored diagnostic. */
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace tcup

#endif
