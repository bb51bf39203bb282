#ifndef RESLAT_ERRORS_HPP
#define RESLAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace reslat {

// A search was asked to visit more states than the configured guard allows.
// Always an explicit refusal, never a silent truncation.
struct GuardLimitError : std::runtime_error {
    explicit GuardLimitError(const std::string& what) : std::runtime_error(what) {}
};

// A cohomology formula was invoked outside its stated range of validity.
struct FormulaRangeError : std::runtime_error {
    explicit FormulaRangeError(const std::string& what) : std::runtime_error(what) {}
};

// The minimal cycle with a required property is not unique.
struct NonUniqueCycleError : std::runtime_error {
    explicit NonUniqueCycleError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace reslat

#endif
