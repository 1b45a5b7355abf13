#ifndef LACE_ERRORS_HPP
#define LACE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lace {

// Precondition violations (caller error).
struct DegreeExceedsBound : std::invalid_argument {
  explicit DegreeExceedsBound(const std::string& what)
      : std::invalid_argument(what) {}
};

struct BadSectionIndex : std::invalid_argument {
  explicit BadSectionIndex(const std::string& what)
      : std::invalid_argument(what) {}
};

struct NotSymmetric : std::invalid_argument {
  explicit NotSymmetric(const std::string& what)
      : std::invalid_argument(what) {}
};

struct EndpointIsRoot : std::invalid_argument {
  explicit EndpointIsRoot(const std::string& what)
      : std::invalid_argument(what) {}
};

struct NotRealRooted : std::invalid_argument {
  explicit NotRealRooted(const std::string& what)
      : std::invalid_argument(what) {}
};

struct OutOfRange : std::invalid_argument {
  explicit OutOfRange(const std::string& what)
      : std::invalid_argument(what) {}
};

// Input that could not be parsed (files, inline polynomials).
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Brute-force lattice counting refused (bounding box too large).
struct CountRefused : std::runtime_error {
  explicit CountRefused(const std::string& what) : std::runtime_error(what) {}
};

// Internal cross-assertion failures.  These indicate an implementation bug
// and are never expected on valid inputs.
struct InconsistentFTriangle : std::logic_error {
  explicit InconsistentFTriangle(const std::string& what)
      : std::logic_error(what) {}
};

struct PathMismatch : std::logic_error {
  explicit PathMismatch(const std::string& what) : std::logic_error(what) {}
};

struct UniformityViolation : std::logic_error {
  explicit UniformityViolation(const std::string& what)
      : std::logic_error(what) {}
};

}  // namespace lace

#endif  // LACE_ERRORS_HPP
