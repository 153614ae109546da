#ifndef LRSOLVE_ERRORS_HPP_
#define LRSOLVE_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace lrsolve {

enum class ErrorCode {
  non_finite_input,
  dimension_mismatch,
  not_semi_orthogonal,
  not_full_row_rank,
  zero_dictionary,
  infeasible,
  parse_error,
  io_error,
};

// Base for all typed solver errors. The CLI maps codes to exit statuses.
class SolverError : public std::runtime_error {
 public:
  SolverError(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

struct NonFiniteInput : SolverError {
  explicit NonFiniteInput(const std::string& what)
      : SolverError(ErrorCode::non_finite_input, what) {}
};

struct DimensionMismatch : SolverError {
  explicit DimensionMismatch(const std::string& what)
      : SolverError(ErrorCode::dimension_mismatch, what) {}
};

struct NotSemiOrthogonal : SolverError {
  explicit NotSemiOrthogonal(const std::string& what)
      : SolverError(ErrorCode::not_semi_orthogonal, what) {}
};

struct NotFullRowRank : SolverError {
  explicit NotFullRowRank(const std::string& what)
      : SolverError(ErrorCode::not_full_row_rank, what) {}
};

struct ZeroDictionary : SolverError {
  explicit ZeroDictionary(const std::string& what)
      : SolverError(ErrorCode::zero_dictionary, what) {}
};

struct Infeasible : SolverError {
  explicit Infeasible(const std::string& what)
      : SolverError(ErrorCode::infeasible, what) {}
};

struct ParseError : SolverError {
  explicit ParseError(const std::string& what)
      : SolverError(ErrorCode::parse_error, what) {}
};

struct IoError : SolverError {
  explicit IoError(const std::string& what)
      : SolverError(ErrorCode::io_error, what) {}
};

}  // namespace lrsolve

#endif  // LRSOLVE_ERRORS_HPP_
