// munnlab - representation types of Munn algebras and Rees matrix semigroups
//
// Error type shared by every module. One exception class carrying a kind
// tag; the CLI maps kinds onto exit codes.

#ifndef MUNNLAB_ERROR_HPP_
#define MUNNLAB_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace munnlab {

  enum class ErrorKind {
    InvalidInput,
    InvalidGroup,
    ModularCase,
    InternalInvariantViolation,
    SymmetryViolation,
    RelationViolation,
    ShapeMismatch,
    NotInModPlus,
    BudgetExceeded,
    EmptyUnion,
  };

  std::string_view to_string(ErrorKind kind) noexcept;

  class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, std::string const& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what),
          _kind(kind) {}

    ErrorKind kind() const noexcept {
      return _kind;
    }

   private:
    ErrorKind _kind;
  };

  [[noreturn]] inline void fail(ErrorKind kind, std::string const& what) {
    throw Error(kind, what);
  }

}  // namespace munnlab

#define MUNNLAB_ASSERT(cond, msg)                                          \
  do {                                                                     \
    if (!(cond)) {                                                         \
      ::munnlab::fail(::munnlab::ErrorKind::InternalInvariantViolation,    \
                      std::string(msg) + " [" #cond "]");                  \
    }                                                                      \
  } while (false)

#endif  // MUNNLAB_ERROR_HPP_
