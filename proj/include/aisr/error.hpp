#ifndef AISR_ERROR_HPP_
#define AISR_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace aisr {

  // Base class for every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // A table, hypergraph or group whose shape is wrong (entry outside the
  // carrier, wrong row length, repeated vertex in an edge, ...). Distinct
  // from an axiom violation, which is reported rather than thrown.
  class StructureError : public Error {
   public:
    using Error::Error;
  };

  class ParseError : public Error {
   public:
    ParseError(std::string const& what, std::size_t offset)
        : Error(what + " at offset " + std::to_string(offset)),
          _offset(offset) {}

    std::size_t offset() const noexcept {
      return _offset;
    }

   private:
    std::size_t _offset;
  };

  // A configured size cap would be exceeded.
  class SizeError : public Error {
   public:
    using Error::Error;
  };

  // An operation was called on input violating its precondition.
  class PreconditionError : public Error {
   public:
    using Error::Error;
  };

}  // namespace aisr

#endif  // AISR_ERROR_HPP_
