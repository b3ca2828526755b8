#ifndef TENSORIA_ERRORS_HPP_
#define TENSORIA_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tensoria {

  // Base class for every error raised by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Malformed input: presentation text, corpus files, action files.
  class ParseError : public Error {
   public:
    ParseError(std::string const& msg, std::size_t offset)
        : Error(msg + " at byte " + std::to_string(offset)), _offset(offset) {}
    std::size_t offset() const noexcept {
      return _offset;
    }

   private:
    std::size_t _offset;
  };

  // Any input that parses but is semantically wrong.
  class InputError : public Error {
   public:
    using Error::Error;
  };

  // A configured resource limit was hit (cosets, elements, triples).
  class LimitExceeded : public Error {
   public:
    LimitExceeded(std::string const& what_limit, std::string const& detail)
        : Error(what_limit + " exceeded: " + detail), _limit(what_limit) {}
    std::string const& limit() const noexcept {
      return _limit;
    }

   private:
    std::string _limit;
  };

  // Map on generators that does not respect a relator.
  class NotAHomomorphism : public Error {
   public:
    NotAHomomorphism(std::string const& msg, std::size_t relator)
        : Error(msg), _relator(relator) {}
    std::size_t relator() const noexcept {
      return _relator;
    }

   private:
    std::size_t _relator;
  };

  // Internal consistency check failed; always a bug.
  class InternalError : public Error {
   public:
    using Error::Error;
  };

}  // namespace tensoria

#endif  // TENSORIA_ERRORS_HPP_
