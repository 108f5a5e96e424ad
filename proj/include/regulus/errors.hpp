#ifndef REGULUS_ERRORS_HPP_
#define REGULUS_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace regulus {

  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Raised by try-invert style operations when the argument is not a unit.
  class NonUnit : public Error {
   public:
    using Error::Error;
  };

  class UnsupportedRing : public Error {
   public:
    using Error::Error;
  };

  class DimensionMismatch : public Error {
   public:
    using Error::Error;
  };

  // A closure computation outgrew its budget; the object may be infinite.
  class CapExceeded : public Error {
   public:
    explicit CapExceeded(std::size_t cap)
        : Error("closure exceeded cap " + std::to_string(cap)), _cap(cap) {}
    std::size_t cap() const noexcept {
      return _cap;
    }

   private:
    std::size_t _cap;
  };

  class InvalidInput : public Error {
   public:
    using Error::Error;
  };

  class InvalidAction : public InvalidInput {
   public:
    using InvalidInput::InvalidInput;
  };

  class NotHomogeneous : public Error {
   public:
    using Error::Error;
  };

  class HasCycle : public Error {
   public:
    using Error::Error;
  };

  class NotFiniteState : public Error {
   public:
    using Error::Error;
  };

  class GroupNotFinite : public Error {
   public:
    using Error::Error;
  };

  class IncompatibleAction : public Error {
   public:
    using Error::Error;
  };

}  // namespace regulus

#endif  // REGULUS_ERRORS_HPP_
