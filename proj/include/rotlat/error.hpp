#ifndef ROTLAT_ERROR_HPP_
#define ROTLAT_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rotlat {

  // Maximum number of elements of any lattice built by the library.
  inline constexpr std::size_t default_element_cap = 4096;

  // Base class of everything the library throws. Each subclass corresponds to
  // one family of rejected inputs so callers (and the CLI) can map them to
  // exit codes.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  class InvalidArgument : public Error {
   public:
    using Error::Error;
  };

  class NotAPoset : public Error {
   public:
    using Error::Error;
  };

  class NotALattice : public Error {
   public:
    using Error::Error;
  };

  class NotAnAutomorphism : public Error {
   public:
    using Error::Error;
  };

  class InvalidCongruence : public Error {
   public:
    using Error::Error;
  };

  class InvalidIdeal : public Error {
   public:
    using Error::Error;
  };

  // Operation only defined for distributive lattices.
  class Unsupported : public Error {
   public:
    using Error::Error;
  };

  class CapExceeded : public Error {
   public:
    using Error::Error;
  };

  namespace detail {
    inline void check_cap(std::size_t size, std::size_t cap, char const* what) {
      if (size > cap) {
        throw CapExceeded(std::string(what) + ": " + std::to_string(size)
                          + " exceeds cap " + std::to_string(cap));
      }
    }
  }  // namespace detail

}  // namespace rotlat

#endif  // ROTLAT_ERROR_HPP_
