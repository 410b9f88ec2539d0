#pragma once

#include <stdexcept>
#include <string>

namespace inccat {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed poset input: cycles, unknown or duplicate labels, bad relations.
class PosetError : public Error {
 public:
  using Error::Error;
};

/// Size cap exceeded.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Subsets that should be order ideals but are not, or non-nested intervals.
class LatticeError : public Error {
 public:
  using Error::Error;
};

/// Ill-formed morphisms or non-composable chains.
class CategoryError : public Error {
 public:
  using Error::Error;
};

/// A family truncation is too small for the requested computation.
class TruncationError : public Error {
 public:
  using Error::Error;
};

/// JSON / text input that cannot be decoded.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace inccat

// Internal consistency checks that are compiled in for debug builds or when
// INCCAT_CHECKED is defined. They throw rather than abort so that test
// harnesses can report them.
#if !defined(NDEBUG) || defined(INCCAT_CHECKED)
#define INCCAT_CHECK(cond, msg)                                       \
  do {                                                                \
    if (!(cond)) throw std::logic_error(std::string("inccat: ") + (msg)); \
  } while (0)
#else
#define INCCAT_CHECK(cond, msg) \
  do {                          \
  } while (0)
#endif
