#pragma once

#include <stdexcept>
#include <string>

namespace bflip {

/// Base of every error thrown by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured size limit (group order, path count, poset size, ...) was hit.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

class UnsupportedDiagram : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class NotReduced : public Error {
 public:
  using Error::Error;
};

class NotLongestElement : public Error {
 public:
  using Error::Error;
};

/// An odd number of middle vertices between two elements. Cannot happen on a
/// genuine Bruhat graph, so this flags corrupted input.
class OddMiddleCount : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

}  // namespace bflip
