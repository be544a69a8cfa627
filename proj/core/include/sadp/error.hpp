#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sadp {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidCell : public Error {
 public:
  using Error::Error;
};

class EmptyCell : public Error {
 public:
  using Error::Error;
};

/// The conflict graph of a cell contains an odd cycle. `cycle` holds the
/// pattern indices along the cycle in traversal order.
class NotDecomposable : public Error {
 public:
  NotDecomposable(std::string what, std::vector<int> cycle)
      : Error(std::move(what)), cycle_(std::move(cycle)) {}
  const std::vector<int>& cycle() const { return cycle_; }

 private:
  std::vector<int> cycle_;
};

class TooManyComponents : public Error {
 public:
  using Error::Error;
};

class UnknownPattern : public Error {
 public:
  using Error::Error;
};

class UnknownCell : public Error {
 public:
  using Error::Error;
};

class InconsistentLibrary : public Error {
 public:
  using Error::Error;
};

class OverlapError : public Error {
 public:
  using Error::Error;
};

class StaleTable : public Error {
 public:
  using Error::Error;
};

/// Malformed input document. Line and column are 1-based; both are 0 when the
/// error is semantic and `path` locates the offending JSON node instead.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0,
             std::string path = {})
      : Error(what), line_(line), column_(column), path_(std::move(path)) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& path() const { return path_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string path_;
};

}  // namespace sadp
