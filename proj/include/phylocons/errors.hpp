#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace phylocons {

/// Malformed Newick input. Line and column are 1-based; line is 0 when the
/// text did not come from a file.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(what), line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Trees that should share one leaf label set do not.
class LeafSetMismatch : public std::runtime_error {
 public:
  explicit LeafSetMismatch(const std::string& what, std::size_t line = 0)
      : std::runtime_error(what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Two clusters (or two trees) that were required to be compatible are not.
class IncompatibleClusters : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A cluster needed a weight but is absent from the weight map.
class MissingWeight : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace phylocons
