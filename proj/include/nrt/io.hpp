#pragma once

// Text formats for point sets and linear codes.
//
// Point file:   [field line "p e c_0 .. c_e" when e > 1]
//               "q n s N"
//               N lines of n digit strings, most significant digit first.
//               Digits are single characters for q <= 10 and '.'-separated labels otherwise.
// Code file:    [field line] "q n s k", then k lines of n*s labels in row-major xi order.
// Lines starting with '#' are comments; "# kind points|code" and "# nodes ..." are
// written by the tools and read back when present.

#include <istream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "nrt/codes.hpp"
#include "nrt/geometry.hpp"

namespace nrt {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

enum class FileKind { points, code };

struct FileMeta {
  std::optional<FileKind> kind;
  std::optional<std::string> nodes;
  std::vector<std::string> comments;  // every comment line, without the leading '#'
};

struct PointFile {
  Distribution dist;
  FileMeta meta;
};

struct CodeFile {
  LinearCode code;
  FileMeta meta;
};

// Digit string of coordinate j of x, most significant first.
std::string format_digits(const Point& x, std::size_t j);

void write_points(std::ostream& os, const Distribution& d, const std::vector<std::string>& comments = {});
void write_code(std::ostream& os, const LinearCode& c, const std::vector<std::string>& comments = {});

PointFile read_points(std::istream& is);
CodeFile read_code(std::istream& is);

// Kind from a "# kind" comment, or from the shape of the first data line; nullopt when
// the file is ambiguous (s = 1 without a kind comment).
std::optional<FileKind> detect_kind(const std::string& text);

}  // namespace nrt
