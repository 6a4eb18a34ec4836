#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "algebra.hpp"

namespace qw {

/// Names-level view of an algebra file:
///   algebra <name>
///   elements <tok> <tok> ...
///   zero <tok>
///   one <tok>
///   arrow
///   <n rows of n tokens, row i = values of element_i -> element_j>
/// '#' starts a comment to end of line; blank lines are ignored.
struct AlgebraDocument {
  std::string name;
  std::vector<std::string> elements;
  std::string zero;
  std::string one;
  std::vector<std::vector<std::string>> rows;

  bool operator==(const AlgebraDocument&) const = default;
};

/// InputError on malformed input, with "line L, column C" in the message.
AlgebraDocument parse_document(std::string_view text);

/// Canonical rendering: exactly the six-section layout above with single
/// spaces and a trailing newline. parse_document is its left inverse.
std::string serialize(const AlgebraDocument& doc);

Algebra to_algebra(const AlgebraDocument& doc);
AlgebraDocument to_document(const Algebra& a);

Algebra parse_algebra(std::string_view text);
std::string serialize(const Algebra& a);

Algebra read_algebra_file(const std::string& path);

}  // namespace qw
