#pragma once

#include <optional>
#include <string>
#include <vector>

#include "r3/perm.hpp"

namespace r3 {

// group file: line 1 is the degree, every later nonempty line one
// generator in cycle form "(0 1 2)(3 4)" or image form "[1,2,0]",
// 0-based points, '#' starts a comment
struct GroupFile {
  unsigned degree = 0;
  std::vector<Perm> gens;
};

struct ParseError {
  unsigned line = 0; // 1-based
  unsigned col = 0;  // 0-based
  std::string msg;

  std::string str() const;
};

struct ParseResult {
  std::optional<GroupFile> group;
  ParseError error;

  bool ok() const { return group.has_value(); }
};

ParseResult parse_group(const std::string& text);

// image form, one generator per line; parse(format(gens)) gives the
// generators back verbatim
std::string format_group(unsigned degree, const std::vector<Perm>& gens);

} // namespace r3
