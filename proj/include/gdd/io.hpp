#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gdd/gdd.hpp"
#include "gdd/qa.hpp"

namespace gdd {

struct ParseError : std::runtime_error {
  int line, col;
  ParseError(const std::string& msg, int line_, int col_)
      : std::runtime_error(msg + " at line " + std::to_string(line_) +
                           ", column " + std::to_string(col_)),
        line(line_),
        col(col_) {}
};

struct GddDocEntry {
  std::string tag;
  Gdd g;
  std::string constraint;  // free text, may be empty
};

// Grammar (one or more blocks, '#' line comments):
//   gdd "<tag>" { order = <N|generic>; vertices = [<label>, ...];
//                 edges = { (<i>,<j>): <label>, ... };
//                 constraint = "<free text>"; }
std::vector<GddDocEntry> parse_gdd_file(std::string_view text);
std::string print_gdd_file(const std::vector<GddDocEntry>& entries);

std::vector<GddDocEntry> load_gdd_file(const std::string& path);
void save_gdd_file(const std::string& path, const std::vector<GddDocEntry>& entries);

// one DOT graph per GDD; vertex label = q_ii text, edge label = qt_ij text
std::string render_dot(const std::vector<GddDocEntry>& entries);

std::vector<CatalogEntry> to_catalog(const std::vector<GddDocEntry>& entries,
                                     const std::string& source);

}  // namespace gdd
