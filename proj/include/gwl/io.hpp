#pragma once

#include <iosfwd>
#include <string>

#include "gwl/group.hpp"

namespace gwl {

/// Cayley-table text format:
///   line 1: n
///   lines 2..n+1: n space-separated integers in [0,n), row a of the table
/// Everything from '#' to end of line is a comment; blank lines and
/// trailing whitespace are ignored.
Group parse_cayley_table(std::istream& in, int max_order = Group::default_max_order);
Group load_cayley_table(const std::string& path, int max_order = Group::default_max_order);

/// Serializes in the same format, preserving the input element labels.
std::string serialize_cayley_table(const Group& g);
void save_cayley_table(const Group& g, const std::string& path);

}  // namespace gwl
