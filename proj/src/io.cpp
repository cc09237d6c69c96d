#include "gwl/io.hpp"

#include <fstream>
#include <sstream>

namespace gwl {

namespace {

// Next whitespace-separated integer token, skipping comments.
bool next_int(std::istream& in, long long& out) {
  for (;;) {
    int c = in.peek();
    if (c == EOF) return false;
    if (c == '#') {
      std::string line;
      std::getline(in, line);
      continue;
    }
    if (std::isspace(c)) {
      in.get();
      continue;
    }
    break;
  }
  if (!(in >> out)) raise(errc::parse_error, "expected an integer");
  return true;
}

}  // namespace

Group parse_cayley_table(std::istream& in, int max_order) {
  long long n = 0;
  if (!next_int(in, n)) raise(errc::parse_error, "missing table size");
  if (n < 1 || n > max_order) {
    std::ostringstream ss;
    ss << "table size " << n << " outside [1, " << max_order << "]";
    raise(errc::parse_error, ss.str());
  }
  const int order = static_cast<int>(n);
  std::vector<int> table;
  table.reserve(static_cast<size_t>(order) * order);
  for (long long i = 0; i < n * n; ++i) {
    long long v = 0;
    if (!next_int(in, v)) {
      std::ostringstream ss;
      ss << "table truncated: expected " << n * n << " entries, got " << i;
      raise(errc::parse_error, ss.str());
    }
    if (v < 0 || v >= n) {
      std::ostringstream ss;
      ss << "entry " << v << " outside [0, " << n << ")";
      raise(errc::parse_error, ss.str());
    }
    table.push_back(static_cast<int>(v));
  }
  return Group::from_flat_table(order, std::move(table), max_order);
}

Group load_cayley_table(const std::string& path, int max_order) {
  std::ifstream in(path);
  if (!in) raise(errc::parse_error, "cannot open file: " + path);
  return parse_cayley_table(in, max_order);
}

std::string serialize_cayley_table(const Group& g) {
  std::ostringstream ss;
  const int n = g.order();
  ss << n << "\n";
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (b) ss << ' ';
      ss << g.mul(a, b);
    }
    ss << "\n";
  }
  return ss.str();
}

void save_cayley_table(const Group& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) raise(errc::parse_error, "cannot open file for writing: " + path);
  out << serialize_cayley_table(g);
}

}  // namespace gwl
