#pragma once

#include <fstream>
#include <istream>
#include <sstream>
#include <string>

#include "bfc/boolean_function.hpp"
#include "bfc/errors.hpp"

namespace bfc {

// Truth-table text format (".bft"):
//   line 1: decimal n
//   line 2: 2^n characters '0'/'1'; character i is the table bit at index i.
//
// Support text format:
//   line 1: "supp n"
//   following lines: one decimal member mask each, strictly increasing.

namespace detail {

inline std::string strip_cr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

inline long parse_decimal(const std::string& text, const std::string& where) {
  std::size_t pos = 0;
  long value = 0;
  try {
    value = std::stol(text, &pos);
  } catch (const std::exception&) {
    throw parse_error(where + ": expected a decimal integer, got \"" + text +
                      "\"");
  }
  if (pos != text.size())
    throw parse_error(where + ": trailing characters after integer \"" + text +
                      "\"");
  return value;
}

}  // namespace detail

inline BooleanFunction parse_bft(std::istream& in, const std::string& name) {
  std::string line;
  if (!std::getline(in, line))
    throw parse_error(name + ":1: missing dimension line");
  const long n = detail::parse_decimal(detail::strip_cr(line), name + ":1");
  if (n < 1 || n > max_dimension)
    throw parse_error(name + ":1: dimension " + std::to_string(n) +
                      " outside [1, " + std::to_string(max_dimension) + "]");
  if (!std::getline(in, line))
    throw parse_error(name + ":2: missing table line");
  line = detail::strip_cr(line);
  const std::uint64_t expected = std::uint64_t{1} << n;
  if (line.size() != expected)
    throw parse_error(name + ":2: table has " + std::to_string(line.size()) +
                      " characters, expected " + std::to_string(expected));
  BooleanFunction f(static_cast<int>(n));
  for (std::uint64_t i = 0; i < expected; ++i) {
    const char c = line[static_cast<std::size_t>(i)];
    if (c == '1')
      f.set_value(i, true);
    else if (c != '0')
      throw parse_error(name + ":2:" + std::to_string(i + 1) +
                        ": invalid character '" + std::string(1, c) + "'");
  }
  return f;
}

inline std::string format_bft(const BooleanFunction& f) {
  std::string out = std::to_string(f.n());
  out.push_back('\n');
  const std::uint64_t size = f.table_size();
  out.reserve(out.size() + size + 1);
  for (std::uint64_t i = 0; i < size; ++i)
    out.push_back(f.value(i) ? '1' : '0');
  out.push_back('\n');
  return out;
}

inline SetFamily parse_support(std::istream& in, const std::string& name) {
  std::string line;
  if (!std::getline(in, line))
    throw parse_error(name + ":1: missing header line");
  line = detail::strip_cr(line);
  std::istringstream header(line);
  std::string tag;
  long n = 0;
  if (!(header >> tag >> n) || tag != "supp")
    throw parse_error(name + ":1: expected header \"supp <n>\"");
  std::string rest;
  if (header >> rest)
    throw parse_error(name + ":1: trailing characters after header");
  if (n < 1 || n > max_dimension)
    throw parse_error(name + ":1: dimension " + std::to_string(n) +
                      " outside [1, " + std::to_string(max_dimension) + "]");
  std::vector<std::uint32_t> members;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    line = detail::strip_cr(line);
    if (line.empty()) continue;
    const std::string where = name + ":" + std::to_string(lineno);
    const long mask = detail::parse_decimal(line, where);
    if (mask < 0 || static_cast<std::uint64_t>(mask) >= (std::uint64_t{1} << n))
      throw parse_error(where + ": mask " + std::to_string(mask) +
                        " out of range for n=" + std::to_string(n));
    if (!members.empty() && members.back() >= static_cast<std::uint32_t>(mask))
      throw parse_error(where + ": masks must be strictly increasing");
    members.push_back(static_cast<std::uint32_t>(mask));
  }
  return SetFamily(static_cast<int>(n), std::move(members));
}

inline std::string format_support(const SetFamily& family) {
  std::string out = "supp " + std::to_string(family.n()) + "\n";
  for (std::uint32_t m : family.members()) {
    out += std::to_string(m);
    out.push_back('\n');
  }
  return out;
}

/// Reads either format, looking at the first line to decide; support files
/// are converted to the indicator function.
inline BooleanFunction parse_function_auto(std::istream& in,
                                           const std::string& name) {
  if (in.peek() == 's') {
    const SetFamily family = parse_support(in, name);
    std::vector<std::uint32_t> members = family.members();
    return from_support(family.n(), members);
  }
  return parse_bft(in, name);
}

inline BooleanFunction load_function(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error(path + ": cannot open file");
  return parse_function_auto(in, path);
}

inline SetFamily load_family(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error(path + ": cannot open file");
  if (in.peek() == 's') return parse_support(in, path);
  return support(parse_bft(in, path));
}

}  // namespace bfc
