// Internal line/token helpers shared by the text parsers.
#ifndef TTP_TEXT_SCAN_HPP
#define TTP_TEXT_SCAN_HPP

#include <cerrno>
#include <cstdlib>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

namespace ttp::detail {

inline std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

inline bool parse_long(const std::string& tok, long long& out) {
  const char* begin = tok.c_str();
  char* end = nullptr;
  errno = 0;
  out = std::strtoll(begin, &end, 10);
  return end == begin + tok.size() && errno == 0;
}

// Next non-blank line with any trailing CR stripped; false at end of input.
inline bool next_line(std::istream& in, std::string& line, int& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") != std::string::npos) return true;
  }
  return false;
}

inline bool all_numeric(const std::vector<std::string>& tokens) {
  long long ignored = 0;
  for (const auto& t : tokens) {
    if (!parse_long(t, ignored)) return false;
  }
  return !tokens.empty();
}

}  // namespace ttp::detail

#endif  // TTP_TEXT_SCAN_HPP
