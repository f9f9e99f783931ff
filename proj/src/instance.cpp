#include "ttp/instance.hpp"

#include <sstream>

#include "text_scan.hpp"

namespace ttp {

using detail::all_numeric;
using detail::next_line;
using detail::parse_long;
using detail::tokenize;

double Instance::mean_distance() const {
  if (n < 2) return 0.0;
  // The diagonal is zero, so the full sum is the off-diagonal sum.
  return static_cast<double>(dist.cast<long long>().sum()) /
         (static_cast<double>(n) * (n - 1));
}

int Instance::team_index(const std::string& name) const {
  for (int t = 0; t < n; ++t) {
    if (names[t] == name) return t;
  }
  return -1;
}

Instance parse_instance(std::istream& in) {
  int lineno = 0;
  std::string line;

  if (!next_line(in, line, lineno)) {
    throw ParseError(1, "empty input: expected a team count");
  }
  auto head = tokenize(line);
  long long n_value = 0;
  if (head.size() != 1 || !parse_long(head[0], n_value)) {
    throw ParseError(lineno, "malformed team count '" + line + "'");
  }
  if (n_value < 4) {
    throw ParseError(lineno, "team count must be at least 4, got " +
                                 std::to_string(n_value));
  }
  if (n_value % 2 != 0) {
    throw ParseError(lineno,
                     "team count must be even, got " + std::to_string(n_value));
  }

  Instance inst;
  inst.n = static_cast<int>(n_value);
  inst.dist.resize(inst.n, inst.n);
  std::vector<int> row_line(inst.n, 0);

  for (int r = 0; r < inst.n; ++r) {
    if (!next_line(in, line, lineno)) {
      throw ParseError(lineno + 1, "expected distance row " +
                                       std::to_string(r + 1) + " of " +
                                       std::to_string(inst.n));
    }
    row_line[r] = lineno;
    auto tokens = tokenize(line);
    if (static_cast<int>(tokens.size()) != inst.n) {
      throw ParseError(lineno, "expected " + std::to_string(inst.n) +
                                   " distances, got " +
                                   std::to_string(tokens.size()));
    }
    for (int c = 0; c < inst.n; ++c) {
      long long v = 0;
      if (!parse_long(tokens[c], v)) {
        throw ParseError(lineno, "malformed distance '" + tokens[c] + "'");
      }
      if (v < 0) {
        throw ParseError(lineno, "negative distance " + std::to_string(v));
      }
      inst.dist(r, c) = static_cast<int>(v);
    }
  }

  int labels_line = 0;
  if (next_line(in, line, lineno)) {
    auto tokens = tokenize(line);
    labels_line = lineno;
    if (static_cast<int>(tokens.size()) != inst.n) {
      throw ParseError(lineno, "expected " + std::to_string(inst.n) +
                                   " team labels, got " +
                                   std::to_string(tokens.size()));
    }
    inst.names = tokens;
    if (next_line(in, line, lineno)) {
      throw ParseError(lineno, "unexpected trailing content '" + line + "'");
    }
  } else {
    inst.names.reserve(inst.n);
    for (int t = 0; t < inst.n; ++t) {
      inst.names.push_back("T" + std::to_string(t + 1));
    }
  }

  for (int r = 0; r < inst.n; ++r) {
    if (inst.dist(r, r) != 0) {
      throw ParseError(row_line[r], "nonzero diagonal entry " +
                                        std::to_string(inst.dist(r, r)) +
                                        " for team " + std::to_string(r + 1));
    }
    for (int c = 0; c < r; ++c) {
      if (inst.dist(r, c) != inst.dist(c, r)) {
        throw ParseError(
            row_line[r],
            "asymmetric distance matrix: entry (" + std::to_string(r + 1) +
                "," + std::to_string(c + 1) + ") = " +
                std::to_string(inst.dist(r, c)) + " but (" +
                std::to_string(c + 1) + "," + std::to_string(r + 1) + ") = " +
                std::to_string(inst.dist(c, r)));
      }
    }
  }

  for (int t = 0; t < inst.n; ++t) {
    const auto& name = inst.names[t];
    if (name.empty() || name.size() > 4) {
      throw ParseError(labels_line,
                       "team label '" + name + "' must be 1 to 4 characters");
    }
    for (int u = 0; u < t; ++u) {
      if (inst.names[u] == name) {
        throw ParseError(labels_line, "duplicate team label '" + name + "'");
      }
    }
  }

  // Bare numbers as labels would be ambiguous next to the distance rows.
  if (labels_line != 0 && all_numeric(inst.names)) {
    throw ParseError(labels_line, "team labels must not all be numbers");
  }

  return inst;
}

Instance parse_instance_text(const std::string& text) {
  std::istringstream in(text);
  return parse_instance(in);
}

}  // namespace ttp
