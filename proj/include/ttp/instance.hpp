#ifndef TTP_INSTANCE_HPP
#define TTP_INSTANCE_HPP

#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace ttp {

/// Error raised by the text parsers; carries the 1-based input line.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

/// A tournament instance: an even number of teams (>= 4) plus the
/// symmetric travel-distance matrix between their home venues.
struct Instance {
  int n = 0;
  Eigen::MatrixXi dist;            // n x n, symmetric, zero diagonal
  std::vector<std::string> names;  // n unique labels, at most 4 chars each

  int rounds() const { return 2 * n - 2; }

  /// Mean of the off-diagonal distance entries.
  double mean_distance() const;

  /// Index of a team label, or -1 when unknown.
  int team_index(const std::string& name) const;
};

/// Reads an instance: first line is the team count, followed by that many
/// rows of distances and an optional line of team labels (labels default
/// to T1..Tn). Accepts LF or CRLF line endings.
Instance parse_instance(std::istream& in);
Instance parse_instance_text(const std::string& text);

}  // namespace ttp

#endif  // TTP_INSTANCE_HPP
