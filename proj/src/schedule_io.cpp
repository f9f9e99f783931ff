#include "ttp/schedule_io.hpp"

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <sstream>

#include "text_scan.hpp"

namespace ttp {

using detail::all_numeric;
using detail::next_line;
using detail::parse_long;
using detail::tokenize;

namespace {

bool is_separator(const std::vector<std::string>& tokens) {
  return !tokens.empty() &&
         std::all_of(tokens.begin(), tokens.end(), [](const std::string& t) {
           return t.find_first_not_of('-') == std::string::npos;
         });
}

void check_pairing(const Schedule& s, const Instance& inst,
                   const std::vector<int>& row_line) {
  for (int r = 0; r < s.rounds(); ++r) {
    for (int t = 0; t < s.teams(); ++t) {
      const Game g = s.game(t, r);
      const Game back = s.game(g.opponent, r);
      if (back.opponent != t) {
        throw ParseError(row_line[r],
                         "inconsistent pairing: " + inst.names[t] + " lists " +
                             inst.names[g.opponent] + " but " +
                             inst.names[g.opponent] + " lists " +
                             inst.names[back.opponent]);
      }
      if (back.venue == g.venue) {
        throw ParseError(
            row_line[r],
            "inconsistent venues: " + inst.names[t] + " and " +
                inst.names[g.opponent] + " are both " +
                (g.venue == Venue::Home ? "home" : "away"));
      }
    }
  }
}

}  // namespace

Schedule parse_schedule(std::istream& in, const Instance& inst) {
  int lineno = 0;
  std::string line;

  if (!next_line(in, line, lineno)) {
    throw ParseError(1, "empty input: expected a header row of team names");
  }
  auto header = tokenize(line);
  if (static_cast<int>(header.size()) != inst.n) {
    throw ParseError(lineno, "expected " + std::to_string(inst.n) +
                                 " columns in the header, got " +
                                 std::to_string(header.size()));
  }
  std::vector<int> column_team(inst.n, -1);
  std::vector<char> seen(inst.n, 0);
  for (int c = 0; c < inst.n; ++c) {
    const int t = inst.team_index(header[c]);
    if (t < 0) {
      throw ParseError(lineno, "unknown team label '" + header[c] + "'");
    }
    if (seen[t]) {
      throw ParseError(lineno, "duplicate header label '" + header[c] + "'");
    }
    seen[t] = 1;
    column_team[c] = t;
  }

  const int rounds = inst.rounds();
  Schedule s = Schedule::empty(inst.n);
  std::vector<int> row_line(rounds, 0);

  bool have_line = next_line(in, line, lineno);
  if (have_line && is_separator(tokenize(line))) {
    have_line = next_line(in, line, lineno);
  }

  for (int r = 0; r < rounds; ++r) {
    if (!have_line) {
      throw ParseError(lineno + 1, "expected " + std::to_string(rounds) +
                                       " schedule rows, found " +
                                       std::to_string(r));
    }
    row_line[r] = lineno;
    auto tokens = tokenize(line);
    if (static_cast<int>(tokens.size()) != inst.n) {
      throw ParseError(lineno, "expected " + std::to_string(inst.n) +
                                   " columns, got " +
                                   std::to_string(tokens.size()));
    }
    for (int c = 0; c < inst.n; ++c) {
      const std::string& tok = tokens[c];
      const bool away = !tok.empty() && tok[0] == '@';
      const std::string label = away ? tok.substr(1) : tok;
      const int opp = inst.team_index(label);
      if (opp < 0) {
        throw ParseError(lineno, "unknown team label '" + label + "'");
      }
      const int t = column_team[c];
      if (opp == t) {
        throw ParseError(lineno,
                         "team " + inst.names[t] + " listed against itself");
      }
      s.set_game(t, r, opp, away ? Venue::Away : Venue::Home);
    }
    have_line = next_line(in, line, lineno);
  }

  if (have_line) {
    auto tokens = tokenize(line);
    // A numeric row after the games is the distance footer; ignore it.
    if (!all_numeric(tokens)) {
      throw ParseError(lineno, "unexpected trailing content '" + line + "'");
    }
    if (next_line(in, line, lineno)) {
      throw ParseError(lineno, "unexpected trailing content '" + line + "'");
    }
  }

  check_pairing(s, inst, row_line);
  return s;
}

Schedule parse_schedule_text(const std::string& text, const Instance& inst) {
  std::istringstream in(text);
  return parse_schedule(in, inst);
}

std::string render_schedule(const Schedule& s, const Instance& inst) {
  size_t width = 5;
  for (const auto& name : inst.names) width = std::max(width, name.size() + 1);
  const int w = static_cast<int>(width + 1);

  std::ostringstream os;
  os << std::left;
  for (int t = 0; t < inst.n; ++t) os << std::setw(w) << inst.names[t];
  os << '\n';
  for (int t = 0; t < inst.n; ++t) os << std::setw(w) << "---";
  os << '\n';
  for (int r = 0; r < s.rounds(); ++r) {
    for (int t = 0; t < inst.n; ++t) {
      const Game g = s.game(t, r);
      const std::string tok =
          (g.venue == Venue::Away ? "@" : "") + inst.names[g.opponent];
      os << std::setw(w) << tok;
    }
    os << '\n';
  }
  const DistanceVector dist = team_distances(s, inst);
  for (int t = 0; t < inst.n; ++t) os << std::setw(w) << dist(t);
  os << dist.sum() << '\n';
  return os.str();
}

std::string write_solution(const Schedule& s) {
  std::ostringstream os;
  for (int r = 0; r < s.rounds(); ++r) {
    for (int t = 0; t < s.teams(); ++t) {
      const Game g = s.game(t, r);
      const int entry = (g.venue == Venue::Away ? -1 : 1) * (g.opponent + 1);
      if (t > 0) os << ' ';
      os << entry;
    }
    os << '\n';
  }
  return os.str();
}

Schedule parse_solution(std::istream& in, const Instance& inst) {
  int lineno = 0;
  std::string line;
  const int rounds = inst.rounds();
  Schedule s = Schedule::empty(inst.n);
  std::vector<int> row_line(rounds, 0);

  for (int r = 0; r < rounds; ++r) {
    if (!next_line(in, line, lineno)) {
      throw ParseError(lineno + 1, "expected " + std::to_string(rounds) +
                                       " rounds, found " + std::to_string(r));
    }
    row_line[r] = lineno;
    auto tokens = tokenize(line);
    if (static_cast<int>(tokens.size()) != inst.n) {
      throw ParseError(lineno, "expected " + std::to_string(inst.n) +
                                   " entries, got " +
                                   std::to_string(tokens.size()));
    }
    for (int t = 0; t < inst.n; ++t) {
      long long v = 0;
      if (!parse_long(tokens[t], v)) {
        throw ParseError(lineno, "malformed entry '" + tokens[t] + "'");
      }
      if (v == 0 || std::abs(v) > inst.n) {
        throw ParseError(lineno, "opponent index " + std::to_string(v) +
                                     " out of range 1.." +
                                     std::to_string(inst.n));
      }
      const int opp = static_cast<int>(std::abs(v)) - 1;
      if (opp == t) {
        throw ParseError(lineno, "team " + std::to_string(t + 1) +
                                     " listed against itself");
      }
      s.set_game(t, r, opp, v < 0 ? Venue::Away : Venue::Home);
    }
  }
  if (next_line(in, line, lineno)) {
    throw ParseError(lineno, "unexpected trailing content '" + line + "'");
  }

  check_pairing(s, inst, row_line);
  return s;
}

Schedule parse_solution_text(const std::string& text, const Instance& inst) {
  std::istringstream in(text);
  return parse_solution(in, inst);
}

}  // namespace ttp
