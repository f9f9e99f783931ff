#ifndef TTP_SCHEDULE_IO_HPP
#define TTP_SCHEDULE_IO_HPP

#include <istream>
#include <string>

#include "ttp/instance.hpp"
#include "ttp/schedule.hpp"

namespace ttp {

/// Reads the human tabular format: a header row of team names, an
/// optional dashed separator, exactly 2n-2 rows of opponent tokens
/// ("@" prefix marks an away game) and an optional numeric footer.
/// Requires mutual pairing consistency but not the round-robin property,
/// so damaged schedules can be loaded for diagnosis.
Schedule parse_schedule(std::istream& in, const Instance& inst);
Schedule parse_schedule_text(const std::string& text, const Instance& inst);

/// Renders the tabular format with a footer of per-team travel distances
/// and the grand total. parse_schedule(render_schedule(s)) == s.
std::string render_schedule(const Schedule& s, const Instance& inst);

/// Machine format: one row per round of signed 1-based opponent indices,
/// negative when the column's team plays away.
std::string write_solution(const Schedule& s);
Schedule parse_solution(std::istream& in, const Instance& inst);
Schedule parse_solution_text(const std::string& text, const Instance& inst);

}  // namespace ttp

#endif  // TTP_SCHEDULE_IO_HPP
