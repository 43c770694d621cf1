#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qdd {
namespace csv {

// Shortest decimal string that round-trips to the same double.
std::string format(double v);

// RFC 4180 quoting, applied only when the cell needs it.
std::string escape(const std::string& cell);

void comment(std::ostream& os, const std::string& line);
void header(std::ostream& os, const std::vector<std::string>& names);
void row(std::ostream& os, const std::vector<std::string>& cells);

}  // namespace csv
}  // namespace qdd
