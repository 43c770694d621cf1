#include "qdd/csv.hpp"

#include <charconv>

namespace qdd {
namespace csv {

std::string format(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc{}) return "nan";
    return std::string(buf, ptr);
}

std::string escape(const std::string& cell) {
    if (cell.find_first_of(",\"\n\r") == std::string::npos) return cell;
    std::string out = "\"";
    for (char ch : cell) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

void comment(std::ostream& os, const std::string& line) { os << "# " << line << '\n'; }

void header(std::ostream& os, const std::vector<std::string>& names) {
    os << "# ";
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i) os << ',';
        os << escape(names[i]);
    }
    os << '\n';
}

void row(std::ostream& os, const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) os << ',';
        os << escape(cells[i]);
    }
    os << '\n';
}

}  // namespace csv
}  // namespace qdd
