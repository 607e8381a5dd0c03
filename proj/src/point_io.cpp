#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "dilation/geometry.hpp"

namespace dilation {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

}  // namespace

PointSet read_point_csv(std::istream& in) {
    std::vector<Point> pts;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string t = trim(line);
        if (t.empty() || t.front() == '#') continue;
        const auto comma = t.find(',');
        if (comma == std::string::npos) {
            throw std::invalid_argument("line " + std::to_string(line_no) + ": expected `x,y`");
        }
        try {
            std::size_t used_x = 0, used_y = 0;
            const std::string xs = trim(t.substr(0, comma));
            const std::string ys = trim(t.substr(comma + 1));
            const double x = std::stod(xs, &used_x);
            const double y = std::stod(ys, &used_y);
            if (used_x != xs.size() || used_y != ys.size()) throw std::invalid_argument("trailing characters");
            pts.push_back({x, y});
        } catch (const std::exception&) {
            throw std::invalid_argument("line " + std::to_string(line_no) + ": cannot parse `" + t + "`");
        }
    }
    return PointSet(std::move(pts));
}

PointSet read_point_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_point_csv(in);
}

void write_point_csv(std::ostream& out, const PointSet& points) {
    std::ostringstream buf;
    buf << std::setprecision(17);
    for (const Point& p : points) buf << p.x << ',' << p.y << '\n';
    out << buf.str();
}

}  // namespace dilation
