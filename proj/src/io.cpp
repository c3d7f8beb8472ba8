#include "sumgrowth/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "sumgrowth/error.hpp"

namespace sumgrowth {

namespace {

/// Content lines with comments stripped, paired with their 1-based line number.
std::vector<std::pair<std::size_t, std::string>> content_lines(std::istream& in) {
    std::vector<std::pair<std::size_t, std::string>> out;
    std::string line;
    std::size_t no = 0;
    while (std::getline(in, line)) {
        ++no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        out.emplace_back(no, line);
    }
    return out;
}

std::vector<Integer> integers(const std::pair<std::size_t, std::string>& line) {
    std::istringstream ss(line.second);
    std::vector<Integer> out;
    std::string tok;
    while (ss >> tok) {
        Integer v;
        const std::size_t start = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
        bool ok = tok.size() > start && tok.find_first_not_of("0123456789", start) == std::string::npos;
        if (ok) ok = v.set_str(tok[0] == '+' ? tok.substr(1) : tok, 10) == 0;
        require(ok, "line " + std::to_string(line.first) + ": '" + tok + "' is not an integer");
        out.push_back(v);
    }
    return out;
}

std::ifstream open(const std::string& path) {
    std::ifstream in(path);
    require(static_cast<bool>(in), "cannot open '" + path + "'");
    return in;
}

}  // namespace

PointSet read_point_set(std::istream& in) {
    std::vector<IntVector> pts;
    std::size_t d = 0;
    for (const auto& line : content_lines(in)) {
        auto p = integers(line);
        if (d == 0) d = p.size();
        require(p.size() == d, "line " + std::to_string(line.first) + ": expected " + std::to_string(d) + " coordinates");
        pts.push_back(std::move(p));
    }
    require(d > 0, "point set file contains no points");
    return PointSet::from_points(d, pts);
}

PointSet read_point_set_file(const std::string& path) {
    auto in = open(path);
    return read_point_set(in);
}

void write_point_set(std::ostream& out, const PointSet& a) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t k = 0; k < a.dimension(); ++k) {
            if (k) out << ' ';
            out << a.coord(i, k);
        }
        out << '\n';
    }
}

LatticeOperator read_matrix(std::istream& in) {
    std::vector<std::vector<Integer>> rows;
    for (const auto& line : content_lines(in)) rows.push_back(integers(line));
    require(!rows.empty(), "matrix file is empty");
    for (const auto& r : rows) require(r.size() == rows.size(), "matrix must be square");
    return LatticeOperator::from_rows(rows);
}

LatticeOperator read_matrix_file(const std::string& path) {
    auto in = open(path);
    return read_matrix(in);
}

Gap read_gap(std::istream& in) {
    auto lines = content_lines(in);
    require(!lines.empty(), "progression file is empty");
    std::istringstream head(lines[0].second);
    std::string kind, extra;
    head >> kind;
    require(!(head >> extra), "progression header must be a single word");
    require(kind == "centered" || kind == "offset", "progression header must be 'centered' or 'offset'");
    std::size_t next = 1;
    IntVector v0;
    if (kind == "offset") {
        require(lines.size() > 1, "offset progression needs a v0 line");
        v0 = integers(lines[1]);
        require(!v0.empty(), "v0 must have at least one coordinate");
        next = 2;
    }
    std::vector<IntVector> gens;
    std::vector<std::int64_t> bounds;
    for (; next < lines.size(); ++next) {
        auto row = integers(lines[next]);
        require(row.size() >= 2, "line " + std::to_string(lines[next].first) + ": expected generator coordinates and a bound");
        require(row.back().fits_slong_p() && row.back() >= 0,
                "line " + std::to_string(lines[next].first) + ": bound must be a nonnegative 64-bit integer");
        bounds.push_back(row.back().get_si());
        row.pop_back();
        gens.push_back(std::move(row));
    }
    if (kind == "offset") return Gap::offset_form(std::move(v0), std::move(gens), std::move(bounds));
    require(!gens.empty(), "centered progression needs at least one generator");
    const std::size_t d = gens[0].size();
    return Gap::centered_form(d, std::move(gens), std::move(bounds));
}

Gap read_gap_file(const std::string& path) {
    auto in = open(path);
    return read_gap(in);
}

}  // namespace sumgrowth
