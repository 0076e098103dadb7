#include "gwlp/fraction_file.hpp"

#include <charconv>
#include <fmt/format.h>
#include <fmt/ranges.h>
#include <fstream>
#include <sstream>

namespace gwlp {

namespace {

struct Line {
    std::size_t number;
    std::vector<std::string_view> fields;
};

std::vector<Line> content_lines(std::string_view text) {
    std::vector<Line> lines;
    std::size_t number = 0;
    while (!text.empty()) {
        const auto eol = text.find('\n');
        std::string_view raw = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        ++number;
        if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
        const auto first = raw.find_first_not_of(" \t");
        if (first == std::string_view::npos || raw[first] == '#') continue;
        Line line{number, {}};
        std::size_t pos = first;
        while (pos < raw.size()) {
            const auto end = raw.find_first_of(" \t", pos);
            line.fields.push_back(raw.substr(pos, end == std::string_view::npos ? raw.size() - pos : end - pos));
            if (end == std::string_view::npos) break;
            pos = raw.find_first_not_of(" \t", end);
            if (pos == std::string_view::npos) break;
        }
        lines.push_back(std::move(line));
    }
    return lines;
}

long long to_int(std::string_view field, std::size_t line) {
    long long v = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (ec != std::errc{} || ptr != field.data() + field.size())
        throw ValidationError(fmt::format("line {}: '{}' is not an integer", line, field));
    return v;
}

}  // namespace

Fraction parse_fraction_file(std::string_view text) {
    const auto lines = content_lines(text);
    if (lines.empty()) throw ValidationError("line 1: missing header 'n m'");

    const auto& header = lines[0];
    if (header.fields.size() != 2)
        throw ValidationError(fmt::format("line {}: header must be 'n m', got {} fields", header.number,
                                          header.fields.size()));
    const auto n = to_int(header.fields[0], header.number);
    const auto m = to_int(header.fields[1], header.number);
    if (n < 1 || m < 1)
        throw ValidationError(fmt::format("line {}: run and factor counts must be positive", header.number));

    if (lines.size() < 2) throw ValidationError(fmt::format("line {}: missing levels line", header.number + 1));
    const auto& level_line = lines[1];
    if (level_line.fields.size() != static_cast<std::size_t>(m))
        throw ValidationError(fmt::format("line {}: expected {} level counts, got {}", level_line.number, m,
                                          level_line.fields.size()));
    std::vector<int> levels;
    for (auto f : level_line.fields) {
        const auto s = to_int(f, level_line.number);
        if (s < 2 || s > 1'000'000)
            throw ValidationError(fmt::format("line {}: level count {} must be at least 2", level_line.number, s));
        levels.push_back(static_cast<int>(s));
    }
    DesignSpec design(levels);

    const std::size_t rows = lines.size() - 2;
    if (rows != static_cast<std::size_t>(n)) {
        const std::size_t where = rows > static_cast<std::size_t>(n) ? lines[2 + static_cast<std::size_t>(n)].number
                                                                     : lines.back().number;
        throw ValidationError(
            fmt::format("line {}: header declares {} runs but the file has {} data rows", where, n, rows));
    }
    std::vector<Point> points;
    points.reserve(rows);
    for (std::size_t r = 2; r < lines.size(); ++r) {
        const auto& line = lines[r];
        if (line.fields.size() != static_cast<std::size_t>(m))
            throw ValidationError(
                fmt::format("line {}: expected {} entries, got {}", line.number, m, line.fields.size()));
        std::vector<int> coords;
        for (std::size_t j = 0; j < line.fields.size(); ++j) {
            const auto v = to_int(line.fields[j], line.number);
            if (v < 0 || v >= levels[j])
                throw ValidationError(fmt::format("line {}: entry {} of factor {} outside [0, {})", line.number, v,
                                                  j + 1, levels[j]));
            coords.push_back(static_cast<int>(v));
        }
        points.emplace_back(std::move(coords));
    }
    return Fraction(design, points);
}

Fraction read_fraction_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError(fmt::format("cannot open '{}'", path.string()));
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_fraction_file(buffer.str());
    } catch (const ValidationError& e) {
        throw ValidationError(fmt::format("{}: {}", path.string(), e.what()));
    }
}

std::string render_fraction_file(const Fraction& fraction, const std::vector<std::string>& comments) {
    std::string out;
    for (const auto& c : comments) out += fmt::format("# {}\n", c);
    out += fmt::format("{} {}\n{}\n", fraction.size(), fraction.design().factors(),
                       fmt::join(fraction.design().levels(), " "));
    for (const auto& [point, mult] : fraction.entries())
        for (std::int64_t r = 0; r < mult; ++r) out += fmt::format("{}\n", fmt::join(point.coords(), " "));
    return out;
}

void write_fraction_file(const std::filesystem::path& path, const Fraction& fraction,
                         const std::vector<std::string>& comments) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError(fmt::format("cannot write '{}'", path.string()));
    out << render_fraction_file(fraction, comments);
    if (!out) throw ValidationError(fmt::format("failed writing '{}'", path.string()));
}

}  // namespace gwlp
