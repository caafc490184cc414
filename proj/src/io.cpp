#include "orthocover/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace orthocover {

namespace {

// Non-comment, non-blank lines split into whitespace-separated tokens.
class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    bool next(std::vector<std::string>& tokens) {
        std::string line;
        while (std::getline(in_, line)) {
            ++number_;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            const auto first = line.find_first_not_of(" \t");
            if (first == std::string::npos || line[first] == '#') continue;
            tokens.clear();
            std::istringstream ss(line);
            for (std::string t; ss >> t;) tokens.push_back(t);
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw Error(ErrorCode::ParseError, "line " + std::to_string(number_) + ": " + what);
    }

    std::int64_t integer(const std::string& token) const {
        std::int64_t v = 0;
        const char* begin = token.data();
        const char* end = begin + token.size();
        if (!token.empty() && token[0] == '+') ++begin;
        const auto [ptr, ec] = std::from_chars(begin, end, v);
        if (ec == std::errc::result_out_of_range) fail("integer out of 64-bit range: " + token);
        if (ec != std::errc() || ptr != end) fail("expected an integer, got '" + token + "'");
        return v;
    }

private:
    std::istream& in_;
    std::size_t number_ = 0;
};

std::size_t read_count(LineReader& r, const char* what) {
    std::vector<std::string> tokens;
    if (!r.next(tokens)) throw Error(ErrorCode::ParseError, std::string("missing ") + what + " count");
    if (tokens.size() != 1) r.fail(std::string("expected a single ") + what + " count");
    const std::int64_t n = r.integer(tokens[0]);
    if (n < 0) r.fail("negative count");
    return static_cast<std::size_t>(n);
}

void expect_end(LineReader& r) {
    std::vector<std::string> tokens;
    if (r.next(tokens)) r.fail("unexpected data after the last record");
}

std::ifstream open(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path.string());
    return in;
}

}  // namespace

std::vector<Point> parse_polygon_text(std::istream& in) {
    LineReader r(in);
    const std::size_t n = read_count(r, "vertex");
    std::vector<Point> pts;
    std::vector<std::string> tokens;
    for (std::size_t i = 0; i < n; ++i) {
        if (!r.next(tokens)) throw Error(ErrorCode::ParseError, "expected " + std::to_string(n) + " vertices, got " + std::to_string(i));
        if (tokens.size() != 2) r.fail("expected 'x y'");
        pts.push_back({r.integer(tokens[0]), r.integer(tokens[1])});
    }
    expect_end(r);
    return pts;
}

Polygon read_polygon(std::istream& in, bool fix) {
    const std::vector<Point> pts = parse_polygon_text(in);
    return fix ? validate_fixed(pts) : validate(pts);
}

Polygon read_polygon_file(const std::filesystem::path& path, bool fix) {
    std::ifstream in = open(path);
    return read_polygon(in, fix);
}

void write_polygon(std::ostream& out, const Polygon& p) {
    out << p.size() << '\n';
    for (const Point& v : p.vertices()) out << v.x << ' ' << v.y << '\n';
}

Cover read_cover(std::istream& in) {
    LineReader r(in);
    const std::size_t m = read_count(r, "pack");
    Cover c;
    std::vector<std::string> tokens;
    for (std::size_t i = 0; i < m; ++i) {
        if (!r.next(tokens)) throw Error(ErrorCode::ParseError, "expected " + std::to_string(m) + " packs, got " + std::to_string(i));
        if (tokens.size() != 5) r.fail("expected 'x y t eta H|V'");
        const Point anchor{r.integer(tokens[0]), r.integer(tokens[1])};
        const std::int64_t t = r.integer(tokens[2]);
        const std::int64_t eta = r.integer(tokens[3]);
        if (t < 1 || eta < 1) r.fail("width and strength must be positive");
        Orientation o;
        if (tokens[4] == "H") {
            o = Orientation::Horizontal;
        } else if (tokens[4] == "V") {
            o = Orientation::Vertical;
        } else {
            r.fail("orientation must be H or V");
        }
        try {
            c.add(make_pack(anchor, t, eta, o));
        } catch (const Error& e) {
            r.fail(e.what());
        }
    }
    expect_end(r);
    return c;
}

Cover read_cover_file(const std::filesystem::path& path) {
    std::ifstream in = open(path);
    return read_cover(in);
}

void write_cover(std::ostream& out, const Cover& c) {
    out << c.size() << '\n';
    for (const RecPack& r : c.packs()) {
        out << r.anchor.x << ' ' << r.anchor.y << ' ' << r.t << ' ' << r.eta << ' '
            << (r.orientation == Orientation::Horizontal ? 'H' : 'V') << '\n';
    }
}

}  // namespace orthocover
