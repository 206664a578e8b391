#include "gwt/parse.hpp"

#include <cctype>
#include <stdexcept>

namespace gwt {

namespace {

int parse_int(const std::string& s, const std::string& what) {
    if (s.empty()) throw std::invalid_argument("expected an integer for " + what);
    std::size_t pos = 0;
    int v = 0;
    try {
        v = std::stoi(s, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse integer '" + s + "' for " + what);
    }
    if (pos != s.size())
        throw std::invalid_argument("trailing characters in integer '" + s + "' for " + what);
    return v;
}

std::string strip(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

SurfaceClass parse_class(const std::string& s) {
    if (s == "1" || s == "H^0") return SurfaceClass::unit();
    if (s == "H" || s == "H^1") return SurfaceClass::hyperplane();
    if (s == "H^2") return SurfaceClass::point_class();
    throw std::invalid_argument("unknown cohomology class '" + s + "' (use 1, H or H^2)");
}

} // namespace

BracketRequest parse_bracket(const std::vector<std::string>& tokens) {
    BracketRequest req;
    for (const std::string& raw : tokens) {
        std::string tok = strip(raw);
        if (tok.empty()) continue;
        if (tok.rfind("d=", 0) == 0) {
            if (req.degree >= 0) throw std::invalid_argument("duplicate degree token '" + tok + "'");
            int d = parse_int(tok.substr(2), "degree");
            if (d < 0) throw std::invalid_argument("degree must be non-negative");
            req.degree = d;
            continue;
        }
        if (tok.rfind("tau_", 0) != 0)
            throw std::invalid_argument("unknown token '" + tok + "' (expected d=<int> or tau_a(C))");
        std::size_t open = tok.find('(');
        std::size_t close = tok.find(')');
        if (open == std::string::npos || close == std::string::npos || close < open)
            throw std::invalid_argument("malformed insertion '" + tok + "'");
        int a = parse_int(tok.substr(4, open - 4), "psi power");
        if (a < 0) throw std::invalid_argument("psi power must be non-negative");
        SurfaceClass cls = parse_class(tok.substr(open + 1, close - open - 1));
        int repeat = 1;
        std::string rest = tok.substr(close + 1);
        if (!rest.empty()) {
            if (rest[0] != '^')
                throw std::invalid_argument("malformed insertion '" + tok + "'");
            repeat = parse_int(rest.substr(1), "insertion exponent");
            if (repeat < 1) throw std::invalid_argument("insertion exponent must be >= 1");
        }
        for (int r = 0; r < repeat; ++r) req.insertions.push_back(Insertion{a, cls});
    }
    if (req.degree < 0) throw std::invalid_argument("missing degree token d=<int>");
    if (req.insertions.empty()) throw std::invalid_argument("no insertions given");
    return req;
}

namespace {

TangencyCondition parse_condition(const std::string& raw) {
    std::string s = strip(raw);
    int m = 1;
    std::size_t star = s.find('*');
    if (star != std::string::npos) {
        m = parse_int(strip(s.substr(0, star)), "tangency order");
        if (m < 1) throw std::invalid_argument("tangency order must be >= 1");
        s = strip(s.substr(star + 1));
    }
    if (s == "point") return TangencyCondition{m, PointShape{}};
    if (s.rfind("div(", 0) == 0 && s.back() == ')') {
        int e = parse_int(strip(s.substr(4, s.size() - 5)), "divisor degree");
        if (e < 1) throw std::invalid_argument("divisor degree must be >= 1");
        return TangencyCondition{m, DivisorShape{e}};
    }
    throw std::invalid_argument("unknown condition '" + raw + "' (use point or div(e))");
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = s.find(sep, start);
        if (pos == std::string::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

} // namespace

std::vector<std::vector<TangencyCondition>> parse_conditions(const std::string& text) {
    std::vector<std::vector<TangencyCondition>> out;
    for (const std::string& point : split(text, ',')) {
        if (strip(point).empty())
            throw std::invalid_argument("empty marked-point entry in condition list");
        std::vector<TangencyCondition> conds;
        for (const std::string& c : split(point, '&')) conds.push_back(parse_condition(c));
        out.push_back(std::move(conds));
    }
    return out;
}

} // namespace gwt
