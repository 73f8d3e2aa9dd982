#include "fracbvp/problem_config.hpp"

#include "fracbvp/errors.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <string>

namespace fracbvp {
namespace {

std::string trim(const std::string& s)
{
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
        ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
        --e;
    return s.substr(b, e - b);
}

std::string strip_quotes(const std::string& s)
{
    if (s.size() >= 2 && s.front() == '"' && s.back() == '"')
        return s.substr(1, s.size() - 2);
    return s;
}

struct RawTermEntry {
    std::optional<std::string> coefficient;
    std::optional<double> order;
    int exponent = 1;
    int line = 0;
};

struct RawBcEntry {
    std::optional<std::string> location;
    std::optional<int> order;
    std::optional<double> value;
    int line = 0;
};

} // namespace

ProblemSpec load_problem_config(const std::filesystem::path& path)
{
    std::ifstream in(path);
    const std::string fname = path.string();
    if (!in)
        throw ConfigError(fname + ": cannot open");

    enum class Section { None, Domain, Term, Bc };
    Section section = Section::None;

    double a = 0.0, b = 1.0;
    std::optional<std::string> rhs_text, exact_text;
    std::vector<RawTermEntry> raw_terms;
    std::vector<RawBcEntry> raw_bcs;

    auto parse_number = [&](const std::string& text, int line) {
        const std::string t = strip_quotes(text);
        char* end = nullptr;
        const double v = std::strtod(t.c_str(), &end);
        if (end == t.c_str() || *end != '\0')
            throw ConfigError(fname, line, "expected a number, got '" + text + "'");
        return v;
    };

    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        line = trim(line);
        if (line.empty())
            continue;

        if (line == "[[term]]") {
            raw_terms.push_back({});
            raw_terms.back().line = lineno;
            section = Section::Term;
            continue;
        }
        if (line == "[[bc]]") {
            raw_bcs.push_back({});
            raw_bcs.back().line = lineno;
            section = Section::Bc;
            continue;
        }
        if (line == "[domain]") {
            section = Section::Domain;
            continue;
        }
        if (line.front() == '[')
            throw ConfigError(fname, lineno, "unknown section " + line);

        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(fname, lineno, "expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (value.empty())
            throw ConfigError(fname, lineno, "empty value for '" + key + "'");

        // rhs/exact are top-level regardless of the current section
        if (key == "rhs") {
            rhs_text = strip_quotes(value);
            continue;
        }
        if (key == "exact") {
            exact_text = strip_quotes(value);
            continue;
        }

        switch (section) {
        case Section::Domain:
            if (key == "a")
                a = parse_number(value, lineno);
            else if (key == "b")
                b = parse_number(value, lineno);
            else
                throw ConfigError(fname, lineno, "unknown [domain] key '" + key + "'");
            break;
        case Section::Term:
            if (key == "coefficient")
                raw_terms.back().coefficient = strip_quotes(value);
            else if (key == "order")
                raw_terms.back().order = parse_number(value, lineno);
            else if (key == "exponent")
                raw_terms.back().exponent = static_cast<int>(parse_number(value, lineno));
            else
                throw ConfigError(fname, lineno, "unknown [[term]] key '" + key + "'");
            break;
        case Section::Bc:
            if (key == "location") {
                const std::string loc = strip_quotes(value);
                if (loc != "left" && loc != "right")
                    throw ConfigError(fname, lineno, "location must be left or right");
                raw_bcs.back().location = loc;
            } else if (key == "order")
                raw_bcs.back().order = static_cast<int>(parse_number(value, lineno));
            else if (key == "value")
                raw_bcs.back().value = parse_number(value, lineno);
            else
                throw ConfigError(fname, lineno, "unknown [[bc]] key '" + key + "'");
            break;
        case Section::None:
            throw ConfigError(fname, lineno, "key '" + key + "' outside any section");
        }
    }

    ProblemSpec spec;
    spec.a = a;
    spec.b = b;
    if (!rhs_text)
        throw ConfigError(fname + ": missing rhs");

    auto parse_expr_field = [&](const std::string& text, const std::string& field) {
        try {
            return parse(text);
        } catch (const ParseError& err) {
            throw ConfigError(fname + ": in " + field + ": " + err.what());
        }
    };

    spec.rhs = parse_expr_field(*rhs_text, "rhs");
    if (exact_text)
        spec.exact = parse_expr_field(*exact_text, "exact");

    for (const RawTermEntry& rt : raw_terms) {
        if (!rt.coefficient)
            throw ConfigError(fname, rt.line, "[[term]] missing coefficient");
        if (!rt.order)
            throw ConfigError(fname, rt.line, "[[term]] missing order");
        spec.terms.push_back({parse_expr_field(*rt.coefficient, "term coefficient"),
                              *rt.order, rt.exponent});
    }
    for (const RawBcEntry& rb : raw_bcs) {
        if (!rb.location)
            throw ConfigError(fname, rb.line, "[[bc]] missing location");
        if (!rb.order)
            throw ConfigError(fname, rb.line, "[[bc]] missing order");
        if (!rb.value)
            throw ConfigError(fname, rb.line, "[[bc]] missing value");
        spec.bcs.push_back({*rb.location == "left" ? BoundarySide::Left
                                                   : BoundarySide::Right,
                            *rb.order, *rb.value});
    }

    try {
        validate(spec);
    } catch (const DomainError& err) {
        throw ConfigError(fname + ": " + err.what());
    }
    return spec;
}

} // namespace fracbvp
