#include "text_format.hpp"

namespace indep::detail {

namespace {
bool is_space(char ch) {
    return ch == ' ' || ch == '\t' || ch == '\r' || ch == '\n' || ch == '\v' || ch == '\f';
}
}  // namespace

std::string_view trim(std::string_view s) {
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_whitespace(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && is_space(s[i])) ++i;
        const std::size_t start = i;
        while (i < s.size() && !is_space(s[i])) ++i;
        if (i > start) out.push_back(s.substr(start, i - start));
    }
    return out;
}

std::vector<Line> content_lines(std::string_view text) {
    std::vector<Line> lines;
    std::size_t number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t nl = text.find('\n', start);
        const std::size_t end = nl == std::string_view::npos ? text.size() : nl;
        ++number;
        const auto line = trim(text.substr(start, end - start));
        if (!line.empty() && line.front() != '#') lines.push_back({number, line});
        if (nl == std::string_view::npos) break;
        start = nl + 1;
    }
    return lines;
}

void fail(const Line& line, const std::string& message) {
    throw ParseError("line " + std::to_string(line.number) + ": " + message, line.number);
}

Universe parse_header(const std::vector<Line>& lines) {
    if (lines.empty()) throw ParseError("missing 'vars:' header", 0);
    const Line& first = lines.front();
    constexpr std::string_view kPrefix = "vars:";
    if (first.text.substr(0, kPrefix.size()) != kPrefix) fail(first, "expected 'vars:' header");
    std::vector<std::string> names;
    for (auto tok : split_whitespace(first.text.substr(kPrefix.size()))) names.emplace_back(tok);
    try {
        return Universe(std::move(names));
    } catch (const InvalidArgument& e) {
        fail(first, e.what());
    }
}

std::string header_line(const Universe& u) {
    std::string out = "vars:";
    for (const auto& name : u.names()) {
        out += ' ';
        out += name;
    }
    out += '\n';
    return out;
}

}  // namespace indep::detail
