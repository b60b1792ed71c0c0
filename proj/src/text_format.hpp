#pragma once

// Shared line handling for the model, graph and DAG text formats.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "indep/error.hpp"
#include "indep/universe.hpp"

namespace indep::detail {

struct Line {
    std::size_t number;  // 1-based
    std::string_view text;  // trimmed, never empty, never a comment
};

std::string_view trim(std::string_view s);
std::vector<std::string_view> split_whitespace(std::string_view s);

/// Non-blank, non-comment lines of `text`, trimmed.
std::vector<Line> content_lines(std::string_view text);

/// Parses the mandatory `vars: ...` header from the first content line.
Universe parse_header(const std::vector<Line>& lines);

std::string header_line(const Universe& u);

[[noreturn]] void fail(const Line& line, const std::string& message);

}  // namespace indep::detail
