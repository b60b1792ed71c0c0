#include "indep/universe.hpp"

#include <algorithm>
#include <unordered_set>

#include "indep/error.hpp"

namespace indep {

bool is_valid_label(std::string_view label) {
    if (label.empty() || label == "-") return false;
    return std::none_of(label.begin(), label.end(), [](char ch) {
        return ch == ',' || ch == '|' || ch == '#' || ch == ' ' || ch == '\t' || ch == '\n' ||
               ch == '\r' || ch == '\v' || ch == '\f';
    });
}

Universe::Universe(std::vector<std::string> names) {
    if (names.empty()) throw InvalidArgument("universe must contain at least one variable");
    if (names.size() > kMaxUniverseSize) {
        throw InvalidArgument("universe has " + std::to_string(names.size()) +
                              " variables; the limit is " + std::to_string(kMaxUniverseSize));
    }
    std::unordered_set<std::string_view> seen;
    for (const auto& name : names) {
        if (!is_valid_label(name)) throw InvalidArgument("invalid variable label '" + name + "'");
        if (!seen.insert(name).second) throw InvalidArgument("duplicate variable label '" + name + "'");
    }
    names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

Universe Universe::numbered(std::size_t n) {
    std::vector<std::string> names;
    names.reserve(n);
    for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
    return Universe(std::move(names));
}

std::optional<std::size_t> Universe::find(std::string_view label) const {
    const auto& ns = *names_;
    for (std::size_t i = 0; i < ns.size(); ++i) {
        if (ns[i] == label) return i;
    }
    return std::nullopt;
}

std::size_t Universe::index_of(std::string_view label) const {
    if (auto i = find(label)) return *i;
    throw InvalidArgument("unknown variable '" + std::string(label) + "'");
}

Universe Universe::sub_universe(VarSet v) const {
    if (v.empty()) throw InvalidArgument("sub-universe must be nonempty");
    if (!covers(v)) throw InvalidArgument("sub-universe is not a subset of the universe");
    std::vector<std::string> names;
    v.for_each([&](std::size_t i) { names.push_back(name(i)); });
    return Universe(std::move(names));
}

std::string Universe::format(VarSet s) const {
    if (s.empty()) return "-";
    std::string out;
    s.for_each([&](std::size_t i) {
        if (!out.empty()) out += ',';
        out += name(i);
    });
    return out;
}

VarSet Universe::parse_set(std::string_view text) const {
    if (text.empty() || text == "-") return VarSet{};
    VarSet out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        const auto label = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
        const std::size_t i = index_of(label);
        if (out.contains(i)) throw InvalidArgument("variable '" + std::string(label) + "' repeated in set");
        out = out.with(i);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

std::string format_triple(const Universe& u, const Triple& t) {
    return "I(" + u.format(t.a) + "," + u.format(t.c) + "," + u.format(t.b) + ")";
}

}  // namespace indep
