#include "indep/model.hpp"

#include "indep/error.hpp"
#include "text_format.hpp"

namespace indep {

namespace {

void check_member(const Universe& u, const Triple& t) {
    if (!t.pairwise_disjoint()) {
        throw InvalidArgument("triple " + std::to_string(t.a.bits()) + "/" + std::to_string(t.c.bits()) +
                              "/" + std::to_string(t.b.bits()) + " is not pairwise disjoint");
    }
    if (!u.covers(t.support())) throw InvalidArgument("triple mentions variables outside the universe");
}

}  // namespace

IndependencyModel::IndependencyModel(Universe universe, std::span<const Triple> triples)
    : universe_(std::move(universe)) {
    for (const auto& t : triples) insert(t);
}

bool IndependencyModel::insert(const Triple& t) {
    check_member(universe_, t);
    return triples_.insert(t).second;
}

Triple triple_from_code(std::uint64_t code, std::size_t n) {
    Triple t;
    for (std::size_t i = 0; i < n; ++i) {
        switch ((code >> (2 * i)) & 3U) {
            case 1: t.a = t.a.with(i); break;
            case 2: t.c = t.c.with(i); break;
            case 3: t.b = t.b.with(i); break;
            default: break;
        }
    }
    return t;
}

std::uint64_t code_of_triple(const Triple& t) {
    std::uint64_t code = 0;
    t.a.for_each([&](std::size_t i) { code |= std::uint64_t{1} << (2 * i); });
    t.c.for_each([&](std::size_t i) { code |= std::uint64_t{2} << (2 * i); });
    t.b.for_each([&](std::size_t i) { code |= std::uint64_t{3} << (2 * i); });
    return code;
}

std::vector<Triple> enumerate_disjoint_triples(const Universe& u) {
    std::vector<Triple> out;
    out.reserve(disjoint_triple_count(u.size()));
    for_each_disjoint_triple(u.size(), [&](const Triple& t) { out.push_back(t); });
    return out;
}

IndependencyModel restrict(const IndependencyModel& m, VarSet v) {
    IndependencyModel out(m.universe().sub_universe(v));
    for (const auto& t : m) {
        if (t.support().subset_of(v)) {
            out.insert(Triple{compress(t.a, v), compress(t.c, v), compress(t.b, v)});
        }
    }
    return out;
}

bool model_equals(const IndependencyModel& m1, const IndependencyModel& m2) {
    if (!(m1.universe() == m2.universe())) throw InvalidArgument("models are defined on different universes");
    return m1.triples() == m2.triples();
}

bool is_symmetric(const IndependencyModel& m) {
    for (const auto& t : m) {
        if (!m.contains(t.mirrored())) return false;
    }
    return true;
}

IndependencyModel full_model(const Universe& u) {
    IndependencyModel m(u);
    for_each_disjoint_triple(u.size(), [&](const Triple& t) { m.insert(t); });
    return m;
}

Triple parse_triple(const Universe& u, std::string_view text) {
    VarSet parts[3];
    std::size_t count = 0;
    std::size_t start = 0;
    while (true) {
        const std::size_t bar = text.find('|', start);
        const auto field = detail::trim(text.substr(start, bar == text.npos ? text.npos : bar - start));
        if (count == 3) throw InvalidArgument("too many '|' separators");
        if (field.empty()) throw InvalidArgument("empty set field; use '-' for the empty set");
        parts[count++] = u.parse_set(field);
        if (bar == text.npos) break;
        start = bar + 1;
    }
    if (count != 3) throw InvalidArgument("expected three sets separated by '|'");
    const Triple t{parts[0], parts[1], parts[2]};
    if (!t.pairwise_disjoint()) throw InvalidArgument("sets are not pairwise disjoint");
    return t;
}

IndependencyModel parse_model(std::string_view text) {
    const auto lines = detail::content_lines(text);
    IndependencyModel m(detail::parse_header(lines));
    const Universe& u = m.universe();
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& line = lines[i];
        auto body = line.text;
        if (body.size() < 2 || body[0] != 'I' || (body[1] != ' ' && body[1] != '\t')) {
            detail::fail(line, "expected 'I <set> | <set> | <set>'");
        }
        body.remove_prefix(1);
        Triple t;
        try {
            t = parse_triple(u, body);
        } catch (const InvalidArgument& e) {
            detail::fail(line, e.what());
        }
        if (!m.insert(t)) detail::fail(line, "duplicate triple");
    }
    return m;
}

std::string print_model(const IndependencyModel& m) {
    const Universe& u = m.universe();
    std::string out = detail::header_line(u);
    for (const auto& t : m) {
        out += "I " + u.format(t.a) + " | " + u.format(t.c) + " | " + u.format(t.b) + "\n";
    }
    return out;
}

}  // namespace indep
