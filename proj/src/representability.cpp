#include "indep/representability.hpp"

#include "indep/error.hpp"

namespace indep {

namespace {

/// First triple in code order on which `independent` disagrees with M.
template <class Pred>
std::optional<Triple> first_mismatch(const IndependencyModel& m, Pred&& independent) {
    const std::size_t n = m.universe().size();
    const std::uint64_t total = disjoint_triple_count(n);
    for (std::uint64_t code = 0; code < total; ++code) {
        const Triple t = triple_from_code(code, n);
        if (independent(t) != m.contains(t)) return t;
    }
    return std::nullopt;
}

}  // namespace

bool dependent_always(const IndependencyModel& m, std::size_t alpha, std::size_t beta) {
    const std::size_t n = m.universe().size();
    if (alpha >= n || beta >= n) throw InvalidArgument("variable index out of range");
    if (alpha == beta) throw InvalidArgument("dependent_always needs two distinct variables");
    const VarSet a = VarSet::single(alpha);
    const VarSet b = VarSet::single(beta);
    bool dependent = true;
    (m.universe().all() - a - b).for_each_subset([&](VarSet c) {
        if (m.contains(Triple{a, c, b}) || m.contains(Triple{b, c, a})) dependent = false;
    });
    return dependent;
}

RepresentabilityResult<UndirectedGraph> is_graph_isomorph(const IndependencyModel& m) {
    UndirectedGraph candidate(m.universe());
    const std::size_t n = m.universe().size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (dependent_always(m, i, j)) candidate.add_edge(i, j);
        }
    }
    RepresentabilityResult<UndirectedGraph> result;
    result.candidates_scanned = 1;
    result.first_discrepancy = first_mismatch(m, [&](const Triple& t) { return separates(candidate, t); });
    if (!result.first_discrepancy) result.witness = std::move(candidate);
    return result;
}

RepresentabilityResult<Dag> is_causal(const IndependencyModel& m, std::size_t max_size) {
    RepresentabilityResult<Dag> result;
    for_each_dag(m.universe(), [&](const Dag& d) {
        ++result.candidates_scanned;
        if (first_mismatch(m, [&](const Triple& t) { return d_separates(d, t); })) return true;
        result.witness = d;
        return false;
    }, max_size);
    return result;
}

std::string_view axiom_name(SemigraphoidAxiom axiom) {
    switch (axiom) {
        case SemigraphoidAxiom::symmetry: return "symmetry";
        case SemigraphoidAxiom::decomposition: return "decomposition";
        case SemigraphoidAxiom::weak_union: return "weak union";
        case SemigraphoidAxiom::contraction: return "contraction";
    }
    return "?";
}

std::vector<SemigraphoidViolation> check_semigraphoid(const IndependencyModel& m) {
    // Every instance of an axiom is reached from its (first) antecedent,
    // which must be a member of M for the instance to be violated.
    std::vector<SemigraphoidViolation> out;
    auto require = [&](SemigraphoidAxiom axiom, std::vector<Triple> antecedents, const Triple& consequent) {
        if (!m.contains(consequent)) out.push_back({axiom, std::move(antecedents), consequent});
    };
    for (const Triple& t : m) {
        require(SemigraphoidAxiom::symmetry, {t}, t.mirrored());
    }
    for (const Triple& t : m) {
        // t = (A, C, B u D)
        t.b.for_each_subset([&](VarSet b) {
            require(SemigraphoidAxiom::decomposition, {t}, Triple{t.a, t.c, b});
        });
    }
    for (const Triple& t : m) {
        t.b.for_each_subset([&](VarSet b) {
            const VarSet d = t.b - b;
            require(SemigraphoidAxiom::weak_union, {t}, Triple{t.a, t.c | d, b});
        });
    }
    for (const Triple& t : m) {
        // t = (A, C u B, D); second antecedent (A, C, B)
        t.c.for_each_subset([&](VarSet b) {
            const Triple second{t.a, t.c - b, b};
            if (m.contains(second)) {
                require(SemigraphoidAxiom::contraction, {t, second}, Triple{t.a, t.c - b, b | t.b});
            }
        });
    }
    return out;
}

}  // namespace indep
