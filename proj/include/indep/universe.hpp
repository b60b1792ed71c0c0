#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "indep/varset.hpp"

namespace indep {

/// An ordered, finite list of distinct variable labels. Copies share the
/// underlying label storage, which is never mutated.
///
/// Labels must be nonempty and must not contain whitespace, ',', '|' or '#',
/// nor be the single character "-" (the empty-set marker in text formats).
class Universe {
public:
    explicit Universe(std::vector<std::string> names);

    /// Universe labelled "0", "1", ..., "n-1".
    static Universe numbered(std::size_t n);

    std::size_t size() const { return names_->size(); }
    const std::vector<std::string>& names() const { return *names_; }
    const std::string& name(std::size_t index) const { return (*names_)[index]; }
    VarSet all() const { return VarSet::full(size()); }

    std::optional<std::size_t> find(std::string_view label) const;
    /// Throws InvalidArgument for unknown labels.
    std::size_t index_of(std::string_view label) const;
    /// True iff every member of `s` indexes this universe.
    bool covers(VarSet s) const { return s.subset_of(all()); }

    /// The universe made of the labels in `v`, in their original order.
    /// Throws InvalidArgument if `v` is empty or not a subset.
    Universe sub_universe(VarSet v) const;

    /// "a,b" for {a, b}; "-" for the empty set.
    std::string format(VarSet s) const;
    /// Inverse of format. Accepts "" and "-" as the empty set.
    /// Throws InvalidArgument on unknown or repeated labels.
    VarSet parse_set(std::string_view text) const;

    friend bool operator==(const Universe& a, const Universe& b) {
        return a.names_ == b.names_ || *a.names_ == *b.names_;
    }

private:
    std::shared_ptr<const std::vector<std::string>> names_;
};

bool is_valid_label(std::string_view label);

/// "I(a,-,b)"-style rendering used in reports and diagnostics.
std::string format_triple(const Universe& u, const Triple& t);

}  // namespace indep
