#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>

namespace indep {

/// Upper bound on the number of variables in a universe. Variable sets are
/// bitmasks, and 4^n triples must stay addressable by a 32-bit code.
inline constexpr std::size_t kMaxUniverseSize = 16;

/// A subset of a universe, stored as a bitmask over variable indices.
/// The set does not remember its universe; callers that mix sets from
/// different universes get meaningless results.
class VarSet {
public:
    using Bits = std::uint32_t;

    constexpr VarSet() = default;
    constexpr explicit VarSet(Bits bits) : bits_(bits) {}

    static constexpr VarSet single(std::size_t index) { return VarSet(Bits{1} << index); }
    /// {0, ..., n-1}
    static constexpr VarSet full(std::size_t n) {
        return VarSet(n >= 32 ? ~Bits{0} : ((Bits{1} << n) - 1));
    }

    constexpr Bits bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
    constexpr bool contains(std::size_t index) const { return (bits_ >> index) & 1U; }
    constexpr bool subset_of(VarSet other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool disjoint(VarSet other) const { return (bits_ & other.bits_) == 0; }
    /// Index of the lowest member; the set must be nonempty.
    constexpr std::size_t lowest() const { return static_cast<std::size_t>(std::countr_zero(bits_)); }

    constexpr VarSet with(std::size_t index) const { return VarSet(bits_ | (Bits{1} << index)); }
    constexpr VarSet without(std::size_t index) const { return VarSet(bits_ & ~(Bits{1} << index)); }
    /// Complement relative to a universe of size n.
    constexpr VarSet complement(std::size_t n) const { return VarSet(~bits_ & full(n).bits_); }

    friend constexpr VarSet operator|(VarSet a, VarSet b) { return VarSet(a.bits_ | b.bits_); }
    friend constexpr VarSet operator&(VarSet a, VarSet b) { return VarSet(a.bits_ & b.bits_); }
    friend constexpr VarSet operator-(VarSet a, VarSet b) { return VarSet(a.bits_ & ~b.bits_); }
    VarSet& operator|=(VarSet o) { bits_ |= o.bits_; return *this; }
    VarSet& operator&=(VarSet o) { bits_ &= o.bits_; return *this; }

    friend constexpr bool operator==(VarSet, VarSet) = default;
    friend constexpr auto operator<=>(VarSet, VarSet) = default;

    /// Calls f(index) for each member in increasing order.
    template <class F>
    void for_each(F&& f) const {
        for (Bits rest = bits_; rest != 0; rest &= rest - 1) {
            f(static_cast<std::size_t>(std::countr_zero(rest)));
        }
    }

    /// Calls f(subset) for every subset of *this, including the empty set
    /// and *this itself. Order: decreasing bitmask, ending with the empty set.
    template <class F>
    void for_each_subset(F&& f) const {
        Bits sub = bits_;
        while (true) {
            f(VarSet(sub));
            if (sub == 0) break;
            sub = (sub - 1) & bits_;
        }
    }

private:
    Bits bits_ = 0;
};

/// Packs the members of `x` that lie in `mask` into consecutive low bits,
/// preserving order (a software PEXT). Used to re-index a subset of U as a
/// set over the sub-universe induced by `mask`.
constexpr VarSet compress(VarSet x, VarSet mask) {
    VarSet::Bits out = 0;
    std::size_t pos = 0;
    for (VarSet::Bits m = mask.bits(); m != 0; m &= m - 1, ++pos) {
        const VarSet::Bits low = m & (~m + 1);
        if (x.bits() & low) out |= VarSet::Bits{1} << pos;
    }
    return VarSet(out);
}

/// Inverse of compress: spreads the low bits of `x` onto the members of `mask`.
constexpr VarSet expand(VarSet x, VarSet mask) {
    VarSet::Bits out = 0;
    std::size_t pos = 0;
    for (VarSet::Bits m = mask.bits(); m != 0; m &= m - 1, ++pos) {
        if ((x.bits() >> pos) & 1U) out |= m & (~m + 1);
    }
    return VarSet(out);
}

/// One independence statement I(A, C, B): A is independent of B given C.
/// Field order follows the statement, so the conditioning set sits in the
/// middle.
struct Triple {
    VarSet a;
    VarSet c;
    VarSet b;

    constexpr bool pairwise_disjoint() const {
        return a.disjoint(b) && a.disjoint(c) && b.disjoint(c);
    }
    constexpr VarSet support() const { return a | b | c; }
    constexpr Triple mirrored() const { return Triple{b, c, a}; }

    friend constexpr bool operator==(const Triple&, const Triple&) = default;
    friend constexpr auto operator<=>(const Triple&, const Triple&) = default;
};

}  // namespace indep
