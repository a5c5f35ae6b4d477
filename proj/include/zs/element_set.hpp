#pragma once

#include <span>
#include <vector>

#include "zs/group.hpp"

namespace zs {

// A finite set of distinct group elements in canonical sorted order (the set D
// and its subsets A, B, T, Z). Construction canonicalizes each element (cyclic
// residues reduced mod m, boolean entries mod 2), sorts lexicographically and
// drops duplicates, so downstream searches are reproducible.
class ElementSet {
public:
    explicit ElementSet(GroupContext ctx) : ctx_(ctx) {}
    ElementSet(GroupContext ctx, std::vector<GroupElement> elems);

    // Convenience for rank-1 contexts.
    static ElementSet of_scalars(GroupContext ctx, std::span<const i64> values);

    const GroupContext& ctx() const { return ctx_; }
    std::span<const GroupElement> elems() const { return elems_; }
    const GroupElement& operator[](std::size_t i) const { return elems_[i]; }
    std::size_t size() const { return elems_.size(); }
    bool empty() const { return elems_.empty(); }

    bool contains(const GroupElement& e) const;
    // Index of `e` in canonical order, or -1.
    int index_of(const GroupElement& e) const;

    // Subset selected by indicator mask over canonical positions.
    ElementSet subset(std::uint64_t mask) const;
    ElementSet without(std::size_t index) const;

    // True iff every element of `other` is an element of *this (same context).
    bool contains_all(const ElementSet& other) const;

    bool operator==(const ElementSet&) const = default;

    std::string describe() const;

private:
    GroupContext ctx_;
    std::vector<GroupElement> elems_;
};

// Group sum over the set; the empty set returns the identity.
GroupElement set_sum(const ElementSet& F);
GroupElement set_sum(const GroupContext& ctx, std::span<const GroupElement> elems);

}  // namespace zs
