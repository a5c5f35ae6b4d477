#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "zs/checked.hpp"
#include "zs/errors.hpp"

namespace zs {

// The four supported ambient groups. All arithmetic is exact: int64 with loud
// overflow detection; cyclic residues live in [0,m); boolean entries in {0,1}.
enum class GroupKind { Integers, IntVectors, Cyclic, Boolean };

class GroupContext {
public:
    static GroupContext integers() { return GroupContext(GroupKind::Integers, 1, 0); }
    static GroupContext int_vectors(int rank);
    static GroupContext cyclic(i64 modulus);
    static GroupContext boolean(int rank);

    GroupKind kind() const { return kind_; }
    int rank() const { return rank_; }         // payload length (1 for Integers/Cyclic)
    i64 modulus() const { return modulus_; }   // Cyclic only

    bool operator==(const GroupContext&) const = default;

    std::string describe() const;

private:
    GroupContext(GroupKind k, int r, i64 m) : kind_(k), rank_(r), modulus_(m) {}
    GroupKind kind_;
    int rank_;
    i64 modulus_;
};

// A group element is just its coordinates; the context says how to combine
// them. Ordering is lexicographic on the payload, which is the canonical
// total order used by every deterministic search downstream.
class GroupElement {
public:
    GroupElement() = default;
    explicit GroupElement(i64 scalar) : payload_{scalar} {}
    explicit GroupElement(std::vector<i64> payload) : payload_(std::move(payload)) {}

    std::span<const i64> payload() const { return payload_; }
    i64 scalar() const { return payload_[0]; }  // rank-1 contexts
    std::size_t size() const { return payload_.size(); }
    i64 operator[](std::size_t i) const { return payload_[i]; }

    auto operator<=>(const GroupElement&) const = default;

private:
    std::vector<i64> payload_;
};

// Shape/range validity of `e` under `ctx`; throws ContextMismatchError if not.
void require_in_context(const GroupContext& ctx, const GroupElement& e);

// Reduce an arbitrary integer payload into the canonical representative
// (cyclic: mod m into [0,m); boolean: mod 2). Integers/IntVectors pass through.
GroupElement canonical_element(const GroupContext& ctx, const GroupElement& e);

GroupElement identity(const GroupContext& ctx);
bool is_identity(const GroupContext& ctx, const GroupElement& e);

GroupElement element_add(const GroupContext& ctx, const GroupElement& a, const GroupElement& b);
GroupElement element_neg(const GroupContext& ctx, const GroupElement& a);
GroupElement element_sub(const GroupContext& ctx, const GroupElement& a, const GroupElement& b);

// c·x for integer c (repeated addition semantics, computed directly).
GroupElement scalar_mul(const GroupContext& ctx, i64 c, const GroupElement& x);

std::string to_string(const GroupContext& ctx, const GroupElement& e);

}  // namespace zs
