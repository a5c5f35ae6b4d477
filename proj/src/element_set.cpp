#include "zs/element_set.hpp"

#include <algorithm>
#include <sstream>

namespace zs {

ElementSet::ElementSet(GroupContext ctx, std::vector<GroupElement> elems) : ctx_(ctx) {
    elems_.reserve(elems.size());
    for (auto& e : elems) elems_.push_back(canonical_element(ctx_, e));
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

ElementSet ElementSet::of_scalars(GroupContext ctx, std::span<const i64> values) {
    std::vector<GroupElement> es;
    es.reserve(values.size());
    for (i64 v : values) es.emplace_back(v);
    return ElementSet(ctx, std::move(es));
}

bool ElementSet::contains(const GroupElement& e) const {
    return std::binary_search(elems_.begin(), elems_.end(), e);
}

int ElementSet::index_of(const GroupElement& e) const {
    auto it = std::lower_bound(elems_.begin(), elems_.end(), e);
    if (it == elems_.end() || *it != e) return -1;
    return (int)(it - elems_.begin());
}

ElementSet ElementSet::subset(std::uint64_t mask) const {
    std::vector<GroupElement> es;
    for (std::size_t i = 0; i < elems_.size(); ++i)
        if (mask >> i & 1) es.push_back(elems_[i]);
    return ElementSet(ctx_, std::move(es));
}

ElementSet ElementSet::without(std::size_t index) const {
    std::vector<GroupElement> es;
    es.reserve(elems_.size() - 1);
    for (std::size_t i = 0; i < elems_.size(); ++i)
        if (i != index) es.push_back(elems_[i]);
    return ElementSet(ctx_, std::move(es));
}

bool ElementSet::contains_all(const ElementSet& other) const {
    if (!(ctx_ == other.ctx_)) return false;
    return std::includes(elems_.begin(), elems_.end(), other.elems_.begin(), other.elems_.end());
}

std::string ElementSet::describe() const {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < elems_.size(); ++i) {
        if (i) os << ',';
        os << to_string(ctx_, elems_[i]);
    }
    os << '}';
    return os.str();
}

GroupElement set_sum(const GroupContext& ctx, std::span<const GroupElement> elems) {
    // Integer contexts accumulate in 128 bits so only a final result outside
    // the 64-bit range fails, never an intermediate ordering artifact.
    switch (ctx.kind()) {
        case GroupKind::Integers:
        case GroupKind::IntVectors: {
            std::vector<i128> acc(ctx.rank(), 0);
            for (const auto& e : elems) {
                require_in_context(ctx, e);
                for (int c = 0; c < ctx.rank(); ++c) acc[c] += e[c];
            }
            std::vector<i64> p(ctx.rank());
            for (int c = 0; c < ctx.rank(); ++c) p[c] = narrow_i64(acc[c], "set sum");
            return GroupElement(std::move(p));
        }
        case GroupKind::Cyclic:
        case GroupKind::Boolean: {
            GroupElement s = identity(ctx);
            for (const auto& e : elems) s = element_add(ctx, s, e);
            return s;
        }
    }
    throw InternalCheckError("unreachable group kind");
}

GroupElement set_sum(const ElementSet& F) { return set_sum(F.ctx(), F.elems()); }

}  // namespace zs
