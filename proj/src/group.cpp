#include "zs/group.hpp"

#include <sstream>

namespace zs {

namespace {

// m can be close to 2^62; values in [0,m) then a+b < 2^63 never wraps.
constexpr i64 kMaxModulus = (i64)1 << 62;

i64 mod_reduce(i64 v, i64 m) {
    i64 r = v % m;
    return r < 0 ? r + m : r;
}

}  // namespace

GroupContext GroupContext::int_vectors(int rank) {
    if (rank < 1) throw DomainError("bad_rank", "vector rank must be >= 1");
    return GroupContext(GroupKind::IntVectors, rank, 0);
}

GroupContext GroupContext::cyclic(i64 modulus) {
    if (modulus < 2) throw DomainError("bad_modulus", "cyclic modulus must be >= 2");
    if (modulus > kMaxModulus) throw OverflowError("cyclic modulus exceeds arithmetic capacity");
    return GroupContext(GroupKind::Cyclic, 1, modulus);
}

GroupContext GroupContext::boolean(int rank) {
    if (rank < 1) throw DomainError("bad_rank", "boolean rank must be >= 1");
    return GroupContext(GroupKind::Boolean, rank, 0);
}

std::string GroupContext::describe() const {
    std::ostringstream os;
    switch (kind_) {
        case GroupKind::Integers: os << "Z"; break;
        case GroupKind::IntVectors: os << "Z^" << rank_; break;
        case GroupKind::Cyclic: os << "Z_" << modulus_; break;
        case GroupKind::Boolean: os << "Z2^" << rank_; break;
    }
    return os.str();
}

void require_in_context(const GroupContext& ctx, const GroupElement& e) {
    if ((int)e.size() != ctx.rank())
        throw ContextMismatchError("element has " + std::to_string(e.size()) +
                                   " coordinates, context " + ctx.describe() + " expects " +
                                   std::to_string(ctx.rank()));
    if (ctx.kind() == GroupKind::Cyclic) {
        if (e.scalar() < 0 || e.scalar() >= ctx.modulus())
            throw ContextMismatchError("residue " + std::to_string(e.scalar()) +
                                       " not reduced into [0," + std::to_string(ctx.modulus()) + ")");
    } else if (ctx.kind() == GroupKind::Boolean) {
        for (i64 v : e.payload())
            if (v != 0 && v != 1)
                throw ContextMismatchError("boolean payload entries must be 0 or 1");
    }
}

GroupElement canonical_element(const GroupContext& ctx, const GroupElement& e) {
    if ((int)e.size() != ctx.rank())
        throw ContextMismatchError("element has " + std::to_string(e.size()) +
                                   " coordinates, context " + ctx.describe() + " expects " +
                                   std::to_string(ctx.rank()));
    switch (ctx.kind()) {
        case GroupKind::Integers:
        case GroupKind::IntVectors:
            return e;
        case GroupKind::Cyclic:
            return GroupElement(mod_reduce(e.scalar(), ctx.modulus()));
        case GroupKind::Boolean: {
            std::vector<i64> p(e.payload().begin(), e.payload().end());
            for (i64& v : p) v = mod_reduce(v, 2);
            return GroupElement(std::move(p));
        }
    }
    throw InternalCheckError("unreachable group kind");
}

GroupElement identity(const GroupContext& ctx) {
    return GroupElement(std::vector<i64>(ctx.rank(), 0));
}

bool is_identity(const GroupContext& ctx, const GroupElement& e) {
    require_in_context(ctx, e);
    for (i64 v : e.payload())
        if (v != 0) return false;
    return true;
}

GroupElement element_add(const GroupContext& ctx, const GroupElement& a, const GroupElement& b) {
    require_in_context(ctx, a);
    require_in_context(ctx, b);
    switch (ctx.kind()) {
        case GroupKind::Integers:
            return GroupElement(checked_add(a.scalar(), b.scalar()));
        case GroupKind::IntVectors: {
            std::vector<i64> p(a.size());
            for (std::size_t i = 0; i < p.size(); ++i) p[i] = checked_add(a[i], b[i]);
            return GroupElement(std::move(p));
        }
        case GroupKind::Cyclic: {
            i64 s = a.scalar() + b.scalar();  // both < m <= 2^62, cannot wrap
            if (s >= ctx.modulus()) s -= ctx.modulus();
            return GroupElement(s);
        }
        case GroupKind::Boolean: {
            std::vector<i64> p(a.size());
            for (std::size_t i = 0; i < p.size(); ++i) p[i] = a[i] ^ b[i];
            return GroupElement(std::move(p));
        }
    }
    throw InternalCheckError("unreachable group kind");
}

GroupElement element_neg(const GroupContext& ctx, const GroupElement& a) {
    require_in_context(ctx, a);
    switch (ctx.kind()) {
        case GroupKind::Integers:
            return GroupElement(checked_neg(a.scalar()));
        case GroupKind::IntVectors: {
            std::vector<i64> p(a.size());
            for (std::size_t i = 0; i < p.size(); ++i) p[i] = checked_neg(a[i]);
            return GroupElement(std::move(p));
        }
        case GroupKind::Cyclic:
            return GroupElement(a.scalar() == 0 ? 0 : ctx.modulus() - a.scalar());
        case GroupKind::Boolean:
            return a;  // x + x = 0
    }
    throw InternalCheckError("unreachable group kind");
}

GroupElement element_sub(const GroupContext& ctx, const GroupElement& a, const GroupElement& b) {
    return element_add(ctx, a, element_neg(ctx, b));
}

GroupElement scalar_mul(const GroupContext& ctx, i64 c, const GroupElement& x) {
    require_in_context(ctx, x);
    switch (ctx.kind()) {
        case GroupKind::Integers:
            return GroupElement(checked_mul(c, x.scalar()));
        case GroupKind::IntVectors: {
            std::vector<i64> p(x.size());
            for (std::size_t i = 0; i < p.size(); ++i) p[i] = checked_mul(c, x[i]);
            return GroupElement(std::move(p));
        }
        case GroupKind::Cyclic: {
            i128 prod = (i128)mod_reduce(c, ctx.modulus()) * (i128)x.scalar();
            return GroupElement((i64)(prod % (i128)ctx.modulus()));
        }
        case GroupKind::Boolean: {
            if (c % 2 == 0) return identity(ctx);
            return x;
        }
    }
    throw InternalCheckError("unreachable group kind");
}

std::string to_string(const GroupContext& ctx, const GroupElement& e) {
    if (ctx.rank() == 1) return std::to_string(e.scalar());
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i) os << ',';
        os << e[i];
    }
    os << ')';
    return os.str();
}

}  // namespace zs
