#pragma once

// Test-side oracles and generators. The oracles here are deliberately
// independent of the library's search paths: full-scan subset sums, sumset
// membership, and pairwise collision scans, so they can arbitrate.

#include <algorithm>
#include <bit>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "zs/element_set.hpp"
#include "zs/tree.hpp"
#include "zs/zerosum.hpp"

namespace zstest {

using zs::i128;
using zs::i64;

// ------------------------------------------------------------------ oracles

// Sumset route: D + D materialized, then the subset check.
inline bool naive_is_decomposable(const zs::ElementSet& D) {
    if (D.empty()) return false;
    std::set<zs::GroupElement> sums;
    for (const auto& a : D.elems())
        for (const auto& b : D.elems()) {
            try {
                sums.insert(zs::element_add(D.ctx(), a, b));
            } catch (const zs::OverflowError&) {
                // an unrepresentable sum can never equal a representable element
            }
        }
    for (const auto& d : D.elems())
        if (!sums.count(d)) return false;
    return true;
}

// For equal popcount, lexicographically smaller index tuple owns the lowest
// differing bit.
inline bool mask_tuple_less(std::uint64_t a, std::uint64_t b) {
    std::uint64_t diff = a ^ b;
    if (!diff) return false;
    return a & (diff & -diff);
}

// Full-scan minimum zero-sum: every non-empty subset mask, best by
// (popcount, lexicographic index tuple).
inline zs::ZeroSumWitness naive_min_zero_sum(const zs::ElementSet& D) {
    int n = (int)D.size();
    if (n == 0) return {1, std::nullopt};
    if (n > 24) throw std::runtime_error("oracle capped at 24 elements");
    const auto& ctx = D.ctx();

    bool found = false;
    std::uint64_t best = 0;
    for (std::uint64_t mask = 1; mask < (1ull << n); ++mask) {
        bool zero = false;
        switch (ctx.kind()) {
            case zs::GroupKind::Integers: {
                i128 s = 0;
                for (int i = 0; i < n; ++i)
                    if (mask >> i & 1) s += D[i].scalar();
                zero = s == 0;
                break;
            }
            case zs::GroupKind::Cyclic: {
                i64 s = 0;
                for (int i = 0; i < n; ++i)
                    if (mask >> i & 1) {
                        s += D[i].scalar();
                        if (s >= ctx.modulus()) s -= ctx.modulus();
                    }
                zero = s == 0;
                break;
            }
            case zs::GroupKind::IntVectors: {
                std::vector<i128> s(ctx.rank(), 0);
                for (int i = 0; i < n; ++i)
                    if (mask >> i & 1)
                        for (int c = 0; c < ctx.rank(); ++c) s[c] += D[i][c];
                zero = std::all_of(s.begin(), s.end(), [](i128 v) { return v == 0; });
                break;
            }
            case zs::GroupKind::Boolean: {
                std::vector<i64> s(ctx.rank(), 0);
                for (int i = 0; i < n; ++i)
                    if (mask >> i & 1)
                        for (int c = 0; c < ctx.rank(); ++c) s[c] ^= D[i][c];
                zero = std::all_of(s.begin(), s.end(), [](i64 v) { return v == 0; });
                break;
            }
        }
        if (!zero) continue;
        if (!found || std::popcount(mask) < std::popcount(best) ||
            (std::popcount(mask) == std::popcount(best) && mask_tuple_less(mask, best)))
            best = mask, found = true;
    }
    if (!found) return {n + 1, std::nullopt};
    return {std::popcount(best), D.subset(best)};
}

// ----------------------------------------------------------------- generators

inline zs::GroupElement random_element(std::mt19937_64& rng, const zs::GroupContext& ctx,
                                       i64 bound) {
    std::vector<i64> p(ctx.rank());
    switch (ctx.kind()) {
        case zs::GroupKind::Integers:
        case zs::GroupKind::IntVectors: {
            std::uniform_int_distribution<i64> d(-bound, bound);
            for (auto& v : p) v = d(rng);
            break;
        }
        case zs::GroupKind::Cyclic: {
            std::uniform_int_distribution<i64> d(0, ctx.modulus() - 1);
            p[0] = d(rng);
            break;
        }
        case zs::GroupKind::Boolean: {
            for (auto& v : p) v = (i64)(rng() & 1);
            break;
        }
    }
    return zs::GroupElement(std::move(p));
}

inline zs::ElementSet random_set(std::mt19937_64& rng, const zs::GroupContext& ctx, int size,
                                 i64 bound) {
    std::vector<zs::GroupElement> es;
    for (int i = 0; i < size; ++i) es.push_back(random_element(rng, ctx, bound));
    return zs::ElementSet(ctx, std::move(es));
}

// Closure-repair generator: grow until every element decomposes, trim to the
// size cap, restart on failure. Deterministic per rng state.
inline zs::ElementSet random_decomposable(std::mt19937_64& rng, const zs::GroupContext& ctx,
                                          int max_size, i64 bound) {
    auto in_bound = [&](const zs::GroupElement& e) {
        if (ctx.kind() != zs::GroupKind::Integers && ctx.kind() != zs::GroupKind::IntVectors)
            return true;
        for (i64 v : e.payload())
            if (v < -bound || v > bound) return false;
        return true;
    };

    for (int attempt = 0; attempt < 200; ++attempt) {
        std::vector<zs::GroupElement> elems{random_element(rng, ctx, bound),
                                            random_element(rng, ctx, bound)};
        zs::ElementSet S(ctx, elems);
        bool dead = false;
        for (int step = 0; step < 120 && !dead; ++step) {
            auto table = zs::decomposition_table(S);
            std::vector<int> missing;
            for (std::size_t i = 0; i < S.size(); ++i)
                if (table.rows[i].empty()) missing.push_back((int)i);
            if (missing.empty()) {
                if ((int)S.size() <= max_size) return S;
                // trim: drop random elements while decomposability survives
                for (int tries = 0; tries < 64 && (int)S.size() > max_size; ++tries) {
                    std::size_t k = rng() % S.size();
                    zs::ElementSet cand = S.without(k);
                    if (zs::is_decomposable(cand)) S = std::move(cand);
                }
                if ((int)S.size() <= max_size) return S;
                dead = true;
                break;
            }
            const auto& d = S[missing[rng() % missing.size()]];
            zs::GroupElement a = rng() % 2 == 0 ? S[rng() % S.size()]
                                                : random_element(rng, ctx, bound);
            try {
                zs::GroupElement b = zs::element_sub(ctx, d, a);
                if (!in_bound(a) || !in_bound(b)) continue;
                std::vector<zs::GroupElement> next(S.elems().begin(), S.elems().end());
                next.push_back(a);
                next.push_back(b);
                S = zs::ElementSet(ctx, std::move(next));
            } catch (const zs::OverflowError&) {
                continue;
            }
            if ((int)S.size() > max_size + 6) dead = true;
        }
    }
    throw std::runtime_error("random_decomposable failed to converge");
}

// ------------------------------------------------------------ tree utilities

// Independent invariant audit: decomposition law, off-branch injectivity,
// branch-length bound, and leaf non-expandability.
inline void audit_tree(const zs::DTree& T) {
    const auto& D = T.set();
    auto table = zs::decomposition_table(D);
    int n = (int)D.size();

    for (int v = 0; v < (int)T.size(); ++v) {
        if (T.is_leaf(v)) continue;
        int c0 = T.nodes()[v].child[0], c1 = T.nodes()[v].child[1];
        if (T.parent(c0) != v || T.parent(c1) != v)
            throw std::runtime_error("audit: parent/child links broken");
        if (!(zs::element_add(D.ctx(), T.label(c0), T.label(c1)) == T.label(v)))
            throw std::runtime_error("audit: decomposition law violated");
    }
    for (int x : T.leaves()) {
        auto branch = T.branch_off_labels(x);
        std::set<int> seen;
        for (auto [node, lbl] : branch)
            if (!seen.insert(lbl).second)
                throw std::runtime_error("audit: off-branch labels repeat along a branch");
        if (T.depth(x) > n) throw std::runtime_error("audit: branch longer than |D|+1");
        for (auto [a, b] : table.rows[T.label_index(x)])
            if (!seen.count(a) && !seen.count(b))
                throw std::runtime_error("audit: leaf is still expandable; tree not maximal");
    }
}

// Random tree shape over the one-element set {0} (labels are irrelevant for
// the collision lemma; 0 = 0 + 0 keeps the label law intact).
inline zs::DTree random_tree(std::mt19937_64& rng, int max_nodes) {
    zs::ElementSet D = zs::ElementSet::of_scalars(zs::GroupContext::integers(),
                                                  std::vector<i64>{0});
    zs::DTree T(D, 0);
    std::vector<int> leaves{0};
    int target = 3 + (int)(rng() % (std::uint64_t)std::max(1, max_nodes - 2));
    while ((int)T.size() + 2 <= target) {
        std::size_t k = rng() % leaves.size();
        int leaf = leaves[k];
        leaves.erase(leaves.begin() + k);
        auto [l, r] = T.expand(leaf, 0, 0);
        leaves.push_back(l);
        leaves.push_back(r);
    }
    return T;
}

// Uniform random proper ancestor per leaf.
inline std::vector<int> random_regressive(std::mt19937_64& rng, const zs::DTree& T) {
    std::vector<int> f(T.size(), -1);
    for (int x : T.leaves()) {
        std::vector<int> anc;
        for (int v = T.parent(x); v >= 0; v = T.parent(v)) anc.push_back(v);
        f[x] = anc[rng() % anc.size()];
    }
    return f;
}

// All collision pairs by direct pairwise scan.
inline std::vector<std::pair<int, int>> brute_collisions(const zs::DTree& T,
                                                         const std::vector<int>& f) {
    std::vector<std::pair<int, int>> out;
    auto lv = T.leaves();
    for (std::size_t i = 0; i < lv.size(); ++i)
        for (std::size_t j = i + 1; j < lv.size(); ++j) {
            int m = T.meet(lv[i], lv[j]);
            if (f[lv[i]] == m && f[lv[j]] == m) out.emplace_back(lv[i], lv[j]);
        }
    return out;
}

}  // namespace zstest
