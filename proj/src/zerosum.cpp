#include "zs/zerosum.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <unordered_map>

namespace zs {

namespace {

// ---------------------------------------------------------------- helpers

std::optional<GroupElement> try_complement(const GroupContext& ctx, const GroupElement& d,
                                           const GroupElement& a) {
    // b with a + b = d, or nullopt when b is not representable (then b is
    // certainly not a member of any set of representable elements).
    switch (ctx.kind()) {
        case GroupKind::Integers: {
            auto b = try_sub(d.scalar(), a.scalar());
            if (!b) return std::nullopt;
            return GroupElement(*b);
        }
        case GroupKind::IntVectors: {
            std::vector<i64> p(d.size());
            for (std::size_t i = 0; i < p.size(); ++i) {
                auto b = try_sub(d[i], a[i]);
                if (!b) return std::nullopt;
                p[i] = *b;
            }
            return GroupElement(std::move(p));
        }
        case GroupKind::Cyclic:
        case GroupKind::Boolean:
            return element_sub(ctx, d, a);
    }
    return std::nullopt;
}

// ------------------------------------------------- minimum zero-sum search

// Lexicographic t-subset search over sorted integer values with prefix-sum
// pruning: at each step the minimal / maximal achievable completion brackets
// zero or the branch dies.
class IntSubsetSearch {
public:
    explicit IntSubsetSearch(std::span<const GroupElement> elems) {
        vals_.reserve(elems.size());
        for (const auto& e : elems) vals_.push_back(e.scalar());
        prefix_.assign(vals_.size() + 1, 0);
        for (std::size_t i = 0; i < vals_.size(); ++i) prefix_[i + 1] = prefix_[i] + vals_[i];
    }

    bool find(int t, std::vector<int>& out) {
        chosen_.clear();
        if (recurse(0, t, 0)) {
            out = chosen_;
            return true;
        }
        return false;
    }

private:
    bool recurse(int next, int remaining, i128 sum) {
        if (remaining == 0) return sum == 0;
        int n = (int)vals_.size();
        for (int j = next; j <= n - remaining; ++j) {
            i128 min_completion = prefix_[j + remaining] - prefix_[j];
            if (sum + min_completion > 0) break;  // grows with j
            i128 max_completion = (i128)vals_[j] + (prefix_[n] - prefix_[n - remaining + 1]);
            if (sum + max_completion < 0) continue;
            chosen_.push_back(j);
            if (recurse(j + 1, remaining - 1, sum + vals_[j])) return true;
            chosen_.pop_back();
        }
        return false;
    }

    std::vector<i64> vals_;
    std::vector<i128> prefix_;  // exact: at most 28 summands of int64
    std::vector<int> chosen_;
};

// Plain lexicographic t-subset search; the accumulator is group-generic.
class GenericSubsetSearch {
public:
    GenericSubsetSearch(const GroupContext& ctx, std::span<const GroupElement> elems)
        : ctx_(ctx), elems_(elems) {}

    bool find(int t, std::vector<int>& out) {
        chosen_.clear();
        if (recurse(0, t, identity(ctx_))) {
            out = chosen_;
            return true;
        }
        return false;
    }

private:
    bool recurse(int next, int remaining, const GroupElement& sum) {
        if (remaining == 0) return is_identity(ctx_, sum);
        int n = (int)elems_.size();
        for (int j = next; j <= n - remaining; ++j) {
            chosen_.push_back(j);
            if (recurse(j + 1, remaining - 1, element_add(ctx_, sum, elems_[j]))) return true;
            chosen_.pop_back();
        }
        return false;
    }

    GroupContext ctx_;
    std::span<const GroupElement> elems_;
    std::vector<int> chosen_;
};

// For equal popcount, the mask whose index tuple is lexicographically
// smaller owns the lowest differing bit.
bool mask_lex_less(std::uint64_t a, std::uint64_t b) {
    if (a == b) return false;
    std::uint64_t diff = a ^ b;
    return a & (diff & -diff);
}

// Meet-in-the-middle table for cyclic contexts with |D| > 20: exact minimum
// cardinality, lexicographically least witness mask.
std::optional<std::uint64_t> cyclic_mitm(i64 modulus, std::span<const GroupElement> elems) {
    int n = (int)elems.size();
    int n_low = n / 2, n_high = n - n / 2;
    std::vector<i64> low(n_low), high(n_high);
    for (int i = 0; i < n_low; ++i) low[i] = elems[i].scalar();
    for (int i = 0; i < n_high; ++i) high[i] = elems[n_low + i].scalar();

    // sum -> per-cardinality lexicographically least mask over the high half
    std::unordered_map<i64, std::vector<std::uint64_t>> table;
    table.reserve(1u << n_high);
    const std::uint64_t kAbsent = ~0ull;
    for (std::uint64_t mask = 0; mask < (1ull << n_high); ++mask) {
        i64 s = 0;
        for (int i = 0; i < n_high; ++i)
            if (mask >> i & 1) {
                s += high[i];
                if (s >= modulus) s -= modulus;
            }
        auto& slot = table[s];
        if (slot.empty()) slot.assign(n_high + 1, kAbsent);
        int card = std::popcount(mask);
        if (slot[card] == kAbsent || mask_lex_less(mask, slot[card])) slot[card] = mask;
    }

    int best_card = n + 1;
    std::uint64_t best_mask = 0;
    bool found = false;
    for (std::uint64_t mask = 0; mask < (1ull << n_low); ++mask) {
        i64 s = 0;
        for (int i = 0; i < n_low; ++i)
            if (mask >> i & 1) {
                s += low[i];
                if (s >= modulus) s -= modulus;
            }
        i64 need = s == 0 ? 0 : modulus - s;
        auto it = table.find(need);
        if (it == table.end()) continue;
        int card_low = std::popcount(mask);
        for (int card_high = 0; card_high <= (int)it->second.size() - 1; ++card_high) {
            std::uint64_t hm = it->second[card_high];
            if (hm == kAbsent) continue;
            int total = card_low + card_high;
            if (total == 0) continue;
            std::uint64_t combined = mask | (hm << n_low);
            if (!found || total < best_card ||
                (total == best_card && mask_lex_less(combined, best_mask))) {
                found = true;
                best_card = total;
                best_mask = combined;
            }
        }
    }
    if (!found) return std::nullopt;
    return best_mask;
}

}  // namespace

// --------------------------------------------------------------- operations

bool is_decomposable(const ElementSet& D) {
    if (D.empty()) return false;
    for (const auto& d : D.elems()) {
        bool ok = false;
        for (const auto& a : D.elems()) {
            auto b = try_complement(D.ctx(), d, a);
            if (b && D.contains(*b)) {
                ok = true;
                break;
            }
        }
        if (!ok) return false;
    }
    return true;
}

DecompositionTable decomposition_table(const ElementSet& D) {
    DecompositionTable t;
    t.rows.resize(D.size());
    for (std::size_t i = 0; i < D.size(); ++i) {
        for (std::size_t j = 0; j < D.size(); ++j) {
            auto b = try_complement(D.ctx(), D[i], D[j]);
            if (!b) continue;
            int k = D.index_of(*b);
            if (k >= (int)j) t.rows[i].emplace_back((int)j, k);
        }
    }
    return t;
}

ZeroSumWitness min_zero_sum(const ElementSet& D, const SearchLimits& limits) {
    int n = (int)D.size();
    if (n > limits.max_set_size)
        throw SizeGuardError("set of size " + std::to_string(n) +
                             " exceeds the exact-search cap of " +
                             std::to_string(limits.max_set_size));
    if (n == 0) return {1, std::nullopt};

    std::vector<int> witness_idx;
    const auto finish = [&](int z) -> ZeroSumWitness {
        std::vector<GroupElement> w;
        w.reserve(witness_idx.size());
        for (int i : witness_idx) w.push_back(D[i]);
        return {z, ElementSet(D.ctx(), std::move(w))};
    };

    if (D.ctx().kind() == GroupKind::Cyclic && n > 20) {
        auto mask = cyclic_mitm(D.ctx().modulus(), D.elems());
        if (!mask) return {n + 1, std::nullopt};
        for (int i = 0; i < n; ++i)
            if (*mask >> i & 1) witness_idx.push_back(i);
        return finish((int)witness_idx.size());
    }

    if (D.ctx().kind() == GroupKind::Integers) {
        IntSubsetSearch search(D.elems());
        for (int t = 1; t <= n; ++t)
            if (search.find(t, witness_idx)) return finish(t);
        return {n + 1, std::nullopt};
    }

    GenericSubsetSearch search(D.ctx(), D.elems());
    for (int t = 1; t <= n; ++t)
        if (search.find(t, witness_idx)) return finish(t);
    return {n + 1, std::nullopt};
}

ElementSet boolean_zero_sum(const ElementSet& D) {
    if (D.ctx().kind() != GroupKind::Boolean)
        throw ContextMismatchError("boolean_zero_sum requires a boolean context, got " +
                                   D.ctx().describe());
    if (!is_decomposable(D))
        throw DomainError("not_decomposable", "boolean_zero_sum requires a decomposable set");

    GroupElement zero = identity(D.ctx());
    if (D.contains(zero)) return ElementSet(D.ctx(), {zero});

    // a = b + c from the first listed decomposition of the least element;
    // with 0 absent the three elements are pairwise distinct and cancel.
    const GroupElement& a = D[0];
    auto rows = decomposition_table(D);
    assert(!rows.rows[0].empty());
    auto [bi, ci] = rows.rows[0][0];
    ElementSet T(D.ctx(), {a, D[bi], D[ci]});
    if (T.size() != 3 || !is_identity(D.ctx(), set_sum(T)))
        throw InternalCheckError("boolean zero-sum construction failed");
    return T;
}

namespace {

// Decomposability over index masks: pair_masks[i] lists the 2-bit masks of
// the pairs decomposing element i.
bool mask_decomposable(std::uint32_t S, const std::vector<std::vector<std::uint32_t>>& pair_masks) {
    for (std::size_t i = 0; i < pair_masks.size(); ++i) {
        if (!(S >> i & 1)) continue;
        bool ok = false;
        for (std::uint32_t pm : pair_masks[i])
            if ((pm & S) == pm) {
                ok = true;
                break;
            }
        if (!ok) return false;
    }
    return true;
}

std::vector<std::vector<std::uint32_t>> build_pair_masks(const ElementSet& D) {
    auto table = decomposition_table(D);
    std::vector<std::vector<std::uint32_t>> pair_masks(D.size());
    for (std::size_t i = 0; i < D.size(); ++i)
        for (auto [a, b] : table.rows[i])
            pair_masks[i].push_back((1u << a) | (1u << b));
    return pair_masks;
}

// First decomposable proper non-empty subset in (cardinality, lex) order, or 0.
std::uint32_t find_decomposable_proper_subset(const ElementSet& D) {
    int n = (int)D.size();
    auto pair_masks = build_pair_masks(D);
    std::vector<int> idx;
    for (int c = 1; c < n; ++c) {
        idx.assign(c, 0);
        for (int i = 0; i < c; ++i) idx[i] = i;
        while (true) {
            std::uint32_t S = 0;
            for (int i : idx) S |= 1u << i;
            if (mask_decomposable(S, pair_masks)) return S;
            int p = c - 1;
            while (p >= 0 && idx[p] == n - c + p) --p;
            if (p < 0) break;
            ++idx[p];
            for (int q = p + 1; q < c; ++q) idx[q] = idx[q - 1] + 1;
        }
    }
    return 0;
}

}  // namespace

bool is_minimal_decomposable(const ElementSet& D) {
    if (D.size() > 20)
        throw SizeGuardError("exhaustive minimality check caps |D| at 20");
    if (!is_decomposable(D)) return false;
    return find_decomposable_proper_subset(D) == 0;
}

ElementSet minimal_decomposable_subset(const ElementSet& D) {
    if (!is_decomposable(D))
        throw DomainError("not_decomposable",
                          "minimal_decomposable_subset requires a decomposable set");
    ElementSet M = D;
    while (true) {
        // greedy removal in canonical order, restarting after each success
        bool removed = true;
        while (removed) {
            removed = false;
            for (std::size_t i = 0; i < M.size(); ++i) {
                if (M.size() == 1) break;
                ElementSet cand = M.without(i);
                if (is_decomposable(cand)) {
                    M = std::move(cand);
                    removed = true;
                    break;
                }
            }
        }
        if (M.size() > 20) return M;  // beyond the exhaustive-check cap
        std::uint32_t sub = find_decomposable_proper_subset(M);
        if (sub == 0) return M;
        M = M.subset(sub);
    }
}

WeightFunction weight_function(const ElementSet& D) {
    if (!is_decomposable(D))
        throw DomainError("not_minimal_decomposable",
                          "weight_function requires a minimal decomposable set");
    if (D.size() > 20)
        throw SizeGuardError("weight_function minimality verification caps |D| at 20");
    if (find_decomposable_proper_subset(D) != 0)
        throw DomainError("not_minimal_decomposable",
                          "weight_function requires a minimal decomposable set");

    auto table = decomposition_table(D);
    int n = (int)D.size();
    std::vector<std::size_t> choice(n, 0);
    std::vector<i64> hits(n);

    constexpr std::uint64_t kAssignmentCap = 1'000'000;
    for (std::uint64_t attempt = 0; attempt < kAssignmentCap; ++attempt) {
        std::fill(hits.begin(), hits.end(), 0);
        for (int i = 0; i < n; ++i) {
            auto [a, b] = table.rows[i][choice[i]];
            ++hits[a];
            ++hits[b];
        }
        if (std::all_of(hits.begin(), hits.end(), [](i64 g) { return g >= 1; })) {
            WeightFunction wf;
            wf.weights.resize(n);
            for (int i = 0; i < n; ++i) wf.weights[i] = hits[i] - 1;
            // exact re-verification of both weight identities
            i64 total = 0;
            GroupElement acc = identity(D.ctx());
            for (int i = 0; i < n; ++i) {
                total += wf.weights[i];
                acc = element_add(D.ctx(), acc, scalar_mul(D.ctx(), wf.weights[i], D[i]));
            }
            if (total != n || !is_identity(D.ctx(), acc))
                throw InternalCheckError("weight function identities failed");
            return wf;
        }
        // next assignment vector in lexicographic order
        int p = n - 1;
        while (p >= 0 && choice[p] + 1 == table.rows[p].size()) {
            choice[p] = 0;
            --p;
        }
        if (p < 0) break;
        ++choice[p];
    }
    throw DomainError("no_nonnegative_weights",
                      "no decomposition choice covers every element within the assignment cap");
}

LineReduction reduce_to_line(const ElementSet& D) {
    if (D.ctx().kind() != GroupKind::IntVectors)
        throw ContextMismatchError("reduce_to_line requires an integer-vector context, got " +
                                   D.ctx().describe());
    int k = D.ctx().rank();

    // tight per-coordinate bound on every subset sum
    i128 bound = 0;
    for (int c = 0; c < k; ++c) {
        i128 pos = 0, neg = 0;
        for (const auto& e : D.elems()) {
            if (e[c] > 0) pos += e[c];
            else neg -= (i128)e[c];
        }
        bound = std::max({bound, pos, neg});
    }
    i64 m = narrow_i64(bound, "subset-sum bound");
    i64 base = m == 0 ? 3 : checked_add(checked_mul(2, m), 1);

    std::vector<i64> weights(k);
    for (int c = 0; c < k; ++c) weights[c] = checked_pow(base, c + 1);

    std::vector<GroupElement> image;
    image.reserve(D.size());
    for (const auto& e : D.elems()) {
        i128 v = 0;
        for (int c = 0; c < k; ++c) v += (i128)e[c] * (i128)weights[c];
        image.emplace_back(narrow_i64(v, "reduced element"));
    }
    LineReduction red{ElementSet(GroupContext::integers(), std::move(image)), m, base,
                      std::move(weights)};
    if (red.image.size() != D.size())
        throw InternalCheckError("line reduction must be injective on the set");
    return red;
}

}  // namespace zs
