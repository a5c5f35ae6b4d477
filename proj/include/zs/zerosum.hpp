#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "zs/element_set.hpp"

namespace zs {

// Budget guards for the exact searches. Caps are configurable at the CLI.
struct SearchLimits {
    int max_set_size = 28;  // min_zero_sum refuses larger instances
};

// For each element d of D (by canonical index) the complete list of index
// pairs (a,b), a <= b, with D[a] + D[b] = d, ascending. D is decomposable
// iff D is non-empty and every row is non-empty.
struct DecompositionTable {
    std::vector<std::vector<std::pair<int, int>>> rows;

    bool all_rows_nonempty() const {
        for (const auto& r : rows)
            if (r.empty()) return false;
        return true;
    }
};

// The invariant z(D) with a minimum zero-sum subset when one exists.
// witness is present iff z <= |D|; it is then the lexicographically least
// subset of cardinality z summing to the identity.
struct ZeroSumWitness {
    int z = 1;
    std::optional<ElementSet> witness;
};

// Non-negative weights f aligned with D's canonical order, satisfying
// sum f = |D| and sum f(x)*x = 0.
struct WeightFunction {
    std::vector<i64> weights;
};

// The injective-on-subset-sums homomorphism Z^k -> Z and the image set.
struct LineReduction {
    ElementSet image;           // same cardinality as the input set
    i64 bound = 0;              // every subset-sum coordinate lies in [-bound, bound]
    i64 base = 0;               // 2*bound+1 (3 in the degenerate all-zero case)
    std::vector<i64> weights;   // coordinate i of the input maps to weights[i] = base^(i+1)
};

// True iff D is non-empty and every d in D is a sum of two elements of D.
bool is_decomposable(const ElementSet& D);

DecompositionTable decomposition_table(const ElementSet& D);

// Exact minimum-cardinality zero-sum search. Strategy: target cardinality
// t = 1..|D| in order; integers use sorted-prefix sum pruning; cyclic contexts
// use full enumeration, switching to a meet-in-the-middle table when |D| > 20.
ZeroSumWitness min_zero_sum(const ElementSet& D, const SearchLimits& limits = {});

// Boolean-group shortcut: a zero-sum subset of cardinality <= 3 obtained
// directly from one decomposition (no search).
ElementSet boolean_zero_sum(const ElementSet& D);

// A subset M of D that is decomposable while no proper non-empty subset of M
// is. Greedy removal in canonical order to a fixed point, then an exhaustive
// subset scan (when |M| <= 20) repeated until genuinely minimal.
ElementSet minimal_decomposable_subset(const ElementSet& D);

// Exhaustive minimality test; requires |D| <= 20.
bool is_minimal_decomposable(const ElementSet& D);

// Weights from a choice of decompositions x = alpha(x) + beta(x): searches
// assignment vectors over the table rows in lexicographic order until every
// element is hit by some chosen pair, capped at 10^6 assignments.
WeightFunction weight_function(const ElementSet& D);

// Maps an integer-vector set to an integer set with identical subset-sum
// structure (same cardinality, same z, zero-sum subsets correspond).
LineReduction reduce_to_line(const ElementSet& D);

}  // namespace zs
