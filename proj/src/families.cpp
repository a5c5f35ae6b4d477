#include "zs/families.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>
#include <thread>

namespace zs {

// ------------------------------------------------------------- canonical form

std::string CanonicalSet::describe() const {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < elems.size(); ++i) {
        if (i) os << ',';
        os << elems[i];
    }
    os << '}';
    return os.str();
}

CanonicalSet canonicalize(std::span<const i64> values) {
    std::vector<i64> v(values.begin(), values.end());
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    if (v.empty()) return {};

    i64 g = 0;
    for (i64 x : v) g = gcd_i64(g, x < 0 ? checked_neg(x) : x);
    if (g > 1)
        for (i64& x : v) x /= g;

    std::vector<i64> neg(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) neg[i] = checked_neg(v[v.size() - 1 - i]);
    if (std::lexicographical_compare(neg.begin(), neg.end(), v.begin(), v.end())) v = std::move(neg);
    return {std::move(v)};
}

CanonicalSet canonicalize(const ElementSet& D) {
    if (D.ctx().kind() != GroupKind::Integers)
        throw ContextMismatchError("canonical sets are defined over Z, got " + D.ctx().describe());
    std::vector<i64> v;
    v.reserve(D.size());
    for (const auto& e : D.elems()) v.push_back(e.scalar());
    return canonicalize(v);
}

ElementSet to_element_set(const CanonicalSet& c) {
    return ElementSet::of_scalars(GroupContext::integers(), c.elems);
}

// ------------------------------------------------------------ explicit families

ElementSet example1_set(int n) {
    if (n < 2) throw DomainError("bad_n", "the cyclic family needs n >= 2");
    i64 order = checked_sub(checked_pow(2, n), 1);
    GroupContext ctx = GroupContext::cyclic(order);
    std::vector<GroupElement> elems;
    elems.reserve(n);
    i64 p = 1;
    for (int k = 0; k < n; ++k) {
        elems.emplace_back(p);
        if (k + 1 < n) p = checked_mul(p, 2);
    }
    return ElementSet(ctx, std::move(elems));
}

ElementSet example2_set(int n) {
    if (n < 1) throw DomainError("bad_n", "the integer family needs n >= 1");
    i64 shift = checked_sub(1, checked_pow(2, n));  // 1 - 2^n
    std::vector<GroupElement> elems;
    elems.reserve(2 * n);
    i64 p = 1;
    for (int k = 0; k < n; ++k) {
        elems.emplace_back(p);
        elems.emplace_back(checked_add(p, shift));
        if (k + 1 < n) p = checked_mul(p, 2);
    }
    ElementSet D(GroupContext::integers(), std::move(elems));
    if (D.size() != (std::size_t)(2 * n))
        throw InternalCheckError("family cardinality must be 2n");
    return D;
}

// ------------------------------------------------------------------ enumeration

namespace {

bool int_member(const std::vector<i64>& sorted, i64 x) {
    return std::binary_search(sorted.begin(), sorted.end(), x);
}

// Can d still get a decomposition pair, drawing from the chosen prefix and
// the untouched candidate pool [lo, window]?
bool pair_feasible(const std::vector<i64>& chosen, i64 d, i64 lo, i64 window) {
    for (i64 a : chosen) {
        i64 b = d - a;
        if (int_member(chosen, b) || (b >= lo && b <= window)) return true;
    }
    return d >= 2 * lo;  // both summands from the pool
}

bool int_set_decomposable(const std::vector<i64>& sorted) {
    if (sorted.empty()) return false;
    for (i64 d : sorted) {
        bool ok = false;
        for (i64 a : sorted)
            if (int_member(sorted, d - a)) {
                ok = true;
                break;
            }
        if (!ok) return false;
    }
    return true;
}

bool is_canonical(const std::vector<i64>& v) {
    i64 g = 0;
    for (i64 x : v) g = gcd_i64(g, x < 0 ? -x : x);
    if (g > 1) return false;
    if (g == 0) return v.size() == 1;  // {0}
    for (std::size_t i = 0; i < v.size(); ++i) {
        i64 neg = -v[v.size() - 1 - i];
        if (neg != v[i]) return neg > v[i];  // canonical iff v is the smaller tuple
    }
    return true;  // symmetric under negation
}

template <typename Sink>
void enumerate_from(std::vector<i64>& chosen, i64 window, int remaining, Sink&& sink) {
    if (remaining == 0) {
        if (int_set_decomposable(chosen) && is_canonical(chosen))
            sink(chosen);
        return;
    }
    i64 last = chosen.back();
    for (i64 v = last + 1; v <= window - (remaining - 1); ++v) {
        chosen.push_back(v);
        bool feasible = true;
        for (i64 d : chosen)
            if (!pair_feasible(chosen, d, v + 1, window)) {
                feasible = false;
                break;
            }
        if (feasible) enumerate_from(chosen, window, remaining - 1, sink);
        chosen.pop_back();
    }
}

void check_enum_guards(int n, i64 window) {
    if (n < 1 || n > 8) throw SizeGuardError("enumeration caps cardinality at 8");
    if (window < 1 || window > 24) throw SizeGuardError("enumeration caps the window at 24");
}

// Runs one leading-value partition; results are in deterministic order.
template <typename Sink>
void enumerate_partition(i64 first, int n, i64 window, Sink&& sink) {
    std::vector<i64> chosen{first};
    if (n == 1) {
        if (int_set_decomposable(chosen) && is_canonical(chosen)) sink(chosen);
        return;
    }
    bool feasible = pair_feasible(chosen, first, first + 1, window);
    if (feasible) enumerate_from(chosen, window, n - 1, sink);
}

}  // namespace

std::vector<CanonicalSet> enumerate_decomposable(int n, i64 window, int jobs) {
    check_enum_guards(n, window);
    int parts = (int)(2 * window + 1);
    std::vector<std::vector<CanonicalSet>> by_part(parts);

    auto run_part = [&](int p) {
        i64 first = -window + p;
        enumerate_partition(first, n, window, [&](const std::vector<i64>& s) {
            by_part[p].push_back(CanonicalSet{s});
        });
    };

    if (jobs <= 1) {
        for (int p = 0; p < parts; ++p) run_part(p);
    } else {
        std::vector<std::thread> workers;
        for (int w = 0; w < jobs; ++w)
            workers.emplace_back([&, w] {
                for (int p = w; p < parts; p += jobs) run_part(p);
            });
        for (auto& t : workers) t.join();
    }

    std::vector<CanonicalSet> out;
    for (auto& part : by_part)
        for (auto& s : part) out.push_back(std::move(s));
    return out;
}

// --------------------------------------------------------------- classification

namespace {

int zero_sum_size(const CanonicalSet& c) { return min_zero_sum(to_element_set(c)).z; }

bool contains_zero(const CanonicalSet& c) { return int_member(c.elems, 0); }

}  // namespace

ClassificationReport classify(int n, i64 window, int jobs) {
    check_enum_guards(n, window);
    ClassificationReport rep;
    rep.size = n;
    rep.window = window;

    std::vector<CanonicalSet> sets = enumerate_decomposable(n, window, jobs);
    rep.decomposable_count = sets.size();

    std::vector<int> z(sets.size());
    auto compute_z = [&](std::size_t i) { z[i] = zero_sum_size(sets[i]); };
    if (jobs <= 1 || sets.size() < 64) {
        for (std::size_t i = 0; i < sets.size(); ++i) compute_z(i);
    } else {
        std::vector<std::thread> workers;
        for (int w = 0; w < jobs; ++w)
            workers.emplace_back([&, w] {
                for (std::size_t i = w; i < sets.size(); i += jobs) compute_z(i);
            });
        for (auto& t : workers) t.join();
    }
    for (int zi : z) rep.max_z = std::max(rep.max_z, zi);

    const CanonicalSet d2 = canonicalize(std::vector<i64>{-2, -1, 1, 2});
    const CanonicalSet lemma6_set = canonicalize(std::vector<i64>{1, 2, 4, -3, -5, -6});
    const std::vector<CanonicalSet> remark5_families = {
        canonicalize(std::vector<i64>{-3, -2, -1, 1, 2}),
        canonicalize(std::vector<i64>{-4, -2, -1, 1, 2}),
        canonicalize(std::vector<i64>{-3, -2, -1, 2, 4}),
    };

    // claim(id, text, applies, violates)
    auto add_claim = [&](std::string id, std::string text, auto applies, auto violates) {
        ClaimVerdict v;
        v.id = std::move(id);
        v.claim = std::move(text);
        for (std::size_t i = 0; i < sets.size(); ++i) {
            if (!applies(i)) continue;
            v.hypothesis_sets.push_back(sets[i]);
            if (violates(i)) {
                v.counterexample_free = false;
                v.counterexamples.push_back(sets[i]);
            }
        }
        rep.verdicts.push_back(std::move(v));
    };

    if (n <= 3)
        add_claim("size_le3_contains_zero",
                  "every decomposable set of cardinality <= 3 contains 0",
                  [&](std::size_t) { return true; },
                  [&](std::size_t i) { return !contains_zero(sets[i]); });
    if (n == 4)
        add_claim("size4_zero_free_unique",
                  "every zero-free decomposable 4-set is {-2,-1,1,2} up to scaling",
                  [&](std::size_t i) { return !contains_zero(sets[i]); },
                  [&](std::size_t i) { return !(sets[i] == d2); });
    if (n == 4 || n == 5)
        add_claim("size45_z_le2", "every decomposable set of cardinality 4 or 5 has z <= 2",
                  [&](std::size_t) { return true; }, [&](std::size_t i) { return z[i] > 2; });
    if (n == 5)
        add_claim("size5_zero_free_families",
                  "every zero-free decomposable 5-set is one of three families up to scaling",
                  [&](std::size_t i) { return !contains_zero(sets[i]); },
                  [&](std::size_t i) {
                      return std::find(remark5_families.begin(), remark5_families.end(),
                                       sets[i]) == remark5_families.end();
                  });
    if (n == 6)
        add_claim("size6_highz_unique",
                  "every decomposable 6-set with z >= 3 is {1,2,4,-3,-5,-6} up to scaling "
                  "and has z = 3",
                  [&](std::size_t i) { return z[i] >= 3; },
                  [&](std::size_t i) { return !(sets[i] == lemma6_set) || z[i] != 3; });
    if (n == 7)
        add_claim("size7_z_le3", "every decomposable 7-set has z <= 3",
                  [&](std::size_t) { return true; }, [&](std::size_t i) { return z[i] > 3; });
    if (n == 4 || n == 6) {
        const CanonicalSet target = n == 4 ? canonicalize(example2_set(2)) : lemma6_set;
        add_claim("half_z_is_family",
                  "every decomposable set with z = |D|/2 is the doubling family up to scaling",
                  [&](std::size_t i) { return z[i] == n / 2; },
                  [&](std::size_t i) { return !(sets[i] == target); });
    }
    return rep;
}

// ------------------------------------------------------------------------ hunt

namespace {

std::vector<i64> undecomposed_elements(const std::vector<i64>& sorted) {
    std::vector<i64> out;
    for (i64 d : sorted) {
        bool ok = false;
        for (i64 a : sorted)
            if (int_member(sorted, d - a)) {
                ok = true;
                break;
            }
        if (!ok) out.push_back(d);
    }
    return out;
}

void sorted_insert(std::vector<i64>& v, i64 x) {
    auto it = std::lower_bound(v.begin(), v.end(), x);
    if (it == v.end() || *it != x) v.insert(it, x);
}

// One randomized closure attempt: grow a set, repair elements that lack a
// decomposition, trim back to cardinality n.
std::optional<std::vector<i64>> hunt_trial(std::mt19937_64& rng, int n, i64 window,
                                           bool allow_zero) {
    std::uniform_int_distribution<i64> val(-window, window);
    auto draw = [&] {
        i64 v = val(rng);
        while (!allow_zero && v == 0) v = val(rng);
        return v;
    };

    std::vector<i64> s;
    sorted_insert(s, draw());
    while (s.size() < 2) sorted_insert(s, draw());

    for (int step = 0; step < 16 * n + 48; ++step) {
        auto missing = undecomposed_elements(s);
        if (missing.empty()) {
            if ((int)s.size() == n) return s;
            if ((int)s.size() < n) {
                sorted_insert(s, draw());
                continue;
            }
            // trim while staying decomposable
            while ((int)s.size() > n) {
                std::vector<i64> removable;
                for (i64 x : s) {
                    std::vector<i64> rest;
                    rest.reserve(s.size() - 1);
                    for (i64 y : s)
                        if (y != x) rest.push_back(y);
                    if (int_set_decomposable(rest)) removable.push_back(x);
                }
                if (removable.empty()) return std::nullopt;
                i64 x = removable[rng() % removable.size()];
                s.erase(std::lower_bound(s.begin(), s.end(), x));
            }
            return s;
        }
        i64 d = missing[rng() % missing.size()];
        i64 a, b;
        switch (rng() % 4) {
            case 0:
                if (d % 2 != 0) continue;
                a = b = d / 2;
                break;
            case 1:
            case 2:
                a = s[rng() % s.size()];
                b = d - a;
                break;
            default:
                a = draw();
                b = d - a;
                break;
        }
        if (a < -window || a > window || b < -window || b > window) continue;
        if (!allow_zero && (a == 0 || b == 0)) continue;
        sorted_insert(s, a);
        sorted_insert(s, b);
        if ((int)s.size() > n + 4) return std::nullopt;
    }
    return std::nullopt;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t k) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (k + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

struct TrialOutcome {
    bool candidate = false;
    int z = 0;
    std::vector<i64> set;
};

TrialOutcome run_trial(int n, std::uint64_t seed, std::uint64_t k) {
    std::mt19937_64 rng(mix_seed(seed, k));
    bool allow_zero = n <= 3 || (k % 8 == 7);
    i64 window = std::max<i64>(2 * n, 8);
    auto cand = hunt_trial(rng, n, window, allow_zero);
    TrialOutcome out;
    if (!cand) return out;
    out.candidate = true;
    out.set = *cand;
    out.z = min_zero_sum(ElementSet::of_scalars(GroupContext::integers(), out.set)).z;
    return out;
}

}  // namespace

HuntResult hunt(int n, const HuntBudget& budget, std::uint64_t seed, int jobs) {
    if (n < 1) throw DomainError("bad_n", "hunt needs cardinality >= 1");
    HuntBudget b = budget;
    if (b.trials == 0 && b.seconds == 0) b.trials = 10000;

    HuntResult res;
    res.size = n;
    res.seed = seed;

    using clock = std::chrono::steady_clock;
    auto start = clock::now();
    auto expired = [&] {
        return b.seconds > 0 &&
               std::chrono::duration<double>(clock::now() - start).count() >= b.seconds;
    };

    struct Best {
        int z = 0;
        std::uint64_t trial = ~0ull;
        std::vector<i64> set;
    };

    if (jobs <= 1) {
        Best best;
        std::uint64_t k = 0;
        for (; (b.trials == 0 || k < b.trials) && !expired(); ++k) {
            auto out = run_trial(n, seed, k);
            if (!out.candidate) continue;
            ++res.candidates;
            if (out.z > best.z) best = {out.z, k, std::move(out.set)};
        }
        res.trials = k;
        res.best_z = best.z;
        res.best_set = std::move(best.set);
        return res;
    }

    std::vector<Best> best_by_worker(jobs);
    std::vector<std::uint64_t> trials_by_worker(jobs, 0), cand_by_worker(jobs, 0);
    std::vector<std::thread> workers;
    for (int w = 0; w < jobs; ++w)
        workers.emplace_back([&, w] {
            for (std::uint64_t k = w; (b.trials == 0 || k < b.trials) && !expired();
                 k += jobs) {
                ++trials_by_worker[w];
                auto out = run_trial(n, seed, k);
                if (!out.candidate) continue;
                ++cand_by_worker[w];
                auto& best = best_by_worker[w];
                if (out.z > best.z || (out.z == best.z && out.z > 0 && k < best.trial))
                    best = {out.z, k, std::move(out.set)};
            }
        });
    for (auto& t : workers) t.join();

    Best best;
    for (auto& bw : best_by_worker)
        if (bw.z > best.z || (bw.z == best.z && bw.z > 0 && bw.trial < best.trial))
            best = std::move(bw);
    for (int w = 0; w < jobs; ++w) {
        res.trials += trials_by_worker[w];
        res.candidates += cand_by_worker[w];
    }
    res.best_z = best.z;
    res.best_set = std::move(best.set);
    return res;
}

}  // namespace zs
