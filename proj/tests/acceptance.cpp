// Acceptance suite: one line per criterion, nonzero exit when any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "helpers.hpp"
#include "zs/families.hpp"
#include "zs/tree.hpp"
#include "zs/zerosum.hpp"

using namespace zs;

namespace {

int g_failures = 0;

void criterion(const std::string& label, const std::string& text, double limit_s,
               const std::function<std::string()>& body) {
    using clock = std::chrono::steady_clock;
    auto start = clock::now();
    std::string detail;
    bool ok = true;
    try {
        detail = body();
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    double secs = std::chrono::duration<double>(clock::now() - start).count();
    if (ok && limit_s > 0 && secs > limit_s) {
        ok = false;
        detail += " [exceeded " + std::to_string(limit_s) + " s limit]";
    }
    if (!ok) ++g_failures;
    std::printf("%s criterion %s: %s (%s; %.2fs)\n", ok ? "PASS" : "FAIL", label.c_str(),
                text.c_str(), detail.c_str(), secs);
    std::fflush(stdout);
}

void expect(bool cond, const std::string& msg) {
    if (!cond) throw std::runtime_error(msg);
}

const ClaimVerdict& verdict(const ClassificationReport& rep, const std::string& id) {
    for (const auto& v : rep.verdicts)
        if (v.id == id) return v;
    throw std::runtime_error("report lacks claim '" + id + "'");
}

std::string describe_all(const std::vector<CanonicalSet>& sets) {
    std::string out;
    for (const auto& s : sets) out += s.describe() + " ";
    return out;
}

}  // namespace

int main() {
    criterion("1", "doubling family: z(D_n) = n with an n-element zero-sum witness, n=2..8", 30,
              [] {
                  for (int n = 2; n <= 8; ++n) {
                      auto D = example2_set(n);
                      auto w = min_zero_sum(D);
                      expect(w.z == n, "z(D_" + std::to_string(n) + ") != n");
                      expect(w.witness.has_value(), "missing witness");
                      expect((int)w.witness->size() == n, "witness cardinality != n");
                      expect(D.contains_all(*w.witness), "witness not a subset");
                      expect(is_identity(D.ctx(), set_sum(*w.witness)), "witness sum != 0");
                  }
                  return std::string("n=2..8 exact");
              });

    criterion("2", "cyclic family: z = n in Z_{2^n-1}, n=2..12", 5, [] {
        for (int n = 2; n <= 12; ++n) {
            auto D = example1_set(n);
            auto w = min_zero_sum(D);
            expect(w.z == n, "z != n at n=" + std::to_string(n));
            expect(w.witness && is_identity(D.ctx(), set_sum(*w.witness)), "bad witness");
        }
        return std::string("n=2..12 exact");
    });

    criterion("3", "sizes <= 3, window 10: every decomposable set contains zero", 0, [] {
        std::uint64_t total = 0;
        for (int n = 1; n <= 3; ++n) {
            auto rep = classify(n, 10);
            const auto& v = verdict(rep, "size_le3_contains_zero");
            expect(v.counterexample_free && v.counterexamples.empty(),
                   "counterexample: " + describe_all(v.counterexamples));
            total += rep.decomposable_count;
        }
        return std::to_string(total) + " sets, zero counterexamples";
    });

    criterion("4", "size 4 window 12: zero-free sets are exactly {-2,-1,1,2}; sizes 4,5 have z<=2",
              0, [] {
                  auto rep4 = classify(4, 12);
                  const auto& uniq = verdict(rep4, "size4_zero_free_unique");
                  expect(uniq.counterexample_free, "extra zero-free 4-set found");
                  expect(uniq.hypothesis_sets.size() == 1 &&
                             uniq.hypothesis_sets[0] == canonicalize(std::vector<i64>{-2, -1, 1, 2}),
                         "the doubling family was not the unique zero-free 4-set");
                  expect(verdict(rep4, "size45_z_le2").counterexample_free, "a 4-set has z > 2");
                  auto rep5 = classify(5, 12);
                  expect(verdict(rep5, "size45_z_le2").counterexample_free, "a 5-set has z > 2");
                  return std::string("unique family confirmed; z <= 2 holds");
              });

    criterion("5", "size 5 window 12, zero-free: exactly the three listed canonical families", 0,
              [] {
                  const std::vector<CanonicalSet> listed = {
                      canonicalize(std::vector<i64>{-3, -2, -1, 1, 2}),
                      canonicalize(std::vector<i64>{-4, -2, -1, 1, 2}),
                      canonicalize(std::vector<i64>{-3, -2, -1, 2, 4}),
                  };
                  auto rep = classify(5, 12);
                  const auto& v = verdict(rep, "size5_zero_free_families");
                  std::vector<CanonicalSet> found = v.hypothesis_sets;
                  std::vector<CanonicalSet> want = listed;
                  std::sort(found.begin(), found.end());
                  std::sort(want.begin(), want.end());
                  expect(found == want,
                         "zero-free 5-set families in window are " + describe_all(found) +
                             "but the listed families are " + describe_all(want));
                  return std::string("exactly the three families");
              });

    criterion("6", "size 6 window 12: z>=3 forces {1,2,4,-3,-5,-6} with z=3; size 7 window 10: "
                   "max z = 3", 120, [] {
        auto rep6 = classify(6, 12);
        const auto& v6 = verdict(rep6, "size6_highz_unique");
        expect(v6.counterexample_free, "counterexample: " + describe_all(v6.counterexamples));
        expect(v6.hypothesis_sets.size() == 1 &&
                   v6.hypothesis_sets[0] == canonicalize(std::vector<i64>{1, 2, 4, -3, -5, -6}),
               "high-z 6-set family wrong or missing");
        auto rep7 = classify(7, 10);
        expect(verdict(rep7, "size7_z_le3").counterexample_free, "a 7-set has z > 3");
        expect(rep7.max_z == 3, "max z at size 7 is " + std::to_string(rep7.max_z));
        return std::string("unique z=3 family; size-7 max z = 3");
    });

    criterion("7", "certificates verify on 500 random decomposable sets plus the named families",
              60, [] {
                  std::mt19937_64 rng(20260811);
                  std::uint64_t checked = 0;
                  for (int it = 0; it < 250; ++it) {
                      auto D = zstest::random_decomposable(rng, GroupContext::integers(), 10, 14);
                      expect(verify_certificate(D, certify(D)), "Z certificate failed");
                      ++checked;
                  }
                  for (int it = 0; it < 250; ++it) {
                      auto ctx = GroupContext::cyclic(5 + (i64)(rng() % 60));
                      auto D = zstest::random_decomposable(rng, ctx, 10, 0);
                      expect(verify_certificate(D, certify(D)), "Z_m certificate failed");
                      ++checked;
                  }
                  for (int n = 1; n <= 6; ++n) {
                      auto D = example2_set(n);
                      expect(verify_certificate(D, certify(D)), "doubling family certificate");
                      ++checked;
                  }
                  for (int n = 2; n <= 8; ++n) {
                      auto D = example1_set(n);
                      expect(verify_certificate(D, certify(D)), "cyclic family certificate");
                      ++checked;
                  }
                  return std::to_string(checked) + " certificates, zero failures";
              });

    criterion("8", "collision oracle: 1000 random trees, pair satisfies f(x)=f(y)=meet(x,y)", 0,
              [] {
                  std::mt19937_64 rng(424242);
                  std::uint64_t cross_checked = 0;
                  for (int it = 0; it < 1000; ++it) {
                      auto T = zstest::random_tree(rng, 1000);
                      if (T.size() < 3) continue;
                      auto f = zstest::random_regressive(rng, T);
                      auto [x, y] = regressive_collision(T, f);
                      expect(x != y && T.is_leaf(x) && T.is_leaf(y), "not two distinct leaves");
                      int m = T.meet(x, y);
                      expect(f[x] == m && f[y] == m, "returned pair violates the property");
                      if (T.leaves().size() <= 64) {
                          auto all = zstest::brute_collisions(T, f);
                          bool listed = false;
                          for (auto [px, py] : all)
                              if ((px == x && py == y) || (px == y && py == x)) listed = true;
                          expect(listed, "pair not confirmed by the brute-force scan");
                          ++cross_checked;
                      }
                  }
                  return "1000 trees, " + std::to_string(cross_checked) + " brute cross-checks";
              });

    criterion("9", "minimum zero-sum matches the full-scan oracle on 300 sets, all group kinds",
              0, [] {
                  std::mt19937_64 rng(99);
                  std::vector<GroupContext> ctxs = {
                      GroupContext::integers(), GroupContext::int_vectors(3),
                      GroupContext::cyclic(41), GroupContext::boolean(6)};
                  int count = 0;
                  while (count < 300) {
                      const auto& ctx = ctxs[count % ctxs.size()];
                      auto S = zstest::random_set(rng, ctx, 1 + (int)(rng() % 12), 10);
                      auto got = min_zero_sum(S);
                      auto want = zstest::naive_min_zero_sum(S);
                      expect(got.z == want.z, "z mismatch vs oracle");
                      expect(got.witness.has_value() == want.witness.has_value(),
                             "witness presence mismatch");
                      if (got.witness) expect(*got.witness == *want.witness, "witness mismatch");
                      ++count;
                  }
                  return std::string("300 sets agree");
              });

    criterion("10", "line reduction preserves z on 200 random vector sets", 0, [] {
        std::mt19937_64 rng(606060);
        for (int it = 0; it < 200; ++it) {
            int k = 1 + (int)(rng() % 3);
            auto D = zstest::random_set(rng, GroupContext::int_vectors(k),
                                        1 + (int)(rng() % 8), 3);
            auto red = reduce_to_line(D);
            expect(red.image.size() == D.size(), "image lost elements");
            int z_line = min_zero_sum(red.image).z;
            int z_vec = zstest::naive_min_zero_sum(D).z;
            expect(z_line == z_vec, "z changed under reduction");
        }
        return std::string("200 reductions, z preserved");
    });

    criterion("11", "weight identities on every minimal decomposable set found at sizes <= 6", 0,
              [] {
                  const i64 windows[7] = {0, 10, 10, 10, 12, 12, 12};
                  std::uint64_t minimal_count = 0;
                  for (int n = 1; n <= 6; ++n) {
                      for (const auto& c : enumerate_decomposable(n, windows[n])) {
                          auto D = to_element_set(c);
                          if (!is_minimal_decomposable(D)) continue;
                          ++minimal_count;
                          auto f = weight_function(D);
                          i64 total = 0;
                          GroupElement acc = identity(D.ctx());
                          for (std::size_t i = 0; i < D.size(); ++i) {
                              expect(f.weights[i] >= 0, "negative weight");
                              total += f.weights[i];
                              acc = element_add(D.ctx(), acc,
                                                scalar_mul(D.ctx(), f.weights[i], D[i]));
                          }
                          expect(total == (i64)D.size(), "weight total != |D|");
                          expect(is_identity(D.ctx(), acc), "weighted sum != 0");
                      }
                  }
                  return std::to_string(minimal_count) + " minimal sets, identities exact";
              });

    criterion("12", "boolean shortcut: 100 random decomposable subsets of Z_2^8", 0, [] {
        std::mt19937_64 rng(8888);
        auto B8 = GroupContext::boolean(8);
        for (int it = 0; it < 100; ++it) {
            auto D = zstest::random_decomposable(rng, B8, 14, 1);
            auto T = boolean_zero_sum(D);
            expect(T.size() >= 1 && T.size() <= 3, "|T| out of range");
            expect(D.contains_all(T), "T not a subset");
            expect(is_identity(B8, set_sum(T)), "T does not sum to zero");
        }
        return std::string("100 subsets, shortcut holds");
    });

    criterion("note", "hunt rediscovers ratio 1/2 at sizes 4 and 6 within 10-second budgets", 20,
              [] {
                  using clock = std::chrono::steady_clock;
                  for (int n : {4, 6}) {
                      auto start = clock::now();
                      auto res = hunt(n, HuntBudget{n == 4 ? 20000u : 60000u, 0}, 1);
                      double secs = std::chrono::duration<double>(clock::now() - start).count();
                      expect(secs < 10, "hunt exceeded its 10-second budget");
                      expect(res.best_z * 2 == n, "hunt missed the ratio-1/2 family at n=" +
                                                      std::to_string(n));
                  }
                  return std::string("both sizes reach z/|D| = 1/2");
              });

    if (g_failures == 0) {
        std::printf("all acceptance criteria passed\n");
    } else {
        std::printf("%d criterion(s) failed\n", g_failures);
    }
    return g_failures == 0 ? 0 : 1;
}
