#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "cyclepack/graph.hpp"

namespace cyclepack {

// The statements the verifier can check. Per graph g with parameter k:
//   T1           n >= 3k and delta >= 2k imply k disjoint cycles.
//   T2           for k >= 2 and delta >= 2k-1: k disjoint cycles iff
//                n >= 3k, alpha <= n-2k, and g avoids the k-specific
//                exceptional graphs (wheels for k = 2; the join of two
//                complete k-graphs with k extra independent vertices for odd
//                k with n = 3k).
//   T4           n >= 3k and sigma2 >= 4k-1 imply k disjoint cycles.
//   T9           for k >= 3: n >= 3k+1, sigma2 >= 4k-3 and alpha <= n-2k
//                imply k disjoint cycles, except exactly two graphs at k = 3.
//   L16          n >= 6, sigma2 >= 5 and no two disjoint cycles imply the
//                reduction lands in the lettered catalogue ('a'..'e').
//   C14          for n = 3k with max complement degree <= k and complement
//                chromatic number <= k: a partition into k triangles exists
//                iff not (k odd and g is the join of two complete k-graphs
//                with k extra independent vertices).
//   H3Necessity  k disjoint cycles imply alpha <= n - 2k.
enum class TheoremId { T1, T2, T4, T9, L16, C14, H3Necessity };

std::string theorem_name(TheoremId id);
std::optional<TheoremId> parse_theorem(const std::string& name);

struct TheoremCheck {
    TheoremId id = TheoremId::T1;
    int k = 2;
};

enum class VerifyMode { Exhaustive, Sampled };

inline constexpr std::uint64_t kDefaultVerifySeed = 0x9E3779B97F4A7C15ull;

struct VerifyOptions {
    VerifyMode mode = VerifyMode::Exhaustive;
    // Sampled mode keeps a graph iff a seeded hash of its adjacency bits
    // falls under keep_per_1024; deterministic and order-independent.
    std::uint64_t seed = kDefaultVerifySeed;
    int keep_per_1024 = 256;
    std::uint64_t oracle_budget = 50'000'000;
    std::uint64_t independence_budget = 10'000'000;
    std::uint64_t coloring_budget = 2'000'000;
};

struct Counterexample {
    std::string graph6;
    std::string reason;
};

struct VerifyReport {
    TheoremId id = TheoremId::T1;
    int k = 0;
    VerifyMode mode = VerifyMode::Exhaustive;
    std::uint64_t seed = kDefaultVerifySeed;

    std::uint64_t examined = 0;     // graphs actually evaluated
    std::uint64_t sampled_out = 0;  // left out by sampled mode
    std::uint64_t vacuous = 0;      // hypotheses not satisfied
    std::uint64_t confirmed = 0;    // conclusion verified
    std::uint64_t exceptional = 0;  // matched a stated exceptional family
    std::uint64_t skipped = 0;      // ground truth out of budget; never a pass
    std::vector<Counterexample> counterexamples;

    bool pass() const { return counterexamples.empty(); }
    // Multi-line human-readable report; embeds the seed for replay.
    std::string summary() const;
    // One line per counterexample: graph6 <TAB> theorem id <TAB> reason.
    std::vector<std::string> machine_lines() const;
};

// Evaluates the check on every graph of the stream (or the seeded sample of
// it). Deterministic for a fixed stream; independent of stream order as a
// multiset of labeled graphs. Budget-limited ground truth marks a graph
// skipped, never passed.
VerifyReport verify(const std::vector<Graph>& stream, const TheoremCheck& check,
                    const VerifyOptions& opts = {});

struct EnumerationFilter {
    int min_degree = 0;
    int max_degree = std::numeric_limits<int>::max();
    int min_sigma2 = 0;
};

// Every isomorphism class on n vertices meeting the filter, exactly once, in
// a deterministic order (first labeled representative in row-enumeration
// order). Labeled iteration with degree pruning and canonical-key dedup;
// intended for n <= 8, tolerated through n = 10 where the filter keeps the
// labeled space tractable. Throws std::invalid_argument outside 0 <= n <= 10.
std::vector<Graph> enumerate_graphs(int n, const EnumerationFilter& filter = {});

// Deterministic stream of `count` random graphs on n vertices; each edge is
// present when the next 10 bits of the generator fall under edge_per_1024.
std::vector<Graph> random_graphs(int n, int count, int edge_per_1024,
                                 std::uint64_t seed = kDefaultVerifySeed);

}  // namespace cyclepack
