#include "cyclepack/verifier.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <cstdint>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "cyclepack/characterizer.hpp"
#include "cyclepack/families.hpp"
#include "cyclepack/graph6.hpp"
#include "cyclepack/independence.hpp"
#include "cyclepack/isomorphism.hpp"
#include "cyclepack/oracle.hpp"

namespace cyclepack {
namespace {

enum class Category { Vacuous, Confirmed, Exceptional, Skipped, Counterexample };

struct Outcome {
    Category category = Category::Vacuous;
    std::string reason;
};

std::string num(long long v) { return std::to_string(v); }

// Ground truth "does g have at least k disjoint cycles"; nullopt on budget.
std::optional<bool> packs_at_least(const Graph& g, int k, std::uint64_t budget) {
    if (k <= 0) return true;
    OracleOptions opt;
    opt.stop_at = k;
    opt.node_budget = budget;
    OracleResult res = oracle_max_packing(g, opt);
    if (res.status == OracleResult::Status::StopReached) return true;
    if (res.status == OracleResult::Status::Exact) return res.max_cycles >= k;
    return std::nullopt;
}

std::optional<int> exact_alpha(const Graph& g, std::uint64_t budget) {
    IndependenceResult res = independence_number(g, budget);
    if (res.status != IndependenceResult::Status::Exact) return std::nullopt;
    return res.alpha;
}

// Is h properly k-colorable? Backtracking with first-new-color symmetry
// pruning; nullopt when the node budget runs out.
std::optional<bool> colorable(const Graph& h, int k, std::uint64_t budget) {
    const int n = h.n();
    if (n == 0) return true;
    if (k <= 0) return false;
    if (k >= n) return true;
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return h.degree(a) > h.degree(b); });
    std::vector<int> color(n, -1);
    std::uint64_t nodes = 0;
    bool out_of_budget = false;
    auto rec = [&](auto&& self, int idx, int used) -> bool {
        if (idx == n) return true;
        if (++nodes > budget) {
            out_of_budget = true;
            return false;
        }
        int v = order[idx];
        int limit = std::min(used + 1, k);
        for (int c = 0; c < limit; ++c) {
            bool clash = false;
            for (int u = h.neighbors(v).first(); u >= 0 && !clash; u = h.neighbors(v).next(u))
                clash = color[u] == c;
            if (clash) continue;
            color[v] = c;
            if (self(self, idx + 1, std::max(used, c + 1))) return true;
            color[v] = -1;
            if (out_of_budget) return false;
        }
        return false;
    };
    bool ok = rec(rec, 0, 0);
    if (out_of_budget) return std::nullopt;
    return ok;
}

Outcome check_implication(const Graph& g, int k, bool hypothesis,
                          const std::string& hyp_text, const VerifyOptions& opts) {
    if (!hypothesis) return {Category::Vacuous, ""};
    auto truth = packs_at_least(g, k, opts.oracle_budget);
    if (!truth) return {Category::Skipped, "oracle budget exceeded"};
    if (*truth) return {Category::Confirmed, ""};
    return {Category::Counterexample, hyp_text + " hold but there are fewer than " +
                                          num(k) + " disjoint cycles"};
}

Outcome check_t1(const Graph& g, int k, const VerifyOptions& opts) {
    DegreeStats st = degree_stats(g);
    bool hyp = g.n() >= 3 * k && st.delta >= 2 * k;
    return check_implication(g, k, hyp,
                             "n=" + num(g.n()) + " >= 3k and delta=" + num(st.delta) +
                                 " >= 2k",
                             opts);
}

Outcome check_t4(const Graph& g, int k, const VerifyOptions& opts) {
    DegreeStats st = degree_stats(g);
    bool hyp = g.n() >= 3 * k && st.sigma2 >= 4 * k - 1;
    return check_implication(g, k, hyp,
                             "n=" + num(g.n()) + " >= 3k and sigma2=" + num(st.sigma2) +
                                 " >= 4k-1",
                             opts);
}

Outcome check_t2(const Graph& g, int k, const VerifyOptions& opts) {
    if (k < 2) return {Category::Vacuous, ""};
    HypothesisReport rep = check_hypotheses(g, k, opts.independence_budget);
    if (!rep.dirac_ii) return {Category::Vacuous, ""};
    if (!rep.alpha_known) return {Category::Skipped, "independence budget exceeded"};
    bool expected = rep.ch_i && rep.h3 && rep.h4;
    auto truth = packs_at_least(g, k, opts.oracle_budget);
    if (!truth) return {Category::Skipped, "oracle budget exceeded"};
    if (*truth == expected)
        return {rep.h4 ? Category::Confirmed : Category::Exceptional, ""};
    std::string have = *truth ? "has" : "lacks";
    return {Category::Counterexample,
            "delta=" + num(rep.delta) + " >= 2k-1 but the packing/characterization " +
                "biconditional fails: graph " + have + " " + num(k) +
                " disjoint cycles while n>=3k:" + (rep.ch_i ? "yes" : "no") +
                " alpha<=n-2k:" + (rep.h3 ? "yes" : "no") +
                " non-exceptional:" + (rep.h4 ? "yes" : "no")};
}

Outcome check_t9(const Graph& g, int k, const VerifyOptions& opts) {
    if (k < 3) return {Category::Vacuous, ""};
    HypothesisReport rep = check_hypotheses(g, k, opts.independence_budget);
    if (!rep.h1 || !rep.h2) return {Category::Vacuous, ""};
    if (!rep.alpha_known) return {Category::Skipped, "independence budget exceeded"};
    if (!rep.h3) return {Category::Vacuous, ""};
    bool exceptional = is_exceptional(g, k).has_value();
    auto truth = packs_at_least(g, k, opts.oracle_budget);
    if (!truth) return {Category::Skipped, "oracle budget exceeded"};
    if (exceptional)
        return *truth ? Outcome{Category::Counterexample,
                                "listed exceptional graph has " + num(k) +
                                    " disjoint cycles"}
                      : Outcome{Category::Exceptional, ""};
    if (*truth) return {Category::Confirmed, ""};
    return {Category::Counterexample,
            "n=" + num(rep.n) + " >= 3k+1, sigma2=" + num(rep.sigma2) +
                " >= 4k-3, alpha=" + num(rep.alpha) +
                " <= n-2k hold but there are fewer than " + num(k) +
                " disjoint cycles and the graph is not a listed exception"};
}

Outcome check_l16(const Graph& g, const VerifyOptions& opts) {
    if (g.n() < 6) return {Category::Vacuous, ""};
    DegreeStats st = degree_stats(g);
    if (st.sigma2 < 5) return {Category::Vacuous, ""};
    auto two = packs_at_least(g, 2, opts.oracle_budget);
    if (!two) return {Category::Skipped, "oracle budget exceeded"};
    if (*two) return {Category::Vacuous, ""};
    auto fam = classify_no_two_cycles(g);
    if (!fam)
        return {Category::Counterexample,
                "no two disjoint cycles but the reduction matches no catalogued shape"};
    if (fam->letter < 'a' || fam->letter > 'e')
        return {Category::Counterexample,
                "no two disjoint cycles but no catalogue letter applies"};
    if (auto ok = validate_family(g, *fam); !ok)
        return {Category::Counterexample, "family witness fails validation: " + ok.reason};
    return {Category::Confirmed, ""};
}

Outcome check_c14(const Graph& g, int k, const VerifyOptions& opts) {
    if (k < 1 || g.n() != 3 * k) return {Category::Vacuous, ""};
    DegreeStats st = degree_stats(g);
    if (st.delta < 2 * k - 1) return {Category::Vacuous, ""};  // complement max degree > k
    Graph co = complement(g);
    auto chrom = colorable(co, k, opts.coloring_budget);
    if (!chrom) return {Category::Skipped, "coloring budget exceeded"};
    if (!*chrom) return {Category::Vacuous, ""};  // complement chromatic number > k
    bool exceptional =
        k % 2 == 1 && is_isomorphic(g, named_family({FamilyKind::TwoKkJoinKkBar, k}));
    auto truth = packs_at_least(g, k, opts.oracle_budget);
    if (!truth) return {Category::Skipped, "oracle budget exceeded"};
    if (exceptional)
        return *truth ? Outcome{Category::Counterexample,
                                "the odd-k exceptional graph has a triangle partition"}
                      : Outcome{Category::Exceptional, ""};
    if (*truth) return {Category::Confirmed, ""};
    return {Category::Counterexample,
            "complement is " + num(k) + "-colorable with max degree <= k but the graph "
                "has no partition into " + num(k) + " triangles and is not the odd-k "
                "exception"};
}

Outcome check_h3(const Graph& g, int k, const VerifyOptions& opts) {
    auto truth = packs_at_least(g, k, opts.oracle_budget);
    if (!truth) return {Category::Skipped, "oracle budget exceeded"};
    if (!*truth) return {Category::Vacuous, ""};
    auto alpha = exact_alpha(g, opts.independence_budget);
    if (!alpha) return {Category::Skipped, "independence budget exceeded"};
    if (*alpha <= g.n() - 2 * k) return {Category::Confirmed, ""};
    return {Category::Counterexample, "has " + num(k) + " disjoint cycles yet alpha=" +
                                          num(*alpha) + " > n-2k=" + num(g.n() - 2 * k)};
}

std::uint64_t mix64(std::uint64_t x) {
    x ^= x >> 33;
    x *= 0xFF51AFD7ED558CCDull;
    x ^= x >> 33;
    x *= 0xC4CEB9FE1A85EC53ull;
    x ^= x >> 33;
    return x;
}

bool sampled_in(const Graph& g, const VerifyOptions& opts) {
    std::uint64_t h = opts.seed ^ (std::uint64_t(g.n()) << 56);
    for (char c : g.adjacency_bits()) h = mix64(h ^ std::uint64_t(std::uint8_t(c)));
    return int(h % 1024) < opts.keep_per_1024;
}

}  // namespace

std::string theorem_name(TheoremId id) {
    switch (id) {
        case TheoremId::T1: return "T1";
        case TheoremId::T2: return "T2";
        case TheoremId::T4: return "T4";
        case TheoremId::T9: return "T9";
        case TheoremId::L16: return "L16";
        case TheoremId::C14: return "C14";
        case TheoremId::H3Necessity: return "H3-necessity";
    }
    return "?";
}

std::optional<TheoremId> parse_theorem(const std::string& name) {
    std::string up;
    for (char c : name) up.push_back(char(std::toupper(static_cast<unsigned char>(c))));
    if (up == "T1") return TheoremId::T1;
    if (up == "T2") return TheoremId::T2;
    if (up == "T4") return TheoremId::T4;
    if (up == "T9") return TheoremId::T9;
    if (up == "L16") return TheoremId::L16;
    if (up == "C14") return TheoremId::C14;
    if (up == "H3" || up == "H3-NECESSITY") return TheoremId::H3Necessity;
    return std::nullopt;
}

VerifyReport verify(const std::vector<Graph>& stream, const TheoremCheck& check,
                    const VerifyOptions& opts) {
    VerifyReport rep;
    rep.id = check.id;
    rep.k = check.k;
    rep.mode = opts.mode;
    rep.seed = opts.seed;
    for (const Graph& g : stream) {
        if (opts.mode == VerifyMode::Sampled && !sampled_in(g, opts)) {
            ++rep.sampled_out;
            continue;
        }
        ++rep.examined;
        Outcome out;
        if (g.n() == 0) {
            out = {Category::Vacuous, ""};
        } else {
            switch (check.id) {
                case TheoremId::T1: out = check_t1(g, check.k, opts); break;
                case TheoremId::T2: out = check_t2(g, check.k, opts); break;
                case TheoremId::T4: out = check_t4(g, check.k, opts); break;
                case TheoremId::T9: out = check_t9(g, check.k, opts); break;
                case TheoremId::L16: out = check_l16(g, opts); break;
                case TheoremId::C14: out = check_c14(g, check.k, opts); break;
                case TheoremId::H3Necessity: out = check_h3(g, check.k, opts); break;
            }
        }
        switch (out.category) {
            case Category::Vacuous: ++rep.vacuous; break;
            case Category::Confirmed: ++rep.confirmed; break;
            case Category::Exceptional: ++rep.exceptional; break;
            case Category::Skipped: ++rep.skipped; break;
            case Category::Counterexample:
                rep.counterexamples.push_back({emit_graph6(g), out.reason});
                break;
        }
    }
    return rep;
}

std::string VerifyReport::summary() const {
    std::ostringstream os;
    os << "check " << theorem_name(id) << " k=" << k << " mode="
       << (mode == VerifyMode::Exhaustive ? "exhaustive" : "sampled");
    if (mode == VerifyMode::Sampled) {
        os << " seed=0x" << std::hex << seed << std::dec;
    }
    os << "\n";
    os << "examined=" << examined << " confirmed=" << confirmed << " exceptional="
       << exceptional << " hypothesis-failed=" << vacuous << " skipped=" << skipped;
    if (mode == VerifyMode::Sampled) os << " sampled-out=" << sampled_out;
    os << "\n";
    os << "counterexamples=" << counterexamples.size() << "\n";
    for (const auto& ce : counterexamples)
        os << "  " << ce.graph6 << "  " << ce.reason << "\n";
    os << (pass() ? "PASS" : "FAIL") << "\n";
    return os.str();
}

std::vector<std::string> VerifyReport::machine_lines() const {
    std::vector<std::string> lines;
    lines.reserve(counterexamples.size());
    for (const auto& ce : counterexamples)
        lines.push_back(ce.graph6 + "\t" + theorem_name(id) + "\t" + ce.reason);
    return lines;
}

std::vector<Graph> enumerate_graphs(int n, const EnumerationFilter& filter) {
    if (n < 0 || n > 10)
        throw std::invalid_argument(
            "enumerate_graphs: internal enumeration supports 0 <= n <= 10");
    std::vector<Graph> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }

    std::array<std::uint16_t, 11> adj{};
    std::array<int, 11> deg{};
    std::unordered_set<std::uint64_t> seen;

    auto leaf = [&]() {
        if (filter.min_sigma2 > 0) {
            for (int v = 0; v < n; ++v)
                for (int u = v + 1; u < n; ++u)
                    if (!(adj[v] >> u & 1u) && deg[v] + deg[u] < filter.min_sigma2)
                        return;
        }
        if (!seen.insert(canonical_key(adj.data(), n)).second) return;
        std::vector<std::pair<int, int>> edges;
        for (int v = 0; v < n; ++v)
            for (int u = v + 1; u < n; ++u)
                if (adj[v] >> u & 1u) edges.emplace_back(v, u);
        out.emplace_back(n, edges);
    };

    auto rec = [&](auto&& self, int v) -> void {
        if (v == n) {
            leaf();
            return;
        }
        const int later = n - 1 - v;
        for (std::uint32_t m = 0; m < (1u << later); ++m) {
            const int pc = std::popcount(m);
            const int dv = deg[v] + pc;
            if (dv < filter.min_degree || dv > filter.max_degree) continue;
            bool ok = true;
            for (int u = v + 1; u < n && ok; ++u) {
                const int du = deg[u] + (m >> (u - v - 1) & 1u);
                if (du > filter.max_degree) ok = false;
                // All edges at u still unassigned lie in rows v+1..n-2.
                if (du + (n - v - 2) < filter.min_degree) ok = false;
            }
            if (!ok) continue;
            deg[v] = dv;
            adj[v] |= std::uint16_t(m << (v + 1));
            for (std::uint32_t rest = m; rest; rest &= rest - 1) {
                const int u = v + 1 + std::countr_zero(rest);
                ++deg[u];
                adj[u] |= std::uint16_t(1) << v;
            }
            self(self, v + 1);
            deg[v] -= pc;
            adj[v] &= std::uint16_t((1u << (v + 1)) - 1);
            for (std::uint32_t rest = m; rest; rest &= rest - 1) {
                const int u = v + 1 + std::countr_zero(rest);
                --deg[u];
                adj[u] &= std::uint16_t(~(1u << v));
            }
        }
    };
    rec(rec, 0);
    return out;
}

std::vector<Graph> random_graphs(int n, int count, int edge_per_1024,
                                 std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("random_graphs: n must be nonnegative");
    std::mt19937_64 rng(seed);
    std::vector<Graph> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) {
        std::vector<std::pair<int, int>> edges;
        for (int v = 1; v < n; ++v)
            for (int u = 0; u < v; ++u)
                if (int(rng() & 1023) < edge_per_1024) edges.emplace_back(u, v);
        out.emplace_back(n, edges);
    }
    return out;
}

}  // namespace cyclepack
