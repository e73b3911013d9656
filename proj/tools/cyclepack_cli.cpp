#include <algorithm>
#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "cyclepack/characterizer.hpp"
#include "cyclepack/equitable.hpp"
#include "cyclepack/families.hpp"
#include "cyclepack/graph.hpp"
#include "cyclepack/graph6.hpp"
#include "cyclepack/independence.hpp"
#include "cyclepack/oracle.hpp"
#include "cyclepack/packer.hpp"
#include "cyclepack/packing.hpp"
#include "cyclepack/verifier.hpp"

namespace {

using namespace cyclepack;

// Exit codes: 0 verdict reached / success, 1 negative verdict or
// counterexample, 2 usage or input error, 3 budget-undetermined.
enum ExitCode { kOk = 0, kNegative = 1, kUsage = 2, kUndetermined = 3 };

int combine(int a, int b) { return std::max(a, b); }

struct Io {
    std::string format = "graph6";  // graph6 | edgelist
    std::string output = "text";    // text | machine
    std::string path = "-";         // input file, '-' = stdin
    std::uint64_t budget = 0;       // 0 = library defaults
};

std::uint64_t effective_budget(const Io& io, std::uint64_t fallback) {
    if (io.budget > 0) return io.budget;
    if (const char* env = std::getenv("CYCLEPACK_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return fallback;
}

std::string read_all(std::istream& in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Reads the input as a list of graphs: one per graph6 line, or the whole
// text as a single edge list.
std::vector<Graph> read_graphs(const Io& io) {
    std::ifstream file;
    std::istream* in = &std::cin;
    if (io.path != "-") {
        file.open(io.path);
        if (!file) throw std::runtime_error("cannot open input file: " + io.path);
        in = &file;
    }
    std::vector<Graph> graphs;
    if (io.format == "edgelist") {
        graphs.push_back(parse_edge_list(read_all(*in)));
        return graphs;
    }
    std::string line;
    while (std::getline(*in, line)) {
        while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
            line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        graphs.push_back(parse_graph6(line));
    }
    return graphs;
}

std::string display_family(FamilyKind kind) {
    if (kind == FamilyKind::Y1) return "Y1";
    if (kind == FamilyKind::Y2) return "Y2";
    return family_name(kind);
}

std::string join_cycle(const std::vector<int>& cycle, const char* sep) {
    std::string s;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(cycle[i]);
    }
    return s;
}

std::string join_cycles(const std::vector<std::vector<int>>& cycles) {
    if (cycles.empty()) return "-";
    std::string s;
    for (std::size_t i = 0; i < cycles.size(); ++i) {
        if (i) s += ';';
        s += join_cycle(cycles[i], ",");
    }
    return s;
}

std::string join_set(const VertexSet& set, const char* sep) {
    std::string s;
    for (int v = set.first(); v >= 0; v = set.next(v)) {
        if (!s.empty()) s += sep;
        s += std::to_string(v);
    }
    return s;
}

// ---- pack ------------------------------------------------------------------

int run_pack(const Io& io, const Graph& g, int k, const std::string& g6) {
    PackerBudgets budgets;
    budgets.exchange_nodes = effective_budget(io, budgets.exchange_nodes);
    PackerResult result = find_disjoint_cycles(g, k, budgets);
    const bool machine = io.output == "machine";
    std::ostream& os = std::cout;
    if (auto* p = std::get_if<Packing>(&result)) {
        if (machine) {
            os << g6 << "\tpack\tpacking\t" << join_cycles(p->packing.cycles) << "\n";
        } else {
            for (const auto& c : p->packing.cycles) os << "cycle: " << join_cycle(c, " ") << "\n";
            if (p->packing.remainder.count() > 0)
                os << "remainder: " << join_set(p->packing.remainder, " ") << "\n";
        }
        return kOk;
    }
    if (auto* s = std::get_if<IndependentSetCertificate>(&result)) {
        long long threshold = g.n() - 2LL * k;
        if (machine)
            os << g6 << "\tpack\tindependent-set\t" << join_set(s->set, ",") << "\n";
        else
            os << "independent set: " << join_set(s->set, " ") << " (size "
               << s->set.count() << " > n-2k = " << threshold << ")\n";
        return kNegative;
    }
    if (auto* e = std::get_if<ExceptionalGraph>(&result)) {
        if (machine)
            os << g6 << "\tpack\texceptional\t" << display_family(e->kind) << "\n";
        else
            os << "exceptional: " << display_family(e->kind) << "\n";
        return kNegative;
    }
    if (auto* h = std::get_if<HypothesisViolation>(&result)) {
        if (machine)
            os << g6 << "\tpack\thypothesis-violation\t" << h->hypothesis << "\tobserved="
               << h->observed << "\tbound=" << h->bound << "\n";
        else
            os << "hypothesis violated: " << h->hypothesis << " (observed " << h->observed
               << ", required " << h->bound << ")\n";
        return kNegative;
    }
    const auto& c = std::get<CandidateCounterexample>(result);
    if (machine) {
        os << g6 << "\tpack\tcandidate\t" << join_cycles(c.packing.cycles)
           << "\texhaustive=" << (c.exhaustive ? 1 : 0) << "\tnote=" << c.note << "\n";
    } else {
        os << "candidate counterexample: " << c.packing.cycles.size()
           << " cycles found, k=" << k << " not reached\n";
        for (const auto& cyc : c.packing.cycles) os << "cycle: " << join_cycle(cyc, " ") << "\n";
        os << "exhaustive: " << (c.exhaustive ? "yes" : "no") << "\n";
        os << "note: " << c.note << "\n";
    }
    return kUndetermined;
}

// ---- decide ----------------------------------------------------------------

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::HasKCycles: return "HasKCycles";
        case Verdict::NoKCycles: return "NoKCycles";
        case Verdict::Unknown: return "Unknown";
    }
    return "?";
}

std::string join_justification(const std::vector<std::string>& parts) {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += "; ";
        s += parts[i];
    }
    return s;
}

int run_decide(const Io& io, const Graph& g, int k, const std::string& g6) {
    DecideOptions opts;
    opts.oracle_nodes = effective_budget(io, opts.oracle_nodes);
    opts.independence_nodes = effective_budget(io, opts.independence_nodes);
    Decision d = decide(g, k, opts);
    if (io.output == "machine")
        std::cout << g6 << "\tdecide\t" << verdict_name(d.verdict) << "\t"
                  << join_justification(d.justification) << "\n";
    else
        std::cout << "verdict: " << verdict_name(d.verdict) << "\n"
                  << "justification: " << join_justification(d.justification) << "\n";
    switch (d.verdict) {
        case Verdict::HasKCycles: return kOk;
        case Verdict::NoKCycles: return kNegative;
        case Verdict::Unknown: return kUndetermined;
    }
    return kUsage;
}

// ---- oracle ----------------------------------------------------------------

int run_oracle(const Io& io, const Graph& g, int stop_at, const std::string& g6) {
    OracleOptions opts;
    opts.stop_at = stop_at;
    opts.node_budget = effective_budget(io, kDefaultOracleBudget);
    OracleResult res = oracle_max_packing(g, opts);
    const char* status = res.status == OracleResult::Status::Exact         ? "exact"
                         : res.status == OracleResult::Status::StopReached ? "stop-reached"
                                                                           : "budget-exceeded";
    if (io.output == "machine") {
        std::cout << g6 << "\toracle\t" << status << "\tmax=" << res.max_cycles << "\t"
                  << join_cycles(res.witness) << "\n";
    } else {
        std::cout << "status: " << status << "\n"
                  << "max cycles: " << res.max_cycles << "\n";
        for (const auto& c : res.witness) std::cout << "cycle: " << join_cycle(c, " ") << "\n";
    }
    return res.status == OracleResult::Status::BudgetExceeded ? kUndetermined : kOk;
}

// ---- stats -----------------------------------------------------------------

int run_stats(const Io& io, const Graph& g, const std::string& g6) {
    DegreeStats st = degree_stats(g);
    IndependenceResult alpha = independence_number(
        g, effective_budget(io, kDefaultIndependenceBudget));
    std::string alpha_str = std::to_string(alpha.alpha);
    alpha_str += alpha.status == IndependenceResult::Status::Exact ? " (exact)" : " (lower bound)";
    std::string sigma2 = st.sigma2 == DegreeStats::sigma2_infinity
                             ? "infinity"
                             : std::to_string(st.sigma2);
    std::string theta_str = st.theta == DegreeStats::theta_undefined
                                ? "undefined"
                                : std::to_string(st.theta);
    if (io.output == "machine") {
        std::cout << g6 << "\tstats\tn=" << g.n() << "\tm=" << g.edge_count() << "\tdelta="
                  << st.delta << "\tmax-degree=" << st.max_degree << "\tsigma2=" << sigma2
                  << "\ttheta=" << theta_str << "\talpha=" << alpha.alpha
                  << (alpha.status == IndependenceResult::Status::Exact ? "" : "+") << "\n";
    } else {
        std::cout << "n: " << g.n() << "\n"
                  << "edges: " << g.edge_count() << "\n"
                  << "delta: " << st.delta << "\n"
                  << "max degree: " << st.max_degree << "\n"
                  << "sigma2: " << sigma2 << "\n"
                  << "theta: " << theta_str << "\n"
                  << "alpha: " << alpha_str << "\n";
    }
    return kOk;
}

// ---- gen -------------------------------------------------------------------

std::optional<FamilyKind> parse_family(std::string name) {
    for (char& c : name) {
        c = char(std::tolower(static_cast<unsigned char>(c)));
        if (c == '_') c = '-';
    }
    for (FamilyKind kind :
         {FamilyKind::Y1, FamilyKind::Y2, FamilyKind::Gk, FamilyKind::GkExtended,
          FamilyKind::C5BlowupK3bar, FamilyKind::C5BlowupExtended, FamilyKind::Hsharp,
          FamilyKind::TwoKkJoinKkBar, FamilyKind::Wheel, FamilyKind::CompleteK,
          FamilyKind::CompleteBipartite, FamilyKind::Cycle, FamilyKind::KkkPlusKk})
        if (family_name(kind) == name) return kind;
    return std::nullopt;
}

// ---- verify ----------------------------------------------------------------

int run_verify(const Io& io, const std::vector<Graph>& graphs, const std::string& theorem,
               int k, const std::string& mode) {
    auto id = parse_theorem(theorem);
    if (!id) {
        std::cerr << "error: unknown theorem id '" << theorem << "'\n";
        return kUsage;
    }
    TheoremCheck check{*id, k};
    VerifyOptions opts;
    if (mode == "sampled")
        opts.mode = VerifyMode::Sampled;
    else if (mode != "exhaustive") {
        std::cerr << "error: mode must be 'exhaustive' or 'sampled'\n";
        return kUsage;
    }
    opts.oracle_budget = effective_budget(io, opts.oracle_budget);
    opts.independence_budget = effective_budget(io, opts.independence_budget);
    VerifyReport rep = verify(graphs, check, opts);
    if (io.output == "machine") {
        for (const auto& line : rep.machine_lines()) std::cout << line << "\n";
    } else {
        std::cout << rep.summary();
    }
    if (!rep.pass()) return kNegative;
    if (rep.skipped > 0) return kUndetermined;
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"disjoint cycle packing toolkit"};
    app.require_subcommand(1);

    Io io;
    app.add_option("--format", io.format, "input format: graph6 (one per line) or edgelist")
        ->check(CLI::IsMember({"graph6", "edgelist"}))
        ->capture_default_str();
    app.add_option("--output", io.output, "output format: text or machine (tab-separated)")
        ->check(CLI::IsMember({"text", "machine"}))
        ->capture_default_str();
    app.add_option("--budget", io.budget,
                   "search node budget override (also via CYCLEPACK_BUDGET)");

    int k = 1;
    int stop_at = 0;
    std::string input_path = "-";
    std::string theorem = "T9";
    std::string mode = "exhaustive";
    std::string family;
    int fam_n = 0, fam_k = 0, fam_a = 0, fam_b = 0;

    CLI::App* pack = app.add_subcommand("pack", "find k disjoint cycles or a certificate");
    pack->fallthrough();
    pack->add_option("-k,--cycles", k, "number of cycles")->required();
    pack->add_option("input", input_path, "input file ('-' = stdin)");

    CLI::App* decide_cmd = app.add_subcommand("decide", "verdict on k disjoint cycles");
    decide_cmd->fallthrough();
    decide_cmd->add_option("-k,--cycles", k, "number of cycles")->required();
    decide_cmd->add_option("input", input_path, "input file ('-' = stdin)");

    CLI::App* oracle_cmd = app.add_subcommand("oracle", "exact maximum cycle packing");
    oracle_cmd->fallthrough();
    oracle_cmd->add_option("--stop-at", stop_at, "stop when this many cycles are found");
    oracle_cmd->add_option("input", input_path, "input file ('-' = stdin)");

    CLI::App* stats = app.add_subcommand("stats", "degree and independence statistics");
    stats->fallthrough();
    stats->add_option("input", input_path, "input file ('-' = stdin)");

    CLI::App* gen = app.add_subcommand("gen", "emit a named family as graph6");
    gen->fallthrough();
    gen->add_option("--family", family, "family name (e.g. Y1, complete, gk, wheel)")
        ->required();
    gen->add_option("-n", fam_n, "order parameter (wheel, complete, cycle)");
    gen->add_option("-k", fam_k, "k parameter (gk, hsharp, ...)");
    gen->add_option("-a", fam_a, "first extra parameter");
    gen->add_option("-b", fam_b, "second extra parameter");

    CLI::App* verify_cmd = app.add_subcommand("verify", "check a statement over a graph stream");
    verify_cmd->fallthrough();
    verify_cmd->add_option("--theorem", theorem, "one of T1 T2 T4 T9 L16 C14 H3-necessity")
        ->required();
    verify_cmd->add_option("-k,--cycles", k, "parameter k");
    verify_cmd->add_option("--mode", mode, "exhaustive or sampled")->capture_default_str();
    verify_cmd->add_option("input", input_path, "input file ('-' = stdin)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);  // prints help or the error message
        return rc == 0 ? kOk : kUsage;
    }
    io.path = input_path;

    try {
        if (gen->parsed()) {
            auto kind = parse_family(family);
            if (!kind) {
                std::cerr << "error: unknown family '" << family << "'\n";
                return kUsage;
            }
            FamilySpec spec{*kind, 0, 0};
            if (fam_k > 0) spec.a = fam_k;
            if (fam_n > 0) spec.a = fam_n;
            if (fam_a > 0) spec.a = fam_a;
            if (fam_b > 0) spec.b = fam_b;
            Graph g = named_family(spec);
            if (io.format == "edgelist")
                std::cout << emit_edge_list(g);
            else
                std::cout << emit_graph6(g) << "\n";
            return kOk;
        }

        std::vector<Graph> graphs = read_graphs(io);
        if (graphs.empty()) {
            std::cerr << "error: no input graphs\n";
            return kUsage;
        }

        if (verify_cmd->parsed()) return run_verify(io, graphs, theorem, k, mode);

        int code = kOk;
        const bool many = graphs.size() > 1;
        for (std::size_t i = 0; i < graphs.size(); ++i) {
            const Graph& g = graphs[i];
            std::string g6 = emit_graph6(g);
            if (many && io.output == "text") std::cout << "graph " << i << ":\n";
            int line_code = kOk;
            if (pack->parsed())
                line_code = run_pack(io, g, k, g6);
            else if (decide_cmd->parsed())
                line_code = run_decide(io, g, k, g6);
            else if (oracle_cmd->parsed())
                line_code = run_oracle(io, g, stop_at, g6);
            else if (stats->parsed())
                line_code = run_stats(io, g, g6);
            code = combine(code, line_code);
        }
        return code;
    } catch (const Graph6Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
