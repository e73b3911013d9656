#include "cyclepack/graph6.hpp"

#include <sstream>

namespace cyclepack {

namespace {

constexpr int kMaxN = 1 << 18;

int decode_byte(char c, const char* what) {
    unsigned char u = static_cast<unsigned char>(c);
    if (u < 63 || u > 126) throw Graph6Error(std::string("graph6: byte out of range in ") + what);
    return u - 63;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
    // Tolerate the optional ">>graph6<<" prefix and trailing whitespace.
    if (line.substr(0, 10) == ">>graph6<<") line.remove_prefix(10);
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r' || line.back() == ' '))
        line.remove_suffix(1);
    if (line.empty()) throw Graph6Error("graph6: empty input");

    std::size_t pos = 0;
    long long n;
    if (line[0] == '~') {
        if (line.size() >= 2 && line[1] == '~')
            throw Graph6Error("graph6: vertex counts beyond 2^18 not supported");
        if (line.size() < 4) throw Graph6Error("graph6: truncated header");
        n = 0;
        for (int i = 1; i <= 3; ++i) n = (n << 6) | decode_byte(line[i], "header");
        pos = 4;
    } else {
        n = decode_byte(line[0], "header");
        pos = 1;
    }
    if (n >= kMaxN) throw Graph6Error("graph6: vertex count too large");

    long long nbits = n * (n - 1) / 2;
    std::size_t nbytes = std::size_t((nbits + 5) / 6);
    if (line.size() - pos < nbytes) throw Graph6Error("graph6: truncated payload");
    if (line.size() - pos > nbytes) throw Graph6Error("graph6: trailing bytes after payload");

    std::vector<std::pair<int, int>> es;
    long long bit = 0;
    int u = 0, v = 1;
    for (std::size_t i = 0; i < nbytes; ++i) {
        int b = decode_byte(line[pos + i], "payload");
        for (int j = 5; j >= 0 && bit < nbits; --j, ++bit) {
            if ((b >> j) & 1) es.emplace_back(u, v);
            if (++u == v) {
                u = 0;
                ++v;
            }
        }
        // Padding bits past nbits must be zero.
        if (bit >= nbits) {
            int pad = int(6 - (nbits % 6)) % 6;
            if (pad && (b & ((1 << pad) - 1)))
                throw Graph6Error("graph6: nonzero padding bits");
        }
    }
    return Graph(int(n), es);
}

std::string emit_graph6(const Graph& g) {
    long long n = g.n();
    if (n >= kMaxN) throw Graph6Error("graph6: vertex count too large");
    std::string out;
    if (n <= 62) {
        out.push_back(char(n + 63));
    } else {
        out.push_back('~');
        out.push_back(char(((n >> 12) & 63) + 63));
        out.push_back(char(((n >> 6) & 63) + 63));
        out.push_back(char((n & 63) + 63));
    }
    int acc = 0, nb = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++nb == 6) {
                out.push_back(char(acc + 63));
                acc = 0;
                nb = 0;
            }
        }
    }
    if (nb) out.push_back(char((acc << (6 - nb)) + 63));
    return out;
}

Graph parse_edge_list(std::string_view text) {
    std::vector<std::pair<int, int>> es;
    int n = 0;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t i = line.find_first_not_of(" \t\r");
        if (i == std::string::npos || line[i] == '#') continue;
        std::istringstream ls(line);
        long long u, v;
        if (!(ls >> u >> v) || u < 0 || v < 0 || u == v || u >= kMaxN || v >= kMaxN) {
            std::ostringstream msg;
            msg << "edge list: bad line " << lineno;
            throw Graph6Error(msg.str());
        }
        std::string rest;
        if (ls >> rest) {
            std::ostringstream msg;
            msg << "edge list: trailing tokens on line " << lineno;
            throw Graph6Error(msg.str());
        }
        es.emplace_back(int(u), int(v));
        n = std::max(n, int(std::max(u, v)) + 1);
    }
    return Graph(n, es);
}

std::string emit_edge_list(const Graph& g) {
    std::ostringstream out;
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

}  // namespace cyclepack
