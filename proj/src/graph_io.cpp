#include "qipa/graph_io.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace qipa {

namespace {

std::string read_file(const std::filesystem::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw ParseError("cannot open " + file.string(), 0);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool looks_like_json(const std::string& text) {
    const auto pos = text.find_first_not_of(" \t\r\n");
    return pos != std::string::npos && text[pos] == '{';
}

// Normalizes to u < v, drops w = 0, rejects the rest of the invariant breaks.
void add_edge(WeightedGraph& g, long long u, long long v, double w, int line,
              std::set<std::pair<int, int>>& seen) {
    if (u < 0 || v < 0) throw ParseError("negative node index", line);
    if (u == v) throw ParseError("self-loop " + std::to_string(u), line);
    if (u > v) std::swap(u, v);
    if (v >= (1LL << 24)) throw ParseError("node index too large", line);
    if (!std::isfinite(w) || w < 0.0) throw ParseError("weight must be finite and >= 0", line);
    if (w == 0.0) return;  // zero weight encodes edge absence
    if (!seen.insert({static_cast<int>(u), static_cast<int>(v)}).second)
        throw ParseError("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")", line);
    g.edges.push_back({static_cast<int>(u), static_cast<int>(v), w});
    g.num_nodes = std::max(g.num_nodes, static_cast<int>(v) + 1);
}

}  // namespace

WeightedGraph parse_graph_text(const std::string& text) {
    WeightedGraph g;
    std::set<std::pair<int, int>> seen;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream fields(line);
        long long u, v;
        double w;
        if (!(fields >> u)) continue;  // blank or comment-only
        if (!(fields >> v >> w)) throw ParseError("expected 'u v w'", line_no);
        std::string extra;
        if (fields >> extra) throw ParseError("trailing content '" + extra + "'", line_no);
        add_edge(g, u, v, w, line_no, seen);
    }
    if (g.edges.empty()) throw ParseError("graph has no edges", 0);
    g.validate();
    return g;
}

WeightedGraph parse_graph_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(e.what(), 0);
    }
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges"))
        throw ParseError("expected {\"n\": int, \"edges\": [[u,v,w],...]}", 0);

    WeightedGraph g;
    g.num_nodes = doc["n"].get<int>();
    if (g.num_nodes < 1) throw ParseError("n must be >= 1", 0);
    std::set<std::pair<int, int>> seen;
    for (const auto& e : doc["edges"]) {
        if (!e.is_array() || e.size() != 3) throw ParseError("edge entries must be [u, v, w]", 0);
        const int nodes_declared = g.num_nodes;
        add_edge(g, e[0].get<long long>(), e[1].get<long long>(), e[2].get<double>(), 0, seen);
        g.num_nodes = nodes_declared;  // JSON n is authoritative
    }
    if (g.edges.empty()) throw ParseError("graph has no edges", 0);
    g.validate();
    return g;
}

WeightedGraph load_graph(const std::filesystem::path& file) {
    const std::string text = read_file(file);
    return looks_like_json(text) ? parse_graph_json(text) : parse_graph_text(text);
}

namespace {

void check_spectrum(const Spectrum& s) {
    if (s.empty()) throw ParseError("spectrum has no levels", 0);
    std::uint64_t total = 0;
    for (const auto& [ev, mult] : s) {
        if (!std::isfinite(ev)) throw ParseError("eigenvalue must be finite", 0);
        if (mult == 0) throw ParseError("multiplicity must be >= 1", 0);
        total += mult;
    }
    if (!std::has_single_bit(total))
        throw ParseError("multiplicities sum to " + std::to_string(total) + ", not a power of two", 0);
}

}  // namespace

Spectrum parse_spectrum_text(const std::string& text) {
    Spectrum s;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream fields(line);
        double ev;
        long long mult;
        if (!(fields >> ev)) continue;
        if (!(fields >> mult)) throw ParseError("expected 'eigenvalue multiplicity'", line_no);
        if (mult < 1) throw ParseError("multiplicity must be >= 1", line_no);
        s.emplace_back(ev, static_cast<std::uint64_t>(mult));
    }
    check_spectrum(s);
    return s;
}

Spectrum parse_spectrum_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(e.what(), 0);
    }
    if (!doc.is_object() || !doc.contains("levels"))
        throw ParseError("expected {\"levels\": [[eigenvalue, multiplicity],...]}", 0);
    Spectrum s;
    for (const auto& lv : doc["levels"]) {
        if (!lv.is_array() || lv.size() != 2)
            throw ParseError("level entries must be [eigenvalue, multiplicity]", 0);
        const long long mult = lv[1].get<long long>();
        if (mult < 1) throw ParseError("multiplicity must be >= 1", 0);
        s.emplace_back(lv[0].get<double>(), static_cast<std::uint64_t>(mult));
    }
    check_spectrum(s);
    return s;
}

Spectrum load_spectrum(const std::filesystem::path& file) {
    const std::string text = read_file(file);
    return looks_like_json(text) ? parse_spectrum_json(text) : parse_spectrum_text(text);
}

}  // namespace qipa
