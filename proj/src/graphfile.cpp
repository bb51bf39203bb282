#include "reslat/graphfile.hpp"

#include <cstdlib>
#include <sstream>

namespace reslat {

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
    std::string body = line.substr(0, line.find('#'));
    std::istringstream in(body);
    std::vector<std::string> toks;
    std::string t;
    while (in >> t) toks.push_back(t);
    return toks;
}

std::optional<long long> parse_int(const std::string& s) {
    if (s.empty()) return std::nullopt;
    char* end = nullptr;
    errno = 0;
    long long v = std::strtoll(s.c_str(), &end, 10);
    if (errno != 0 || end != s.c_str() + s.size()) return std::nullopt;
    return v;
}

// "key=value" -> {key, value}
std::optional<std::pair<std::string, std::string>> split_kv(const std::string& s) {
    auto eq = s.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 >= s.size()) return std::nullopt;
    return std::make_pair(s.substr(0, eq), s.substr(eq + 1));
}

}  // namespace

GraphFileResult parse_graph_file(const std::string& text) {
    GraphFileResult res;
    RawGraph raw;
    // name -> (id -> coefficient), resolved after validation
    std::vector<std::pair<std::string, std::map<std::string, long long>>> raw_cycles;

    auto syntax = [&res](int line, const std::string& msg) {
        res.diagnostics.push_back(
            {"syntax", "line " + std::to_string(line) + ": " + msg});
    };

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = tokens_of(line);
        if (toks.empty()) continue;
        const std::string& kw = toks[0];
        if (kw == "vertex") {
            if (toks.size() < 3) {
                syntax(lineno, "vertex needs an id and euler=<int>");
                continue;
            }
            RawGraph::Vertex v{toks[1], 0, 0};
            bool have_euler = false, bad = false;
            for (std::size_t i = 2; i < toks.size(); ++i) {
                auto kvp = split_kv(toks[i]);
                auto val = kvp ? parse_int(kvp->second) : std::nullopt;
                if (!kvp || !val) {
                    syntax(lineno, "bad attribute '" + toks[i] + "'");
                    bad = true;
                    break;
                }
                if (kvp->first == "euler") {
                    v.euler = *val;
                    have_euler = true;
                } else if (kvp->first == "genus") {
                    v.genus = *val;
                } else {
                    syntax(lineno, "unknown attribute '" + kvp->first + "'");
                    bad = true;
                    break;
                }
            }
            if (bad) continue;
            if (!have_euler) {
                syntax(lineno, "vertex '" + v.id + "' is missing euler=<int>");
                continue;
            }
            raw.vertices.push_back(std::move(v));
        } else if (kw == "edge") {
            if (toks.size() != 3) {
                syntax(lineno, "edge needs exactly two vertex ids");
                continue;
            }
            raw.edges.push_back({toks[1], toks[2]});
        } else if (kw == "cycle") {
            if (toks.size() < 2) {
                syntax(lineno, "cycle needs a name");
                continue;
            }
            std::map<std::string, long long> entries;
            bool bad = false;
            for (std::size_t i = 2; i < toks.size(); ++i) {
                auto kvp = split_kv(toks[i]);
                auto val = kvp ? parse_int(kvp->second) : std::nullopt;
                if (!kvp || !val) {
                    syntax(lineno, "bad cycle entry '" + toks[i] + "'");
                    bad = true;
                    break;
                }
                entries[kvp->first] = *val;
            }
            if (!bad) raw_cycles.emplace_back(toks[1], std::move(entries));
        } else {
            syntax(lineno, "unknown directive '" + kw + "'");
        }
    }

    if (!res.diagnostics.empty()) return res;

    auto validated = validate_graph(raw);
    res.diagnostics = std::move(validated.diagnostics);
    if (!validated.graph) return res;
    res.graph = std::move(validated.graph);

    for (auto& [name, entries] : raw_cycles) {
        IntCycle z(res.graph->vertex_count());
        bool ok = true;
        for (auto& [id, coeff] : entries) {
            auto idx = res.graph->index_of(id);
            if (!idx) {
                res.diagnostics.push_back({"unknown-vertex", "cycle '" + name +
                                                                  "' references unknown vertex '" +
                                                                  id + "'"});
                ok = false;
                break;
            }
            z[*idx] = coeff;
        }
        if (ok) res.cycles[name] = std::move(z);
    }
    if (!res.diagnostics.empty()) res.graph.reset();
    return res;
}

std::string emit_graph_file(const ResolutionGraph& g,
                            const std::map<std::string, IntCycle>& cycles) {
    std::string out;
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        out += "vertex " + g.id(v) + " euler=" + std::to_string(g.euler(v)) + "\n";
    for (auto& [u, v] : g.edges()) out += "edge " + g.id(u) + " " + g.id(v) + "\n";
    for (auto& [name, z] : cycles) {
        out += "cycle " + name;
        for (std::size_t v = 0; v < z.size() && v < g.vertex_count(); ++v)
            if (z[v] != 0) out += " " + g.id(v) + "=" + std::to_string(z[v]);
        out += "\n";
    }
    return out;
}

}  // namespace reslat
