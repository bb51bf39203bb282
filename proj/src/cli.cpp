#include "reslat/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "reslat/blowup.hpp"
#include "reslat/classify.hpp"
#include "reslat/graphfile.hpp"
#include "reslat/oracle.hpp"
#include "reslat/relative.hpp"
#include "reslat/report.hpp"

namespace reslat::cli {

namespace {

constexpr int kOk = 0, kUsage = 1, kValidation = 2, kGuard = 3, kOracle = 4;

struct CmdError {
    int code;
    std::string message;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CmdError{kValidation, "cannot open '" + path + "'"};
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

GraphFileResult load_graph(const std::string& path) {
    auto res = parse_graph_file(read_file(path));
    if (!res.ok()) {
        std::string msg = "invalid graph file '" + path + "':";
        for (auto& d : res.diagnostics) msg += "\n  [" + d.code + "] " + d.message;
        throw CmdError{kValidation, msg};
    }
    return res;
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

std::size_t vertex_index(const ResolutionGraph& g, const std::string& id) {
    auto idx = g.index_of(id);
    if (!idx) throw CmdError{kValidation, "unknown vertex '" + id + "'"};
    return *idx;
}

// A cycle argument is either the name of a cycle from the file or an inline
// comma list id=value (values rational for Chern classes).
RatCycle resolve_rat(const GraphFileResult& gf, const std::string& spec) {
    const ResolutionGraph& g = *gf.graph;
    if (spec.find('=') == std::string::npos) {
        auto it = gf.cycles.find(spec);
        if (it == gf.cycles.end()) throw CmdError{kValidation, "no cycle named '" + spec + "'"};
        return RatCycle(it->second);
    }
    RatCycle z(g.vertex_count());
    for (const auto& item : split_list(spec)) {
        auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0)
            throw CmdError{kValidation, "bad cycle entry '" + item + "'"};
        auto val = parse_rat(item.substr(eq + 1));
        if (!val) throw CmdError{kValidation, "bad coefficient in '" + item + "'"};
        z[vertex_index(g, item.substr(0, eq))] = *val;
    }
    return z;
}

IntCycle resolve_int(const GraphFileResult& gf, const std::string& spec) {
    RatCycle r = resolve_rat(gf, spec);
    if (!r.is_integral())
        throw CmdError{kValidation, "cycle '" + spec + "' must have integer coefficients"};
    IntCycle z(r.size());
    for (std::size_t v = 0; v < r.size(); ++v) z[v] = to_long(r[v]);
    return z;
}

void emit(const Json& report, bool json, const std::string& text) {
    if (json) std::cout << report.dump(2) << "\n";
    else std::cout << text;
}

void oracle_check(bool agreed, const std::string& what) {
    if (!agreed) throw CmdError{kOracle, "oracle discrepancy: " + what};
}

// ---- subcommand bodies ----------------------------------------------------

int cmd_validate(const std::string& file, bool json) {
    auto parsed = parse_graph_file(read_file(file));
    Json rep;
    rep["schema"] = kReportSchema;
    rep["operation"] = "validate";
    rep["valid"] = parsed.ok();
    rep["diagnostics"] = Json::array();
    std::string text;
    for (auto& d : parsed.diagnostics) {
        rep["diagnostics"].push_back({{"code", d.code}, {"message", d.message}});
        text += "  [" + d.code + "] " + d.message + "\n";
    }
    if (parsed.ok()) {
        rep["graph"] = {{"fingerprint", parsed.graph->fingerprint()},
                        {"vertices", parsed.graph->vertex_count()},
                        {"determinant", parsed.graph->determinant().get_str()}};
        emit(rep, json, "valid: " + std::to_string(parsed.graph->vertex_count()) +
                            " vertices, det = " + parsed.graph->determinant().get_str() + "\n");
        return kOk;
    }
    emit(rep, json, "invalid:\n" + text);
    return kValidation;
}

int cmd_invariants(const std::string& file, bool json, bool oracle, const SearchGuards& guards) {
    auto gf = load_graph(file);
    const ResolutionGraph& g = *gf.graph;
    InvariantCache cache;

    Json rep = report_skeleton(g, "invariants");
    rep["canonical_cycle"] = cycle_json(g, g.canonical_cycle());
    rep["determinant"] = g.determinant().get_str();
    rep["discriminant_order"] = discriminant_order(g).get_str();
    Json duals = Json::object();
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        duals[g.id(v)] = cycle_json(g, g.dual(v));
    rep["dual_basis"] = duals;
    bool rational = is_rational(g, guards, &cache);
    long long pg = geometric_genus(g, guards, &cache);
    rep["rational"] = rational;
    rep["geometric_genus"] = pg;
    std::string mic_text = "maximal ideal cycle: not defined (rational graph)\n";
    if (!rational) {
        IntCycle mic = maximal_ideal_cycle(g, guards, &cache);
        rep["maximal_ideal_cycle"] = cycle_json(g, mic);
        mic_text = "maximal ideal cycle: " + cycle_str(mic) + "\n";
    }

    if (oracle) {
        Json ver;
        bool det_ok = oracle::determinant_ref(g) == g.determinant();
        bool zk_ok = oracle::canonical_cycle_ref(g) == g.canonical_cycle();
        bool pg_ok = oracle::pg_ref(g) == pg;
        bool rat_ok = oracle::rational_ref(g) == rational;
        ver["determinant"] = det_ok;
        ver["canonical_cycle"] = zk_ok;
        ver["geometric_genus"] = pg_ok;
        ver["rational"] = rat_ok;
        bool mic_ok = true;
        if (!rational) {
            IntCycle mic = maximal_ideal_cycle(g, guards, &cache);
            auto ref = oracle::min_effective_ref(g, RatCycle(g.vertex_count()), true);
            mic_ok = oracle::chi_ref(g, RatCycle(mic)) == ref.minimum;
            for (const auto& a : ref.argmins) mic_ok = mic_ok && leq(a, mic);
            ver["maximal_ideal_cycle"] = mic_ok;
        }
        rep["oracle"] = ver;
        oracle_check(det_ok && zk_ok && pg_ok && rat_ok && mic_ok, "invariants");
    }

    std::string text = "det = " + g.determinant().get_str() +
                       ", |H| = " + discriminant_order(g).get_str() + "\n" +
                       "Z_K = " + cycle_str(g.canonical_cycle()) + "\n" +
                       std::string(rational ? "rational" : "non-rational") +
                       ", p_g = " + std::to_string(pg) + "\n" + mic_text;
    emit(rep, json, text);
    return kOk;
}

int cmd_chi(const std::string& file, const std::string& cyc, bool json, bool oracle) {
    auto gf = load_graph(file);
    const ResolutionGraph& g = *gf.graph;
    RatCycle l = resolve_rat(gf, cyc);
    Rat value = chi(g, l);
    Json rep = report_skeleton(g, "chi");
    rep["inputs"] = {{"cycle", cycle_json(g, l)}};
    rep["chi"] = rat_json(value);
    if (oracle) {
        bool ok = oracle::chi_ref(g, l) == value;
        rep["oracle"] = {{"chi", ok}};
        oracle_check(ok, "chi");
    }
    emit(rep, json, "chi = " + rat_str(value) + "\n");
    return kOk;
}

int cmd_h1(const std::string& file, const std::string& cyc, const std::string& chern, bool json,
           bool oracle, const SearchGuards& guards) {
    auto gf = load_graph(file);
    const ResolutionGraph& g = *gf.graph;
    IntCycle z = resolve_int(gf, cyc);
    InvariantCache cache;
    Json rep = report_skeleton(g, "h1");
    rep["inputs"] = {{"cycle", cycle_json(g, z)}};
    long long h1;
    if (chern.empty()) {
        h1 = h1_generic(g, z, guards, &cache);
        rep["bundle"] = "structure sheaf";
        if (oracle) {
            bool ok = oracle::h1_ref(g, z) == h1;
            rep["oracle"] = {{"h1", ok}};
            oracle_check(ok, "h1");
        }
    } else {
        RatCycle lp = resolve_rat(gf, chern);
        rep["inputs"]["chern"] = cycle_json(g, lp);
        rep["bundle"] = "O(-l')";
        h1 = h1_natural(g, z, lp, guards, &cache);
        if (oracle) {
            bool ok = oracle::h1_natural_ref(g, z, lp) == h1;
            rep["oracle"] = {{"h1", ok}};
            oracle_check(ok, "h1");
        }
    }
    rep["h1"] = h1;
    emit(rep, json, "h1 = " + std::to_string(h1) + "\n");
    return kOk;
}

int cmd_ez(const std::string& file, const std::string& cyc, const std::string& verts, bool json,
           bool oracle, const SearchGuards& guards) {
    auto gf = load_graph(file);
    const ResolutionGraph& g = *gf.graph;
    IntCycle z = resolve_int(gf, cyc);
    std::vector<int> j;
    for (const auto& id : split_list(verts)) j.push_back(static_cast<int>(vertex_index(g, id)));
    InvariantCache cache;
    long long e = e_z(g, z, j, guards, &cache);
    Json rep = report_skeleton(g, "ez");
    rep["inputs"] = {{"cycle", cycle_json(g, z)}, {"vertices", split_list(verts)}};
    rep["e"] = e;
    if (oracle) {
        bool ok = oracle::e_z_ref(g, z, j) == e;
        rep["oracle"] = {{"e", ok}};
        oracle_check(ok, "ez");
    }
    emit(rep, json, "e_Z(J) = " + std::to_string(e) + "\n");
    return kOk;
}

int cmd_semigroup(const std::string& file, const std::string& chern, bool json, bool oracle,
                  const SearchGuards& guards) {
    auto gf = load_graph(file);
    const ResolutionGraph& g = *gf.graph;
    RatCycle lp = resolve_rat(gf, chern);
    InvariantCache cache;
    bool member = semigroup_member(g, lp, guards, &cache);
    Json rep = report_skeleton(g, "semigroup");
    rep["inputs"] = {{"chern", cycle_json(g, lp)}};
    rep["member"] = member;
    if (oracle) {
        bool ok = oracle::semigroup_ref(g, lp) == member;
        rep["oracle"] = {{"member", ok}};
        oracle_check(ok, "semigroup");
    }
    emit(rep, json, std::string("member: ") + (member ? "yes" : "no") + "\n");
    return kOk;
}

int cmd_cohcycle(const std::string& file, const std::string& cyc, bool json, bool oracle,
                 const SearchGuards& guards) {
    auto gf = load_graph(file);
    const ResolutionGraph& g = *gf.graph;
    IntCycle z = resolve_int(gf, cyc);
    InvariantCache cache;
    IntCycle m = cohomological_cycle(g, z, guards, &cache);
    Json rep = report_skeleton(g, "cohcycle");
    rep["inputs"] = {{"cycle", cycle_json(g, z)}};
    rep["cohomological_cycle"] = cycle_json(g, m);
    rep["h1"] = detail::h1_sum(g, z, guards, &cache);
    if (oracle) {
        bool ok = oracle::is_minimal_cohomological_ref(g, z, m);
        rep["oracle"] = {{"minimal", ok}};
        oracle_check(ok, "cohcycle");
    }
    emit(rep, json, "cohomological cycle = " + cycle_str(m) + "\n");
    return kOk;
}

int cmd_blowup(const std::string& file, const std::string& edge, const std::string& vertex,
               bool json, bool oracle) {
    auto gf = load_graph(file);
    const ResolutionGraph& g = *gf.graph;
    if (edge.empty() == vertex.empty())
        throw CmdError{kUsage, "blowup needs exactly one of --edge or --vertex"};

    BlowupResult b = [&] {
        if (!edge.empty()) {
            auto ids = split_list(edge);
            if (ids.size() != 2) throw CmdError{kUsage, "--edge expects 'u,v'"};
            return blowup_edge(g, vertex_index(g, ids[0]), vertex_index(g, ids[1]));
        }
        return blowup_vertex(g, vertex_index(g, vertex));
    }();

    std::map<std::string, IntCycle> pulled;
    for (auto& [name, z] : gf.cycles) pulled[name] = b.pullback(z);
    std::string emitted = emit_graph_file(b.graph, pulled);

    Json rep = report_skeleton(g, "blowup");
    rep["new_vertex"] = b.new_vertex_id;
    rep["graph_file"] = emitted;
    rep["new_fingerprint"] = b.graph.fingerprint();

    bool zk_ok = b.graph.canonical_cycle() == b.pullback(g.canonical_cycle()) -
                                                  RatCycle(unit_cycle(b.graph.vertex_count(),
                                                                      b.new_vertex));
    rep["canonical_pullback_identity"] = zk_ok;
    if (oracle) {
        bool chi_ok = true;
        for (auto& [name, z] : gf.cycles)
            chi_ok = chi_ok && oracle::chi_ref(b.graph, RatCycle(b.pullback(z))) ==
                                   oracle::chi_ref(g, RatCycle(z));
        rep["oracle"] = {{"chi_invariance", chi_ok}, {"canonical_pullback", zk_ok}};
        oracle_check(chi_ok && zk_ok, "blowup");
    }
    emit(rep, json, "new vertex: " + b.new_vertex_id + "\n" + emitted);
    return kOk;
}

int cmd_relative(const std::string& file, const std::string& split, const std::string& chern,
                 const std::string& cyc, bool json, bool oracle, const SearchGuards& guards) {
    auto gf = load_graph(file);
    const ResolutionGraph& g = *gf.graph;
    IntCycle z = resolve_int(gf, cyc);
    RatCycle lp = resolve_rat(gf, chern);
    std::vector<int> v1;
    for (const auto& id : split_list(split)) v1.push_back(static_cast<int>(vertex_index(g, id)));
    InvariantCache cache;
    SplitConfig cfg = make_split(g, v1, z);
    auto inner = default_inner_h1(cfg, lp, guards, &cache);

    long long h1z1 = inner(IntCycle(g.vertex_count()));
    auto dom = relative_dominant(cfg, lp, inner, guards);
    long long rh1 = relative_h1(cfg, lp, inner, guards);
    long long dim = relative_eca_dim(cfg, lp, h1z1, guards, &cache);

    Json rep = report_skeleton(g, "relative");
    rep["inputs"] = {{"cycle", cycle_json(g, z)},
                     {"chern", cycle_json(g, lp)},
                     {"v1", split_list(split)}};
    rep["h1_Z1_bundle"] = h1z1;
    rep["relative_dominant"] = dom.dominant;
    if (dom.violating) rep["first_violation"] = cycle_json(g, *dom.violating);
    rep["relative_h1"] = rh1;
    rep["relative_eca_dim"] = dim;
    Json restricted = Json::array();
    auto parts = restrict_chern(cfg, lp);
    for (std::size_t i = 0; i < parts.size(); ++i)
        restricted.push_back(cycle_json(cfg.t1[i].graph, parts[i]));
    rep["restricted_chern"] = restricted;

    if (oracle) {
        // Recompute the relative h1 minimum with reference chi and a
        // reference inner oracle.
        std::optional<Rat> best;
        IntCycle cur(z.size());
        bool more = true;
        while (more) {
            RatCycle arg = -lp + cur;
            Rat term = oracle::chi_ref(g, arg) - to_rat(inner(cur));
            if (!best || term < *best) best = term;
            std::size_t pos = z.size();
            more = false;
            while (pos > 0) {
                --pos;
                if (cur[pos] < z[pos]) {
                    cur[pos] += 1;
                    more = true;
                    break;
                }
                if (pos == 0) break;
                cur[pos] = 0;
            }
        }
        bool ok = to_long(oracle::chi_ref(g, -lp) - *best) == rh1;
        rep["oracle"] = {{"relative_h1", ok}};
        oracle_check(ok, "relative");
    }
    std::string text = "relative dominant: " + std::string(dom.dominant ? "yes" : "no") + "\n" +
                       "relative h1 = " + std::to_string(rh1) + "\n" +
                       "relative ECa dim = " + std::to_string(dim) + "\n";
    emit(rep, json, text);
    return kOk;
}

int cmd_classify(const std::string& file, const std::string& cyc, const std::string& pair,
                 const std::string& single, bool tower, bool json, bool oracle,
                 const SearchGuards& guards) {
    auto gf = load_graph(file);
    const ResolutionGraph& g = *gf.graph;
    IntCycle z = resolve_int(gf, cyc);
    if (pair.empty() == single.empty())
        throw CmdError{kUsage, "classify needs exactly one of --pair or --single"};
    InvariantCache cache;

    G12Report rep;
    if (!pair.empty()) {
        auto ids = split_list(pair);
        if (ids.size() != 2) throw CmdError{kUsage, "--pair expects 'u,v'"};
        std::size_t u1 = vertex_index(g, ids[0]), u2 = vertex_index(g, ids[1]);
        rep = classify_pair(g, z, u1, u2, guards, &cache);
        if (tower && g.valency(u1) == 1)
            rep.tower = cycle_tower_pair(g, z, u1, u2, guards, &cache);
    } else {
        std::size_t u = vertex_index(g, single);
        rep = classify_single(g, z, u, guards, &cache);
        if (tower) {
            // track the first neighbor inside the support
            for (int w : g.adjacency()[u])
                if (z[w] > 0) {
                    rep.tower = cycle_tower_single(g, z, u, w, guards, &cache);
                    break;
                }
        }
    }

    Json doc = report_skeleton(g, "classify");
    doc["inputs"] = {{"cycle", cycle_json(g, z)}};
    doc["report"] = g12_report_json(g, rep);

    if (oracle) {
        bool ok = oracle::e_z_ref(g, z, {static_cast<int>(*g.index_of(rep.u1))}) == rep.e_u1;
        if (rep.pair_mode) {
            ok = ok && oracle::e_z_ref(g, z, {static_cast<int>(*g.index_of(rep.u2))}) == rep.e_u2;
            ok = ok && oracle::e_z_ref(g, z,
                                       {static_cast<int>(*g.index_of(rep.u1)),
                                        static_cast<int>(*g.index_of(rep.u2))}) == rep.e_pair;
        }
        ok = ok && oracle::has_regular_ref(g, z) == rep.checks[0].holds;
        doc["oracle"] = {{"e_values", ok}};
        oracle_check(ok, "classify");
    }

    std::string text = "status: " + to_string(rep.status) + " (" + rep.status_reason + ")\n";
    for (auto& c : rep.checks)
        text += "  check " + c.name + ": " + (c.holds ? "holds" : "fails") + " [" + c.values +
                "]\n";
    for (auto& c : rep.necessary_conditions)
        text += "  necessary" + std::string(c.applicable ? "" : " (hypotheses not met)") + " " +
                c.name + ": " + (c.holds ? "holds" : "fails") + " [" + c.values + "]\n";
    emit(doc, json, text);
    return kOk;
}

int cmd_enumerate(int max_vertices, long long euler_min, long long euler_max, long long coeff_cap,
                  const std::string& status, std::uint64_t max_graphs, std::uint64_t max_emitted,
                  bool pairs, bool singles, bool json, const SearchGuards& guards) {
    EnumParams params;
    params.max_vertices = max_vertices;
    params.euler_min = euler_min;
    params.euler_max = euler_max;
    params.coeff_cap = coeff_cap;
    params.max_graphs = max_graphs;
    params.max_emitted = max_emitted;
    params.pairs = pairs;
    params.singles = singles;
    params.search = guards;
    if (status == "Forbidden") params.target = G12Status::Forbidden;
    else if (status == "Guaranteed") params.target = G12Status::Guaranteed;
    else if (status == "Undetermined") params.target = G12Status::Undetermined;
    else if (status != "any") throw CmdError{kUsage, "--status must be Forbidden, Guaranteed, Undetermined or any"};

    Json instances = Json::array();
    auto stats = enumerate_instances(params, [&](const EnumInstance& inst) {
        Json o;
        o["graph_file"] = emit_graph_file(inst.graph, {{"Z", inst.z}});
        o["fingerprint"] = inst.graph.fingerprint();
        o["u1"] = inst.u1;
        if (!inst.u2.empty()) o["u2"] = inst.u2;
        o["report"] = g12_report_json(inst.graph, inst.report);
        instances.push_back(std::move(o));
        if (!json) {
            std::cout << to_string(inst.report.status) << " " << inst.graph.fingerprint() << " Z="
                      << cycle_str(inst.z) << " u'=" << inst.u1
                      << (inst.u2.empty() ? "" : " u''=" + inst.u2) << " "
                      << "e=(" << inst.report.e_u1 << "," << inst.report.e_u2 << ","
                      << inst.report.e_pair << ")\n";
        }
        return true;
    });

    Json rep;
    rep["schema"] = kReportSchema;
    rep["operation"] = "enumerate";
    rep["stats"] = {{"trees_generated", stats.trees_generated},
                    {"graphs_negdef", stats.graphs_negdef},
                    {"graphs_examined", stats.graphs_examined},
                    {"graphs_nonrational", stats.graphs_nonrational},
                    {"graphs_guard_skipped", stats.graphs_guard_skipped},
                    {"cycles_tested", stats.cycles_tested},
                    {"instances_classified", stats.instances_classified},
                    {"emitted", stats.emitted},
                    {"guard_hit", stats.guard_hit},
                    {"guard_reason", stats.guard_reason}};
    rep["instances"] = std::move(instances);
    if (json) std::cout << rep.dump(2) << "\n";
    else
        std::cout << "emitted " << stats.emitted << " instance(s) from " << stats.graphs_examined
                  << " graph(s)" << (stats.guard_hit ? " [guard: " + stats.guard_reason + "]" : "")
                  << "\n";
    return kOk;
}

}  // namespace

int run(int argc, const char* const* argv) {
    CLI::App app{"exact invariants of resolution graphs with generic analytic structure"};
    app.require_subcommand(1);
    bool json = false, oracle = false, tower = false;
    app.add_flag("--json", json, "machine-readable report");
    app.add_flag("--oracle", oracle, "re-verify with brute-force reference implementations");
    SearchGuards guards = SearchGuards::from_env();

    std::string file, cyc, chern, verts, edge, vertex, pair, single, split, status = "any";

    auto* c_validate = app.add_subcommand("validate", "check a graph file");
    c_validate->add_option("file", file)->required();

    auto* c_inv = app.add_subcommand("invariants", "Z_K, det, duals, rationality, p_g, MIC");
    c_inv->add_option("file", file)->required();

    auto* c_chi = app.add_subcommand("chi", "Riemann-Roch value of a cycle");
    c_chi->add_option("file", file)->required();
    c_chi->add_option("--cycle", cyc)->required();

    auto* c_h1 = app.add_subcommand("h1", "h1 of O_Z or of O_Z(-l')");
    c_h1->add_option("file", file)->required();
    c_h1->add_option("--cycle", cyc)->required();
    c_h1->add_option("--chern", chern);

    auto* c_ez = app.add_subcommand("ez", "Abel-map image dimension invariant e_Z(J)");
    c_ez->add_option("file", file)->required();
    c_ez->add_option("--cycle", cyc)->required();
    c_ez->add_option("--vertices", verts)->required();

    auto* c_sg = app.add_subcommand("semigroup", "analytic-semigroup membership");
    c_sg->add_option("file", file)->required();
    c_sg->add_option("--chern", chern)->required();

    auto* c_coh = app.add_subcommand("cohcycle", "minimal subcycle with the same h1");
    c_coh->add_option("file", file)->required();
    c_coh->add_option("--cycle", cyc)->required();

    auto* c_blow = app.add_subcommand("blowup", "blow up an edge or a vertex");
    c_blow->add_option("file", file)->required();
    c_blow->add_option("--edge", edge);
    c_blow->add_option("--vertex", vertex);

    auto* c_rel = app.add_subcommand("relative", "relative dominance / h1 / ECa dimension");
    c_rel->add_option("file", file)->required();
    c_rel->add_option("--split", split)->required();
    c_rel->add_option("--chern", chern)->required();
    c_rel->add_option("--cycle", cyc)->required();

    auto* c_cls = app.add_subcommand("classify", "degree-2 pencil classification");
    c_cls->add_option("file", file)->required();
    c_cls->add_option("--cycle", cyc)->required();
    c_cls->add_option("--pair", pair);
    c_cls->add_option("--single", single);
    c_cls->add_flag("--tower", tower, "include the cycle tower in the report");

    int max_vertices = 7;
    long long euler_min = -5, euler_max = -1, coeff_cap = 4;
    std::uint64_t max_graphs = 2'000'000, max_emitted = 1'000'000;
    bool no_pairs = false, no_singles = false;
    auto* c_enum = app.add_subcommand("enumerate", "census of classified instances");
    c_enum->add_option("--max-vertices", max_vertices);
    c_enum->add_option("--status", status, "Forbidden|Guaranteed|Undetermined|any");
    c_enum->add_option("--euler-min", euler_min);
    c_enum->add_option("--euler-max", euler_max);
    c_enum->add_option("--coeff-cap", coeff_cap);
    c_enum->add_option("--max-graphs", max_graphs);
    c_enum->add_option("--max-emitted", max_emitted);
    c_enum->add_flag("--no-pairs", no_pairs);
    c_enum->add_flag("--no-singles", no_singles);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (c_validate->parsed()) return cmd_validate(file, json);
        if (c_inv->parsed()) return cmd_invariants(file, json, oracle, guards);
        if (c_chi->parsed()) return cmd_chi(file, cyc, json, oracle);
        if (c_h1->parsed()) return cmd_h1(file, cyc, chern, json, oracle, guards);
        if (c_ez->parsed()) return cmd_ez(file, cyc, verts, json, oracle, guards);
        if (c_sg->parsed()) return cmd_semigroup(file, chern, json, oracle, guards);
        if (c_coh->parsed()) return cmd_cohcycle(file, cyc, json, oracle, guards);
        if (c_blow->parsed()) return cmd_blowup(file, edge, vertex, json, oracle);
        if (c_rel->parsed()) return cmd_relative(file, split, chern, cyc, json, oracle, guards);
        if (c_cls->parsed())
            return cmd_classify(file, cyc, pair, single, tower, json, oracle, guards);
        if (c_enum->parsed())
            return cmd_enumerate(max_vertices, euler_min, euler_max, coeff_cap, status, max_graphs,
                                 max_emitted, !no_pairs, !no_singles, json, guards);
        return kUsage;
    } catch (const CmdError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    } catch (const GuardLimitError& e) {
        std::cerr << "resource guard: " << e.what() << "\n";
        return kGuard;
    } catch (const FormulaRangeError& e) {
        std::cerr << "out of formula range: " << e.what() << "\n";
        return kValidation;
    } catch (const NonUniqueCycleError& e) {
        std::cerr << "non-unique result: " << e.what() << "\n";
        return kValidation;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kValidation;
    }
}

}  // namespace reslat::cli
