#include "reslat/report.hpp"

namespace reslat {

Json rat_json(const Rat& q) { return rat_str(q); }

Json cycle_json(const ResolutionGraph& g, const IntCycle& z) {
    Json o = Json::object();
    for (std::size_t v = 0; v < z.size(); ++v) o[g.id(v)] = std::to_string(z[v]);
    return o;
}

Json cycle_json(const ResolutionGraph& g, const RatCycle& z) {
    Json o = Json::object();
    for (std::size_t v = 0; v < z.size(); ++v) o[g.id(v)] = rat_str(z[v]);
    return o;
}

Json report_skeleton(const ResolutionGraph& g, const std::string& operation) {
    Json o;
    o["schema"] = kReportSchema;
    o["graph"] = {{"fingerprint", g.fingerprint()},
                  {"vertices", g.vertex_count()},
                  {"determinant", g.determinant().get_str()}};
    o["operation"] = operation;
    return o;
}

Json g12_report_json(const ResolutionGraph& g, const G12Report& rep) {
    Json o;
    o["mode"] = rep.pair_mode ? "pair" : "single";
    o["u1"] = rep.u1;
    if (rep.pair_mode) o["u2"] = rep.u2;
    o["status"] = to_string(rep.status);
    o["status_reason"] = rep.status_reason;
    o["h1_Z"] = rep.h1_z;
    o["chi_Z"] = rat_json(rep.chi_z);
    o["e_u1"] = rep.e_u1;
    if (rep.pair_mode) {
        o["e_u2"] = rep.e_u2;
        o["e_pair"] = rep.e_pair;
    }
    o["checks"] = Json::array();
    for (const auto& c : rep.checks)
        o["checks"].push_back({{"name", c.name}, {"holds", c.holds}, {"values", c.values}});
    o["necessary_conditions"] = Json::array();
    for (const auto& c : rep.necessary_conditions)
        o["necessary_conditions"].push_back({{"name", c.name},
                                             {"holds", c.holds},
                                             {"applicable", c.applicable},
                                             {"derived_under_hypothesis", true},
                                             {"values", c.values}});
    if (rep.tower) o["tower"] = tower_json(g, *rep.tower);
    return o;
}

Json tower_json(const ResolutionGraph& g, const CycleTower& tower) {
    Json o;
    o["stop_reason"] = tower.stop_reason;
    o["levels"] = Json::array();
    for (const auto& lv : tower.levels) {
        Json l;
        l["t"] = lv.t;
        l["cycle"] = cycle_json(g, lv.cycle);
        l["h1"] = lv.h1;
        l["coeff_w1"] = lv.coeff_w1;
        l["coeff_w2"] = lv.coeff_w2;
        if (lv.e_u1 >= 0) l["e_u1"] = lv.e_u1;
        if (lv.e_u2 >= 0) l["e_u2"] = lv.e_u2;
        if (lv.e_pair >= 0) l["e_pair"] = lv.e_pair;
        o["levels"].push_back(std::move(l));
    }
    return o;
}

}  // namespace reslat
