#include "abshift/report.hpp"

#include <sstream>

namespace abshift {

namespace {

Json interval_json(const Interval& i) { return Json::array({i.lo.str(), i.hi.str()}); }

Json optional_seq(const std::optional<SymbolSeq>& s) { return s ? Json(s->str()) : Json(nullptr); }

}  // namespace

Json to_json(const KReport& r) {
    Json found = Json::array();
    for (const auto& m : r.found) found.push_back({{"n", m.n}, {"j", m.j}});
    Json j = {{"found", std::move(found)}, {"depth", r.depth}, {"offsets", r.offsets}, {"verdict", to_string(r.verdict)}};
    if (r.certified_max) j["certified_max"] = *r.certified_max;
    return j;
}

Json to_json(const WitnessReport& r) {
    Json j;
    if (r.alpha) {
        j["alpha"] = r.alpha->str();
    } else {
        Json chain = Json::array();
        for (const auto& e : r.enclosures) chain.push_back(interval_json(e));
        j["alpha"] = std::move(chain);
    }
    j["beta"] = r.beta.str();
    j["ell"] = r.ell;
    j["omega_r"] = optional_seq(r.omega_r);
    j["omega_s"] = optional_seq(r.omega_s);
    j["u"] = r.u.str();
    j["v"] = r.v.str();
    j["k_u"] = to_json(r.k_u);
    j["k_v"] = to_json(r.k_v);
    j["certified"] = r.certified;
    j["status"] = r.status();
    if (!r.identities.empty()) {
        Json ids = Json::array();
        for (const auto& id : r.identities)
            ids.push_back({{"name", id.name}, {"holds", id.holds}, {"residual", id.residual.str()}});
        j["identities"] = std::move(ids);
        j["digits_match"] = r.digits_match;
    }
    if (r.diagnostics) {
        const auto& d = *r.diagnostics;
        j["diagnostics"] = {{"tau_r", d.tau_r.str()},
                            {"tau_s", d.tau_s.str()},
                            {"gap_lemma", d.gap_lemma},
                            {"interleaved", d.interleaved},
                            {"surviving_pairs", d.surviving_pairs}};
    }
    return j;
}

Json to_json(const ThicknessReport& r) {
    return {{"tau", r.tau.str()},
            {"minimizing_gap", interval_json(r.minimizing_gap)},
            {"minimizing_bridge", interval_json(r.minimizing_bridge)},
            {"level", r.level}};
}

Json to_json(const SpecReport& r) {
    return {{"verdict", to_string(r.verdict)},
            {"depth", r.depth},
            {"u", r.u.str()},
            {"v", r.v.str()},
            {"k_u", to_json(r.k_u)},
            {"k_v", to_json(r.k_v)},
            {"growing_k", r.growing_k},
            {"growth_n", r.growth_n},
            {"certificate", r.certificate}};
}

std::string interval_union_csv(const IntervalUnion& u) {
    std::ostringstream out;
    out << "lo_num,lo_den,hi_num,hi_den\n";
    for (const auto& p : u.parts())
        out << p.lo.numerator().get_str() << ',' << p.lo.denominator().get_str() << ','
            << p.hi.numerator().get_str() << ',' << p.hi.denominator().get_str() << '\n';
    return out.str();
}

}  // namespace abshift
