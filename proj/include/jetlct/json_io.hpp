#pragma once

// JSON renderings of the result types. Rationals are "p/q" strings, infinite
// values are "inf" / "-inf", and big counts are decimal strings.

#include "jetlct/fp_oracle.hpp"
#include "jetlct/jet.hpp"
#include "jetlct/jet_dim.hpp"
#include "jetlct/newton.hpp"
#include "jetlct/theorems.hpp"

#include <json.hpp>

namespace jetlct {

using Json = nlohmann::ordered_json;

inline Json rational_array(const std::vector<Rational>& v)
{
    Json out = Json::array();
    for (const auto& x : v) {
        out.push_back(to_string(x));
    }
    return out;
}

inline Json to_json(const JetSystem& sys)
{
    Json gens = Json::array();
    for (const auto& g : sys.generators) {
        gens.push_back(render(g, sys));
    }
    return Json{{"ambient_dim", sys.source.ambient_dim()},
                {"level", sys.level},
                {"convention", to_string(sys.convention)},
                {"variables", sys.variables},
                {"generators", gens}};
}

inline Json to_json(const LctCertificate& cert)
{
    return Json{{"lct", to_string(cert.lct)}, {"vertex", rational_array(cert.vertex)}, {"tight_generators", cert.tight_rows}};
}

inline Json dimension_json(const Dimension& d)
{
    if (d.is_empty()) {
        return "-inf";
    }
    return d.value();
}

inline Json to_json(const JetDimReport& rep)
{
    return Json{{"m", rep.level},
                {"dim", dimension_json(rep.dim)},
                {"argmin", rep.argmin},
                {"normalized", rep.normalized ? Json(to_string(*rep.normalized)) : Json(nullptr)}};
}

inline Json to_json(const FpCountReport& rep)
{
    Json levels = Json::array();
    for (const auto& lc : rep.levels) {
        levels.push_back(Json{{"m", lc.level},
                              {"count", lc.count.get_str()},
                              {"est_dim", lc.est_dim ? Json(*lc.est_dim) : Json(nullptr)}});
    }
    return Json{{"prime", rep.prime}, {"fiber_over_origin", rep.fiber_over_origin}, {"levels", levels}};
}

inline Json to_json(const LctEstimate& est)
{
    Json reports = Json::array();
    for (const auto& r : est.reports) {
        reports.push_back(to_json(r));
    }
    Json ratio = Json::array();
    for (const auto& d : est.ratio_dims) {
        ratio.push_back(d ? Json(*d) : Json(nullptr));
    }
    return Json{{"kind", "estimate"},
                {"ambient_dim", est.ambient_dim},
                {"m_max", est.m_max},
                {"reports", reports},
                {"agreeing_levels", est.agreeing_levels},
                {"disagreeing_levels", est.disagreeing_levels},
                {"best_level", est.best_level ? Json(*est.best_level) : Json(nullptr)},
                {"est_lct", est.estimate.str()},
                {"est_lct_approx", est.estimate.is_infinite() ? Json("inf") : Json(est.approx)},
                {"ratio_est_dims", ratio},
                {"ratio_est_lct", est.ratio_estimate ? Json(est.ratio_estimate->str()) : Json(nullptr)}};
}

inline Json to_json(const ViolationReport& v)
{
    return Json{{"property", v.property}, {"inputs", v.inputs},   {"relation", v.relation},
                {"values", v.values},     {"trial", v.trial},     {"seed", v.seed}};
}

}  // namespace jetlct
