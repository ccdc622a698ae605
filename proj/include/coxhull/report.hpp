#pragma once

#include <string>

#include "json.hpp"

#include "coxhull/convexity.hpp"

namespace coxhull {

/// Stable-key JSON for verification reports.
inline nlohmann::ordered_json to_json(const HullReport& rep) {
    nlohmann::ordered_json j;
    j["scope"] = rep.scope;
    j["pairs_checked"] = rep.pairs_checked;
    j["verdict"] = rep.holds ? "holds" : "violated";
    if (rep.witness) {
        nlohmann::ordered_json w;
        w["u"] = rep.witness->u;
        w["v"] = rep.witness->v;
        w["w"] = rep.witness->w;
        w["sizes"] = rep.witness->sizes;
        j["witness"] = w;
    } else {
        j["witness"] = nullptr;
    }
    j["elapsed_ms"] = rep.elapsed_ms;
    return j;
}

}  // namespace coxhull
