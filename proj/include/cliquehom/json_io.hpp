// JSON views of reports (schema 1).
#pragma once

#include <json.hpp>

#include "cliquehom/constructions.hpp"
#include "cliquehom/homology.hpp"
#include "cliquehom/testers.hpp"

namespace cliquehom {

inline nlohmann::json to_json(const RankProfile& p) {
    return {{"schema", 1}, {"k", p.k}, {"d_k", p.d_k}, {"r_k", p.r_k}, {"r_k1", p.r_k_plus_1},
            {"beta_k", p.beta_k}};
}

inline nlohmann::json to_json(const TestReport& r) {
    nlohmann::json j{
        {"schema", 1},
        {"verdict", r.accept ? "accept" : "reject"},
        {"observed_density", r.observed_density},
        {"observed_density_ratio", r.observed_density_ratio.str()},
        {"queries_used", r.queries_used},
        {"seed", r.seed},
        {"params",
         {{"m", r.clique_size},
          {"q", r.params.sample_size},
          {"trials", r.params.trials},
          {"density_threshold", r.resolved_threshold},
          {"epsilon", r.params.epsilon},
          {"epsilon1", r.params.epsilon1}}},
    };
    if (r.is_betti_test) {
        j["k"] = r.k;
        j["epsilon"] = r.epsilon;
        j["delta"] = r.delta;
        j["split_fraction"] = r.params.split_fraction;
        j["guarantee_regime"] = r.guarantee_regime;
    }
    return j;
}

inline nlohmann::json to_json(const PlantReport& p) {
    nlohmann::json j{{"schema", 1},
                     {"alpha", p.alpha},
                     {"k", p.k},
                     {"edges_modified", p.edges_modified},
                     {"subset", p.subset},
                     {"part_sizes", p.part_sizes},
                     {"planted_d_k", p.planted_d_k},
                     {"planted_beta_k", p.planted_beta_k},
                     {"ratio_kind", p.exact ? "exact" : "analytic"}};
    j["beta_ratio_before"] = p.beta_ratio_before ? nlohmann::json(p.beta_ratio_before->str()) : nullptr;
    j["beta_ratio_after"] = p.beta_ratio_after ? nlohmann::json(p.beta_ratio_after->str()) : nullptr;
    return j;
}

}  // namespace cliquehom
