#pragma once

#include <json.hpp>
#include <variant>

#include "parorbit/classifier.hpp"
#include "parorbit/families.hpp"
#include "parorbit/oracle.hpp"
#include "parorbit/young.hpp"

namespace parorbit {

using json = nlohmann::ordered_json;

// matrix literal: {"field": "Q"|"GF(q)", "rows": r, "cols": c, "entries": [[...]]}
// rational entries as "a/b" strings, prime-field entries as integers in [0, q)
json mat_to_json(const Mat<Rationals>& m);
json mat_to_json(const Mat<PrimeField>& m);

using DynMatrix = std::variant<Mat<Rationals>, Mat<PrimeField>>;
DynMatrix mat_from_json(const json& j);

json verdict_to_json(const BlockVector& bv, const FinitenessVerdict& v);
json levi_verdict_to_json(const BlockVector& bv, LeviTarget target, const FinitenessVerdict& v);
json orbit_table_to_json(const OrbitTable& t, bool with_representatives);
json certificate_to_json(const Certificate& c);

template <class F>
json gamma_to_json(const F& f, const LabeledDiagramShape& sh, const GammaTable<F>& g) {
    json out;
    out["lambda"] = sh.lambda;
    out["mu"] = sh.mu;
    out["field"] = f.name();
    json boxes = json::object();
    for (int i = 0; i < sh.g(); ++i)
        for (int j = 1; j <= sh.lambda[i]; ++j) {
            json tuple = json::array();
            bool nonzero = false;
            for (int m = 0; m < sh.h(); ++m) {
                tuple.push_back(f.str(g.box[i][j - 1][m]));
                nonzero = nonzero || !f.is_zero(g.box[i][j - 1][m]);
            }
            if (nonzero) boxes[std::to_string(i + 1) + "," + std::to_string(j)] = tuple;
        }
    out["gamma"] = boxes;
    return out;
}

template <class F>
json moves_to_json(const std::vector<BaseChange<F>>& moves) {
    json out = json::array();
    for (const auto& m : moves) out.push_back(m.str());
    return out;
}

}  // namespace parorbit
