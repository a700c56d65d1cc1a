#include "parorbit/json_io.hpp"

namespace parorbit {

json mat_to_json(const Mat<Rationals>& m) {
    json out;
    out["field"] = "Q";
    out["rows"] = m.rows;
    out["cols"] = m.cols;
    json rows = json::array();
    for (int i = 0; i < m.rows; ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols; ++j) row.push_back(m.at(i, j).to_string());
        rows.push_back(row);
    }
    out["entries"] = rows;
    return out;
}

json mat_to_json(const Mat<PrimeField>& m) {
    json out;
    out["field"] = m.field.name();
    out["rows"] = m.rows;
    out["cols"] = m.cols;
    json rows = json::array();
    for (int i = 0; i < m.rows; ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols; ++j) row.push_back(m.at(i, j));
        rows.push_back(row);
    }
    out["entries"] = rows;
    return out;
}

DynMatrix mat_from_json(const json& j) {
    FieldTag tag = FieldTag::parse(j.at("field").get<std::string>());
    int rows = j.at("rows").get<int>(), cols = j.at("cols").get<int>();
    const json& e = j.at("entries");
    if (static_cast<int>(e.size()) != rows)
        throw std::invalid_argument("matrix json: row count mismatch");
    if (tag.kind == FieldTag::Kind::rational) {
        Rationals f;
        Mat<Rationals> m(f, rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int c = 0; c < cols; ++c) {
                const json& v = e.at(i).at(c);
                m.at(i, c) = v.is_string() ? Rat::from_string(v.get<std::string>())
                                           : Rat(v.get<int64_t>());
            }
        return m;
    }
    PrimeField f(tag.q);
    Mat<PrimeField> m(f, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int c = 0; c < cols; ++c) m.at(i, c) = f.from_int(e.at(i).at(c).get<int64_t>());
    return m;
}

namespace {

json infinite_witness_json(const InfiniteWitness& w) {
    json out;
    out["kind"] = "infinite";
    out["minimal_case"] = w.minimal_case;
    out["family"] = w.family;
    json chain = json::array();
    if (w.reversed) chain.push_back({{"step", "reverse the block vector"}});
    json merges = json::array();
    for (auto [lo, hi] : w.merges) merges.push_back({{"from", lo + 1}, {"to", hi + 1}});
    chain.push_back({{"step", "merge adjacent blocks"}, {"groups", merges}});
    chain.push_back({{"step", "dominate the minimal case entrywise"}});
    out["chain"] = chain;
    return out;
}

json finite_witness_json(const FiniteWitness& w) {
    json out;
    out["kind"] = "finite";
    out["family"] = w.family;
    out["reversed"] = w.reversed;
    out["embedding"] = w.embedding;
    out["k"] = w.k_value;
    return out;
}

}  // namespace

json verdict_to_json(const BlockVector& bv, const FinitenessVerdict& v) {
    json out;
    out["bv"] = bv.blocks;
    out["verdict"] = v.verdict == Verdict::finite ? "finite" : "infinite";
    if (v.infinite_witness) out["witness"] = infinite_witness_json(*v.infinite_witness);
    if (v.finite_witness) out["witness"] = finite_witness_json(*v.finite_witness);
    return out;
}

json levi_verdict_to_json(const BlockVector& bv, LeviTarget target,
                          const FinitenessVerdict& v) {
    json out = verdict_to_json(bv, v);
    out["acting"] = "levi";
    out["target"] = target == LeviTarget::nilradical ? "nilradical" : "cone";
    return out;
}

json orbit_table_to_json(const OrbitTable& t, bool with_representatives) {
    json out;
    out["bv"] = t.shape.bv.blocks;
    out["q"] = t.q;
    out["target"] = t.target == OracleTarget::cone ? "cone"
                    : t.target == OracleTarget::cone_x ? "cone_x"
                                                       : "nilradical";
    if (t.target == OracleTarget::cone_x) out["x"] = t.x;
    out["acting"] = t.acting == OracleActing::P ? "P" : "levi";
    out["mode"] = t.mode;
    out["set_size"] = t.set_size;
    out["orbit_count"] = t.orbit_count();
    out["orbit_sizes"] = t.orbit_sizes;
    if (with_representatives) {
        json reps = json::array();
        for (const auto& r : t.representatives) reps.push_back(mat_to_json(r));
        out["representatives"] = reps;
    }
    return out;
}

json certificate_to_json(const Certificate& c) {
    json out;
    out["family"] = c.family;
    out["pass"] = c.pass;
    json checks = json::array();
    for (const auto& chk : c.checks) {
        json e;
        e["name"] = chk.name;
        e["pass"] = chk.pass;
        if (!chk.detail.empty()) e["detail"] = chk.detail;
        checks.push_back(e);
    }
    out["checks"] = checks;
    return out;
}

}  // namespace parorbit
