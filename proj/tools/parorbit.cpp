// parorbit: exact-arithmetic toolbox for parabolic conjugation on nilpotent
// matrices. Subcommands classify block shapes, enumerate finite-field orbits,
// normalize labeled Young diagrams, build and certify the one-parameter
// families, test distinguishedness, and translate between matrices and bound
// quiver representations.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "parorbit/extend.hpp"
#include "parorbit/grid.hpp"
#include "parorbit/json_io.hpp"
#include "parorbit/young_reduce.hpp"

using namespace parorbit;

namespace {

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j;
    in >> j;
    return j;
}

void emit(const json& payload, bool as_json, const std::string& human) {
    if (as_json)
        std::cout << payload.dump(2) << "\n";
    else
        std::cout << human;
}

std::string verdict_str(Verdict v) { return v == Verdict::finite ? "finite" : "infinite"; }

int run(int argc, char** argv) {
    CLI::App app{"exact computations around parabolic conjugation on nilpotent matrices"};
    app.require_subcommand(1);
    bool as_json = false;
    uint64_t seed = 1;
    int threads = 1;
    uint64_t budget = 1ull << 26;
    app.add_flag("--json", as_json, "machine-readable output");
    app.add_option("--seed", seed, "seed for any randomized certificate search");
    app.add_option("--threads", threads, "worker threads for the orbit enumeration");
    app.add_option("--budget", budget, "enumeration budget (points)");

    // classify
    auto* classify = app.add_subcommand("classify", "finiteness of the conjugation action");
    std::string bv_str;
    bool check_witness = false;
    classify->add_option("--bv", bv_str, "block sizes, e.g. 1,2,1,4")->required();
    classify->add_flag("--check", check_witness, "replay the witness before printing");

    // levi-classify
    auto* levi = app.add_subcommand("levi-classify", "finiteness of the Levi action");
    std::string levi_bv, levi_target = "nilradical";
    levi->add_option("--bv", levi_bv)->required();
    levi->add_option("--target", levi_target, "nilradical | cone");

    // orbits
    auto* orbits = app.add_subcommand("orbits", "finite-field orbit enumeration");
    std::string orb_bv, orb_target = "cone", orb_acting = "P", reps_out;
    uint32_t orb_q = 2;
    int orb_x = -1;
    orbits->add_option("--bv", orb_bv)->required();
    orbits->add_option("--q", orb_q, "prime field size")->required();
    orbits->add_option("--target", orb_target, "cone | cone_x | nilradical");
    orbits->add_option("--x", orb_x, "nilpotency bound for cone_x");
    orbits->add_option("--acting", orb_acting, "P | levi");
    orbits->add_option("--reps-out", reps_out, "write representatives to this file");

    // normalize
    auto* normalize = app.add_subcommand("normalize", "reduce a labeled Young diagram");
    std::string norm_input;
    normalize->add_option("--input", norm_input, "pair file: {\"f\": matrix, \"u_basis\": matrix}")
        ->required();

    // family
    auto* family = app.add_subcommand("family", "build or certify a one-parameter family");
    std::string fam_name;
    int fam_k = 0, fam_n = 0;
    int64_t fam_t = 1;
    uint32_t fam_q = 5;
    bool fam_certify = false;
    family->add_option("--name", fam_name)->required();
    family->add_option("--t", fam_t, "parameter value");
    family->add_option("--q", fam_q, "prime field size");
    family->add_option("--k", fam_k);
    family->add_option("--n", fam_n);
    family->add_flag("--certify", fam_certify, "run the full certificate on t, t+1, t+2");

    // distinguished
    auto* dist = app.add_subcommand("distinguished", "distinguished elements and census");
    std::string dist_bv, dist_input;
    uint32_t dist_q = 2;
    dist->add_option("--bv", dist_bv)->required();
    dist->add_option("--q", dist_q, "field for the census");
    dist->add_option("--input", dist_input, "single matrix to test instead of a census");

    // rep
    auto* rep = app.add_subcommand("rep", "translate between matrices and representations");
    std::string rep_from, rep_bv;
    int rep_x = -1;
    bool rep_roundtrip = false, rep_assert = false;
    rep->add_option("--from-matrix", rep_from, "matrix literal file")->required();
    rep->add_option("--bv", rep_bv, "block sizes")->required();
    rep->add_option("--x", rep_x, "nilpotency bound (defaults to n)");
    rep->add_flag("--to-matrix", rep_roundtrip, "convert back to a matrix");
    rep->add_flag("--assert", rep_assert, "verify the round trip up to conjugacy");

    // delta
    auto* delta = app.add_subcommand("delta", "filtration and first-row quotient of a grid rep");
    std::string delta_input;
    delta->add_option("--input", delta_input,
                      "grid representation file: {field, p, rows, x, dims, maps}")
        ->required();

    CLI11_PARSE(app, argc, argv);

    if (*classify) {
        BlockVector bv = BlockVector::parse(bv_str);
        auto v = classify_P_on_Np(bv);
        if (check_witness) {
            std::string why;
            if (!replay_witness(bv, v, &why)) throw std::runtime_error("witness replay failed: " + why);
        }
        std::string human = "bv (" + bv.str() + "): " + verdict_str(v.verdict);
        if (v.infinite_witness)
            human += " (dominates " + (json(v.infinite_witness->minimal_case).dump()) +
                     " after merging; family " + v.infinite_witness->family + ")";
        if (v.finite_witness) human += " (covered by the family " + v.finite_witness->family + ")";
        human += "\n";
        emit(verdict_to_json(bv, v), as_json, human);
        return 0;
    }
    if (*levi) {
        BlockVector bv = BlockVector::parse(levi_bv);
        LeviTarget target =
            levi_target == "cone" ? LeviTarget::nilpotent_cone : LeviTarget::nilradical;
        auto v = classify_levi(bv, target);
        emit(levi_verdict_to_json(bv, target, v), as_json,
             "levi on " + levi_target + ", bv (" + bv.str() + "): " + verdict_str(v.verdict) +
                 "\n");
        return 0;
    }
    if (*orbits) {
        ParabolicShape shape(BlockVector::parse(orb_bv));
        OracleTarget target = orb_target == "nilradical" ? OracleTarget::nilradical
                              : orb_target == "cone_x"   ? OracleTarget::cone_x
                                                         : OracleTarget::cone;
        OracleActing acting = orb_acting == "levi" ? OracleActing::Levi : OracleActing::P;
        OracleOptions opt;
        opt.budget = budget;
        opt.threads = threads;
        auto table = enumerate_orbits(shape, orb_q, target, acting, orb_x, opt);
        if (!reps_out.empty()) {
            std::ofstream out(reps_out);
            out << orbit_table_to_json(table, true).dump(2) << "\n";
        }
        emit(orbit_table_to_json(table, false), as_json,
             "bv (" + shape.bv.str() + ") over GF(" + std::to_string(orb_q) + "), " + orb_target +
                 ", acting " + orb_acting + ": " + std::to_string(table.orbit_count()) +
                 " orbits on " + std::to_string(table.set_size) + " points [" + table.mode +
                 "]\n");
        return 0;
    }
    if (*normalize) {
        json j = read_json_file(norm_input);
        DynMatrix fm = mat_from_json(j.at("f"));
        DynMatrix um = mat_from_json(j.at("u_basis"));
        auto run_reduce = [&](auto f_mat, auto u_mat) {
            using FT = decltype(f_mat.field);
            auto U = Subspace<FT>::span_rows(u_mat);
            auto model = diagram_from_pair(U, f_mat);
            json before = gamma_to_json(model.field, model.shape, model.gamma());
            auto moves = reduce_diagram(model);
            json out;
            out["input_diagram"] = before;
            out["reduced_diagram"] = gamma_to_json(model.field, model.shape, model.gamma());
            out["moves"] = moves_to_json(moves);
            auto chk = check_reduced(model.field, model.shape, model.gamma());
            out["reduced_ok"] = chk.ok;
            emit(out, as_json,
                 "reduced in " + std::to_string(moves.size()) + " moves; normal form " +
                     (chk.ok ? "verified" : "FAILED") + "\n" + out["reduced_diagram"].dump(2) +
                     "\n");
        };
        std::visit(
            [&](auto&& f_mat) {
                using M = std::decay_t<decltype(f_mat)>;
                run_reduce(f_mat, std::get<M>(um));
            },
            fm);
        return 0;
    }
    if (*family) {
        FamilySpec spec = FamilySpec::parse(fam_name, fam_k, fam_n);
        if (spec.name == FamilyName::commuting_pair) {
            PrimeField f(fam_q);
            auto pair = build_commuting_pair(fam_n, fam_k, f, f.from_int(fam_t));
            json out;
            out["x"] = mat_to_json(pair.x);
            out["y"] = mat_to_json(pair.y);
            out["commute"] = (pair.x * pair.y - pair.y * pair.x).is_zero();
            out["cyclic"] = has_cyclic_last_vector(pair.x, pair.y);
            emit(out, as_json,
                 std::string("commuting pair built; [x,y] = 0: ") +
                     (out["commute"].get<bool>() ? "yes" : "no") + ", cyclic: " +
                     (out["cyclic"].get<bool>() ? "yes" : "no") + "\n");
            return 0;
        }
        PrimeField f(fam_q);
        if (fam_certify) {
            std::vector<PrimeField::Elem> sample = {f.from_int(fam_t), f.from_int(fam_t + 1),
                                                    f.from_int(fam_t + 2)};
            auto cert = certify_family(spec, f, sample);
            emit(certificate_to_json(cert), as_json,
                 "certificate for " + spec.str() + ": " + (cert.pass ? "PASS" : "FAIL") + "\n");
            return cert.pass ? 0 : 1;
        }
        auto m = build_family_member(spec, f, f.from_int(fam_t));
        emit(mat_to_json(m), as_json, "member of " + spec.str() + " at t = " +
                                          std::to_string(fam_t) + " over GF(" +
                                          std::to_string(fam_q) + ") built\n" +
                                          mat_to_json(m).dump(2) + "\n");
        return 0;
    }
    if (*dist) {
        ParabolicShape shape(BlockVector::parse(dist_bv));
        if (!dist_input.empty()) {
            DynMatrix m = mat_from_json(read_json_file(dist_input));
            json out;
            std::visit(
                [&](auto&& mat) {
                    auto res = is_distinguished(shape, mat);
                    out["distinguished"] = res.distinguished;
                    out["method"] = res.method == DistinguishedMethod::both ? "both"
                                    : res.method == DistinguishedMethod::nilpotency_only
                                        ? "nilpotency"
                                        : "indecomposability";
                },
                m);
            emit(out, as_json,
                 std::string("distinguished: ") +
                     (out["distinguished"].get<bool>() ? "yes" : "no") + " (" +
                     out["method"].get<std::string>() + ")\n");
            return 0;
        }
        OracleOptions opt;
        opt.budget = budget;
        opt.threads = threads;
        auto census = distinguished_census(shape, dist_q, opt);
        json out;
        out["bv"] = shape.bv.blocks;
        out["q"] = dist_q;
        out["orbits"] = census.total_orbits;
        out["distinguished"] = census.distinguished_count;
        emit(out, as_json,
             "bv (" + shape.bv.str() + "): " + std::to_string(census.distinguished_count) +
                 " distinguished orbits out of " + std::to_string(census.total_orbits) + "\n");
        return 0;
    }
    if (*rep) {
        ParabolicShape shape(BlockVector::parse(rep_bv));
        int x = rep_x < 0 ? shape.n() : rep_x;
        DynMatrix m = mat_from_json(read_json_file(rep_from));
        json out;
        std::visit(
            [&](auto&& mat) {
                auto r = matrix_to_rep(shape, mat, x);
                json dims = r.dims;
                out["preset"] = r.preset.str();
                out["dims"] = dims;
                json maps = json::object();
                for (size_t e = 0; e < r.maps.size(); ++e)
                    maps[r.preset.arrows()[e].name] = mat_to_json(r.maps[e]);
                out["maps"] = maps;
                if (rep_roundtrip || rep_assert) {
                    auto [shape2, back] = rep_to_matrix(r);
                    out["matrix"] = mat_to_json(back);
                    if (rep_assert) {
                        bool same_orbit = is_isomorphic(matrix_to_rep(shape2, back, x), r);
                        out["roundtrip_conjugate"] = same_orbit;
                        if (!same_orbit)
                            throw std::runtime_error("round trip left the conjugacy class");
                    }
                }
            },
            m);
        emit(out, as_json, "representation built\n" + out.dump(2) + "\n");
        return 0;
    }
    if (*delta) {
        json j = read_json_file(delta_input);
        FieldTag tag = FieldTag::parse(j.at("field").get<std::string>());
        int p = j.at("p").get<int>(), rows = j.at("rows").get<int>();
        int x = j.contains("x") ? j.at("x").get<int>() : rows;
        QuiverPreset preset = QuiverPreset::covering(p, rows, x);
        auto run_delta = [&](auto f) {
            using FT = decltype(f);
            std::vector<int> dims(preset.num_vertices(), 0);
            const json& dj = j.at("dims");
            for (int r = 1; r <= rows; ++r)
                for (int c = 1; c <= p; ++c)
                    dims[preset.grid_vertex(r, c)] = dj.at(r - 1).at(c - 1).get<int>();
            Rep<FT> rep(preset, f, dims);
            for (size_t e = 0; e < preset.arrows().size(); ++e) {
                const auto& name = preset.arrows()[e].name;
                if (!j.at("maps").contains(name)) continue;
                DynMatrix dm = mat_from_json(j.at("maps").at(name));
                rep.maps[e] = std::get<Mat<FT>>(dm);
            }
            rep.validate();
            auto labels = delta_filtration(rep);
            auto quot = phi_quotient(rep);
            json out;
            json lab = json::array();
            for (auto [r, c] : labels) lab.push_back({{"row", r}, {"col", c}});
            out["filtration"] = lab;
            json qd = json::array();
            for (int r = 1; r <= rows; ++r) {
                json rowj = json::array();
                for (int c = 1; c <= p; ++c) rowj.push_back(quot.dims[preset.grid_vertex(r, c)]);
                qd.push_back(rowj);
            }
            out["phi_quotient_dims"] = qd;
            emit(out, as_json,
                 "filtration has " + std::to_string(labels.size()) +
                     " standard layers; quotient dims per row printed\n" + out.dump(2) +
                     "\n");
        };
        if (tag.kind == FieldTag::Kind::rational) run_delta(Rationals{});
        else run_delta(PrimeField(tag.q));
        return 0;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CLI::Error&) {
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
