/*
   Copyright 2026 The gbcrypt authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Command line front end: parameter generation, sampling, estimation,
// attacks and the Macaulay/rank experiments.  Output is one structured
// record per line; identical (command, config, seed) runs produce
// byte-identical --out files.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gbc/estimator.hpp"
#include "gbc/macaulay.hpp"
#include "gbc/solver.hpp"
#include "gbc/textio.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

struct Output {
    std::ostringstream file_buf;
    bool timings = false;
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

    void emit(const gbc::Record& r) {
        std::string line = r.line();
        file_buf << line << '\n';
        if (timings) {
            auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0);
            char buf[48];
            std::snprintf(buf, sizeof buf, " elapsed_ms=%.1f", ms.count());
            line += buf;
        }
        std::cout << line << '\n';
    }
    void flush(const std::string& path) {
        if (!path.empty()) gbc::save_file(path, file_buf.str());
    }
};

std::pair<long, long> parse_range(const std::string& s) {
    auto dots = s.find("..");
    if (dots == std::string::npos) {
        long v = std::stol(s);
        return {v, v};
    }
    return {std::stol(s.substr(0, dots)), std::stol(s.substr(dots + 2))};
}

gbc::Record base_record(std::string type, const std::string& cipher, const gbc::u128 q,
                        std::size_t rounds, const std::string& variant, gbc::u64 seed) {
    gbc::Record r(std::move(type));
    r.add("cipher", cipher);
    r.add("q", q);
    r.add("rounds", rounds);
    if (!variant.empty()) r.add("variant", variant);
    r.add("seed", std::to_string(seed));
    r.add("version", std::string(kVersion));
    return r;
}

int cmd_estimate(const std::string& cipher, const std::string& rounds, double omega,
                 const std::string& q_dec, unsigned nsol, const std::string& table, Output& out) {
    gbc::EstimatorConfig cfg;
    cfg.omega = omega;
    cfg.n_solutions = nsol;
    if (!q_dec.empty()) cfg.q_decimal = q_dec;
    cfg.validate();
    gbc::u128 qv = gbc::parse_u128(cfg.q_decimal);

    std::vector<long> rs;
    if (!table.empty()) {
        if (table == "ciminion")
            rs = {32, 33, 65, 66, 111, 112};
        else if (table == "hydra")
            rs = {28, 29, 30, 31, 32, 33, 34, 35, 39, 45};
        else
            throw gbc::ParseError("unknown table: " + table);
    } else {
        auto [a, b] = parse_range(rounds);
        for (long r = a; r <= b; ++r) rs.push_back(r);
    }
    const std::string which = table.empty() ? cipher : table;
    if (!table.empty()) {
        std::cout << (which == "ciminion" ? "r      bariant   eigenvalue  fully-substituted"
                                          : "r    dreg  fglm     eigenvalue  boolean-semi  semi-regular")
                  << '\n';
    }
    for (long r : rs) {
        if (which == "ciminion") {
            gbc::CiminionEstimate e = gbc::est_ciminion(static_cast<std::size_t>(r), cfg);
            if (!table.empty()) {
                std::printf("%-5ld  %-8.2f  %-10.2f  %.2f\n", r, e.bariant_bits, e.eigenvalue_bits,
                            e.fully_substituted_bits);
                continue;
            }
            gbc::Record rec = base_record("estimate", "ciminion", qv, static_cast<std::size_t>(r), "", 0);
            rec.add_bits("omega", omega);
            rec.add_bits("bariant", e.bariant_bits);
            rec.add_bits("bariant_construction", e.bariant_construction_bits);
            rec.add_bits("bariant_gcd", e.bariant_gcd_bits);
            rec.add("bariant_dominant", e.bariant_dominant);
            rec.add_bits("eigenvalue", e.eigenvalue_bits);
            rec.add_bits("fully_substituted", e.fully_substituted_bits);
            out.emit(rec);
        } else if (which == "hydra") {
            gbc::HydraEstimate e = gbc::est_hydra(static_cast<std::size_t>(r), cfg);
            if (!table.empty()) {
                std::printf("%-4ld %-5d %-8.2f %-11.2f %-13.2f %.2f\n", r, e.dreg, e.fglm_bits,
                            e.eigenvalue_bits, e.boolean_semiregular_bits, e.semiregular_bits);
                continue;
            }
            gbc::Record rec = base_record("estimate", "hydra", qv, static_cast<std::size_t>(r), "", 0);
            rec.add_bits("omega", omega);
            rec.add("dreg", e.dreg);
            rec.add_bits("fglm", e.fglm_bits);
            rec.add_bits("eigenvalue", e.eigenvalue_bits);
            rec.add_bits("semiregular", e.semiregular_bits);
            rec.add_bits("bool_proven_construction", e.bool_proven_construction_bits);
            rec.add_bits("bool_proven_elimination", e.bool_proven_elimination_bits);
            rec.add_bits("bool_semiregular_construction", e.bool_semiregular_construction_bits);
            rec.add_bits("bool_semiregular_elimination", e.bool_semiregular_elimination_bits);
            rec.add_bits("boolean_semiregular", e.boolean_semiregular_bits);
            if (!e.note.empty()) rec.add("note", "\"" + e.note + "\"");
            out.emit(rec);
        } else {
            throw gbc::ParseError("unknown cipher: " + which);
        }
    }
    return 0;
}

int cmd_gen_params(const std::string& cipher, const std::string& q_dec, long rounds, long rc, long re,
                   const std::string& variant, gbc::u64 seed, gbc::u128 alpha, gbc::u128 beta,
                   const std::string& out_path) {
    gbc::PrimeField f(gbc::parse_u128(q_dec));
    if (cipher == "ciminion") {
        if (rc < 0 || re < 0) {
            if (rounds < 2) throw gbc::InvalidParams("need --rounds at least 2 (or --rc/--re)");
            rc = rounds - 1;
            re = 1;
        }
        gbc::CiminionParams p = gbc::make_ciminion_params(
            f, static_cast<std::size_t>(rc), static_cast<std::size_t>(re), gbc::parse_variant(variant),
            seed, alpha, beta);
        gbc::save_file(out_path, gbc::ciminion_params_text(p));
    } else if (cipher == "hydra") {
        gbc::HydraParams p = gbc::make_hydra_params(f, static_cast<std::size_t>(rounds), seed);
        gbc::save_file(out_path, gbc::hydra_params_text(p));
    } else {
        throw gbc::ParseError("unknown cipher: " + cipher);
    }
    return 0;
}

int cmd_gen_sample(const std::string& params_path, gbc::u64 seed, const std::string& out_path,
                   const std::string& witness_path) {
    gbc::KvFile f = gbc::KvFile::load(params_path);
    gbc::Rng rng(seed);
    if (f.get("cipher") == "ciminion") {
        gbc::CiminionParams p = gbc::parse_ciminion_params(f);
        gbc::u128 k1 = p.field.sample(rng), k2 = p.field.sample(rng);
        gbc::CiminionSample s = gbc::make_ciminion_sample(p, k1, k2, rng.next());
        gbc::save_file(out_path, gbc::ciminion_sample_text(p, s));
        if (!witness_path.empty()) {
            gbc::KvFile w;
            w.set("cipher", "ciminion");
            w.set("k1", gbc::to_string(k1));
            w.set("k2", gbc::to_string(k2));
            gbc::save_file(witness_path, w.dump());
        }
    } else {
        gbc::HydraParams p = gbc::parse_hydra_params(f);
        gbc::HydraWitness w = gbc::random_hydra_witness(p, seed);
        gbc::HydraSamplePair s = gbc::heads_sample(p, w.key, w.y, w.z);
        gbc::save_file(out_path, gbc::hydra_sample_text(p, s));
        if (!witness_path.empty()) {
            gbc::KvFile wf;
            wf.set("cipher", "hydra");
            auto vec = [&](const gbc::Vec4& v) {
                std::ostringstream os;
                for (std::size_t l = 0; l < 4; ++l) {
                    if (l) os << ' ';
                    os << gbc::to_string(v[l]);
                }
                return os.str();
            };
            wf.set("k", vec(w.key));
            wf.set("y", vec(w.y));
            wf.set("z", vec(w.z));
            gbc::save_file(witness_path, wf.dump());
        }
    }
    return 0;
}

int cmd_attack(const std::string& params_path, const std::string& sample_path, gbc::u64 seed,
               std::size_t budget, long budget_ms, long n_cap, Output& out) {
    gbc::KvFile pf = gbc::KvFile::load(params_path);
    gbc::KvFile sf = gbc::KvFile::load(sample_path);
    gbc::SolveOptions opts;
    opts.seed = seed;
    opts.budget = budget;
    opts.budget_ms = static_cast<double>(budget_ms);
    if (n_cap > 0) opts.root_cap = static_cast<std::size_t>(n_cap);

    if (pf.get("cipher") == "ciminion") {
        gbc::CiminionParams p = gbc::parse_ciminion_params(pf);
        gbc::CiminionSample s = gbc::parse_ciminion_sample(sf);
        try {
            gbc::CiminionAttack a = gbc::recover_ciminion_key(p, s, opts);
            gbc::Record rec = base_record("attack", "ciminion", p.field.modulus(), p.rounds(),
                                          gbc::variant_name(p.variant), seed);
            rec.add("strategy", a.strategy);
            rec.add("candidates", a.keys.size());
            rec.add("verified", a.stats.verified);
            rec.add("branches", a.stats.branches);
            rec.add("charpolys", a.stats.charpolys);
            rec.add("status", std::string("ok"));
            out.emit(rec);
            for (const auto& k : a.keys) {
                gbc::Record kr("key");
                kr.add("k1", k.k1);
                kr.add("k2", k.k2);
                out.emit(kr);
            }
        } catch (const gbc::NoSolution&) {
            gbc::Record rec = base_record("attack", "ciminion", p.field.modulus(), p.rounds(),
                                          gbc::variant_name(p.variant), seed);
            rec.add("status", std::string("no-solution"));
            out.emit(rec);
            return 1;
        }
    } else {
        gbc::HydraParams p = gbc::parse_hydra_params(pf);
        gbc::HydraSamplePair s = gbc::parse_hydra_sample(sf);
        try {
            gbc::HydraAttack a = gbc::recover_hydra_key(p, s, opts);
            gbc::Record rec = base_record("attack", "hydra", p.field.modulus(), p.rh, "", seed);
            rec.add("strategy", a.strategy);
            rec.add("candidates", a.keys.size());
            rec.add("verified", a.stats.verified);
            rec.add("branches", a.stats.branches);
            rec.add("charpolys", a.stats.charpolys);
            rec.add("status", std::string("ok"));
            out.emit(rec);
            for (const auto& w : a.keys) {
                gbc::Record kr("key");
                auto vec = [&](const gbc::Vec4& v) {
                    std::string s2;
                    for (std::size_t l = 0; l < 4; ++l) {
                        if (l) s2 += ',';
                        s2 += gbc::to_string(v[l]);
                    }
                    return s2;
                };
                kr.add("k", vec(w.key));
                kr.add("y", vec(w.y));
                kr.add("z", vec(w.z));
                out.emit(kr);
            }
        } catch (const gbc::NoSolution&) {
            gbc::Record rec = base_record("attack", "hydra", p.field.modulus(), p.rh, "", seed);
            rec.add("status", std::string("no-solution"));
            out.emit(rec);
            return 1;
        }
    }
    return 0;
}

int cmd_experiment_gb_verify(bool ciminion, bool hydra, const std::string& q_dec, long rounds,
                             const std::string& variant, gbc::u64 seed, Output& out) {
    gbc::PrimeField f(gbc::parse_u128(q_dec));
    if (ciminion == hydra) throw gbc::ParseError("pick exactly one of --ciminion/--hydra");
    if (ciminion) {
        gbc::CiminionParams p = gbc::make_ciminion_params(f, static_cast<std::size_t>(rounds) - 1, 1,
                                                          gbc::parse_variant(variant), seed);
        gbc::Rng rng(seed + 1);
        gbc::CiminionSample s =
            gbc::make_ciminion_sample(p, p.field.sample(rng), p.field.sample(rng), rng.next());
        gbc::CiminionModel m = gbc::ciminion_build_model(p, s);
        gbc::PolySystem gb = gbc::ciminion_gb(m);
        bool ok = gbc::is_groebner(gb, m.order, false);
        std::size_t stair = gbc::quotient_basis(gb, m.order).size();
        std::size_t expect = std::size_t{1} << (p.rounds() - 1);
        gbc::Record rec =
            base_record("gb-verify", "ciminion", f.modulus(), p.rounds(), gbc::variant_name(p.variant), seed);
        rec.add("groebner", ok);
        rec.add("staircase", stair);
        rec.add("expected_staircase", expect);
        rec.add("pass", ok && stair == expect);
        out.emit(rec);
        return ok && stair == expect ? 0 : 1;
    }
    gbc::HydraParams p = gbc::make_hydra_params(f, static_cast<std::size_t>(rounds), seed);
    gbc::HydraWitness w = gbc::random_hydra_witness(p, seed + 1);
    gbc::HydraSamplePair s = gbc::heads_sample(p, w.key, w.y, w.z);
    gbc::HydraModel m = gbc::hydra_build_model(p, s);
    gbc::PolySystem G = gbc::hydra_transform(m);
    gbc::AffineElimination elim = gbc::eliminate_affine(G, m);
    gbc::HydraGb hgb = gbc::change_of_coordinates(m, elim);
    bool ok = gbc::is_groebner(hgb.gb, gbc::TermOrder::drl(), false);
    std::size_t dim = gbc::quotient_basis(hgb.gb, gbc::TermOrder::drl()).size();
    std::size_t bound = std::size_t{1} << (2 * p.rh - 2);
    bool pass = ok && dim <= bound && hgb.extras.size() == 4;
    gbc::Record rec = base_record("gb-verify", "hydra", f.modulus(), p.rh, "", seed);
    rec.add("groebner", ok);
    rec.add("dim", dim);
    rec.add("bound", bound);
    rec.add("extras", hgb.extras.size());
    rec.add("pass", pass);
    out.emit(rec);
    return pass ? 0 : 1;
}

int cmd_experiment_solve_degree(const std::string& q_dec, long rounds, bool boolean_variant, int dmax,
                                gbc::u64 seed, Output& out) {
    gbc::PrimeField f(gbc::parse_u128(q_dec));
    gbc::HydraParams p = gbc::make_hydra_params(f, static_cast<std::size_t>(rounds), seed);
    gbc::HydraWitness w = gbc::random_hydra_witness(p, seed + 1);
    gbc::HydraSamplePair s = gbc::heads_sample(p, w.key, w.y, w.z);
    gbc::HydraModel m = gbc::hydra_build_model(p, s);
    gbc::PolySystem G = gbc::hydra_transform(m);
    gbc::AffineElimination elim = gbc::eliminate_affine(G, m);
    gbc::HydraGb hgb = gbc::change_of_coordinates(m, elim);
    gbc::TermOrder drl = gbc::TermOrder::drl();

    gbc::DegreeSearchResult res;
    if (boolean_variant) {
        res = gbc::boolean_solving_degree_search(hgb.extras, hgb.gb, drl, dmax);
    } else {
        gbc::PolySystem full = hgb.gb;
        for (const auto& e : hgb.extras.polys) full.push(e);
        res = gbc::solving_degree_search(full, drl, dmax);
    }
    for (const auto& t : res.trace) {
        gbc::Record rec = base_record("solve-degree", "hydra", f.modulus(), p.rh, "", seed);
        rec.add("boolean", boolean_variant);
        rec.add("d", t.d);
        rec.add("rows", t.rows);
        rec.add("cols", t.cols);
        rec.add("rank", t.rank);
        rec.add("success", t.success);
        out.emit(rec);
    }
    gbc::Record rec = base_record("solve-degree-result", "hydra", f.modulus(), p.rh, "", seed);
    rec.add("boolean", boolean_variant);
    rec.add("degree", res.degree);
    out.emit(rec);
    return 0;
}

int cmd_experiment_rank_check(const std::string& q_dec, const std::string& rounds, gbc::u64 seed,
                              Output& out) {
    gbc::PrimeField f(gbc::parse_u128(q_dec));
    auto [a, b] = parse_range(rounds);
    bool all = true;
    for (long r = a; r <= b; ++r) {
        gbc::HydraParams p = gbc::make_hydra_params(f, static_cast<std::size_t>(r), seed);
        gbc::HydraSamplePair s{}; // the rank identities do not involve the outputs
        gbc::HydraModel m = gbc::hydra_build_model(p, s);
        gbc::PolySystem G = gbc::hydra_transform(m);
        gbc::RankCheck rc = gbc::generic_coordinates_check(G, m);
        std::size_t affine_rank = 0;
        bool affine_ok = false;
        try {
            gbc::AffineElimination elim = gbc::eliminate_affine(G, m);
            affine_rank = elim.affine_rank;
            affine_ok = true;
        } catch (const gbc::AffineRankDeficit& e) {
            affine_rank = e.rank_found;
        }
        gbc::Record rec = base_record("rank-check", "hydra", f.modulus(), static_cast<std::size_t>(r), "", seed);
        rec.add("rank", rc.rank);
        rec.add("expected", rc.expected);
        rec.add("full_rank", rc.full_rank);
        rec.add("affine_rank", affine_rank);
        rec.add("affine_expected", std::size_t{14 * static_cast<std::size_t>(r) + 6});
        out.emit(rec);
        all = all && rc.full_rank && affine_ok;
    }
    return all ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Groebner-basis cryptanalysis toolkit for the Ciminion and Hydra PRFs"};
    app.require_subcommand(1);

    std::string cipher, rounds = "0", q_dec, q_exp = "7741", table, variant = "standard";
    std::string params_path, sample_path, out_path, witness_path;
    double omega = 2.0;
    unsigned nsol = 1;
    gbc::u64 seed = 0;
    long rc = -1, re = -1, n_cap = 0, budget_ms = 0;
    std::size_t budget_ops = 1u << 20;
    int dmax = 16;
    bool flag_ciminion = false, flag_hydra = false, flag_boolean = false, timings = false;
    std::string alpha = "1", beta = "1";

    auto* est = app.add_subcommand("estimate", "closed-form attack-cost estimates");
    est->add_option("--cipher", cipher);
    est->add_option("--rounds", rounds);
    est->add_option("--omega", omega);
    est->add_option("--q", q_dec);
    est->add_option("--n-solutions", nsol);
    est->add_option("--table", table);
    est->add_option("--out", out_path);
    est->add_flag("--timings", timings);

    auto* gp = app.add_subcommand("gen-params", "write a parameter file");
    gp->add_option("--cipher", cipher)->required();
    gp->add_option("--q", q_dec)->required();
    gp->add_option("--rounds", rounds);
    gp->add_option("--rc", rc);
    gp->add_option("--re", re);
    gp->add_option("--variant", variant);
    gp->add_option("--seed", seed);
    gp->add_option("--alpha", alpha);
    gp->add_option("--beta", beta);
    gp->add_option("--out", out_path)->required();

    auto* gs = app.add_subcommand("gen-sample", "sample a random key and emit its public data");
    gs->add_option("--params", params_path)->required();
    gs->add_option("--seed", seed);
    gs->add_option("--out", out_path)->required();
    gs->add_option("--witness-out", witness_path);

    auto* at = app.add_subcommand("attack", "run the key-recovery pipeline");
    at->add_option("--params", params_path)->required();
    at->add_option("--sample", sample_path)->required();
    at->add_option("--seed", seed);
    at->add_option("--budget-ops", budget_ops);
    at->add_option("--budget-ms", budget_ms);
    at->add_option("--n-cap", n_cap);
    at->add_option("--out", out_path);
    at->add_flag("--timings", timings);

    auto* ex = app.add_subcommand("experiment", "oracle verification and Macaulay experiments");
    ex->require_subcommand(1);
    auto* gv = ex->add_subcommand("gb-verify", "Buchberger-check a constructed basis");
    gv->add_flag("--ciminion", flag_ciminion);
    gv->add_flag("--hydra", flag_hydra);
    gv->add_option("--rounds", rounds)->required();
    gv->add_option("--q", q_exp);
    gv->add_option("--variant", variant);
    gv->add_option("--seed", seed);
    gv->add_option("--out", out_path);
    gv->add_flag("--timings", timings);
    auto* sd = ex->add_subcommand("solve-degree", "empirical Macaulay solving degree");
    sd->add_flag("--hydra", flag_hydra);
    sd->add_flag("--boolean", flag_boolean);
    sd->add_option("--rounds", rounds)->required();
    sd->add_option("--q", q_exp);
    sd->add_option("--dmax", dmax);
    sd->add_option("--seed", seed);
    sd->add_option("--out", out_path);
    sd->add_flag("--timings", timings);
    auto* rk = ex->add_subcommand("rank-check", "generic-coordinates and affine rank identities");
    rk->add_option("--rounds", rounds)->required();
    rk->add_option("--q", q_exp);
    rk->add_option("--seed", seed);
    rk->add_option("--out", out_path);
    rk->add_flag("--timings", timings);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    Output out;
    out.timings = timings;
    try {
        int rcode = 0;
        if (est->parsed()) {
            if (table.empty() && cipher.empty()) throw gbc::ParseError("need --cipher or --table");
            if (table.empty() && rounds == "0") throw gbc::ParseError("need --rounds");
            rcode = cmd_estimate(cipher, rounds, omega, q_dec, nsol, table, out);
        } else if (gp->parsed()) {
            rcode = cmd_gen_params(cipher, q_dec, std::stol(rounds), rc, re, variant, seed,
                                   gbc::parse_u128(alpha), gbc::parse_u128(beta), out_path);
            out_path.clear();
        } else if (gs->parsed()) {
            rcode = cmd_gen_sample(params_path, seed, out_path, witness_path);
            out_path.clear();
        } else if (at->parsed()) {
            rcode = cmd_attack(params_path, sample_path, seed, budget_ops, budget_ms, n_cap, out);
        } else if (gv->parsed()) {
            rcode = cmd_experiment_gb_verify(flag_ciminion, flag_hydra, q_exp, std::stol(rounds),
                                             variant, seed, out);
        } else if (sd->parsed()) {
            if (!flag_hydra) throw gbc::ParseError("solve-degree currently targets --hydra");
            rcode = cmd_experiment_solve_degree(q_exp, std::stol(rounds), flag_boolean, dmax, seed, out);
        } else if (rk->parsed()) {
            rcode = cmd_experiment_rank_check(q_exp, rounds, seed, out);
        }
        out.flush(out_path);
        return rcode;
    } catch (const gbc::BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return 3;
    } catch (const gbc::NoSolution& e) {
        std::cerr << "no solution: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
