// Command-line front end: certify Hasse-principle violations for quaternionic
// curves over F_q(T), inspect the congruence sets, class groups and local
// criteria, and re-verify emitted certificates.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "hasse/certificate.hpp"

using namespace hasse;

namespace {

std::uint64_t env_seed() {
    if (const char* s = std::getenv("HASSE_SEED")) {
        try {
            return std::stoull(s);
        } catch (...) {
            throw std::invalid_argument("HASSE_SEED must be an unsigned integer");
        }
    }
    return Rng::kDefaultSeed;
}

void write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open output file: " + path);
    out << text << "\n";
}

struct CommonArgs {
    std::uint32_t q = 3;
    unsigned threads = 0;
};

int run(int argc, char** argv) {
    CLI::App app{"Hasse principle certification for quaternionic curves over F_q(T)"};
    app.require_subcommand(1);

    // ---- violate ----------------------------------------------------------
    auto* violate = app.add_subcommand("violate", "check one configuration and emit a certificate");
    CommonArgs vc;
    std::string v_p, v_qq, v_d, v_route = "auto", v_y, v_json;
    violate->add_option("--q", vc.q, "field size (odd prime)")->required();
    violate->add_option("--p", v_p, "first ramified prime of D")->required();
    violate->add_option("--qq", v_qq, "second ramified prime of D")->required();
    violate->add_option("--d", v_d, "discriminant of K = F(sqrt(d))")->required();
    violate->add_option("--route", v_route, "global route: main2 | main1 | global_class | auto");
    violate->add_option("--y", v_y, "ramified prime y for the congruence routes");
    violate->add_option("--json", v_json, "write the certificate to this file");
    violate->add_option("--threads", vc.threads, "worker threads (default: hardware)");

    // ---- search -----------------------------------------------------------
    auto* search = app.add_subcommand("search", "sweep twists d = u y p q m over square-free m");
    CommonArgs sc;
    std::string s_p, s_qq, s_y = "T", s_json;
    int s_maxdeg = 4;
    search->add_option("--q", sc.q, "field size (odd prime)")->required();
    search->add_option("--p", s_p, "first ramified prime of D")->required();
    search->add_option("--qq", s_qq, "second ramified prime of D")->required();
    search->add_option("--y", s_y, "ramified congruence prime (default T)");
    search->add_option("--max-deg-m", s_maxdeg, "maximal degree of m");
    search->add_option("--json", s_json, "write the result to this file");
    search->add_option("--threads", sc.threads, "worker threads");

    // ---- classgroup / rayclass --------------------------------------------
    auto* classgroup = app.add_subcommand("classgroup", "divisor class group of F(sqrt(d))");
    CommonArgs cc;
    std::string c_d, c_json;
    classgroup->add_option("--q", cc.q)->required();
    classgroup->add_option("--d", c_d, "odd-degree square-free discriminant")->required();
    classgroup->add_option("--json", c_json);

    auto* rayclass = app.add_subcommand("rayclass", "ray class group of modulus P*infinity");
    CommonArgs rc;
    std::string r_d, r_p, r_json;
    rayclass->add_option("--q", rc.q)->required();
    rayclass->add_option("--d", r_d)->required();
    rayclass->add_option("--p", r_p, "inert prime")->required();
    rayclass->add_option("--json", r_json);

    // ---- pset / wset -------------------------------------------------------
    auto* pset = app.add_subcommand("pset", "prime divisor set of the congruence values");
    CommonArgs pc;
    std::string p_y = "T", p_json;
    unsigned p_s = 2;
    bool p_variant = false, p_full = false;
    pset->add_option("--q", pc.q)->required();
    pset->add_option("--y", p_y)->required();
    pset->add_option("--s", p_s)->required();
    pset->add_flag("--prime-variant", p_variant, "use the n'-power set");
    pset->add_flag("--full-eps", p_full, "use the full norm-one range (reference variant)");
    pset->add_option("--json", p_json);

    auto* wset = app.add_subcommand("wset", "admissible Frobenius data (t, mu) at y");
    CommonArgs wc;
    std::string w_y = "T", w_json;
    wset->add_option("--q", wc.q)->required();
    wset->add_option("--y", w_y)->required();
    wset->add_option("--json", w_json);

    // ---- local -------------------------------------------------------------
    auto* local = app.add_subcommand("local", "local solvability verdicts");
    CommonArgs lc;
    std::string l_p, l_qq, l_d, l_place, l_json;
    local->add_option("--q", lc.q)->required();
    local->add_option("--p", l_p)->required();
    local->add_option("--qq", l_qq)->required();
    local->add_option("--d", l_d)->required();
    local->add_option("--place", l_place, "single finite place (default: full sweep)");
    local->add_option("--json", l_json);
    local->add_option("--threads", lc.threads);

    // ---- verify ------------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "re-verify a certificate file");
    std::string ver_file;
    bool ver_deep = false;
    unsigned ver_threads = 0;
    verify->add_option("file", ver_file, "certificate JSON")->required();
    verify->add_flag("--deep", ver_deep, "also recompute the global sets/groups and local sweep");
    verify->add_option("--threads", ver_threads);

    CLI11_PARSE(app, argc, argv);
    const std::uint64_t seed = env_seed();
    using nlohmann::json;

    if (*violate) {
        Fq F(vc.q);
        const PrimePoly p(F, poly_parse(F, v_p));
        const PrimePoly qq(F, poly_parse(F, v_qq));
        const Poly d = poly_parse(F, v_d);
        std::optional<Poly> y;
        if (!v_y.empty()) y = poly_parse(F, v_y);
        CheckOptions opt;
        opt.seed = seed;
        opt.threads = vc.threads;
        const HasseCertificate cert = check_violation(F, p, qq, d, route_from_string(v_route), y, opt);
        write_output(certificate_to_json(F, cert), v_json);
        std::cerr << "verdict: " << to_string(cert.verdict) << "\n";
        return 0;
    }
    if (*search) {
        Fq F(sc.q);
        const PrimePoly p(F, poly_parse(F, s_p));
        const PrimePoly qq(F, poly_parse(F, s_qq));
        const PrimePoly y(F, poly_parse(F, s_y));
        CheckOptions opt;
        opt.seed = seed;
        opt.threads = sc.threads;
        const SearchResult res = search_m(F, p, qq, y, s_maxdeg, opt);
        json out;
        out["violating_m"] = json::array();
        for (const auto& m : res.violating_m) out["violating_m"].push_back(poly_to_string(F, m));
        out["violations"] = json::array();
        for (const auto& e : res.violations) {
            json v;
            v["m"] = poly_to_string(F, e.m);
            v["unit"] = e.unit;
            v["d"] = poly_to_string(F, e.d);
            v["certificate"] = json::parse(certificate_to_json(F, e.cert));
            out["violations"].push_back(v);
        }
        out["rejects"] = json::array();
        for (const auto& r : res.rejects) {
            json v;
            v["m"] = poly_to_string(F, r.m);
            if (r.unit) v["unit"] = r.unit;
            v["reason"] = r.reason;
            out["rejects"].push_back(v);
        }
        write_output(out.dump(2), s_json);
        std::cerr << res.violating_m.size() << " values of m violate on every admissible twist\n";
        return 0;
    }
    if (*classgroup || *rayclass) {
        const bool ray = static_cast<bool>(*rayclass);
        Fq F(ray ? rc.q : cc.q);
        const Poly d = poly_parse(F, ray ? r_d : c_d);
        // integers are emitted as JSON numbers while they are exactly
        // representable, falling back to decimal strings beyond 2^53
        auto num = [](const Int& v) -> json {
            if (v > -(Int(1) << 53) && v < (Int(1) << 53))
                return json(static_cast<std::int64_t>(v));
            return json(v.str());
        };
        json out;
        if (ray) {
            const QuadExt K(F, d);
            const PrimePoly p(F, poly_parse(F, r_p));
            const RayClassData R = ray_class_structure(K, p, seed);
            out["L"] = json::array();
            for (const Int& c : R.pic0.L.c) out["L"].push_back(num(c));
            out["h"] = num(R.pic0.L.h);
            out["pic0_invariants"] = json::array();
            for (const Int& i : R.pic0.structure.invariants) out["pic0_invariants"].push_back(num(i));
            out["ray_invariants"] = json::array();
            for (const Int& i : R.ray.invariants) out["ray_invariants"].push_back(num(i));
            out["kernel_order"] = num(R.kernel_order);
        } else {
            const HyperCurve C(F, d);
            const Pic0Data G = group_structure(C, seed);
            out["L"] = json::array();
            for (const Int& c : G.L.c) out["L"].push_back(num(c));
            out["h"] = num(G.L.h);
            out["pic0_invariants"] = json::array();
            for (const Int& i : G.structure.invariants) out["pic0_invariants"].push_back(num(i));
        }
        write_output(out.dump(2), ray ? r_json : c_json);
        return 0;
    }
    if (*pset) {
        Fq F(pc.q);
        const PrimePoly y(F, poly_parse(F, p_y));
        std::vector<Poly> set;
        if (p_variant)
            set = prime_set(F, dprime_set(F, y, p_s), seed);
        else if (p_full)
            set = prime_set(F, d_set_full(F, y, p_s), seed);
        else
            set = prime_set(F, d_set(F, y, p_s), seed);
        json out = json::array();
        for (const Poly& p : set) out.push_back(poly_to_string(F, p));
        write_output(out.dump(2), p_json);
        return 0;
    }
    if (*wset) {
        Fq F(wc.q);
        const PrimePoly y(F, poly_parse(F, w_y));
        json out = json::array();
        for (const WeilDatum& w : enumerate_weil(F, y)) {
            json e;
            e["t"] = poly_to_string(F, w.t);
            e["mu"] = w.mu;
            out.push_back(e);
        }
        write_output(out.dump(2), w_json);
        return 0;
    }
    if (*local) {
        Fq F(lc.q);
        const PrimePoly p(F, poly_parse(F, l_p));
        const PrimePoly qq(F, poly_parse(F, l_qq));
        const QuadExt K(F, poly_parse(F, l_d));
        const QuaternionD D(p, qq);
        json out = json::array();
        auto verdict_entry = [&](const LocalVerdict& v) {
            json j;
            j["place"] = v.place.at_infinity ? "inf" : poly_to_string(F, v.place.prime);
            j["k_split"] = to_string(v.in_k);
            j["nonempty"] = v.nonempty;
            json w;
            if (v.witness.kind == LocalWitness::Kind::Mu) w["mu"] = v.witness.mu;
            if (v.witness.kind == LocalWitness::Kind::AC) {
                w["a"] = poly_to_string(F, v.witness.a);
                w["c"] = v.witness.c;
            }
            if (v.witness.kind == LocalWitness::Kind::Cutoff) w["cutoff"] = true;
            j["witness"] = w;
            return j;
        };
        if (!l_place.empty()) {
            const PrimePoly place(F, poly_parse(F, l_place));
            const LocalVerdict v = (place == p || place == qq)
                                       ? local_at_ramified(F, D, K, place)
                                       : local_at_good(F, D, K, place);
            out.push_back(verdict_entry(v));
        } else {
            const LocalSweep sweep = local_everywhere(F, D, K, 6, lc.threads);
            out.push_back(verdict_entry(sweep.infinity));
            for (const auto& v : sweep.ramified_d) out.push_back(verdict_entry(v));
            for (const auto& v : sweep.detailed) out.push_back(verdict_entry(v));
            std::cerr << "all_nonempty: " << (sweep.all_nonempty ? "true" : "false") << "\n";
        }
        write_output(out.dump(2), l_json);
        return 0;
    }
    if (*verify) {
        std::ifstream in(ver_file);
        if (!in) throw std::invalid_argument("cannot open certificate: " + ver_file);
        std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        const VerifyReport rep = verify_certificate(text, ver_deep, ver_threads);
        if (rep.ok) {
            std::cout << "certificate verifies\n";
            return 0;
        }
        std::cout << "certificate FAILS verification:\n";
        for (const auto& p : rep.problems) std::cout << "  - " << p << "\n";
        return 3;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
