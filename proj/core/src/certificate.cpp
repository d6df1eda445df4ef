#include "hasse/certificate.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

namespace hasse {

const char* to_string(Route r) {
    switch (r) {
        case Route::Main2: return "main2";
        case Route::Main1: return "main1";
        case Route::GlobalClass: return "global_class";
        case Route::Auto: return "auto";
    }
    return "?";
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Violation: return "violation";
        case Verdict::NoViolation: return "no_violation";
        case Verdict::Undecided: return "undecided";
    }
    return "?";
}

Route route_from_string(const std::string& s) {
    if (s == "main2") return Route::Main2;
    if (s == "main1") return Route::Main1;
    if (s == "global_class") return Route::GlobalClass;
    if (s == "auto") return Route::Auto;
    throw std::invalid_argument("unknown route: " + s);
}

namespace {

GlobalReport run_congruence_route(const Fq& F, const PrimePoly& p, const PrimePoly& qp,
                                  const PrimePoly& y, const QuadExt& K, bool prime_variant,
                                  std::uint64_t seed) {
    GlobalReport rep;
    rep.route = prime_variant ? "main1" : "main2";
    rep.y = y.poly();
    rep.applicable = true;
    const CongruenceVerdict v = prime_variant ? check_thm_main1(F, p, qp, y, K, seed)
                                              : check_thm_main2(F, p, qp, y, K, seed);
    rep.obstructed = v.obstructed();
    rep.bullets = v.bullets;
    rep.prime_set_used = v.prime_set_used;
    rep.s = v.s;
    return rep;
}

GlobalReport run_class_route(const Fq& F, const PrimePoly& p, const PrimePoly& qp,
                             const QuadExt& K, std::uint64_t seed) {
    GlobalReport rep;
    rep.route = "global_class";
    // pick a ramified prime of D that is inert in K
    const PrimePoly* inert = nullptr;
    if (place_split_type(K, p) == SplitType::Inert)
        inert = &p;
    else if (place_split_type(K, qp) == SplitType::Inert)
        inert = &qp;
    if (inert == nullptr) {
        rep.applicable = false;
        rep.detail = "no ramified prime of D is inert in K";
        return rep;
    }
    if (K.infinity_type() != SplitType::Ramified) {
        rep.applicable = false;
        rep.detail = "infinite place not totally ramified in K (even-degree discriminant)";
        return rep;
    }
    rep.applicable = true;
    rep.inert_prime = inert->poly();
    const GlobalObstruction O = check_global_obstruction(K, *inert, seed);
    rep.obstructed = O.obstructed;
    rep.z_order = O.z_order;
    rep.cl_k = O.groups.cl_k;
    rep.ray = O.groups.ray;
    rep.target = O.target;
    rep.class_number = O.groups.pic0.L.h;
    rep.kernel_order = O.groups.kernel_order;
    rep.l_coeffs = O.groups.pic0.L.c;
    return rep;
}

std::vector<PrimePoly> ramified_candidates_for_y(const Fq& F, const Poly& d, const PrimePoly& p,
                                                 const PrimePoly& qp, std::uint64_t seed) {
    std::vector<PrimePoly> out;
    for (const auto& fac : factorize(F, d, seed).factors) {
        if (fac.prime == p.poly() || fac.prime == qp.poly()) continue;
        out.push_back(PrimePoly::unchecked(fac.prime));
    }
    return out;
}

} // namespace

HasseCertificate check_violation(const Fq& F, const PrimePoly& p, const PrimePoly& qp,
                                 const Poly& d, Route route, const std::optional<Poly>& y,
                                 const CheckOptions& opt) {
    const QuadExt K(F, d); // validates d square-free nonconstant and q odd
    const QuaternionD D(p, qp);
    HasseCertificate cert;
    cert.q = F.q();
    cert.p = p.poly();
    cert.qp = qp.poly();
    cert.d = d;
    cert.route_requested = to_string(route);
    cert.y_requested = y;
    cert.seed = opt.seed;
    cert.k_splits_d = quaternion_split_by(F, D, K);

    if (!cert.k_splits_d) {
        // One ramified prime has a split place: the curve has no points over
        // K, but it also has no points in that completion, so the principle
        // is not violated.
        cert.global.route = "no_split";
        cert.global.applicable = true;
        cert.global.obstructed = true;
        cert.global.detail = "K does not split D: no rational points, and the split "
                             "ramified place is locally empty";
        cert.local = local_everywhere(F, D, K, opt.detail_max_degree, opt.threads);
        cert.verdict = Verdict::NoViolation;
        return cert;
    }

    std::vector<Route> attempts;
    if (route == Route::Auto)
        attempts = {Route::Main2, Route::Main1, Route::GlobalClass};
    else
        attempts = {route};

    std::optional<PrimePoly> ycheck;
    if (y) {
        if (!is_irreducible(F, *y)) throw std::invalid_argument("check_violation: y must be prime");
        ycheck = PrimePoly(F, *y);
    }

    bool have = false;
    for (Route r : attempts) {
        GlobalReport rep;
        if (r == Route::GlobalClass) {
            rep = run_class_route(F, p, qp, K, opt.seed);
            if (rep.applicable) {
                cert.global = rep;
                have = true;
            } else if (!have) {
                cert.global = rep;
            }
        } else {
            std::vector<PrimePoly> ys;
            if (ycheck) {
                ys = {*ycheck};
            } else {
                ys = ramified_candidates_for_y(F, d, p, qp, opt.seed);
                if (route == Route::Auto)
                    std::erase_if(ys, [&](const PrimePoly& yy) {
                        return static_cast<unsigned>(yy.deg()) > opt.max_auto_y_degree;
                    });
            }
            if (ys.empty() && !have) {
                cert.global.route = to_string(r);
                cert.global.applicable = false;
                cert.global.detail = "no candidate ramified prime y";
            }
            for (const PrimePoly& yy : ys) {
                rep = run_congruence_route(F, p, qp, yy, K, r == Route::Main1, opt.seed);
                cert.global = rep;
                have = true;
                if (rep.obstructed) break;
            }
        }
        if (have && cert.global.obstructed) break;
        if (route != Route::Auto) break;
    }

    if (cert.global.applicable && cert.global.obstructed) {
        cert.local = local_everywhere(F, D, K, opt.detail_max_degree, opt.threads);
        cert.verdict = cert.local->all_nonempty ? Verdict::Violation : Verdict::NoViolation;
    } else {
        cert.verdict = Verdict::Undecided;
        if (opt.always_run_local)
            cert.local = local_everywhere(F, D, K, opt.detail_max_degree, opt.threads);
    }
    return cert;
}

SearchResult search_m(const Fq& F, const PrimePoly& p, const PrimePoly& qp, const PrimePoly& y,
                      int max_deg_m, const CheckOptions& opt) {
    SearchResult out;
    const Poly base = poly_mul(F, y.poly(), poly_mul(F, p.poly(), qp.poly()));
    const FqElem ns = F.nonsquare_unit();
    for (int deg = 0; deg <= max_deg_m; ++deg) {
        std::uint64_t count = 1;
        for (int i = 0; i < deg; ++i) count *= F.q();
        // (degree, lexicographic) order: smaller polynomials first
        std::vector<Poly> candidates;
        for (std::uint64_t idx = 0; idx < count; ++idx)
            candidates.push_back(poly_from_index(F, deg, idx));
        std::sort(candidates.begin(), candidates.end(), PolyLess{});
        for (const Poly& m : candidates) {
            if (!is_squarefree(F, m)) continue;
            if (!poly_gcd(F, m, base).is_one()) continue;
            bool any_admissible = false;
            bool all_violate = true;
            for (FqElem u : {FqElem(1), ns}) {
                const Poly dd = poly_scale(F, poly_mul(F, base, m), u);
                if (QuadExt(F, dd).infinity_type() == SplitType::Split) continue;
                any_admissible = true;
                HasseCertificate cert =
                    check_violation(F, p, qp, dd, Route::Main2, y.poly(), opt);
                if (cert.verdict == Verdict::Violation) {
                    out.violations.push_back(SearchEntry{m, u, dd, std::move(cert)});
                } else {
                    all_violate = false;
                    std::string reason = "undecided";
                    if (cert.verdict == Verdict::NoViolation) {
                        reason = "locally empty place";
                        if (cert.local) {
                            for (const auto& rv : cert.local->ramified_d)
                                if (!rv.nonempty)
                                    reason = "locally empty at " + poly_to_string(F, rv.place.prime);
                            for (const auto& dv : cert.local->detailed)
                                if (!dv.nonempty)
                                    reason = "locally empty at " + poly_to_string(F, dv.place.prime);
                        }
                    } else {
                        for (const auto& b : cert.global.bullets)
                            if (!b.ok) {
                                reason = "global bullet failed: " + b.name;
                                break;
                            }
                    }
                    out.rejects.push_back(SearchReject{m, u, std::move(reason)});
                }
            }
            if (!any_admissible) {
                out.rejects.push_back(SearchReject{m, 0, "infinity splits for every unit twist"});
            } else if (all_violate) {
                out.violating_m.push_back(m);
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// JSON serialization
// ---------------------------------------------------------------------------

namespace {

using nlohmann::json;

json poly_json(const Fq& F, const Poly& p) { return poly_to_string(F, p); }

json group_json(const AbGroupStruct& g) {
    json j;
    j["free_rank"] = g.free_rank;
    json inv = json::array();
    for (const Int& d : g.invariants) inv.push_back(d.str());
    j["invariants"] = inv;
    return j;
}

AbGroupStruct group_from_json(const json& j) {
    AbGroupStruct g;
    g.free_rank = j.at("free_rank").get<unsigned>();
    for (const auto& s : j.at("invariants")) g.invariants.push_back(Int(s.get<std::string>()));
    return g;
}

const char* witness_kind_name(LocalWitness::Kind k) {
    switch (k) {
        case LocalWitness::Kind::Rule: return "rule";
        case LocalWitness::Kind::Mu: return "mu";
        case LocalWitness::Kind::AC: return "ac";
        case LocalWitness::Kind::Cutoff: return "cutoff";
    }
    return "?";
}

json verdict_json(const Fq& F, const LocalVerdict& v) {
    json j;
    j["place"] = v.place.at_infinity ? "inf" : poly_to_string(F, v.place.prime);
    j["k_split"] = to_string(v.in_k);
    j["nonempty"] = v.nonempty;
    json w;
    w["kind"] = witness_kind_name(v.witness.kind);
    if (v.witness.kind == LocalWitness::Kind::Mu) w["mu"] = v.witness.mu;
    if (v.witness.kind == LocalWitness::Kind::AC) {
        w["a"] = poly_to_string(F, v.witness.a);
        w["c"] = v.witness.c;
    }
    j["witness"] = w;
    return j;
}

LocalVerdict verdict_from_json(const Fq& F, const json& j) {
    LocalVerdict v;
    const std::string place = j.at("place").get<std::string>();
    if (place == "inf") {
        v.place.at_infinity = true;
    } else {
        v.place.prime = poly_parse(F, place);
    }
    const std::string st = j.at("k_split").get<std::string>();
    v.in_k = st == "split" ? SplitType::Split : st == "inert" ? SplitType::Inert : SplitType::Ramified;
    v.nonempty = j.at("nonempty").get<bool>();
    const json& w = j.at("witness");
    const std::string kind = w.at("kind").get<std::string>();
    if (kind == "mu") {
        v.witness.kind = LocalWitness::Kind::Mu;
        v.witness.mu = w.at("mu").get<FqElem>();
    } else if (kind == "ac") {
        v.witness.kind = LocalWitness::Kind::AC;
        v.witness.a = poly_parse(F, w.at("a").get<std::string>());
        v.witness.c = w.at("c").get<FqElem>();
    } else if (kind == "cutoff") {
        v.witness.kind = LocalWitness::Kind::Cutoff;
    } else {
        v.witness.kind = LocalWitness::Kind::Rule;
    }
    return v;
}

json sweep_json(const Fq& F, const LocalSweep& s) {
    json j;
    j["all_nonempty"] = s.all_nonempty;
    j["cutoff_degree"] = s.cutoff_degree;
    j["infinity"] = verdict_json(F, s.infinity);
    json ram = json::array();
    for (const auto& v : s.ramified_d) ram.push_back(verdict_json(F, v));
    j["ramified"] = ram;
    json det = json::array();
    for (const auto& v : s.detailed) det.push_back(verdict_json(F, v));
    j["detailed"] = det;
    json stats = json::array();
    for (const auto& st : s.stats) {
        json e;
        e["degree"] = st.degree;
        e["primes"] = st.primes;
        e["split"] = st.split;
        e["ramified"] = st.ramified;
        e["inert"] = st.inert;
        e["empty"] = st.empty;
        stats.push_back(e);
    }
    j["stats"] = stats;
    return j;
}

LocalSweep sweep_from_json(const Fq& F, const json& j) {
    LocalSweep s;
    s.all_nonempty = j.at("all_nonempty").get<bool>();
    s.cutoff_degree = j.at("cutoff_degree").get<unsigned>();
    s.infinity = verdict_from_json(F, j.at("infinity"));
    for (const auto& v : j.at("ramified")) s.ramified_d.push_back(verdict_from_json(F, v));
    for (const auto& v : j.at("detailed")) s.detailed.push_back(verdict_from_json(F, v));
    for (const auto& e : j.at("stats")) {
        DegreeStats st;
        st.degree = e.at("degree").get<unsigned>();
        st.primes = e.at("primes").get<std::uint64_t>();
        st.split = e.at("split").get<std::uint64_t>();
        st.ramified = e.at("ramified").get<std::uint64_t>();
        st.inert = e.at("inert").get<std::uint64_t>();
        st.empty = e.at("empty").get<std::uint64_t>();
        s.stats.push_back(st);
    }
    return s;
}

} // namespace

std::string certificate_to_json(const Fq& F, const HasseCertificate& c) {
    json j;
    j["schema"] = c.schema;
    j["inputs"]["q"] = c.q;
    j["inputs"]["p"] = poly_json(F, c.p);
    j["inputs"]["qq"] = poly_json(F, c.qp);
    j["inputs"]["d"] = poly_json(F, c.d);
    j["inputs"]["route"] = c.route_requested;
    if (c.y_requested) j["inputs"]["y"] = poly_json(F, *c.y_requested);
    j["inputs"]["seed"] = c.seed;
    j["k_splits_d"] = c.k_splits_d;

    json g;
    g["route"] = c.global.route;
    g["applicable"] = c.global.applicable;
    g["obstructed"] = c.global.obstructed;
    if (!c.global.detail.empty()) g["detail"] = c.global.detail;
    if (c.global.y) g["y"] = poly_json(F, *c.global.y);
    if (c.global.s) g["s"] = c.global.s;
    if (!c.global.bullets.empty()) {
        json bs = json::array();
        for (const auto& b : c.global.bullets) {
            json e;
            e["name"] = b.name;
            e["ok"] = b.ok;
            if (!b.detail.empty()) e["detail"] = b.detail;
            bs.push_back(e);
        }
        g["bullets"] = bs;
    }
    if (!c.global.prime_set_used.empty()) {
        json ps = json::array();
        for (const auto& p : c.global.prime_set_used) ps.push_back(poly_json(F, p));
        g["prime_set"] = ps;
    }
    if (c.global.inert_prime) g["inert_prime"] = poly_json(F, *c.global.inert_prime);
    if (c.global.z_order) g["z_order"] = c.global.z_order->str();
    if (c.global.cl_k) g["cl_k"] = group_json(*c.global.cl_k);
    if (c.global.ray) g["ray"] = group_json(*c.global.ray);
    if (c.global.target) g["target"] = group_json(*c.global.target);
    if (c.global.class_number) g["h"] = c.global.class_number->str();
    if (c.global.kernel_order) g["kernel_order"] = c.global.kernel_order->str();
    if (!c.global.l_coeffs.empty()) {
        json lc = json::array();
        for (const Int& x : c.global.l_coeffs) lc.push_back(x.str());
        g["L"] = lc;
    }
    j["global"] = g;
    if (c.local) j["local"] = sweep_json(F, *c.local);
    j["verdict"] = to_string(c.verdict);
    return j.dump(2);
}

HasseCertificate certificate_from_json(const std::string& text, std::uint32_t* q_out) {
    json j = json::parse(text);
    HasseCertificate c;
    c.schema = j.at("schema").get<std::string>();
    if (c.schema != "hasse-certificate/1")
        throw std::invalid_argument("unsupported certificate schema: " + c.schema);
    c.q = j.at("inputs").at("q").get<std::uint32_t>();
    const Fq F(c.q);
    if (q_out) *q_out = c.q;
    c.p = poly_parse(F, j.at("inputs").at("p").get<std::string>());
    c.qp = poly_parse(F, j.at("inputs").at("qq").get<std::string>());
    c.d = poly_parse(F, j.at("inputs").at("d").get<std::string>());
    c.route_requested = j.at("inputs").at("route").get<std::string>();
    if (j.at("inputs").contains("y"))
        c.y_requested = poly_parse(F, j.at("inputs").at("y").get<std::string>());
    c.seed = j.at("inputs").value("seed", Rng::kDefaultSeed);
    c.k_splits_d = j.at("k_splits_d").get<bool>();

    const json& g = j.at("global");
    c.global.route = g.at("route").get<std::string>();
    c.global.applicable = g.at("applicable").get<bool>();
    c.global.obstructed = g.at("obstructed").get<bool>();
    c.global.detail = g.value("detail", std::string{});
    if (g.contains("y")) c.global.y = poly_parse(F, g.at("y").get<std::string>());
    c.global.s = g.value("s", 0u);
    if (g.contains("bullets"))
        for (const auto& e : g.at("bullets"))
            c.global.bullets.push_back(
                BulletOutcome{e.at("name").get<std::string>(), e.at("ok").get<bool>(),
                              e.value("detail", std::string{})});
    if (g.contains("prime_set"))
        for (const auto& e : g.at("prime_set"))
            c.global.prime_set_used.push_back(poly_parse(F, e.get<std::string>()));
    if (g.contains("inert_prime"))
        c.global.inert_prime = poly_parse(F, g.at("inert_prime").get<std::string>());
    if (g.contains("z_order")) c.global.z_order = Int(g.at("z_order").get<std::string>());
    if (g.contains("cl_k")) c.global.cl_k = group_from_json(g.at("cl_k"));
    if (g.contains("ray")) c.global.ray = group_from_json(g.at("ray"));
    if (g.contains("target")) c.global.target = group_from_json(g.at("target"));
    if (g.contains("h")) c.global.class_number = Int(g.at("h").get<std::string>());
    if (g.contains("kernel_order")) c.global.kernel_order = Int(g.at("kernel_order").get<std::string>());
    if (g.contains("L"))
        for (const auto& e : g.at("L")) c.global.l_coeffs.push_back(Int(e.get<std::string>()));
    if (j.contains("local")) c.local = sweep_from_json(F, j.at("local"));
    const std::string v = j.at("verdict").get<std::string>();
    c.verdict = v == "violation" ? Verdict::Violation
                                 : v == "no_violation" ? Verdict::NoViolation : Verdict::Undecided;
    return c;
}

VerifyReport verify_certificate(const std::string& json_text, bool deep, unsigned threads) {
    VerifyReport rep;
    HasseCertificate c;
    std::uint32_t q = 0;
    try {
        c = certificate_from_json(json_text, &q);
    } catch (const std::exception& e) {
        rep.fail(std::string("parse: ") + e.what());
        return rep;
    }
    try {
        const Fq F(q);
        const PrimePoly p(F, c.p), qp(F, c.qp);
        const QuadExt K(F, c.d);
        const QuaternionD D(p, qp);

        if (quaternion_split_by(F, D, K) != c.k_splits_d) rep.fail("k_splits_d mismatch");

        // global route re-verification
        const GlobalReport& g = c.global;
        if (g.route == "main2" || g.route == "main1") {
            if (!g.y) {
                rep.fail("congruence route without y");
            } else {
                const PrimePoly y(F, *g.y);
                bool split_ok = quaternion_split_by(F, D, K);
                bool y_ram = place_split_type(K, y) == SplitType::Ramified;
                bool y_out = !(y == p) && !(y == qp);
                bool mu_ok = true;
                for (FqElem mu : F.units())
                    if (quaternion_split_by(F, D, QuadExt(F, poly_scale(F, y.poly(), mu))))
                        mu_ok = false;
                bool p_absent = !sorted_contains(g.prime_set_used, p.poly());
                const bool obstructed = split_ok && y_ram && y_out && mu_ok && p_absent;
                if (obstructed != g.obstructed) rep.fail("congruence bullets do not compose");
                if (deep) {
                    const auto fresh = g.route == "main2" ? d_set(F, y, static_cast<unsigned>(p.deg()))
                                                          : dprime_set(F, y, static_cast<unsigned>(p.deg()));
                    if (prime_set(F, fresh, c.seed) != g.prime_set_used)
                        rep.fail("stored prime set differs from recomputation");
                }
            }
        } else if (g.route == "global_class") {
            if (!g.applicable) {
                // nothing further to check
            } else if (!g.ray || !g.cl_k || !g.target || !g.z_order || !g.kernel_order ||
                       !g.class_number) {
                rep.fail("class-group route missing data");
            } else {
                if (!g.inert_prime) {
                    rep.fail("class-group route missing the inert prime");
                } else {
                    const PrimePoly ip(F, *g.inert_prime);
                    if (place_split_type(K, ip) != SplitType::Inert)
                        rep.fail("recorded prime is not inert in K");
                    const Int qq(q);
                    const Int z = (int_pow(qq, 2 * static_cast<unsigned>(ip.deg())) - 1) / (qq * qq - 1);
                    if (z != *g.z_order) rep.fail("z_order mismatch");
                    const Int kern = int_pow(qq, 2 * static_cast<unsigned>(ip.deg())) - 1;
                    if (kern != *g.kernel_order) rep.fail("kernel order mismatch");
                }
                if (g.ray->torsion_order() != *g.kernel_order * *g.class_number)
                    rep.fail("ray torsion does not match kernel * h");
                AbGroupStruct ztarget{0, *g.z_order > 1 ? std::vector<Int>{*g.z_order}
                                                        : std::vector<Int>{}};
                if (abelian_product(ztarget, *g.cl_k) != *g.target)
                    rep.fail("target group mismatch");
                if (can_surject(*g.ray, *g.target) != !g.obstructed)
                    rep.fail("surjection criterion does not match the outcome");
                if (!g.l_coeffs.empty()) {
                    Int h = 0;
                    for (const Int& x : g.l_coeffs) h += x;
                    if (h != *g.class_number) rep.fail("L(1) differs from h");
                }
                if (deep) {
                    const GlobalObstruction O =
                        check_global_obstruction(K, PrimePoly(F, *g.inert_prime), c.seed);
                    if (!(O.groups.ray == *g.ray) || !(O.groups.cl_k == *g.cl_k))
                        rep.fail("group data differs from recomputation");
                    if (O.obstructed != g.obstructed) rep.fail("obstruction differs from recomputation");
                }
            }
        } else if (g.route == "no_split") {
            if (c.k_splits_d) rep.fail("no_split route recorded although K splits D");
        } else {
            rep.fail("unknown global route: " + g.route);
        }

        // local witnesses
        if (c.local) {
            const LocalSweep& s = *c.local;
            if (!verify_local_verdict(F, D, K, s.infinity)) rep.fail("infinity verdict fails");
            for (const auto& v : s.ramified_d)
                if (!verify_local_verdict(F, D, K, v))
                    rep.fail("ramified verdict fails at " + poly_to_string(F, v.place.prime));
            for (const auto& v : s.detailed)
                if (!verify_local_verdict(F, D, K, v))
                    rep.fail("local verdict fails at " + poly_to_string(F, v.place.prime));
            bool any_empty = !s.infinity.nonempty;
            for (const auto& v : s.ramified_d) any_empty = any_empty || !v.nonempty;
            std::uint64_t stat_empty = 0;
            for (const auto& st : s.stats) stat_empty += st.empty;
            any_empty = any_empty || stat_empty > 0;
            if (s.all_nonempty == any_empty) rep.fail("local summary contradicts its parts");
            if (deep) {
                const LocalSweep fresh = local_everywhere(F, D, K, 6, threads);
                if (fresh.all_nonempty != s.all_nonempty) rep.fail("local sweep differs from recomputation");
                if (fresh.stats.size() != s.stats.size()) {
                    rep.fail("local stats shape differs from recomputation");
                } else {
                    for (std::size_t i = 0; i < fresh.stats.size(); ++i)
                        if (fresh.stats[i].primes != s.stats[i].primes ||
                            fresh.stats[i].split != s.stats[i].split ||
                            fresh.stats[i].ramified != s.stats[i].ramified ||
                            fresh.stats[i].inert != s.stats[i].inert ||
                            fresh.stats[i].empty != s.stats[i].empty)
                            rep.fail("local stats differ from recomputation");
                }
            }
        }

        // composition rule
        Verdict expect;
        if (c.global.route == "no_split") {
            expect = Verdict::NoViolation;
        } else if (c.global.applicable && c.global.obstructed) {
            if (!c.local)
                expect = Verdict::Undecided; // incomplete certificate
            else
                expect = c.local->all_nonempty ? Verdict::Violation : Verdict::NoViolation;
            if (!c.local) rep.fail("obstructed certificate lacks the local sweep");
        } else {
            expect = Verdict::Undecided;
        }
        if (expect != c.verdict) rep.fail("verdict does not follow from its parts");
    } catch (const std::exception& e) {
        rep.fail(std::string("verification error: ") + e.what());
    }
    return rep;
}

} // namespace hasse
