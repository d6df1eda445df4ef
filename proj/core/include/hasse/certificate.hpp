#pragma once

#include <optional>
#include <string>

#include "hasse/jacobian.hpp"
#include "hasse/localpoints.hpp"
#include "hasse/weil.hpp"

namespace hasse {

enum class Route { Main2, Main1, GlobalClass, Auto };
enum class Verdict { Violation, NoViolation, Undecided };

const char* to_string(Route r);
const char* to_string(Verdict v);
Route route_from_string(const std::string& s);

// Outcome of the chosen global-emptiness route, with enough data to re-verify
// offline. The congruence routes carry their prime set; the class-group route
// carries the group data.
struct GlobalReport {
    std::string route; // main2 | main1 | global_class | no_split
    bool applicable = false;
    bool obstructed = false;
    std::string detail;
    std::optional<Poly> y;
    unsigned s = 0;
    std::vector<BulletOutcome> bullets;
    std::vector<Poly> prime_set_used;
    std::optional<Poly> inert_prime;
    std::optional<Int> z_order;
    std::optional<AbGroupStruct> cl_k, ray, target;
    std::optional<Int> class_number, kernel_order;
    std::vector<Int> l_coeffs;
};

struct HasseCertificate {
    std::string schema = "hasse-certificate/1";
    std::uint32_t q = 0;
    Poly p, qp, d;
    std::string route_requested;
    std::optional<Poly> y_requested;
    std::uint64_t seed = Rng::kDefaultSeed;
    bool k_splits_d = false;
    GlobalReport global;
    std::optional<LocalSweep> local;
    Verdict verdict = Verdict::Undecided;
};

struct CheckOptions {
    std::uint64_t seed = Rng::kDefaultSeed;
    unsigned threads = 0;
    unsigned detail_max_degree = 6;
    // local checks only decide the verdict once the global route obstructs;
    // skip them otherwise unless forced
    bool always_run_local = false;
    // the auto route only tries congruence primes y up to this degree (their
    // cost grows quickly with deg y); explicitly requested routes are uncapped
    unsigned max_auto_y_degree = 3;
};

// One global route + the full local sweep, composed into a verdict:
// violation iff the global route obstructs and every place is locally
// solvable. If K fails to split D the certificate records global emptiness
// with a locally-empty witness place (never a violation).
HasseCertificate check_violation(const Fq& F, const PrimePoly& p, const PrimePoly& qp,
                                 const Poly& d, Route route,
                                 const std::optional<Poly>& y = std::nullopt,
                                 const CheckOptions& opt = {});

struct SearchEntry {
    Poly m;
    FqElem unit; // d = unit * y p q m
    Poly d;
    HasseCertificate cert;
};
struct SearchReject {
    Poly m;
    FqElem unit; // 0 when no unit twist is admissible
    std::string reason;
};
struct SearchResult {
    std::vector<SearchEntry> violations;
    std::vector<Poly> violating_m; // m whose every admissible twist violates
    std::vector<SearchReject> rejects;
};

// Sweep over monic square-free m coprime to y p q with deg m <= max_deg_m in
// (degree, lexicographic) order. For each m the candidate discriminants are
// u y p q m for u in {1, nonsquare}, keeping those where infinity does not
// split; each admissible twist is checked with the congruence route at y.
SearchResult search_m(const Fq& F, const PrimePoly& p, const PrimePoly& qp, const PrimePoly& y,
                      int max_deg_m, const CheckOptions& opt = {});

std::string certificate_to_json(const Fq& F, const HasseCertificate& c);
HasseCertificate certificate_from_json(const std::string& text, std::uint32_t* q_out = nullptr);

struct VerifyReport {
    bool ok = true;
    std::vector<std::string> problems;
    void fail(std::string msg) {
        ok = false;
        problems.push_back(std::move(msg));
    }
};
// Structural checks, witness recomputation and the composition rule; deep
// additionally recomputes the global sets or groups and the local sweep.
VerifyReport verify_certificate(const std::string& json_text, bool deep = false,
                                unsigned threads = 0);

} // namespace hasse
