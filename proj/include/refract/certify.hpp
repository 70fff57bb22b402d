#pragma once

#include "refract/curve.hpp"
#include "refract/melnikov.hpp"

namespace refract {

// Exact rank analysis of the generator family through the combination
// condition on the curve: sum c_I f_I(x) psi2'(z) - sum c_J f_J(z) psi1'(x),
// reduced modulo q (or through the exact branch when sigma is linear).
struct IndependenceResult {
    int rank = 0;
    std::vector<int> kept;                        // indices into the input family
    std::vector<std::vector<Rational>> relations; // kernel vectors, one per dropped generator
};
IndependenceResult independence_reduce(const MelnikovFamily& family, const InvolutionCurve& curve);
MelnikovFamily restrict_family(const MelnikovFamily& family, const std::vector<int>& kept);

// G with Int F y^(k-2) dx = Int G y^k dx over the side arc:
// G = (2/k) (chi F / psi')' - (chi' F / psi').
RatFunc promote_power(const RatFunc& F, int k, Side side, const RefractedSystem& sys);

struct PromotionRound {
    int k;                  // target power y^k
    std::vector<RatFunc> g; // per-generator correction G of this round
};
struct PromotionTrace {
    int s_initial = 1;
    int s_final = 1;
    int h_power_added = 0;
    std::vector<PromotionRound> rounds;
};

// Repeats the energy-identity split and the power promotion until
// s > member_count - 2, raising the h-prefactor power by one per round.
MelnikovFamily raise_s(const MelnikovFamily& family, int member_count,
                       const RefractedSystem& sys, PromotionTrace* trace);

enum class CertPath { interleaved, one_sided };
const char* cert_path_name(CertPath p);

struct LFunctionSet {
    std::vector<CurveRat> l;
    std::vector<std::string> source; // generator names, in l order
    int s = 1;
    CertPath path = CertPath::interleaved;
    bool extended = false; // surviving set is not the full two-sided interleave
    Rational sigma_slope;  // set on the one-sided path
    Rational x_right;
};

// Interleaved two-sided l functions, or the one-sided set when every
// left generator was eliminated and sigma' is exactly constant.
LFunctionSet build_l(const MelnikovFamily& reduced, const InvolutionCurve& curve,
                     const RefractedSystem& sys);

struct OrderRecord {
    int k = 0;
    Rational w_prefactor;
    BiPoly w_num{Var::x, Var::z};
    BiPoly w_den{Var::x, Var::z};
    bool den_certified = false;
    std::string den_note;
    NonvanishingCert cert;
};

enum class Verdict { certified, not_certified, inconclusive };
const char* verdict_name(Verdict v);

struct CertificationReport {
    IndependenceResult independence;
    PromotionTrace promotion;
    std::vector<OrderRecord> orders;
    Verdict verdict = Verdict::inconclusive;
    CertPath path = CertPath::interleaved;
    bool extended = false;
    int members = 0;
    int max_zeros = 0;        // members - 1, the zero bound claimed by the certificate
    int max_limit_cycles = -1; // set when certified
    std::vector<std::string> reasons;
};

// Wronskian -> resultant -> Sturm chain over k = 1..N.
CertificationReport certify_ect(const LFunctionSet& lset, const InvolutionCurve& curve);

// Randomized falsification pass on the discrete Wronskians.
struct DiscreteCheckReport {
    int samples = 0;
    int violations = 0;
    bool ok = true;
};
DiscreteCheckReport discrete_wronskian_check(const LFunctionSet& lset,
                                             const RefractedSystem& sys, int samples,
                                             unsigned long seed);

// Full pipeline: reduce -> independence -> promote -> build_l -> certify.
struct CertifyOutcome {
    MelnikovFamily family;   // straight from the perturbation
    MelnikovFamily reduced;  // independent subset
    MelnikovFamily promoted; // after raise_s
    LFunctionSet lset;
    CertificationReport report;
    bool certification_ran = false;
    std::string structure_note;
};
CertifyOutcome run_certification(const PolyPerturbation& pert, const RefractedSystem& sys);

} // namespace refract
