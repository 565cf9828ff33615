#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ado/invariant.hpp"

namespace ado {
namespace verify {

struct CheckResult {
    std::string name;
    double residual;
    double threshold;
    bool passed;
    std::string detail;
};

struct SuiteParams {
    double eps_abs = 1e-9;
    double eps_rel = 1e-9;
    std::uint64_t seed = 42;
};

// Deterministic sample generators shared by the verification suite, the
// acceptance suite and the property tests.
Cplx random_typical(std::mt19937_64& rng, double margin = 0.05);
Cplx random_generic(std::mt19937_64& rng);  // additionally outside (1/2)Z
BraidWord random_braid(std::mt19937_64& rng, int max_strands, int max_length);

// One function per named check; each takes its triggering N list, sample
// count and tolerance explicitly so the acceptance suite can pin the exact
// parameters of its criteria.
CheckResult check_relations(const SuiteParams& p, const std::vector<int>& Ns, int samples,
                            double tol);
CheckResult check_qdim_vanishing(const SuiteParams& p, const std::vector<int>& Ns, int samples,
                                 double tol);
CheckResult check_yang_baxter(const SuiteParams& p, const std::vector<int>& Ns, int triples,
                              double tol);
CheckResult check_ribbon_compat(const SuiteParams& p, const std::vector<int>& Ns, int pairs,
                                double tol);
CheckResult check_zigzag(const SuiteParams& p, const std::vector<int>& Ns, double tol);
CheckResult check_sprime_vs_diagram(const SuiteParams& p, const std::vector<int>& Ns, int pairs,
                                    double rel_tol);
CheckResult check_mdim_ratio(const SuiteParams& p, const std::vector<int>& Ns, int pairs,
                             double rel_tol);
CheckResult check_hopf_symmetry(const SuiteParams& p, const std::vector<int>& Ns, int pairs,
                                double rel_tol);
CheckResult check_cut_independence(const SuiteParams& p, const std::vector<int>& Ns, int braids,
                                   double rel_tol);
CheckResult check_markov_conjugation(const SuiteParams& p, const std::vector<int>& Ns, int braids,
                                     double rel_tol);
CheckResult check_stabilization(const SuiteParams& p, const std::vector<int>& Ns, int braids,
                                double rel_tol);
CheckResult check_ambidexterity(const SuiteParams& p, const std::vector<int>& Ns, double tol);
CheckResult check_split_union(const SuiteParams& p, const std::vector<int>& Ns, int braids,
                              double tol);

struct VerifyConfig {
    std::vector<int> Ns{2, 3};
    SuiteParams params;
    bool inject_failure = false;  // test hook: corrupts the first check
};

// The full named-check battery driven by `verify` on the CLI.
std::vector<CheckResult> run_verification(const VerifyConfig& cfg);

}  // namespace verify
}  // namespace ado
