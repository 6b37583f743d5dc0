#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "jumpspec/conditioning.hpp"
#include "jumpspec/rates.hpp"

#include <json.hpp>

namespace jumpspec {

struct FitBounds {
    double rate_lo = 1e-3;   // 1/s, applies to every fitted rate
    double rate_hi = 1e12;
    double p_th_lo = 1e-4;
    double p_th_hi = 0.5;
};

struct FitSpec {
    int n_tls = 1;
    bool fit_gamma_t = false;   // default: gamma_t pinned
    bool fit_p_th = true;
    double gamma_t_fixed = 0.0; // value used when fit_gamma_t is false
    double p_th_fixed = 0.1;    // value used when fit_p_th is false
    FitBounds bounds;
    int multistart = 0;         // 0 = auto: 8 for n_tls >= 2, else 1

    int resolved_multistart() const;
    int n_fitted_params() const;
    void validate() const;      // n_tls in [0, 4], sane bounds
};

struct FitResult {
    RateSet rates;              // gamma_qt sorted descending (canonical order)
    struct Fixed {
        bool gamma_t = true;
        bool p_th = false;
    } fixed;
    double chi2 = 0.0;
    int dof = 0;
    struct Errors {
        double gamma_q = 0.0;
        std::vector<double> gamma_qt;
        double gamma_t = 0.0;
        double p_th = 0.0;
    } std_err;
    bool converged = false;
    int n_iter = 0;
};

/// Joint weighted least-squares fit of the deterministic relaxation model to
/// the two canonical conditioned trajectories (ground-state selection and
/// post-jump selection). Rates are fitted in log space, p_th in bounded
/// logit space; rows with zero counts or zero standard error carry no
/// information and are dropped. Throws on degenerate (flat) data.
FitResult fit_solomon(const ConditionedTrajectory& traj_ground,
                      const ConditionedTrajectory& traj_postjump,
                      const FitSpec& spec);

struct MarkovianFit {
    double rate = 0.0;   // 1/s
    double p_th = 0.0;
    double chi2 = 0.0;
    int dof = 0;
    bool converged = false;
};

/// Single-exponential null model p(t) = p_th * (1 - exp(-rate*t)). Used for
/// initial guesses and as the memoryless baseline.
MarkovianFit fit_markovian_baseline(const ConditionedTrajectory& traj_ground);

struct ModelComparison {
    FitSpec spec;
    FitResult fit;
    double aicc = 0.0;   // chi2 + 2k + 2k(k+1)/(n-k-1)
};

struct ModelRanking {
    std::vector<ModelComparison> ranked;  // best first
    bool extra_tls_justified = false;     // best model has more TLSs than the smallest spec
};

/// Fits every spec and ranks by the small-sample-corrected information
/// criterion. Within 2 criterion units the model with fewer parameters wins.
ModelRanking compare_models(const ConditionedTrajectory& traj_ground,
                            const ConditionedTrajectory& traj_postjump,
                            const std::vector<FitSpec>& specs);

nlohmann::json fit_result_to_json(const FitResult& fit);
FitResult fit_result_from_json(const nlohmann::json& j);

}  // namespace jumpspec
