#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "edcslab/graph.hpp"
#include "edcslab/rational.hpp"

namespace edcslab {

/// Degree-constraint pair: every H-edge has edge degree <= beta, every
/// absent edge has edge degree >= beta_minus.
struct EdcsParams {
    int beta = 2;
    int beta_minus = 1;
};

void validate_params(const EdcsParams& p);

/// beta = ceil(50/eps), beta_minus = ceil((1 - eps/10) * beta); the pair
/// that makes an EDCS carry a (2/3 - eps)-approximate matching.
/// Requires 0 < eps <= 1.
EdcsParams params_for_epsilon(const Rational& epsilon);

/// True when (beta, beta_minus) are strong enough for the (2/3 - eps)
/// guarantee: beta >= 50/eps and beta_minus >= (1 - eps/10) beta.
bool params_meet_guarantee(const EdcsParams& p, const Rational& epsilon);

struct EdcsViolation {
    Edge edge;
    int degree = 0;  // edge degree in H at the time of the check
};

struct EdcsCheck {
    std::vector<EdcsViolation> p1_violations;  // H-edges above beta
    std::vector<EdcsViolation> p2_violations;  // absent edges below beta_minus

    bool ok() const { return p1_violations.empty() && p2_violations.empty(); }
};

/// Lists every violation of the two degree constraints. Empty lists certify
/// that h is a (beta, beta_minus)-EDCS of g. Throws when h is not a
/// subgraph of g.
EdcsCheck verify_edcs(const Graph& g, const Graph& h, const EdcsParams& p);

struct FixStep {
    Edge edge;
    bool added = false;  // false: removed
};

struct ConstructResult {
    Graph h;
    long long fix_steps = 0;
};

/// Builds an EDCS by local fixing: starting from the empty subgraph, remove
/// an overfull H-edge or add an underfull absent edge, picking uniformly at
/// random among current violations, until none remain. A potential function
/// gains at least 2 per fix, which bounds the step count by
/// (2*beta - 1) * n * beta / 2; that bound is asserted.
ConstructResult construct_edcs(const Graph& g, const EdcsParams& p,
                               std::uint64_t seed,
                               const std::function<void(const FixStep&)>& observer = {});

struct QualityReport {
    int mu_h = 0;
    int mu_g = 0;
    Rational ratio;      // 1 when mu_g == 0
    Rational threshold;  // 2/3 - eps
    bool pass = false;
};

/// Compares the matching sizes of h and g against the 2/3 - eps threshold.
QualityReport edcs_quality(const Graph& g, const Graph& h, const Rational& epsilon);

}  // namespace edcslab
