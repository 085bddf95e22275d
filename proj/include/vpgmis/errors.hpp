#pragma once

#include <stdexcept>
#include <string>

namespace vpgmis {

// Float-mode solver trouble (iteration cap, infeasible result after
// roundoff). Callers retry in exact mode.
struct NumericalFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The rounding certificate weight(S) * (ck+c+1) >= w.x failed. Cannot occur
// on a feasible solution; raising it means the implementation is broken.
struct CertificationFailed : std::logic_error {
    std::string weight;
    std::string lp_objective;
    long long bound;

    CertificationFailed(std::string weight_, std::string objective_, long long bound_)
        : std::logic_error("CertificationFailed: weight=" + weight_ +
                           " lp_objective=" + objective_ +
                           " bound=" + std::to_string(bound_)),
          weight(std::move(weight_)),
          lp_objective(std::move(objective_)),
          bound(bound_) {}
};

// A neighborhood sum exceeded ck+c+1 on a feasible solution; implementation
// bug by the same argument.
struct BoundViolated : std::logic_error {
    using std::logic_error::logic_error;
};

struct GenerationFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace vpgmis
