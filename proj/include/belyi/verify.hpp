#ifndef BELYI_VERIFY_HPP
#define BELYI_VERIFY_HPP

#include "belyi/pipeline.hpp"

namespace belyi {

/// Critical values of one chain stage, already pushed through the rest of
/// the chain.
struct StepCritRecord {
    size_t step_index;
    std::vector<ExtPoint> values;            // rational/infinite final images
    std::optional<AlgebraicSet> irrational;  // irrational final images
};

/// Critical values of a composed chain, with per-stage provenance.
struct CritReport {
    std::vector<ExtPoint> rational_values;   // sorted, distinct; may contain oo
    std::optional<AlgebraicSet> irrational;  // non-rational critical values
    std::vector<StepCritRecord> per_step;

    bool in_three_points() const;
};

// Crit of the composed map via the chain rule: each stage's critical
// values, pushed through the remaining stages.
CritReport crit_chain(const MapChain& chain);

struct BelyiVerdict {
    bool is_belyi;
    CritReport report;
};

// True iff every critical value of the composed chain lies in {0, 1, oo}.
BelyiVerdict is_belyi(const MapChain& chain);

// Independent oracle for a single polynomial step: the finite critical
// values lie in {0, 1} iff squarefree_part(p') divides p (p - 1).
bool verify_polynomial_direct(const RatPoly& p);

}  // namespace belyi

#endif
