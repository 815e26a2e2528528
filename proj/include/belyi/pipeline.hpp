#ifndef BELYI_PIPELINE_HPP
#define BELYI_PIPELINE_HPP

#include <stdexcept>
#include <variant>
#include <vector>

#include "belyi/algebraic_set.hpp"
#include "belyi/mobius.hpp"
#include "belyi/poly.hpp"

namespace belyi {

/// One stage of a composition chain: a non-constant polynomial or an
/// invertible Mobius map.
class ChainStep {
  public:
    explicit ChainStep(RatPoly p) : step_(std::move(p)) {
        if (poly().degree() < 1)
            throw std::invalid_argument("ChainStep: polynomial step must be non-constant");
    }
    explicit ChainStep(MobiusMap m) : step_(std::move(m)) {}

    bool is_poly() const { return std::holds_alternative<RatPoly>(step_); }
    bool is_mobius() const { return !is_poly(); }
    const RatPoly& poly() const { return std::get<RatPoly>(step_); }
    const MobiusMap& mobius() const { return std::get<MobiusMap>(step_); }

    int degree() const { return is_poly() ? poly().degree() : 1; }

    ExtPoint apply(const ExtPoint& x) const {
        return is_poly() ? poly().evaluate(x) : mobius().apply(x);
    }

  private:
    std::variant<RatPoly, MobiusMap> step_;
};

/// An ordered composition of steps, applied left to right (steps[0] acts
/// first). Never empty; the identity chain is a single identity Mobius.
class MapChain {
  public:
    explicit MapChain(std::vector<ChainStep> steps);

    static MapChain identity() { return MapChain({ChainStep(MobiusMap::identity())}); }

    const std::vector<ChainStep>& steps() const { return steps_; }
    const Integer& total_degree() const { return total_degree_; }

    ExtPoint apply(const ExtPoint& x) const;

  private:
    std::vector<ChainStep> steps_;
    Integer total_degree_;
};

/// Suffix of a chain from a given index, usable as a single map.
class ChainSuffix {
  public:
    ChainSuffix(const MapChain& chain, size_t from_index);

    ExtPoint apply(const ExtPoint& x) const;
    // Pushes a whole rational/irrational point set through the suffix.
    SplitSet apply(const AlgebraicSet& A) const;

  private:
    std::vector<ChainStep> steps_;
};

struct ReductionResult {
    MapChain chain;              // polynomial steps only (or the identity)
    std::vector<ExtPoint> tracked;  // T: images of S, extras, and all critical values
};

// Induction on the defining degree: composes polynomials until every tracked point
// and critical value is rational or infinite.
ReductionResult reduce_to_rational(const std::optional<AlgebraicSet>& S,
                                   const std::vector<ExtPoint>& extra_rationals);

struct Normalization {
    MobiusMap map;       // sends the chosen triple to (0, 1, oo)
    Rational fourth;     // image of the chosen fourth point, in (0, 1)
    std::vector<ExtPoint> rest;  // images of the remaining points
};

// Chooses the triple -> (0,1,oo) normalization whose fourth point m/(m+n)
// minimizes m+n, with deterministic tie-breaking.
Normalization select_normalization(const std::vector<ExtPoint>& T);

// q1(z) = (m+n)^(m+n) / (m^m n^n) * z^m (1-z)^n
RatPoly belyi_step(unsigned m, unsigned n);

// Largest q1 degree (= denominator of the normalized fourth point) a collapse
// round may construct. The round degrees compound: each round raises the
// remaining denominators to the power of its own degree, so one round past
// this cap would already need more coefficients than fit in memory.
inline constexpr unsigned long kCollapseStepCap = 10000;

// Collapses a finite rational point set onto {0,1,oo} while keeping all
// critical values there. Refuses (DegreeCapExceeded) when a round would
// need a q1 step of degree beyond step_cap.
MapChain collapse_to_three(const std::vector<ExtPoint>& T,
                           unsigned long step_cap = kCollapseStepCap);

// Full construction: reduce_to_rational then collapse_to_three.
MapChain belyi_map(const std::optional<AlgebraicSet>& S, const std::vector<ExtPoint>& extras,
                   unsigned long step_cap = kCollapseStepCap);

struct DegreeCapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ExpandedMap {
    RatPoly numerator;
    RatPoly denominator;  // monic; the constant 1 for polynomial chains
};

// Single rational-function form of a chain. Refuses when the composed
// degree would exceed cap.
ExpandedMap expand(const MapChain& chain, const Integer& cap);

}  // namespace belyi

#endif
