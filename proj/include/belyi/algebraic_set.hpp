#ifndef BELYI_ALGEBRAIC_SET_HPP
#define BELYI_ALGEBRAIC_SET_HPP

#include <optional>
#include <vector>

#include "belyi/mobius.hpp"
#include "belyi/poly.hpp"

namespace belyi {

/// A conjugation-closed finite set of irrational algebraic numbers,
/// represented by its monic squarefree defining polynomial over Q.
/// Rational members are never stored here; callers carry them as ExtPoints.
class AlgebraicSet {
  public:
    // Checks squarefreeness and absence of rational roots.
    explicit AlgebraicSet(RatPoly defining);

    const RatPoly& defining() const { return defining_; }
    int size_bound() const { return defining_.degree(); }

    bool operator==(const AlgebraicSet& o) const { return defining_ == o.defining_; }

  private:
    RatPoly defining_;
};

/// Rational/irrational split of a pushed-forward or computed point set.
struct SplitSet {
    std::vector<Rational> rationals;                // sorted, distinct
    std::optional<AlgebraicSet> irrational;         // absent if empty
};

// Splits the root set of a squarefree monic polynomial into its rational
// roots and the irrational residue.
SplitSet split_roots(const RatPoly& squarefree_monic);

// Image of the root set of A under the non-constant polynomial p, via the
// resultant Res_x(A(x), y - p(x)).
SplitSet pushforward_set(const AlgebraicSet& A, const RatPoly& p);

// Image of the root set of A under an invertible Mobius map. No root can
// hit a pole or a rational value, so the result is again an AlgebraicSet
// of the same degree.
AlgebraicSet mobius_pushforward(const AlgebraicSet& A, const MobiusMap& m);

/// Finite critical values of a non-constant polynomial map, plus the
/// infinity flag (infinity is critical iff deg >= 2).
struct CriticalValues {
    std::vector<Rational> rationals;
    std::optional<AlgebraicSet> irrational;
    bool has_infinity = false;
};

CriticalValues poly_critical_values(const RatPoly& p);

}  // namespace belyi

#endif
