#ifndef BELYI_CENSUS_HPP
#define BELYI_CENSUS_HPP

#include <array>
#include <vector>

#include "belyi/rational.hpp"

namespace belyi {

/// Permutation of {0, .., d-1}, stored as the image list.
class Permutation {
  public:
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int d);

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[i]; }
    const std::vector<int>& images() const { return images_; }

    Permutation compose_after(const Permutation& other) const;  // this(other(i))
    Permutation inverse() const;
    Permutation conjugate_by(const Permutation& t) const;  // t . this . t^-1

    int cycle_count() const;
    std::vector<int> cycle_type() const;  // descending cycle lengths

    bool operator==(const Permutation& o) const { return images_ == o.images_; }
    bool operator<(const Permutation& o) const { return images_ < o.images_; }

  private:
    std::vector<int> images_;
};

/// Monodromy pair over 0 and 1; sigma_inf = (sigma0 . sigma1)^-1.
struct PermPair {
    Permutation sigma0;
    Permutation sigma1;

    Permutation sigma_inf() const;
    bool is_transitive() const;

    bool operator==(const PermPair& o) const {
        return sigma0 == o.sigma0 && sigma1 == o.sigma1;
    }
    bool operator<(const PermPair& o) const {
        if (sigma0 == o.sigma0) return sigma1 < o.sigma1;
        return sigma0 < o.sigma0;
    }
};

// Lexicographically least simultaneous conjugate of the pair.
PermPair canonical_form(const PermPair& pair);

/// Cycle types over 0, 1 and infinity; each partitions d.
struct Passport {
    std::array<std::vector<int>, 3> parts;

    bool operator==(const Passport& o) const { return parts == o.parts; }
    bool operator<(const Passport& o) const { return parts < o.parts; }
};

Passport passport_of(const PermPair& pair);

/// Isomorphism class of a degree-d covering of the thrice-punctured sphere.
struct DessinClass {
    PermPair representative;  // canonical form
    Passport passport;
    int genus;
    Integer aut_order;  // order of the simultaneous centralizer; divides d
};

// M_d: subgroups of index d in the free group of rank 2, by the recursion
// M_d = d * d! - sum_{i<d} (d-i)! M_i.
Integer hall_count(int d);

inline constexpr int kDefaultBruteForceLimit = 7;

// Ordered pairs of degree-d permutations generating a transitive group,
// by exhaustive enumeration.
Integer count_transitive_pairs(int d, int limit = kDefaultBruteForceLimit);

// All transitive pairs up to simultaneous conjugation, with passport,
// genus and automorphism count.
std::vector<DessinClass> enumerate_dessins(int d, int limit = kDefaultBruteForceLimit);

// Riemann-Hurwitz genus of the covering attached to a transitive pair.
int genus_of(const PermPair& pair);

// (d / a) * M_d; requires a | d.
Integer degree_bound(int d, const Integer& a);

// Number of classes of degree d with the given passport.
Integer passport_bound(int d, const Passport& passport, int limit = kDefaultBruteForceLimit);

struct BruteForceLimitExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace belyi

#endif
