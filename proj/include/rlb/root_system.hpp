/**
 * Root systems of compact semisimple groups as exact rational data.
 *
 * Vectors in the Cartan subalgebra are coordinate vectors over the basis
 * {iH_a} indexed by the simple roots; roots are integer coefficient
 * vectors over the simple roots. The invariant form is normalized so long
 * roots of every simple factor have squared length 2, which makes the
 * Gram matrix the symmetrized Cartan matrix.
 */

#ifndef RLB_ROOT_SYSTEM_HPP
#define RLB_ROOT_SYSTEM_HPP

#include <string>
#include <utility>
#include <vector>

#include "rlb/linalg.hpp"

namespace rlb {

enum class Family { A, B, C, D, E6, E7, E8, F4, G2 };

Family family_from_string(const std::string& name);
std::string family_to_string(Family family);

class RootSystem {
  public:
    /// Builds the direct sum of the given simple factors.
    static RootSystem build(const std::vector<std::pair<Family, int>>& factors);

    int rank() const { return rank_; }
    const std::vector<std::pair<Family, int>>& factors() const { return factors_; }

    /// Positive roots as coefficient vectors, graded-lexicographic order.
    const std::vector<IntVec>& positive_roots() const { return positive_roots_; }

    /// Gram matrix G_ij = <a_i, a_j> of the simple roots.
    const RatMat& gram() const { return gram_; }

    /// Integer Cartan matrix C_ij = 2 <a_i, a_j> / <a_j, a_j>.
    const IntMat& cartan() const { return cartan_; }

    /// <b, c> for roots given by coefficient vectors.
    Rational root_inner(const IntVec& b, const IntVec& c) const;

    /// Squared length <b, b> of a root.
    Rational root_length_sq(const IntVec& b) const { return root_inner(b, b); }

    /**
     * Value of the real root functional at a point of the Cartan algebra:
     * rho_b(H) = -<b, H> with H in iH-coordinates. For the §-independent
     * sign bookkeeping: rho_b(iH_c) = -<b, c> for roots b, c.
     */
    Rational root_functional(const IntVec& b, const RatVec& h) const;

    /// True when the coefficient vector is one of the roots (+ or -).
    bool is_root(const IntVec& coeffs) const;

    /**
     * Scaled copy: gram -> gram / lambda. Intended for covariance checks
     * of downstream quantities; skips the long-root normalization.
     */
    RootSystem scaled(const Rational& lambda) const;

  private:
    RootSystem() = default;

    std::vector<std::pair<Family, int>> factors_;
    int rank_ = 0;
    std::vector<IntVec> positive_roots_;
    RatMat gram_;
    IntMat cartan_;
};

/// build_root_system(factors) spelled as a free function.
inline RootSystem build_root_system(const std::vector<std::pair<Family, int>>& factors) {
    return RootSystem::build(factors);
}

}  // namespace rlb

#endif
