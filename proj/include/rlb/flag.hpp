/**
 * Parabolic flag data: the root partition R = R_k ⊔ R_m+ ⊔ R_m-, the
 * center Z(k) of the isotropy algebra, the Weyl chamber test, and the
 * distinguished chamber element attached to the invariant metric.
 *
 * Coordinates. Vectors in the Cartan algebra stay in iH-coordinates (see
 * root_system.hpp). Covectors on Z(k) are stored in "dual coordinates":
 * a covector xi is the vector u with u_i = xi(W_i) / 2, where W_i are the
 * rows of zk_basis(). Under the long-root normalization this is the scale
 * on which the anticanonical data of rank-one examples take the values
 * the polytope layer expects, and it keeps the (gram, tau) -> covariance
 * of reported coordinates exact.
 */

#ifndef RLB_FLAG_HPP
#define RLB_FLAG_HPP

#include <optional>
#include <vector>

#include "rlb/root_system.hpp"

namespace rlb {

/// Witness of a failed closure condition: alpha + beta lands outside R_m+.
struct ComplexStructureViolation {
    IntVec alpha;  // in R_k or R_m+
    IntVec beta;   // in R_m+
    IntVec sum;    // a root, but not in R_m+
    std::string describe() const;
};

/**
 * Check the two invariant-complex-structure conditions for a candidate
 * partition: R_m+ = -R_m- (built in), and alpha in R_k ⊔ R_m+, beta in
 * R_m+, alpha + beta a root => alpha + beta in R_m+. Exhaustive over all
 * pairs; returns the first violating triple in deterministic order.
 */
std::optional<ComplexStructureViolation> check_orientation(
    const RootSystem& rootsys, const std::vector<int>& parabolic_set,
    const std::vector<IntVec>& rm_plus);

class FlagStructure {
  public:
    const RootSystem& roots() const { return rootsys_; }
    const std::vector<int>& parabolic_set() const { return parabolic_set_; }

    /// Positive roots supported on the parabolic set; R_k is their +-span.
    const std::vector<IntVec>& rk_positive() const { return rk_positive_; }

    /// Signed coefficient vectors of R_m+.
    const std::vector<IntVec>& rm_plus() const { return rm_plus_; }

    /// Rows form a basis of Z(k) in iH-coordinates; s x r.
    const RatMat& zk_basis() const { return zk_basis_; }

    /// Gram matrix of the basis rows under the invariant form; s x s.
    const RatMat& gram_zk() const { return gram_zk_; }

    int center_dim() const { return static_cast<int>(zk_basis_.rows()); }

    /// Orthogonal projection onto Z(k); idempotent.
    RatVec center_project(const RatVec& h) const;

    bool in_center(const RatVec& h) const;

    /// 2pi I_V = -sum of iH over R_m+, in iH-coordinates.
    const RatVec& iv_vector() const { return iv_vector_; }

    /// Dual coordinates of the covector <iv_vector(), .> (the 2pi I_V shift).
    const RatVec& iv_shift() const { return iv_shift_; }

    /// rho_b(w) > 0 (>= 0 when strict is false) for every b in R_m+.
    /// Throws when w is not in Z(k).
    bool chamber_contains(const RatVec& w, bool strict) const;

    /// Dual coordinates of <h, .> restricted to Z(k).
    RatVec dual_coords_of(const RatVec& h) const;

    /// Inverse of dual_coords_of on Z(k): the vector a covector pairs as.
    RatVec sharp(const RatVec& u) const;

    /// Dual coordinates of i*dchi restricted to Z(k), from the values of
    /// i*dchi on the simple iH-basis. Linear in the input.
    RatVec character_shift(const RatVec& coroot_values) const;

    friend FlagStructure make_flag(const RootSystem& rootsys,
                                   const std::vector<int>& parabolic_set,
                                   const std::optional<std::vector<IntVec>>& orientation);

  private:
    FlagStructure() = default;

    RootSystem rootsys_ = RootSystem::build({{Family::A, 1}});
    std::vector<int> parabolic_set_;
    std::vector<IntVec> rk_positive_;
    std::vector<IntVec> rm_plus_;
    RatMat zk_basis_;
    RatMat gram_zk_;
    RatMat gram_zk_inv_;
    RatVec iv_vector_;
    RatVec iv_shift_;
};

/**
 * Build a flag structure. The default orientation takes R_m+ to be the
 * positive roots not supported on the parabolic set; an explicit
 * orientation assigns a sign to each of them and must satisfy the closure
 * conditions (the violating triple is reported otherwise).
 */
FlagStructure make_flag(const RootSystem& rootsys, const std::vector<int>& parabolic_set,
                        const std::optional<std::vector<IntVec>>& orientation = std::nullopt);

/// Re-runs the closure check on a built flag (always empty for make_flag output).
std::optional<ComplexStructureViolation> validate_complex_structure(const FlagStructure& flag);

}  // namespace rlb

#endif
