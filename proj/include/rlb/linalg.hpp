/**
 * Small exact linear algebra kernel over rationals.
 *
 * Eigen supplies the containers and products; elimination-based routines
 * (echelon form, kernels, solves, determinants) are written here with
 * exact zero tests so rank decisions never depend on magnitude thresholds.
 */

#ifndef RLB_LINALG_HPP
#define RLB_LINALG_HPP

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "rlb/rational.hpp"

namespace rlb {

using RatMat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RatVec = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using IntVec = Eigen::VectorXi;
using IntMat = Eigen::MatrixXi;

/// Reduced row echelon form in place; returns the pivot column indices.
std::vector<int> rref_in_place(RatMat& m);

int rank(const RatMat& m);

Rational determinant(const RatMat& m);

/**
 * Basis of the right kernel of `m`, one row per basis vector.
 *
 * Canonical form: for each non-pivot column f of the RREF, the basis row
 * with a 1 at f and the back-substituted pivot entries elsewhere, ordered
 * by increasing f. Returns a 0 x cols matrix for a trivial kernel.
 */
RatMat kernel_basis(const RatMat& m);

/// Unique solution of a*x = b, or nullopt when inconsistent/underdetermined.
std::optional<RatVec> solve_unique(const RatMat& a, const RatVec& b);

/// Inverse of a square nonsingular matrix (throws Internal otherwise).
RatMat inverse(const RatMat& m);

/// True when every entry is exactly zero.
bool is_zero(const RatVec& v);

/// Lexicographic comparison of exact vectors.
bool lex_less(const RatVec& a, const RatVec& b);

/// Scale a rational vector to coprime integers, first nonzero entry > 0.
RatVec primitive_integer_direction(const RatVec& v);

}  // namespace rlb

#endif
