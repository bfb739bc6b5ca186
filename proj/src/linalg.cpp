#include "rlb/linalg.hpp"

#include <boost/multiprecision/gmp.hpp>

namespace rlb {

std::vector<int> rref_in_place(RatMat& m) {
    const Eigen::Index rows = m.rows(), cols = m.cols();
    std::vector<int> pivots;
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
        Eigen::Index pivot = -1;
        for (Eigen::Index r = row; r < rows; ++r) {
            if (m(r, col) != 0) { pivot = r; break; }
        }
        if (pivot < 0) continue;
        if (pivot != row) m.row(pivot).swap(m.row(row));
        m.row(row) /= m(row, col);
        for (Eigen::Index r = 0; r < rows; ++r) {
            if (r != row && m(r, col) != 0)
                m.row(r) -= m(r, col) * m.row(row);
        }
        pivots.push_back(static_cast<int>(col));
        ++row;
    }
    return pivots;
}

int rank(const RatMat& m) {
    RatMat copy = m;
    return static_cast<int>(rref_in_place(copy).size());
}

Rational determinant(const RatMat& m) {
    if (m.rows() != m.cols()) throw_internal("determinant: matrix not square");
    RatMat a = m;
    const Eigen::Index n = a.rows();
    Rational det = 1;
    for (Eigen::Index col = 0; col < n; ++col) {
        Eigen::Index pivot = -1;
        for (Eigen::Index r = col; r < n; ++r) {
            if (a(r, col) != 0) { pivot = r; break; }
        }
        if (pivot < 0) return Rational(0);
        if (pivot != col) {
            a.row(pivot).swap(a.row(col));
            det = -det;
        }
        det *= a(col, col);
        for (Eigen::Index r = col + 1; r < n; ++r) {
            if (a(r, col) != 0)
                a.row(r) -= (a(r, col) / a(col, col)) * a.row(col);
        }
    }
    return det;
}

RatMat kernel_basis(const RatMat& m) {
    RatMat r = m;
    const std::vector<int> pivots = rref_in_place(r);
    const Eigen::Index cols = m.cols();
    std::vector<int> free_cols;
    {
        std::size_t p = 0;
        for (Eigen::Index c = 0; c < cols; ++c) {
            if (p < pivots.size() && pivots[p] == c) { ++p; continue; }
            free_cols.push_back(static_cast<int>(c));
        }
    }
    RatMat basis = RatMat::Zero(static_cast<Eigen::Index>(free_cols.size()), cols);
    for (std::size_t i = 0; i < free_cols.size(); ++i) {
        const int f = free_cols[i];
        basis(static_cast<Eigen::Index>(i), f) = 1;
        for (std::size_t p = 0; p < pivots.size(); ++p)
            basis(static_cast<Eigen::Index>(i), pivots[p]) = -r(static_cast<Eigen::Index>(p), f);
    }
    return basis;
}

std::optional<RatVec> solve_unique(const RatMat& a, const RatVec& b) {
    RatMat aug(a.rows(), a.cols() + 1);
    aug.leftCols(a.cols()) = a;
    aug.col(a.cols()) = b;
    const std::vector<int> pivots = rref_in_place(aug);
    // inconsistent: pivot in the augmented column
    if (!pivots.empty() && pivots.back() == static_cast<int>(a.cols()))
        return std::nullopt;
    // underdetermined: fewer pivots than unknowns
    if (static_cast<Eigen::Index>(pivots.size()) != a.cols())
        return std::nullopt;
    RatVec x(a.cols());
    for (Eigen::Index i = 0; i < a.cols(); ++i) x(i) = aug(i, a.cols());
    return x;
}

RatMat inverse(const RatMat& m) {
    if (m.rows() != m.cols()) throw_internal("inverse: matrix not square");
    const Eigen::Index n = m.rows();
    RatMat aug(n, 2 * n);
    aug.leftCols(n) = m;
    aug.rightCols(n) = RatMat::Identity(n, n);
    const std::vector<int> pivots = rref_in_place(aug);
    if (static_cast<Eigen::Index>(pivots.size()) != n || pivots.back() != n - 1)
        throw_internal("inverse: singular matrix");
    return aug.rightCols(n);
}

bool is_zero(const RatVec& v) {
    for (Eigen::Index i = 0; i < v.size(); ++i)
        if (v(i) != 0) return false;
    return true;
}

bool lex_less(const RatVec& a, const RatVec& b) {
    for (Eigen::Index i = 0; i < a.size() && i < b.size(); ++i) {
        if (a(i) < b(i)) return true;
        if (a(i) > b(i)) return false;
    }
    return a.size() < b.size();
}

RatVec primitive_integer_direction(const RatVec& v) {
    BigInt lcm = 1;
    for (Eigen::Index i = 0; i < v.size(); ++i)
        lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(v(i)));
    BigInt gcd = 0;
    RatVec scaled = v * Rational(lcm);
    for (Eigen::Index i = 0; i < v.size(); ++i)
        gcd = boost::multiprecision::gcd(gcd, boost::multiprecision::numerator(scaled(i)));
    if (gcd == 0) return scaled;  // zero vector
    RatVec out = scaled / Rational(gcd);
    for (Eigen::Index i = 0; i < out.size(); ++i) {
        if (out(i) != 0) {
            if (out(i) < 0) out = -out;
            break;
        }
    }
    return out;
}

}  // namespace rlb
