#include "rlb/root_system.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace rlb {

Family family_from_string(const std::string& name) {
    if (name == "A") return Family::A;
    if (name == "B") return Family::B;
    if (name == "C") return Family::C;
    if (name == "D") return Family::D;
    if (name == "E6") return Family::E6;
    if (name == "E7") return Family::E7;
    if (name == "E8") return Family::E8;
    if (name == "F4") return Family::F4;
    if (name == "G2") return Family::G2;
    throw_schema("unknown root system family \"" + name + "\"");
}

std::string family_to_string(Family family) {
    switch (family) {
        case Family::A: return "A";
        case Family::B: return "B";
        case Family::C: return "C";
        case Family::D: return "D";
        case Family::E6: return "E6";
        case Family::E7: return "E7";
        case Family::E8: return "E8";
        case Family::F4: return "F4";
        case Family::G2: return "G2";
    }
    throw_internal("unreachable family");
}

namespace {

void check_rank(Family family, int n) {
    bool ok = false;
    switch (family) {
        case Family::A: ok = n >= 1; break;
        case Family::B: ok = n >= 2; break;
        case Family::C: ok = n >= 2; break;
        case Family::D: ok = n >= 3; break;
        case Family::E6: ok = n == 6; break;
        case Family::E7: ok = n == 7; break;
        case Family::E8: ok = n == 8; break;
        case Family::F4: ok = n == 4; break;
        case Family::G2: ok = n == 2; break;
    }
    if (!ok)
        throw_precondition("invalid rank " + std::to_string(n) + " for family " +
                           family_to_string(family));
}

/// Cartan matrix of one simple factor, Bourbaki numbering.
IntMat factor_cartan(Family family, int n) {
    IntMat c = IntMat::Zero(n, n);
    for (int i = 0; i < n; ++i) c(i, i) = 2;
    auto chain = [&](int i, int j) { c(i, j) = -1; c(j, i) = -1; };
    switch (family) {
        case Family::A:
            for (int i = 0; i + 1 < n; ++i) chain(i, i + 1);
            break;
        case Family::B:
            for (int i = 0; i + 2 < n; ++i) chain(i, i + 1);
            // double edge: a_{n-1} long, a_n short
            c(n - 2, n - 1) = -2;
            c(n - 1, n - 2) = -1;
            break;
        case Family::C:
            for (int i = 0; i + 2 < n; ++i) chain(i, i + 1);
            c(n - 2, n - 1) = -1;
            c(n - 1, n - 2) = -2;
            break;
        case Family::D:
            for (int i = 0; i + 2 < n; ++i) chain(i, i + 1);
            chain(n - 3, n - 1);
            break;
        case Family::E6:
        case Family::E7:
        case Family::E8:
            // chain 1-3-4-5-...-n with node 2 attached to node 4
            chain(0, 2);
            for (int i = 2; i + 1 < n; ++i) chain(i, i + 1);
            chain(1, 3);
            break;
        case Family::F4:
            chain(0, 1);
            c(1, 2) = -2;
            c(2, 1) = -1;
            chain(2, 3);
            break;
        case Family::G2:
            c(0, 1) = -1;
            c(1, 0) = -3;
            break;
    }
    return c;
}

/**
 * Relative squared half-lengths d_j solving C_ij d_j = C_ji d_i on the
 * (connected) Dynkin graph, normalized so max d_j = 1.
 */
std::vector<Rational> factor_lengths(const IntMat& c) {
    const int n = static_cast<int>(c.rows());
    std::vector<Rational> d(n, Rational(0));
    d[0] = 1;
    std::vector<int> todo = {0};
    while (!todo.empty()) {
        int i = todo.back();
        todo.pop_back();
        for (int j = 0; j < n; ++j) {
            if (j == i || c(i, j) == 0 || d[j] != 0) continue;
            d[j] = d[i] * Rational(c(i, j)) / Rational(c(j, i));
            todo.push_back(j);
        }
    }
    Rational dmax = 0;
    for (const auto& v : d) {
        if (v == 0) throw_internal("disconnected Dynkin diagram for a simple factor");
        dmax = std::max(dmax, v);
    }
    for (auto& v : d) v /= dmax;
    return d;
}

/// All roots of the (block) system by closure under simple reflections.
std::vector<IntVec> enumerate_roots(const IntMat& cartan) {
    const int r = static_cast<int>(cartan.rows());
    auto key = [r](const IntVec& v) {
        std::vector<int> k(r);
        for (int i = 0; i < r; ++i) k[i] = v(i);
        return k;
    };
    std::set<std::vector<int>> seen;
    std::vector<IntVec> worklist, all;
    for (int i = 0; i < r; ++i) {
        IntVec e = IntVec::Zero(r);
        e(i) = 1;
        seen.insert(key(e));
        worklist.push_back(e);
        all.push_back(e);
    }
    while (!worklist.empty()) {
        IntVec b = worklist.back();
        worklist.pop_back();
        for (int i = 0; i < r; ++i) {
            // s_i(b) = b - <b, a_i^v> e_i with <b, a_i^v> = sum_k b_k C_ki
            int pairing = 0;
            for (int k = 0; k < r; ++k) pairing += b(k) * cartan(k, i);
            IntVec refl = b;
            refl(i) -= pairing;
            if (seen.insert(key(refl)).second) {
                worklist.push_back(refl);
                all.push_back(refl);
            }
        }
    }
    return all;
}

bool graded_lex_less(const IntVec& a, const IntVec& b) {
    const int ha = a.sum(), hb = b.sum();
    if (ha != hb) return ha < hb;
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        if (a(i) != b(i)) return a(i) < b(i);
    }
    return false;
}

}  // namespace

RootSystem RootSystem::build(const std::vector<std::pair<Family, int>>& factors) {
    if (factors.empty()) throw_precondition("root system needs at least one factor");
    int rank = 0;
    for (const auto& [family, n] : factors) {
        check_rank(family, n);
        rank += n;
    }

    RootSystem rs;
    rs.factors_ = factors;
    rs.rank_ = rank;
    rs.cartan_ = IntMat::Zero(rank, rank);
    rs.gram_ = RatMat::Zero(rank, rank);

    int offset = 0;
    for (const auto& [family, n] : factors) {
        IntMat c = factor_cartan(family, n);
        std::vector<Rational> d = factor_lengths(c);
        rs.cartan_.block(offset, offset, n, n) = c;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                rs.gram_(offset + i, offset + j) = Rational(c(i, j)) * d[j];
        offset += n;
    }

    // symmetry of the symmetrized Cartan matrix is forced by the d_j solve
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j)
            if (rs.gram_(i, j) != rs.gram_(j, i))
                throw_internal("gram matrix not symmetric");

    std::vector<IntVec> all = enumerate_roots(rs.cartan_);
    for (const auto& b : all) {
        bool nonneg = true;
        for (Eigen::Index i = 0; i < b.size(); ++i)
            if (b(i) < 0) { nonneg = false; break; }
        if (nonneg) rs.positive_roots_.push_back(b);
    }
    std::sort(rs.positive_roots_.begin(), rs.positive_roots_.end(), graded_lex_less);
    if (2 * rs.positive_roots_.size() != all.size())
        throw_internal("root set not symmetric under negation");
    return rs;
}

Rational RootSystem::root_inner(const IntVec& b, const IntVec& c) const {
    Rational acc = 0;
    for (int i = 0; i < rank_; ++i) {
        if (b(i) == 0) continue;
        for (int j = 0; j < rank_; ++j) {
            if (c(j) == 0) continue;
            acc += Rational(b(i)) * gram_(i, j) * Rational(c(j));
        }
    }
    return acc;
}

Rational RootSystem::root_functional(const IntVec& b, const RatVec& h) const {
    Rational acc = 0;
    for (int i = 0; i < rank_; ++i) {
        if (b(i) == 0) continue;
        for (int j = 0; j < rank_; ++j)
            acc -= Rational(b(i)) * gram_(i, j) * h(j);
    }
    return acc;
}

bool RootSystem::is_root(const IntVec& coeffs) const {
    IntVec pos = coeffs;
    bool nonneg = true;
    for (Eigen::Index i = 0; i < pos.size(); ++i)
        if (pos(i) < 0) { nonneg = false; break; }
    if (!nonneg) pos = -coeffs;
    for (const auto& b : positive_roots_)
        if (b == pos) return true;
    return false;
}

RootSystem RootSystem::scaled(const Rational& lambda) const {
    if (lambda <= 0) throw_precondition("scaling factor must be positive");
    RootSystem rs = *this;
    rs.gram_ /= lambda;
    return rs;
}

}  // namespace rlb
