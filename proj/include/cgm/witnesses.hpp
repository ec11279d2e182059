#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cgm/matrix.hpp"
#include "cgm/structure.hpp"

namespace cgm {

enum class Branch { rank_one, transposed, noncommuting_blocks, commuting_blocks };
const char* branch_name(Branch b);

// How the bridge matrix X between an idempotent M and a square-zero N was
// built. In the block branches, P's columns are a kernel basis of M0 followed
// by one of N (M0 is M or I - M, whichever has nullity >= n/2), so that
// P^-1 M0 P = (0 A'; 0 I_r) and P^-1 N P = (0 0; B' 0). In the transposed
// branch the same data describes the pair (M0^t, N^t). The rank-one branch
// needs no basis, so those fields stay empty; r is always nullity(M0).
template <typename K>
struct BridgeContext {
    int r = 0;
    Branch branch = Branch::rank_one;
    std::optional<Matrix<K>> P;
    std::optional<Matrix<K>> A_prime;
    std::optional<Matrix<K>> B_prime;
};

namespace detail {

template <typename K>
std::vector<Matrix<K>> kernel_intersection(const Matrix<K>& a, const Matrix<K>& b) {
    return Matrix<K>::vstack(a, b).kernel_basis();
}

// Bridge for a pair whose kernels intersect trivially: conjugate both into
// the block shapes above and commute through the blocks.
template <typename K>
Matrix<K> block_bridge(const Matrix<K>& m0, const Matrix<K>& n, BridgeContext<K>& ctx) {
    const int sz = m0.rows();
    std::vector<Matrix<K>> cols = m0.kernel_basis();
    const int r = static_cast<int>(cols.size());
    std::vector<Matrix<K>> kn = n.kernel_basis();
    if (sz != 2 * r || static_cast<int>(kn.size()) != r)
        fail(errc::precondition, "block bridge needs balanced nullities n/2");
    cols.insert(cols.end(), kn.begin(), kn.end());
    Matrix<K> p = Matrix<K>::from_columns(cols);
    Matrix<K> pinv = p.inverse();
    Matrix<K> c = pinv * m0 * p;
    Matrix<K> d = pinv * n * p;
    if (!c.block(0, 0, sz, r).is_zero() || !(c.block(r, r, r, r) == Matrix<K>::identity(r, m0.field_exemplar())))
        fail(errc::internal, "idempotent did not take the expected block shape");
    if (!d.block(0, 0, r, sz).is_zero() || !d.block(r, r, r, r).is_zero())
        fail(errc::internal, "square-zero matrix did not take the expected block shape");
    Matrix<K> ap = c.block(0, r, r, r);
    Matrix<K> bp = d.block(r, 0, r, r);
    ctx.r = r;
    ctx.P = p;
    ctx.A_prime = ap;
    ctx.B_prime = bp;
    if (!(ap * bp == bp * ap)) {
        ctx.branch = Branch::noncommuting_blocks;
        return p * direct_sum(ap * bp, bp * ap) * pinv;
    }
    ctx.branch = Branch::commuting_blocks;
    // Any non-scalar S commuting with both blocks yields X = P (S + S) P^-1;
    // the blocks commute with each other, so either block works when
    // non-scalar, and when both are scalar every S does.
    std::optional<Matrix<K>> s;
    if (!ap.is_scalar()) {
        s = ap;
    } else if (!bp.is_scalar()) {
        s = bp;
    } else if (r >= 2) {
        Matrix<K> e = Matrix<K>::zero(r, r, m0.field_exemplar());
        e.at(0, 0) = one_like(m0.field_exemplar());
        s = e;
    } else {
        fail(errc::no_common_commuter, "every common commuter of this pair is scalar");
    }
    return p * direct_sum(*s, *s) * pinv;
}

} // namespace detail

// Non-scalar X commuting with both an idempotent M (not 0 or I) and a nonzero
// square-zero N, over any field, together with how it was found. Throws
// no-common-commuter when only scalars commute with both (possible at n = 2).
template <typename K>
std::pair<Matrix<K>, BridgeContext<K>> common_commuter(const Matrix<K>& m, const Matrix<K>& n) {
    if (!m.is_square() || m.rows() != n.rows() || m.cols() != n.cols())
        fail(errc::precondition, "bridge needs same-size square matrices");
    const int sz = m.rows();
    if (sz < 2) fail(errc::precondition, "bridge needs dimension at least 2");
    const Matrix<K> id = Matrix<K>::identity(sz, m.field_exemplar());
    if (!(m * m == m)) fail(errc::precondition, "first bridge argument must be idempotent");
    if (m.is_zero() || m == id) fail(errc::precondition, "idempotent bridge argument must differ from 0 and I");
    if (!(n * n).is_zero()) fail(errc::precondition, "second bridge argument must square to zero");
    if (n.is_zero()) fail(errc::precondition, "square-zero bridge argument must be nonzero");

    // Commuting with M and with I - M are the same condition; normalize so
    // the idempotent's nullity is at least n/2, like the square-zero side's.
    Matrix<K> m0 = 2 * (sz - m.rank()) < sz ? id - m : m;

    std::vector<Matrix<K>> kl = detail::kernel_intersection(m0, n);
    std::vector<Matrix<K>> kr = detail::kernel_intersection(m0.transpose(), n.transpose());

    BridgeContext<K> ctx;
    ctx.r = sz - m0.rank();
    Matrix<K> x = id;
    if (!kl.empty() && !kr.empty()) {
        // v in both kernels, u in both transpose kernels: X = v u^t is
        // killed by M0 and N on both sides.
        ctx.branch = Branch::rank_one;
        x = kl.front() * kr.front().transpose();
    } else if (kl.empty()) {
        x = detail::block_bridge(m0, n, ctx);
    } else {
        // Left kernels meet but right ones do not; the transposed pair has
        // trivially meeting left kernels, so bridge there and transpose back.
        x = detail::block_bridge(m0.transpose(), n.transpose(), ctx).transpose();
        ctx.branch = Branch::transposed;
    }
    if (x.is_scalar() || !commutes(x, m) || !commutes(x, n))
        fail(errc::internal, "bridge postcondition failed");
    return {x, ctx};
}

// Non-scalar idempotent commuting with A, for A diagonalizable over C with no
// real eigenvalues (minimal polynomial one irreducible quadratic or two
// distinct ones).
QMatrix idempotent_witness(const QMatrix& a);

// N = p(B) where min_poly(B) = p^2, p an irreducible quadratic: nonzero,
// squares to zero, commutes with B.
QMatrix square_zero_witness(const QMatrix& b);

struct PathWitness {
    std::vector<QMatrix> vertices;
    bool certified = false;
};

// Path from A to B in the commuting graph, length at most 4: the direct edge
// when A and B commute, otherwise (A, M, X, N, B) through the witnesses above,
// deduplicated if any vertices coincide.
PathWitness build_path(const QMatrix& a, const QMatrix& b);

// Splices out detours across any commuting non-consecutive vertex pair until
// no shortcut remains. Endpoints are preserved.
PathWitness shorten_path(const PathWitness& pw);

struct VerifyReport {
    std::vector<bool> edge_commutes;
    std::vector<bool> vertex_nonscalar;
    bool vertices_distinct = false;
    bool endpoints_match = false;
    bool shortcut_available = false; // informational: a shorter splice exists
    bool pass = false;
    std::vector<std::string> failures;
};

// Checks a claimed path against the graph rules and the intended endpoints.
// Failures are reported, never thrown.
VerifyReport verify_path(const PathWitness& pw, const QMatrix& a, const QMatrix& b);

} // namespace cgm
