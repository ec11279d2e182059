#include "cgm/witnesses.hpp"

#include <algorithm>
#include <sstream>

namespace cgm {

namespace {

// Splice out everything between the first repeated vertex pair until all
// vertices are distinct. A collision only ever shortens the path.
void dedup_vertices(std::vector<QMatrix>& v) {
    bool again = true;
    while (again) {
        again = false;
        for (std::size_t i = 0; i < v.size() && !again; ++i) {
            for (std::size_t j = i + 1; j < v.size() && !again; ++j) {
                if (v[i] == v[j]) {
                    v.erase(v.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                            v.begin() + static_cast<std::ptrdiff_t>(j) + 1);
                    again = true;
                }
            }
        }
    }
}

bool safe_commutes(const QMatrix& a, const QMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols() || !a.is_square()) return false;
    return commutes(a, b);
}

} // namespace

const char* branch_name(Branch b) {
    switch (b) {
        case Branch::rank_one: return "rank-one";
        case Branch::transposed: return "transposed";
        case Branch::noncommuting_blocks: return "noncommuting-blocks";
        case Branch::commuting_blocks: return "commuting-blocks";
    }
    fail(errc::internal, "unknown branch");
}

QMatrix idempotent_witness(const QMatrix& a) {
    StructureReport rep = classify(a);
    if (rep.factor_pattern == FactorPattern::two_distinct_irreducible_quadratics) {
        std::vector<QPoly> factors = factor_low_degree(rep.min_poly);
        return crt_projector(a, factors[0], factors[1]);
    }
    if (rep.factor_pattern == FactorPattern::single_irreducible_quadratic) {
        return invariant_split_projector(a);
    }
    fail(errc::wrong_case,
         std::string("idempotent witness needs quadratic-only eigenstructure, got pattern ") +
             factor_pattern_name(rep.factor_pattern));
}

QMatrix square_zero_witness(const QMatrix& b) {
    StructureReport rep = classify(b);
    if (rep.factor_pattern != FactorPattern::irreducible_quadratic_squared)
        fail(errc::wrong_case,
             std::string("square-zero witness needs a squared irreducible quadratic minimal polynomial, got pattern ") +
                 factor_pattern_name(rep.factor_pattern));
    QPoly p = factor_low_degree(rep.min_poly)[0];
    QMatrix n = eval_at_matrix(p, b);
    if (n.is_zero() || !(n * n).is_zero() || !commutes(n, b))
        fail(errc::internal, "square-zero witness postcondition failed");
    return n;
}

PathWitness build_path(const QMatrix& a, const QMatrix& b) {
    if (a.rows() != 4 || a.cols() != 4 || b.rows() != 4 || b.cols() != 4)
        fail(errc::precondition, "paths are built between 4x4 matrices");
    if (a.is_scalar() || b.is_scalar()) fail(errc::precondition, "path endpoints must be non-scalar");
    if (a == b) fail(errc::unsupported_pair, "path endpoints must be distinct vertices");

    PathWitness pw;
    if (commutes(a, b)) {
        pw.vertices = {a, b};
    } else {
        std::optional<HardPairOrientation> orient = is_hard_pair(a, b);
        if (!orient) {
            std::ostringstream why;
            why << "pair outside the supported cases: patterns are "
                << factor_pattern_name(classify(a).factor_pattern) << " and "
                << factor_pattern_name(classify(b).factor_pattern);
            fail(errc::unsupported_pair, why.str());
        }
        bool first_diag = *orient == HardPairOrientation::first_diagonalizable;
        const QMatrix& diag_side = first_diag ? a : b;
        const QMatrix& squared_side = first_diag ? b : a;
        QMatrix m = idempotent_witness(diag_side);
        QMatrix n = square_zero_witness(squared_side);
        auto [x, ctx] = common_commuter(m, n);
        (void)ctx;
        pw.vertices = {diag_side, m, x, n, squared_side};
        if (!first_diag) std::reverse(pw.vertices.begin(), pw.vertices.end());
        dedup_vertices(pw.vertices);
    }
    pw.certified = verify_path(pw, a, b).pass;
    if (!pw.certified) fail(errc::internal, "constructed path failed its own verification");
    return pw;
}

PathWitness shorten_path(const PathWitness& pw) {
    PathWitness out = pw;
    dedup_vertices(out.vertices);
    bool again = true;
    while (again) {
        again = false;
        for (std::size_t i = 0; i + 2 < out.vertices.size() && !again; ++i) {
            // widest shortcut from i first
            for (std::size_t j = out.vertices.size() - 1; j >= i + 2 && !again; --j) {
                if (safe_commutes(out.vertices[i], out.vertices[j])) {
                    out.vertices.erase(out.vertices.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                                       out.vertices.begin() + static_cast<std::ptrdiff_t>(j));
                    again = true;
                }
            }
        }
    }
    return out;
}

VerifyReport verify_path(const PathWitness& pw, const QMatrix& a, const QMatrix& b) {
    VerifyReport rep;
    const auto& v = pw.vertices;
    if (v.size() < 2) {
        rep.failures.push_back("path needs at least two vertices");
        return rep;
    }
    bool edges_ok = true, vertices_ok = true;
    for (std::size_t i = 0; i < v.size(); ++i) {
        bool nonscalar = v[i].is_square() && !v[i].is_scalar();
        rep.vertex_nonscalar.push_back(nonscalar);
        if (!nonscalar) {
            vertices_ok = false;
            rep.failures.push_back("vertex " + std::to_string(i) + " is scalar or not square");
        }
    }
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        bool ok = safe_commutes(v[i], v[i + 1]);
        rep.edge_commutes.push_back(ok);
        if (!ok) {
            edges_ok = false;
            rep.failures.push_back("edge " + std::to_string(i) + " is not an adjacency");
        }
    }
    rep.vertices_distinct = true;
    for (std::size_t i = 0; i < v.size() && rep.vertices_distinct; ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            if (v[i] == v[j]) {
                rep.vertices_distinct = false;
                rep.failures.push_back("vertices " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
                break;
            }
    rep.endpoints_match = v.front() == a && v.back() == b;
    if (!rep.endpoints_match) rep.failures.push_back("endpoints do not match the queried pair");
    for (std::size_t i = 0; i + 2 < v.size() && !rep.shortcut_available; ++i)
        for (std::size_t j = i + 2; j < v.size(); ++j)
            if (safe_commutes(v[i], v[j])) {
                rep.shortcut_available = true;
                break;
            }
    rep.pass = edges_ok && vertices_ok && rep.vertices_distinct && rep.endpoints_match;
    return rep;
}

} // namespace cgm
