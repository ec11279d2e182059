#include "cgm/oracle.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <sstream>

#include "cgm/witnesses.hpp"

namespace cgm {

namespace {

// Entries as raw residues, fixed capacity for n <= 4. All hot loops run on
// these instead of Matrix<Fp> to keep enumeration cheap.
using Bytes = std::array<std::uint8_t, 16>;

struct Ctx {
    int n;
    std::uint32_t p;
    int nn;
    std::uint64_t total;
};

Ctx make_ctx(const RingSpec& spec) {
    if (spec.n < 2 || spec.n > 4 || (spec.p != 2 && spec.p != 3 && spec.p != 5))
        fail(errc::degenerate_input, "ring spec must have n in 2..4 and p in {2, 3, 5}");
    Ctx c{spec.n, spec.p, spec.n * spec.n, 1};
    for (int k = 0; k < c.nn; ++k) {
        c.total *= spec.p;
        if (c.total > (std::uint64_t{1} << 32)) fail(errc::too_large, "ring exceeds the 2^32 enumeration guard");
    }
    return c;
}

Bytes decode_bytes(const Ctx& c, std::uint32_t index) {
    Bytes b{};
    for (int k = c.nn - 1; k >= 0; --k) {
        b[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(index % c.p);
        index /= c.p;
    }
    return b;
}

std::uint32_t encode_bytes(const Ctx& c, const Bytes& b) {
    std::uint64_t idx = 0;
    for (int k = 0; k < c.nn; ++k) idx = idx * c.p + b[static_cast<std::size_t>(k)];
    return static_cast<std::uint32_t>(idx);
}

bool is_central_bytes(const Ctx& c, const Bytes& b) {
    std::uint8_t lambda = b[0];
    for (int i = 0; i < c.n; ++i)
        for (int j = 0; j < c.n; ++j) {
            std::uint8_t want = i == j ? lambda : std::uint8_t{0};
            if (b[static_cast<std::size_t>(i * c.n + j)] != want) return false;
        }
    return true;
}

Bytes mul_bytes(const Ctx& c, const Bytes& a, const Bytes& b) {
    Bytes r{};
    for (int i = 0; i < c.n; ++i)
        for (int j = 0; j < c.n; ++j) {
            std::uint32_t acc = 0;
            for (int k = 0; k < c.n; ++k)
                acc += static_cast<std::uint32_t>(a[static_cast<std::size_t>(i * c.n + k)]) *
                       b[static_cast<std::size_t>(k * c.n + j)];
            r[static_cast<std::size_t>(i * c.n + j)] = static_cast<std::uint8_t>(acc % c.p);
        }
    return r;
}

bool commute_bytes(const Ctx& c, const Bytes& a, const Bytes& b) {
    for (int i = 0; i < c.n; ++i)
        for (int j = 0; j < c.n; ++j) {
            std::uint32_t ab = 0, ba = 0;
            for (int k = 0; k < c.n; ++k) {
                ab += static_cast<std::uint32_t>(a[static_cast<std::size_t>(i * c.n + k)]) *
                      b[static_cast<std::size_t>(k * c.n + j)];
                ba += static_cast<std::uint32_t>(b[static_cast<std::size_t>(i * c.n + k)]) *
                      a[static_cast<std::size_t>(k * c.n + j)];
            }
            if (ab % c.p != ba % c.p) return false;
        }
    return true;
}

bool matches(const Ctx& c, const Bytes& b, MatrixFilter filter) {
    switch (filter) {
        case MatrixFilter::all: return true;
        case MatrixFilter::non_central: return !is_central_bytes(c, b);
        case MatrixFilter::idempotent: return mul_bytes(c, b, b) == b;
        case MatrixFilter::square_zero_nonzero: {
            if (b == Bytes{}) return false;
            return mul_bytes(c, b, b) == Bytes{};
        }
    }
    fail(errc::internal, "unknown filter");
}

Matrix<Fp> to_matrix(const Ctx& c, const Bytes& b) {
    Matrix<Fp> m(c.n, c.n, Fp(0, c.p));
    for (int i = 0; i < c.n; ++i)
        for (int j = 0; j < c.n; ++j) m.at(i, j) = Fp(b[static_cast<std::size_t>(i * c.n + j)], c.p);
    return m;
}

Bytes from_matrix(const Ctx& c, const Matrix<Fp>& m) {
    if (m.rows() != c.n || m.cols() != c.n) fail(errc::type_mismatch, "matrix size does not match the ring spec");
    if (m.field_exemplar().modulus() != c.p) fail(errc::type_mismatch, "matrix modulus does not match the ring spec");
    Bytes b{};
    for (int i = 0; i < c.n; ++i)
        for (int j = 0; j < c.n; ++j) b[static_cast<std::size_t>(i * c.n + j)] = static_cast<std::uint8_t>(m.at(i, j).value());
    return b;
}

// Depth-limited BFS on the implicit graph; max_depth < 0 means unbounded.
// Scans only still-unvisited vertices per expansion, so the whole run is
// O(V^2) commutation checks worst case without any stored adjacency.
std::vector<std::int32_t> bfs_dist(const Ctx& c, std::uint32_t source, int max_depth) {
    std::vector<std::int32_t> dist(c.total, -1);
    std::vector<std::uint32_t> remaining;
    remaining.reserve(static_cast<std::size_t>(c.total));
    for (std::uint64_t i = 0; i < c.total; ++i) {
        Bytes b = decode_bytes(c, static_cast<std::uint32_t>(i));
        if (is_central_bytes(c, b)) dist[static_cast<std::size_t>(i)] = -2;
        else if (static_cast<std::uint32_t>(i) != source) remaining.push_back(static_cast<std::uint32_t>(i));
    }
    dist[source] = 0;
    std::deque<std::uint32_t> queue{source};
    while (!queue.empty()) {
        std::uint32_t u = queue.front();
        queue.pop_front();
        if (max_depth >= 0 && dist[u] >= max_depth) continue;
        Bytes ub = decode_bytes(c, u);
        for (std::size_t k = 0; k < remaining.size();) {
            std::uint32_t v = remaining[k];
            if (commute_bytes(c, ub, decode_bytes(c, v))) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
                remaining[k] = remaining.back();
                remaining.pop_back();
            } else {
                ++k;
            }
        }
    }
    return dist;
}

} // namespace

std::uint64_t ring_size(const RingSpec& spec) { return make_ctx(spec).total; }

std::uint32_t encode_matrix(const RingSpec& spec, const Matrix<Fp>& m) {
    Ctx c = make_ctx(spec);
    return encode_bytes(c, from_matrix(c, m));
}

Matrix<Fp> decode_matrix(const RingSpec& spec, std::uint32_t index) {
    Ctx c = make_ctx(spec);
    if (index >= c.total) fail(errc::degenerate_input, "matrix index out of range");
    return to_matrix(c, decode_bytes(c, index));
}

std::vector<std::uint32_t> enumerate(const RingSpec& spec, MatrixFilter filter) {
    Ctx c = make_ctx(spec);
    std::vector<std::uint32_t> out;
    for (std::uint64_t i = 0; i < c.total; ++i) {
        if (matches(c, decode_bytes(c, static_cast<std::uint32_t>(i)), filter))
            out.push_back(static_cast<std::uint32_t>(i));
    }
    return out;
}

DistanceMap bfs(const RingSpec& spec, const Matrix<Fp>& source) {
    Ctx c = make_ctx(spec);
    Bytes sb = from_matrix(c, source);
    if (is_central_bytes(c, sb)) fail(errc::precondition, "BFS source must be non-central");
    std::uint32_t s = encode_bytes(c, sb);
    return DistanceMap{s, bfs_dist(c, s, -1)};
}

DiameterResult diameter(const RingSpec& spec) {
    Ctx c = make_ctx(spec);
    std::vector<std::uint32_t> verts = enumerate(spec, MatrixFilter::non_central);
    const std::size_t v = verts.size();

    // The all-sources sweep caches one byte image per vertex plus an
    // adjacency bitset; both are tiny for the rings this is meant for.
    if (v > 8192) {
        DiameterResult best{true, 0, verts[0], verts[0]};
        for (std::uint32_t s : verts) {
            std::vector<std::int32_t> dist = bfs_dist(c, s, -1);
            for (std::uint32_t t : verts) {
                if (dist[t] == -1) return DiameterResult{false, 0, s, t};
                if (dist[t] > best.value) best = DiameterResult{true, dist[t], s, t};
            }
        }
        return best;
    }

    std::vector<Bytes> mats(v);
    for (std::size_t i = 0; i < v; ++i) mats[i] = decode_bytes(c, verts[i]);
    const std::size_t words = (v + 63) / 64;
    std::vector<std::uint64_t> adj(v * words, 0);
    for (std::size_t i = 0; i < v; ++i)
        for (std::size_t j = i + 1; j < v; ++j)
            if (commute_bytes(c, mats[i], mats[j])) {
                adj[i * words + j / 64] |= std::uint64_t{1} << (j % 64);
                adj[j * words + i / 64] |= std::uint64_t{1} << (i % 64);
            }

    DiameterResult best{true, 0, verts[0], verts[0]};
    std::vector<std::uint64_t> visited(words), frontier(words), next(words);
    for (std::size_t s = 0; s < v; ++s) {
        std::fill(visited.begin(), visited.end(), 0);
        std::fill(frontier.begin(), frontier.end(), 0);
        visited[s / 64] = frontier[s / 64] = std::uint64_t{1} << (s % 64);
        int depth = 0;
        std::size_t last_vertex = s;
        std::size_t seen = 1;
        while (true) {
            std::fill(next.begin(), next.end(), 0);
            for (std::size_t w = 0; w < words; ++w) {
                std::uint64_t bits = frontier[w];
                while (bits) {
                    std::size_t u = w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits));
                    bits &= bits - 1;
                    for (std::size_t x = 0; x < words; ++x) next[x] |= adj[u * words + x];
                }
            }
            bool grew = false;
            for (std::size_t w = 0; w < words; ++w) {
                next[w] &= ~visited[w];
                if (next[w]) grew = true;
            }
            if (!grew) break;
            ++depth;
            for (std::size_t w = 0; w < words; ++w) {
                visited[w] |= next[w];
                std::uint64_t bits = next[w];
                while (bits) {
                    last_vertex = w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits));
                    bits &= bits - 1;
                    ++seen;
                }
            }
            frontier = next;
        }
        if (seen < v) {
            for (std::size_t t = 0; t < v; ++t)
                if (!(visited[t / 64] >> (t % 64) & 1)) return DiameterResult{false, 0, verts[s], verts[t]};
        }
        if (depth > best.value) best = DiameterResult{true, depth, verts[s], verts[last_vertex]};
    }
    return best;
}

Prop3Report prop3_exhaustive(const RingSpec& spec) {
    Ctx c = make_ctx(spec);
    Prop3Report rep;
    rep.spec = spec;

    std::vector<std::uint32_t> idems, squares;
    const Bytes zero{};
    Bytes id{};
    for (int i = 0; i < c.n; ++i) id[static_cast<std::size_t>(i * c.n + i)] = 1;
    for (std::uint32_t i : enumerate(spec, MatrixFilter::idempotent)) {
        Bytes b = decode_bytes(c, i);
        if (b != zero && b != id) idems.push_back(i);
    }
    squares = enumerate(spec, MatrixFilter::square_zero_nonzero);
    rep.idempotents_nontrivial = idems.size();
    rep.square_zero_nonzero = squares.size();
    rep.pairs = idems.size() * squares.size();
    if (rep.pairs * c.total > (std::uint64_t{1} << 34))
        fail(errc::too_large, "pair count too large for exhaustive brute force");

    std::vector<Bytes> all(c.total);
    std::vector<bool> central(c.total);
    for (std::uint64_t i = 0; i < c.total; ++i) {
        all[i] = decode_bytes(c, static_cast<std::uint32_t>(i));
        central[i] = is_central_bytes(c, all[i]);
    }

    for (std::uint32_t mi : idems) {
        Matrix<Fp> m = to_matrix(c, all[mi]);
        for (std::uint32_t ni : squares) {
            Matrix<Fp> n = to_matrix(c, all[ni]);
            bool success = false, certified = false;
            try {
                auto [x, ctxinfo] = common_commuter(m, n);
                (void)ctxinfo;
                success = true;
                certified = !x.is_scalar() && commutes(x, m) && commutes(x, n);
            } catch (const Error& e) {
                if (e.code() != errc::no_common_commuter) throw;
            }
            bool exists = false;
            for (std::uint64_t ci = 0; ci < c.total && !exists; ++ci) {
                if (central[ci]) continue;
                exists = commute_bytes(c, all[ci], all[mi]) && commute_bytes(c, all[ci], all[ni]);
            }
            rep.algorithm_successes += success ? 1 : 0;
            rep.algorithm_failures += success ? 0 : 1;
            rep.brute_force_exists += exists ? 1 : 0;
            bool discrepancy = (success && !certified) || (!success && exists) || (success && !exists);
            if (discrepancy) {
                ++rep.discrepancies;
                if (rep.discrepancy_pairs.size() < 16) rep.discrepancy_pairs.emplace_back(mi, ni);
            }
        }
    }
    return rep;
}

std::string export_dot(const RingSpec& spec, std::uint32_t source_index, int radius) {
    Ctx c = make_ctx(spec);
    if (source_index >= c.total) fail(errc::degenerate_input, "matrix index out of range");
    if (radius < 0) fail(errc::degenerate_input, "radius must be non-negative");
    Bytes sb = decode_bytes(c, source_index);
    if (is_central_bytes(c, sb)) fail(errc::precondition, "DOT export needs a non-central source");

    std::vector<std::int32_t> dist = bfs_dist(c, source_index, radius);
    std::vector<std::uint32_t> nodes;
    for (std::uint64_t i = 0; i < c.total; ++i)
        if (dist[i] >= 0) nodes.push_back(static_cast<std::uint32_t>(i));

    auto entry_label = [&](std::uint32_t idx) {
        Bytes b = decode_bytes(c, idx);
        std::string s = std::to_string(idx) + ": ";
        for (int i = 0; i < c.n; ++i) {
            if (i) s += "/";
            for (int j = 0; j < c.n; ++j) s += static_cast<char>('0' + b[static_cast<std::size_t>(i * c.n + j)]);
        }
        return s;
    };

    std::ostringstream out;
    out << "graph commuting_neighborhood {\n";
    out << "  label=\"M_" << c.n << "(F_" << c.p << "), source " << source_index << ", radius " << radius << "\";\n";
    for (std::uint32_t i : nodes)
        out << "  v" << i << " [label=\"" << entry_label(i) << "\"" << (i == source_index ? ", shape=box" : "")
            << "];\n";
    for (std::size_t a = 0; a < nodes.size(); ++a) {
        Bytes ab = decode_bytes(c, nodes[a]);
        for (std::size_t b = a + 1; b < nodes.size(); ++b)
            if (commute_bytes(c, ab, decode_bytes(c, nodes[b])))
                out << "  v" << nodes[a] << " -- v" << nodes[b] << ";\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace cgm
