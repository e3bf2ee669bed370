#include <cmi/homology.hpp>

#include <cmi/errors.hpp>

#include <algorithm>
#include <cstdint>
#include <set>
#include <utility>

namespace cmi {

long long rank_over_q(std::vector<std::vector<Int>> a) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    // Bareiss: after step k every entry is a minor of the input, so the
    // division below is exact and growth stays polynomial in the minors.
    Int prev = 1;
    std::size_t k = 0;
    for (; k < rows && k < cols; ++k) {
        std::size_t pr = rows, pc = cols;
        for (std::size_t i = k; i < rows; ++i) {
            for (std::size_t j = k; j < cols; ++j) {
                if (a[i][j] == 0) continue;
                if (pr == rows || abs(a[i][j]) < abs(a[pr][pc])) {
                    pr = i;
                    pc = j;
                }
            }
        }
        if (pr == rows) break;
        if (pr != k) std::swap(a[pr], a[k]);
        if (pc != k)
            for (std::size_t i = 0; i < rows; ++i) std::swap(a[i][pc], a[i][k]);
        for (std::size_t i = k + 1; i < rows; ++i) {
            for (std::size_t j = k + 1; j < cols; ++j)
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return static_cast<long long>(k);
}

namespace {

bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

} // namespace

long long rank_mod_p(std::vector<std::vector<long long>> a, long long p) {
    if (!is_prime(p)) throw input_error("characteristic must be 0 or a prime");
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    for (auto& row : a)
        for (auto& x : row) x = ((x % p) + p) % p;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rows;
        for (std::size_t i = rank; i < rows; ++i) {
            if (a[i][col] != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot == rows) continue;
        std::swap(a[pivot], a[rank]);
        // Normalize the pivot row via Fermat inverse, then eliminate below.
        long long inv = 1, base = a[rank][col] % p, e = p - 2;
        while (e) {
            if (e & 1) inv = static_cast<long long>(
                static_cast<__int128>(inv) * base % p);
            base = static_cast<long long>(static_cast<__int128>(base) * base % p);
            e >>= 1;
        }
        for (std::size_t j = col; j < cols; ++j)
            a[rank][j] = static_cast<long long>(
                static_cast<__int128>(a[rank][j]) * inv % p);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            long long f = a[i][col];
            if (!f) continue;
            for (std::size_t j = col; j < cols; ++j) {
                long long v = a[i][j] - static_cast<long long>(
                                            static_cast<__int128>(f) * a[rank][j] % p);
                a[i][j] = v < 0 ? v + p : v;
            }
        }
        ++rank;
    }
    return static_cast<long long>(rank);
}

namespace {

// All faces grouped by size; faces[s] lists the size-s faces sorted.
std::vector<std::vector<Face>> enumerate_faces(const SimplicialComplex& c) {
    std::set<Face> seen;
    for (const Face& f : c.facets()) {
        const std::size_t k = f.size();
        if (k > 25) throw input_error("homology supports facets with at most 25 vertices");
        for (std::uint64_t sub = 0;; ++sub) {
            std::vector<int> verts;
            for (std::size_t b = 0; b < k; ++b)
                if (sub >> b & 1) verts.push_back(f.v[b]);
            seen.insert(Face(std::move(verts)));
            if (sub + 1 == (std::uint64_t{1} << k)) break;
        }
    }
    std::size_t maxs = 0;
    for (const Face& f : seen) maxs = std::max(maxs, f.size());
    std::vector<std::vector<Face>> out(maxs + 1);
    for (const Face& f : seen) out[f.size()].push_back(f);
    return out;
}

// Signed boundary matrix from size-s faces (columns) to size-(s-1) faces
// (rows); the sign of dropping position t is (-1)^t.
template <class Cell>
std::vector<std::vector<Cell>> boundary_matrix(const std::vector<Face>& lower,
                                               const std::vector<Face>& upper) {
    std::vector<std::vector<Cell>> mat(lower.size(), std::vector<Cell>(upper.size(), 0));
    for (std::size_t j = 0; j < upper.size(); ++j) {
        const Face& f = upper[j];
        for (std::size_t t = 0; t < f.v.size(); ++t) {
            std::vector<int> verts = f.v;
            verts.erase(verts.begin() + static_cast<std::ptrdiff_t>(t));
            Face g(std::move(verts));
            auto it = std::lower_bound(lower.begin(), lower.end(), g);
            std::size_t i = static_cast<std::size_t>(it - lower.begin());
            mat[i][j] = (t % 2 == 0) ? 1 : -1;
        }
    }
    return mat;
}

} // namespace

std::vector<long long> reduced_homology_dims(const SimplicialComplex& c,
                                             long long characteristic) {
    if (characteristic != 0 && !is_prime(characteristic))
        throw input_error("characteristic must be 0 or a prime");
    if (c.is_void()) return {};
    auto faces = enumerate_faces(c);
    const std::size_t levels = faces.size(); // sizes 0 .. levels-1
    // ranks[s] = rank of the boundary map from size-s faces to size-(s-1).
    std::vector<long long> ranks(levels + 1, 0);
    for (std::size_t s = 1; s < levels; ++s) {
        if (characteristic == 0) {
            ranks[s] = rank_over_q(boundary_matrix<Int>(faces[s - 1], faces[s]));
        } else {
            ranks[s] = rank_mod_p(boundary_matrix<long long>(faces[s - 1], faces[s]),
                                  characteristic);
        }
    }
    std::vector<long long> dims(levels, 0);
    for (std::size_t s = 0; s < levels; ++s)
        dims[s] = static_cast<long long>(faces[s].size()) - ranks[s] - ranks[s + 1];
    return dims;
}

} // namespace cmi
