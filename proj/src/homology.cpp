#include "pathideal/homology.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace pathideal {

long rank_gf2(std::vector<std::vector<std::uint64_t>> rows, int cols) {
    long rank = 0;
    std::size_t nrows = rows.size();
    for (int c = 0; c < cols && rank < static_cast<long>(nrows); ++c) {
        std::size_t word = static_cast<std::size_t>(c) / 64;
        std::uint64_t bit = 1ull << (c % 64);
        std::size_t pivot = nrows;
        for (std::size_t r = static_cast<std::size_t>(rank); r < nrows; ++r)
            if (rows[r][word] & bit) {
                pivot = r;
                break;
            }
        if (pivot == nrows) continue;
        std::swap(rows[static_cast<std::size_t>(rank)], rows[pivot]);
        const auto& prow = rows[static_cast<std::size_t>(rank)];
        for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < nrows; ++r)
            if (rows[r][word] & bit)
                for (std::size_t w = word; w < prow.size(); ++w) rows[r][w] ^= prow[w];
        ++rank;
    }
    return rank;
}

namespace {

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t acc = 1 % p;
    base %= p;
    while (exp) {
        if (exp & 1) acc = acc * base % p;
        base = base * base % p;
        exp >>= 1;
    }
    return acc;
}

} // namespace

long rank_mod_p(std::vector<std::vector<std::int64_t>> rows, std::uint64_t p) {
    std::size_t nrows = rows.size();
    std::size_t ncols = nrows ? rows[0].size() : 0;
    auto norm = [&](std::int64_t v) -> std::int64_t {
        std::int64_t r = v % static_cast<std::int64_t>(p);
        return r < 0 ? r + static_cast<std::int64_t>(p) : r;
    };
    for (auto& row : rows)
        for (auto& v : row) v = norm(v);
    long rank = 0;
    for (std::size_t c = 0; c < ncols && rank < static_cast<long>(nrows); ++c) {
        std::size_t pivot = nrows;
        for (std::size_t r = static_cast<std::size_t>(rank); r < nrows; ++r)
            if (rows[r][c]) {
                pivot = r;
                break;
            }
        if (pivot == nrows) continue;
        std::swap(rows[static_cast<std::size_t>(rank)], rows[pivot]);
        auto& prow = rows[static_cast<std::size_t>(rank)];
        std::int64_t inv = static_cast<std::int64_t>(
            mod_pow(static_cast<std::uint64_t>(prow[c]), p - 2, p));
        for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < nrows; ++r) {
            if (!rows[r][c]) continue;
            std::int64_t factor = rows[r][c] * inv % static_cast<std::int64_t>(p);
            for (std::size_t k = c; k < ncols; ++k)
                rows[r][k] = norm(rows[r][k] - factor * prow[k] % static_cast<std::int64_t>(p));
        }
        ++rank;
    }
    return rank;
}

long rank_rational(const std::vector<std::vector<std::int64_t>>& rows, int max_col_nonzeros) {
    std::size_t nrows = rows.size();
    std::size_t ncols = nrows ? rows[0].size() : 0;
    if (!nrows || !ncols) return 0;
    // rank over Q can exceed rank over GF(p) only when p divides the largest
    // invariant factor; Hadamard bounds it by s^(k/2), so this many distinct
    // primes near 2^31 cannot all divide it.
    long k = static_cast<long>(std::min(nrows, ncols));
    double log2_bound = 0.5 * k * std::log2(std::max(max_col_nonzeros, 2));
    int prime_count = static_cast<int>(log2_bound / 31.0) + 1;
    long best = 0;
    std::uint64_t candidate = 2147483647ull; // 2^31 - 1
    for (int taken = 0; taken < prime_count; --candidate) {
        if (!is_prime(candidate)) continue;
        ++taken;
        best = std::max(best, rank_mod_p(rows, candidate));
        if (best == k) break; // full rank cannot be exceeded
    }
    return best;
}

namespace {

// boundary rank from size-s faces down to size-(s-1) faces
long boundary_rank(const std::vector<std::uint32_t>& cols_faces,
                   const std::vector<std::uint32_t>& rows_faces,
                   int s, const FieldSpec& field) {
    if (cols_faces.empty() || rows_faces.empty()) return 0;
    auto row_index = [&](std::uint32_t face) -> std::size_t {
        auto it = std::lower_bound(rows_faces.begin(), rows_faces.end(), face);
        return static_cast<std::size_t>(it - rows_faces.begin());
    };
    std::size_t nrows = rows_faces.size();
    std::size_t ncols = cols_faces.size();
    if (field.kind == FieldSpec::Kind::prime && field.p == 2) {
        std::size_t words = (ncols + 63) / 64;
        std::vector<std::vector<std::uint64_t>> m(nrows, std::vector<std::uint64_t>(words, 0));
        for (std::size_t c = 0; c < ncols; ++c) {
            std::uint32_t f = cols_faces[c];
            std::uint32_t bits = f;
            while (bits) {
                std::uint32_t low = bits & (~bits + 1);
                bits ^= low;
                m[row_index(f & ~low)][c / 64] |= 1ull << (c % 64);
            }
        }
        return rank_gf2(std::move(m), static_cast<int>(ncols));
    }
    std::vector<std::vector<std::int64_t>> m(nrows, std::vector<std::int64_t>(ncols, 0));
    for (std::size_t c = 0; c < ncols; ++c) {
        std::uint32_t f = cols_faces[c];
        std::uint32_t bits = f;
        int position = 0; // rank of the removed vertex among the face's vertices
        while (bits) {
            std::uint32_t low = bits & (~bits + 1);
            bits ^= low;
            m[row_index(f & ~low)][c] = (position % 2 == 0) ? 1 : -1;
            ++position;
        }
    }
    if (field.kind == FieldSpec::Kind::prime) return rank_mod_p(std::move(m), field.p);
    return rank_rational(m, s);
}

} // namespace

std::map<int, long> reduced_homology_dims(const SimplicialComplex& c, const FieldSpec& f) {
    std::map<int, long> dims;
    if (c.is_void()) return dims;
    auto faces = c.faces_by_size();
    int top = static_cast<int>(faces.size()) - 1;
    std::vector<long> rank_out(static_cast<std::size_t>(top) + 2, 0); // rank_out[s] = rank of boundary from size-s faces
    for (int s = 1; s <= top; ++s)
        rank_out[static_cast<std::size_t>(s)] =
            boundary_rank(faces[static_cast<std::size_t>(s)], faces[static_cast<std::size_t>(s - 1)], s, f);
    for (int s = 0; s <= top; ++s) {
        long dim = static_cast<long>(faces[static_cast<std::size_t>(s)].size()) -
                   rank_out[static_cast<std::size_t>(s)] - rank_out[static_cast<std::size_t>(s) + 1];
        if (dim > 0) dims[s - 1] = dim;
    }
    return dims;
}

} // namespace pathideal
