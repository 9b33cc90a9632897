#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "pathideal/complex.hpp"
#include "pathideal/field.hpp"

namespace pathideal {

/// Rank of a 0/1 matrix over GF(2); rows are bit-packed, `cols` wide.
long rank_gf2(std::vector<std::vector<std::uint64_t>> rows, int cols);

/// Rank over GF(p), p an odd or even prime below 2^31. Destroys `rows`.
long rank_mod_p(std::vector<std::vector<std::int64_t>> rows, std::uint64_t p);

/// Exact rank over the rationals of an integer matrix whose entries are
/// 0/±1 and whose columns have at most `max_col_nonzeros` nonzero entries.
/// Computed as a max of modular ranks over enough distinct large primes:
/// rank can drop mod p only when p divides the largest invariant factor,
/// which the Hadamard bound caps, so the prime count below certifies the max.
long rank_rational(const std::vector<std::vector<std::int64_t>>& rows, int max_col_nonzeros);

/// Dimensions of reduced simplicial homology over the field, keyed by degree;
/// only nonzero dimensions appear. Conventions: void complex -> all zero;
/// irrelevant complex {∅} -> dimension 1 in degree -1.
std::map<int, long> reduced_homology_dims(const SimplicialComplex& c, const FieldSpec& f);

} // namespace pathideal
