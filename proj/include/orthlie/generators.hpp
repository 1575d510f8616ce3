#pragma once

#include "orthlie/types.hpp"

#include <string>
#include <vector>

namespace orthlie {

// deterministic instance families; equal (n, kind, seed) gives equal bytes
enum class GenKind { Dense, BlockSums, Nilpotent, Repeated };

GenKind parse_gen_kind(const std::string& name);  // FormatError on unknown
std::string gen_kind_name(GenKind kind);

// dense: A - A^T with i.i.d. complex normal A
CMatrix gen_dense(Index n, std::uint64_t seed);

// sum of coefficient-scaled plane blocks a_k F(2k-1, 2k); trailing odd
// dimension stays zero.  coefficients.size() must be at most n / 2; missing
// coefficients are drawn from the rng.
CMatrix gen_block_sums(Index n, std::uint64_t seed, std::vector<Complex> coefficients = {});

// nonzero skew with a fully degenerate spectrum {0}: u v^T - v u^T with
// bilinearly orthogonal u, v and isotropic v (v^T v = 0), so the cube
// vanishes; needs n >= 3
CMatrix gen_nilpotent(Index n, std::uint64_t seed);

// block sums with deliberately repeated coefficients (each value used twice
// where room permits)
CMatrix gen_repeated(Index n, std::uint64_t seed);

CMatrix generate(GenKind kind, Index n, std::uint64_t seed,
                 std::vector<Complex> coefficients = {});

}  // namespace orthlie
