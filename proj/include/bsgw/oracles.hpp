#pragma once

// Brute-force reference computations. None of these share a code path with
// the routines they check: they evaluate points and orbits directly instead of
// using beta sequences or symbolic substitution.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "bsgw/gkpoly.hpp"
#include "bsgw/rootsys.hpp"
#include "bsgw/words.hpp"

namespace bsgw::oracle {

// Length of the Weyl group element s_{i_1} ... s_{i_r}: the number of positive
// roots it sends to negative roots.
std::size_t weyl_length(const RootSystem& rs, const Word& w);

// Minimum of A_k over all 2^(r-k) choices x_j in {0, A_j(x_{j+1}, ...)},
// evaluated numerically from x_r down to x_{k+1}.
Rational vertex_min(const GKChain& c, std::size_t k);

// Integer points of the chain inequalities counted by scanning a bounding box.
std::uint64_t box_lattice_count(const GKChain& c);

}  // namespace bsgw::oracle
