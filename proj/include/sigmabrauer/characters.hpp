#pragma once

#include <cstdint>

#include "sigmabrauer/combinat.hpp"
#include "sigmabrauer/exactla.hpp"

namespace sb {

/// Irreducible character chi^lambda evaluated on the class of cycle type
/// `cycle_type` (Murnaghan-Nakayama rule). Throws PreconditionError on a size
/// mismatch.
long sn_character(const Partition& lambda, const Partition& cycle_type);

/// z_rho = prod_i i^{m_i} m_i!, the centralizer order of the class rho.
Integer centralizer_order(const Partition& rho);

/// Number of permutations with cycle type rho: n! / z_rho.
Integer class_size(const Partition& rho);

/// Cycle type of a permutation given in one-line notation on {0..n-1}.
Partition cycle_type(const std::vector<int>& perm);

}  // namespace sb
