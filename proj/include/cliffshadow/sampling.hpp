#pragma once

#include <vector>

#include "cliffshadow/rng.hpp"
#include "cliffshadow/tableau.hpp"

namespace cliffshadow {

/// Exactly uniform element of the k-qubit Clifford group (mod global
/// phase).  The tableau is grown one generator pair at a time, with each
/// pair drawn uniformly from the admissible symplectic completions, then
/// dressed with uniform phase bits.  No rejection of whole tableaus.
CliffordTableau random_clifford(std::size_t k, RngStream& rng);

/// All 24 single-qubit Cliffords, distinct by their action on X and Z.
std::vector<CliffordTableau> enumerate_cl1();

/// Deterministic tableau whose Z images are the given commuting,
/// independent signed Paulis; X images are some valid completion.
CliffordTableau complete_from_z_images(const std::vector<PauliString>& z_images);

}  // namespace cliffshadow
