#include "cliffshadow/ensemble.hpp"

#include <algorithm>
#include <stdexcept>

#include "cliffshadow/sampling.hpp"

namespace cliffshadow {

std::string to_string(EnsembleKind kind) {
  switch (kind) {
    case EnsembleKind::Block:
      return "block";
    case EnsembleKind::BrickworkPBC:
      return "brickwork-pbc";
    case EnsembleKind::BrickworkObcU2Split:
      return "brickwork-obc-u2split";
    case EnsembleKind::BrickworkObcU1Split:
      return "brickwork-obc-u1split";
    case EnsembleKind::MubProduct:
      return "mub-product";
  }
  throw std::logic_error("to_string: unknown ensemble kind");
}

EnsembleKind ensemble_kind_from_string(const std::string& s) {
  if (s == "block") return EnsembleKind::Block;
  if (s == "brickwork-pbc") return EnsembleKind::BrickworkPBC;
  if (s == "brickwork-obc-u2split") return EnsembleKind::BrickworkObcU2Split;
  if (s == "brickwork-obc-u1split") return EnsembleKind::BrickworkObcU1Split;
  if (s == "mub-product") return EnsembleKind::MubProduct;
  throw std::invalid_argument("unknown ensemble kind: " + s);
}

EnsembleSpec::EnsembleSpec(EnsembleKind kind_, std::size_t n, std::size_t k_)
    : kind(kind_), n_qubits(n), k(k_) {
  if (k == 0 || n == 0 || n % k != 0)
    throw std::invalid_argument("EnsembleSpec: k must divide n");
  if (is_brickwork() && k % 2 != 0)
    throw std::invalid_argument("EnsembleSpec: brickwork ensembles need even k");
}

BlockPartition EnsembleSpec::layer1_partition() const {
  if (kind == EnsembleKind::BrickworkObcU1Split)
    return BlockPartition(n_qubits, k, k / 2, BlockPartition::Boundary::OpenSplit);
  return BlockPartition(n_qubits, k, 0);
}

BlockPartition EnsembleSpec::layer2_partition() const {
  switch (kind) {
    case EnsembleKind::BrickworkPBC:
      return BlockPartition(n_qubits, k, k / 2, BlockPartition::Boundary::Periodic);
    case EnsembleKind::BrickworkObcU2Split:
      return BlockPartition(n_qubits, k, k / 2, BlockPartition::Boundary::OpenSplit);
    case EnsembleKind::BrickworkObcU1Split:
      return BlockPartition(n_qubits, k, 0);
    default:
      throw std::invalid_argument("layer2_partition: ensemble has a single layer");
  }
}

namespace {

CliffordTableau sample_layer(std::size_t n, const BlockPartition& part, RngStream& rng) {
  std::vector<std::pair<CliffordTableau, std::vector<std::size_t>>> blocks;
  for (const auto& qubits : part.blocks()) {
    blocks.emplace_back(random_clifford(qubits.size(), rng), qubits);
  }
  return embed(n, blocks);
}

}  // namespace

CliffordTableau sample_ensemble(const EnsembleSpec& spec, RngStream& rng) {
  switch (spec.kind) {
    case EnsembleKind::Block:
      return sample_layer(spec.n_qubits, spec.layer1_partition(), rng);
    case EnsembleKind::BrickworkPBC:
    case EnsembleKind::BrickworkObcU2Split:
    case EnsembleKind::BrickworkObcU1Split: {
      CliffordTableau u1 = sample_layer(spec.n_qubits, spec.layer1_partition(), rng);
      CliffordTableau u2 = sample_layer(spec.n_qubits, spec.layer2_partition(), rng);
      return compose(u2, u1);
    }
    case EnsembleKind::MubProduct:
      throw std::invalid_argument("sample_ensemble: MUB product bases are indexed, not sampled");
  }
  throw std::logic_error("sample_ensemble: unknown kind");
}

namespace {

// Partitions the 4^k - 1 nontrivial unsigned Paulis into 2^k + 1 disjoint
// commuting classes of size 2^k - 1 by backtracking over candidate
// commuting subgroups in lexicographic order.
bool partition_backtrack(std::size_t k, std::vector<std::vector<std::size_t>>& classes,
                         std::vector<bool>& used, const std::vector<PauliString>& paulis) {
  std::size_t total = paulis.size();
  std::size_t class_size = (std::size_t(1) << k) - 1;
  std::size_t want = (std::size_t(1) << k) + 1;
  if (classes.size() == want) return true;

  std::size_t seed = 0;
  while (seed < total && used[seed]) ++seed;
  if (seed == total) return false;

  // enumerate commuting partners of the seed, then close under products
  std::vector<std::size_t> candidates;
  for (std::size_t j = 0; j < total; ++j) {
    if (j != seed && !used[j] && commutes(paulis[seed], paulis[j])) candidates.push_back(j);
  }
  for (std::size_t second : candidates) {
    PauliProduct prod = multiply_with_phase(paulis[seed], paulis[second]);
    std::size_t third = total;
    for (std::size_t j = 0; j < total; ++j) {
      if (paulis[j].equals_up_to_sign(prod.pauli)) {
        third = j;
        break;
      }
    }
    if (third == total || used[third] || third == seed || third == second) continue;
    std::vector<std::size_t> cls = {seed, second, third};
    if (cls.size() != class_size) continue;
    for (auto idx : cls) used[idx] = true;
    classes.push_back(cls);
    if (partition_backtrack(k, classes, used, paulis)) return true;
    classes.pop_back();
    for (auto idx : cls) used[idx] = false;
  }
  return false;
}

}  // namespace

std::vector<CliffordTableau> mub_bases(std::size_t k) {
  if (k == 1) {
    CliffordTableau z_basis = CliffordTableau::identity(1);
    CliffordTableau x_basis = CliffordTableau::identity(1);
    x_basis.apply_h(0);
    // diagonalizes Y: C^dag Z C = Y
    CliffordTableau w = complete_from_z_images({PauliString::single(1, 0, 'Y')});
    return {z_basis, x_basis, inverse(w)};
  }
  if (k == 2) {
    std::vector<PauliString> paulis;
    for (std::uint64_t xz = 1; xz < 16; ++xz) {
      PauliString p(2);
      BitVec x(2), z(2);
      x.set(0, (xz >> 3) & 1);
      x.set(1, (xz >> 2) & 1);
      z.set(0, (xz >> 1) & 1);
      z.set(1, xz & 1);
      paulis.emplace_back(2, std::move(x), std::move(z), false);
    }
    std::vector<std::vector<std::size_t>> classes;
    std::vector<bool> used(paulis.size(), false);
    if (!partition_backtrack(2, classes, used, paulis))
      throw std::logic_error("mub_bases: no symplectic spread found for k=2");

    std::vector<CliffordTableau> bases;
    for (const auto& cls : classes) {
      CliffordTableau w = complete_from_z_images({paulis[cls[0]], paulis[cls[1]]});
      bases.push_back(inverse(w));
    }
    return bases;
  }
  throw std::invalid_argument("mub_bases: supported block sizes are k=1 and k=2");
}

std::vector<PauliString> basis_stabilizer_class(const CliffordTableau& basis) {
  std::size_t k = basis.n_qubits();
  CliffordTableau inv = inverse(basis);
  std::vector<PauliString> out;
  for (std::uint64_t z = 1; z < (std::uint64_t(1) << k); ++z) {
    // unsigned diagonalized Pauli: basis^dag Z basis
    PauliString img = inv.conjugate(PauliString::z_string(k, z));
    out.push_back(img.with_sign(false));
  }
  return out;
}

}  // namespace cliffshadow
