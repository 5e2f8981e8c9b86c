#include "cliffshadow/estimators.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

#include "cliffshadow/dense_unitary.hpp"

namespace cliffshadow {

namespace {

void check_spec_match(const EnsembleSpec& a, const EnsembleSpec& b, const char* who) {
  if (a.kind != b.kind || a.n_qubits != b.n_qubits || a.k != b.k)
    throw std::invalid_argument(std::string(who) + ": spectrum spec does not match snapshot spec");
}

// Rotated-state Born probabilities via one dense unitary build.
Eigen::VectorXd rotated_probabilities(const DensityMatrix& rho, const CliffordTableau& u) {
  Eigen::MatrixXcd ud = tableau_to_dense(u, rho.n_qubits());
  Eigen::MatrixXcd tmp = ud * rho.matrix();
  Eigen::VectorXd p(tmp.rows());
  for (Eigen::Index b = 0; b < tmp.rows(); ++b) {
    p(b) = (tmp.row(b).cwiseProduct(ud.row(b).conjugate())).sum().real();
  }
  double clipped = 0;
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    if (p(i) < 0) {
      clipped += -p(i);
      p(i) = 0;
    }
  }
  if (clipped > 1e-8) throw std::runtime_error("collect_snapshots: negative rotated diagonal");
  p /= p.sum();
  return p;
}

Outcome sample_from(const Eigen::VectorXd& probs, std::size_t n, RngStream& rng) {
  double u = rng.uniform_unit();
  double acc = 0;
  for (Eigen::Index i = 0; i < probs.size(); ++i) {
    acc += probs(i);
    if (u < acc) return Outcome::from_index(n, static_cast<std::uint64_t>(i));
  }
  return Outcome::from_index(n, static_cast<std::uint64_t>(probs.size() - 1));
}

void accumulate_pauli(Eigen::MatrixXcd& out, const PauliString& p, std::complex<double> coeff) {
  std::size_t n = p.n_qubits();
  std::uint64_t d = std::uint64_t(1) << n;
  std::uint64_t xm = p.x_index(), zm = p.z_index();
  int y = static_cast<int>(p.x_bits().and_popcount(p.z_bits()) % 4);
  static const std::complex<double> i_pows[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  std::complex<double> pref = coeff * i_pows[y] * static_cast<double>(p.sign());
  for (std::uint64_t c = 0; c < d; ++c) {
    double par = (std::popcount(zm & c) % 2 == 0) ? 1.0 : -1.0;
    out(c ^ xm, c) += pref * par;
  }
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    for (Eigen::Index c = 0; c < a.cols(); ++c) {
      out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
    }
  }
  return out;
}

}  // namespace

Snapshot::Snapshot(CliffordTableau u, Outcome b, EnsembleSpec s)
    : unitary(std::move(u)), outcome(std::move(b)), spec(std::move(s)) {
  if (unitary.n_qubits() != spec.n_qubits || outcome.n_qubits() != spec.n_qubits)
    throw std::invalid_argument("Snapshot: inconsistent sizes");
}

void SnapshotSet::add(Snapshot s) {
  check_spec_match(s.spec, spec_, "SnapshotSet::add");
  snapshots_.push_back(std::move(s));
}

std::string SnapshotSet::to_text() const {
  std::ostringstream os;
  os << "snapshots kind=" << to_string(spec_.kind) << " n=" << spec_.n_qubits << " k=" << spec_.k
     << " seed=" << master_seed_ << " count=" << snapshots_.size() << "\n";
  for (const auto& s : snapshots_) {
    for (std::size_t idx = 0; idx < 2 * spec_.n_qubits; ++idx) {
      const PauliString& r = s.unitary.row(idx);
      if (idx > 0) os << ';';
      os << (r.is_negative() ? '-' : '+') << r.with_sign(false).to_string();
    }
    os << ' ' << s.outcome.to_string() << "\n";
  }
  return os.str();
}

SnapshotSet SnapshotSet::from_text(const std::string& text) {
  std::istringstream is(text);
  std::string header;
  std::getline(is, header);
  std::istringstream hs(header);
  std::string tag, kind_f, n_f, k_f, seed_f, count_f;
  hs >> tag >> kind_f >> n_f >> k_f >> seed_f >> count_f;
  auto field = [](const std::string& s, const char* prefix) {
    std::string p(prefix);
    if (s.rfind(p, 0) != 0) throw std::invalid_argument("SnapshotSet::from_text: bad header");
    return s.substr(p.size());
  };
  if (tag != "snapshots") throw std::invalid_argument("SnapshotSet::from_text: bad header");
  EnsembleSpec spec(ensemble_kind_from_string(field(kind_f, "kind=")),
                    std::stoul(field(n_f, "n=")), std::stoul(field(k_f, "k=")));
  SnapshotSet set(spec, std::stoull(field(seed_f, "seed=")));
  std::size_t count = std::stoul(field(count_f, "count="));
  std::size_t n = spec.n_qubits;
  for (std::size_t i = 0; i < count; ++i) {
    std::string rows_text, outcome_text;
    if (!(is >> rows_text >> outcome_text))
      throw std::invalid_argument("SnapshotSet::from_text: truncated");
    std::vector<PauliString> rows;
    std::size_t pos = 0;
    while (pos < rows_text.size()) {
      std::size_t next = rows_text.find(';', pos);
      std::string tok = rows_text.substr(pos, next == std::string::npos ? next : next - pos);
      bool neg = tok[0] == '-';
      rows.push_back(PauliString::parse(tok.substr(1)).with_sign(neg));
      pos = (next == std::string::npos) ? rows_text.size() : next + 1;
    }
    if (rows.size() != 2 * n) throw std::invalid_argument("SnapshotSet::from_text: bad row count");
    set.add(Snapshot(CliffordTableau::from_rows(n, std::move(rows)), Outcome::parse(outcome_text), spec));
  }
  return set;
}

void for_each_snapshot(const DensityMatrix& rho, const EnsembleSpec& spec, std::size_t count,
                       std::uint64_t master_seed, std::uint64_t stream_offset,
                       const std::function<void(std::size_t, const Snapshot&)>& fn) {
  if (spec.kind == EnsembleKind::MubProduct)
    throw std::invalid_argument("collect_snapshots: MUB data is collected per basis, not sampled");
  if (rho.n_qubits() != spec.n_qubits)
    throw std::invalid_argument("collect_snapshots: state and spec size mismatch");
  for (std::size_t i = 0; i < count; ++i) {
    RngStream rng(master_seed, stream_offset + i);
    CliffordTableau u = sample_ensemble(spec, rng);
    Outcome b = sample_from(rotated_probabilities(rho, u), spec.n_qubits, rng);
    fn(i, Snapshot(std::move(u), std::move(b), spec));
  }
}

SnapshotSet collect_snapshots(const DensityMatrix& rho, const EnsembleSpec& spec,
                              std::size_t count, std::uint64_t master_seed,
                              std::uint64_t stream_offset) {
  SnapshotSet set(spec, master_seed);
  for_each_snapshot(rho, spec, count, master_seed, stream_offset,
                    [&](std::size_t, const Snapshot& s) { set.add(s); });
  return set;
}

Eigen::MatrixXcd snapshot_to_matrix(const Snapshot& s, const ChannelSpectrum& spectrum) {
  check_spec_match(s.spec, spectrum.spec(), "snapshot_to_matrix");
  std::size_t n = s.spec.n_qubits;
  std::uint64_t d = std::uint64_t(1) << n;
  CliffordTableau uinv = inverse(s.unitary);
  std::uint64_t b = s.outcome.index();

  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(d, d);
  for (std::uint64_t z = 0; z < d; ++z) {
    PauliString preimage = uinv.conjugate(PauliString::z_string(n, z));
    double coeff = spectrum.inverse_coefficient(preimage) * preimage.sign() *
                   ((std::popcount(z & b) % 2 == 0) ? 1.0 : -1.0) / static_cast<double>(d);
    accumulate_pauli(out, preimage.with_sign(false), coeff);
  }
  return out;
}

Eigen::MatrixXcd snapshot_to_matrix_block_product(const Snapshot& s) {
  if (s.spec.kind != EnsembleKind::Block)
    throw std::invalid_argument("snapshot_to_matrix_block_product: block spec required");
  std::size_t n = s.spec.n_qubits;
  std::size_t k = s.spec.k;
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Identity(1, 1);
  for (const auto& blk : s.spec.layer1_partition().blocks()) {
    std::vector<PauliString> rows;
    for (std::size_t j : blk) {
      const PauliString& r = s.unitary.row(j);
      rows.push_back(restrict_to(r, blk).with_sign(r.is_negative()));
    }
    for (std::size_t j : blk) {
      const PauliString& r = s.unitary.row(n + j);
      rows.push_back(restrict_to(r, blk).with_sign(r.is_negative()));
    }
    CliffordTableau sub = CliffordTableau::from_rows(k, std::move(rows));
    std::uint64_t b_local = 0;
    for (std::size_t j = 0; j < k; ++j) b_local = (b_local << 1) | (s.outcome.bit(blk[j]) ? 1 : 0);
    Eigen::MatrixXcd ud = tableau_to_dense(inverse(sub), k);
    Eigen::VectorXcd phi = ud.col(b_local);
    std::size_t dk = std::size_t(1) << k;
    Eigen::MatrixXcd blk_m =
        static_cast<double>(dk + 1) * (phi * phi.adjoint()) - Eigen::MatrixXcd::Identity(dk, dk);
    acc = kron(acc, blk_m);
  }
  return acc;
}

Eigen::MatrixXcd mean_estimator(const SnapshotSet& set, const ChannelSpectrum& spectrum) {
  if (set.empty()) throw std::invalid_argument("mean_estimator: empty snapshot set");
  std::uint64_t d = std::uint64_t(1) << set.spec().n_qubits;
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(d, d);
  for (const auto& s : set.snapshots()) acc += snapshot_to_matrix(s, spectrum);
  return acc / static_cast<double>(set.size());
}

double snapshot_pauli_readout(const Snapshot& s, const PauliString& p) {
  PauliString img = s.unitary.conjugate(p);
  if (!img.is_z_string()) return 0.0;
  std::uint64_t z = img.z_index();
  std::uint64_t b = s.outcome.index();
  double par = (std::popcount(z & b) % 2 == 0) ? 1.0 : -1.0;
  return img.sign() * par;
}

std::uint64_t actionable_basis_count(std::size_t n, std::size_t k, std::size_t w) {
  std::size_t m = n / k;
  if (w > m) throw std::invalid_argument("actionable_basis_count: weight exceeds block count");
  std::uint64_t base = (std::uint64_t(1) << k) + 1;
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < m - w; ++i) out *= base;
  return out;
}

CliffordTableau mub_product_tableau(std::size_t n, std::size_t k,
                                    const std::vector<std::size_t>& basis_index) {
  auto bases = mub_bases(k);
  BlockPartition part(n, k);
  auto blocks = part.blocks();
  if (basis_index.size() != blocks.size())
    throw std::invalid_argument("mub_product_tableau: index vector has wrong length");
  std::vector<std::pair<CliffordTableau, std::vector<std::size_t>>> placed;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (basis_index[i] >= bases.size())
      throw std::invalid_argument("mub_product_tableau: basis index out of range");
    placed.emplace_back(bases[basis_index[i]], blocks[i]);
  }
  return embed(n, placed);
}

MubDataset mub_collect(const DensityMatrix& rho, std::size_t n, std::size_t k,
                       std::size_t shots_per_basis, std::uint64_t master_seed) {
  if (rho.n_qubits() != n) throw std::invalid_argument("mub_collect: state size mismatch");
  if (n % k != 0) throw std::invalid_argument("mub_collect: k must divide n");
  auto bases = mub_bases(k);  // validates supported k
  std::size_t m = n / k;
  std::size_t num_bases = 1;
  for (std::size_t i = 0; i < m; ++i) num_bases *= bases.size();

  MubDataset ds;
  ds.n_qubits = n;
  ds.k = k;
  ds.shots_per_basis = shots_per_basis;
  ds.master_seed = master_seed;

  std::vector<std::size_t> idx(m, 0);
  for (std::size_t linear = 0; linear < num_bases; ++linear) {
    // lexicographic: block 0 is the most significant digit
    std::size_t rem = linear;
    for (std::size_t i = m; i-- > 0;) {
      idx[i] = rem % bases.size();
      rem /= bases.size();
    }
    CliffordTableau c = mub_product_tableau(n, k, idx);
    Eigen::VectorXd probs = rotated_probabilities(rho, c);
    RngStream rng(master_seed, linear);
    MubRecord rec;
    rec.basis_index = idx;
    for (std::size_t shot = 0; shot < shots_per_basis; ++shot) {
      rec.outcomes.push_back(sample_from(probs, n, rng));
    }
    ds.records.push_back(std::move(rec));
  }
  return ds;
}

Eigen::MatrixXcd mub_estimator(const MubDataset& ds) {
  std::size_t n = ds.n_qubits;
  std::size_t k = ds.k;
  std::size_t m = n / k;
  std::uint64_t d = std::uint64_t(1) << n;
  std::size_t expected = 1;
  auto bases = mub_bases(k);
  for (std::size_t i = 0; i < m; ++i) expected *= bases.size();
  if (ds.records.size() != expected)
    throw std::invalid_argument("mub_estimator: dataset must contain every product basis exactly once");

  std::vector<CliffordTableau> tableaus;
  tableaus.reserve(ds.records.size());
  for (const auto& rec : ds.records) tableaus.push_back(mub_product_tableau(n, k, rec.basis_index));

  BlockPartition part(n, k);
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(d, d);
  const double M = static_cast<double>(ds.shots_per_basis);

  for (std::uint64_t xz = 0; xz < (std::uint64_t(1) << (2 * n)); ++xz) {
    BitVec x(n), z(n);
    for (std::size_t q = 0; q < n; ++q) {
      x.set(q, (xz >> (2 * n - 1 - q)) & 1);
      z.set(q, (xz >> (n - 1 - q)) & 1);
    }
    PauliString p(n, std::move(x), std::move(z), false);
    std::size_t w = block_weight(p, part);
    double np = static_cast<double>(actionable_basis_count(n, k, w));

    double mu = 0;
    for (std::size_t r = 0; r < ds.records.size(); ++r) {
      PauliString img = tableaus[r].conjugate(p);
      if (!img.is_z_string()) continue;
      std::uint64_t zi = img.z_index();
      double sgn = img.sign();
      for (const auto& b : ds.records[r].outcomes) {
        std::uint64_t bi = b.index();
        mu += sgn * ((std::popcount(zi & bi) % 2 == 0) ? 1.0 : -1.0);
      }
    }
    accumulate_pauli(out, p, mu / (static_cast<double>(d) * M * np));
  }
  return out;
}

Eigen::MatrixXcd two_layer_fullrank_estimator(const DensityMatrix& rho, const EnsembleSpec& spec,
                                              std::size_t num_unitaries, std::size_t shots_per_unitary,
                                              std::uint64_t master_seed) {
  if (!spec.is_brickwork())
    throw std::invalid_argument("two_layer_fullrank_estimator: brickwork spec required");
  if (num_unitaries < 1 || shots_per_unitary < 1)
    throw std::invalid_argument("two_layer_fullrank_estimator: need at least one unitary and one shot");
  ChannelSpectrum spectrum(spec);
  std::uint64_t d = std::uint64_t(1) << spec.n_qubits;
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(d, d);
  for (std::size_t i = 0; i < num_unitaries; ++i) {
    RngStream rng(master_seed, i);
    CliffordTableau u = sample_ensemble(spec, rng);
    Eigen::VectorXd probs = rotated_probabilities(rho, u);
    Eigen::MatrixXcd per_u = Eigen::MatrixXcd::Zero(d, d);
    for (std::size_t j = 0; j < shots_per_unitary; ++j) {
      Outcome b = sample_from(probs, spec.n_qubits, rng);
      per_u += snapshot_to_matrix(Snapshot(u, b, spec), spectrum);
    }
    acc += per_u / static_cast<double>(shots_per_unitary);
  }
  return acc / static_cast<double>(num_unitaries);
}

Eigen::MatrixXcd biased_haar_estimator(const Snapshot& s) {
  std::size_t n = s.spec.n_qubits;
  std::uint64_t d = std::uint64_t(1) << n;
  Eigen::MatrixXcd u = tableau_to_dense(s.unitary, n);
  Eigen::VectorXcd w = u.row(s.outcome.index()).adjoint();  // U^dag |b>
  return static_cast<double>(d + 1) * (w * w.adjoint()) -
         Eigen::MatrixXcd::Identity(d, d);
}

double biased_haar_pauli_readout(const Snapshot& s, const PauliString& p) {
  if (p.is_identity()) return 1.0;
  double d = static_cast<double>(std::uint64_t(1) << s.spec.n_qubits);
  return (d + 1) * snapshot_pauli_readout(s, p);
}

}  // namespace cliffshadow
