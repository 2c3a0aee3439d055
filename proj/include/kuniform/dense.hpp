// Copyright 2026 The kuniform Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "kuniform/circuit.hpp"
#include "kuniform/graph.hpp"
#include "kuniform/pauli.hpp"
#include "kuniform/uniformity.hpp"

namespace kuniform {

// Full-amplitude work is deliberately desk-scale; raise the cap explicitly
// when you can afford 2^n amplitudes.
inline constexpr std::size_t kDenseQubitCap = 14;

// Stabilizer expansions have 2^n terms; independent of the amplitude cap.
inline constexpr std::size_t kExpansionQubitCap = 16;

using Amplitude = std::complex<double>;

/// 2^n complex amplitudes of an n-qubit pure state; qubit q is bit q of the
/// basis index.
class DenseState {
 public:
  DenseState(std::size_t n, std::vector<Amplitude> amplitudes)
      : n_(n), amps_(std::move(amplitudes)) {
    if (amps_.size() != (std::size_t{1} << n_)) {
      throw std::invalid_argument("DenseState: amplitude count is not 2^n");
    }
  }

  std::size_t num_qubits() const { return n_; }
  std::size_t dim() const { return amps_.size(); }
  const std::vector<Amplitude>& amplitudes() const { return amps_; }
  Amplitude amplitude(std::uint64_t basis) const { return amps_[basis]; }

  double norm() const {
    double s = 0;
    for (const Amplitude& a : amps_) {
      s += std::norm(a);
    }
    return std::sqrt(s);
  }

 private:
  std::size_t n_;
  std::vector<Amplitude> amps_;
};

/// Graph state vector: amplitude of basis state b is 2^{-n/2} * (-1)^{q(b)}
/// with q(b) the number of edges whose endpoints are both set in b. The
/// all-zeros amplitude fixes the global phase at +2^{-n/2}.
inline DenseState build_state(const Graph& g, std::size_t cap = kDenseQubitCap) {
  const std::size_t n = g.num_vertices();
  if (n > cap) {
    throw budget_error("dense state needs n <= " + std::to_string(cap) +
                       ", got n = " + std::to_string(n));
  }
  const auto edges = g.edges();
  const std::uint64_t dim = std::uint64_t{1} << n;
  const double mag = std::pow(2.0, -static_cast<double>(n) / 2.0);
  std::vector<Amplitude> amps(dim);
  for (std::uint64_t b = 0; b < dim; ++b) {
    int parity = 0;
    for (const auto& [i, j] : edges) {
      parity ^= static_cast<int>((b >> i) & (b >> j) & 1u);
    }
    amps[b] = parity ? -mag : mag;
  }
  return DenseState(n, std::move(amps));
}

namespace detail {

inline std::uint64_t mask_of(const BitVec& bits) {
  std::uint64_t mask = 0;
  for (auto i = bits.find_first(); i != BitVec::npos; i = bits.find_next(i)) {
    mask |= std::uint64_t{1} << i;
  }
  return mask;
}

inline Amplitude i_power(int e) {
  switch (((e % 4) + 4) % 4) {
    case 0:
      return {1, 0};
    case 1:
      return {0, 1};
    case 2:
      return {-1, 0};
    default:
      return {0, -1};
  }
}

/// Validated, sorted copy of a vertex subset.
inline std::vector<int> sorted_subset(const std::vector<int>& subset, std::size_t n,
                                      const char* who) {
  if (subset.empty()) {
    throw std::invalid_argument(std::string(who) + ": empty subset");
  }
  std::vector<int> s = subset;
  std::sort(s.begin(), s.end());
  if (s.front() < 0 || static_cast<std::size_t>(s.back()) >= n) {
    throw std::invalid_argument(std::string(who) + ": vertex out of range");
  }
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
    throw std::invalid_argument(std::string(who) + ": repeated vertex");
  }
  return s;
}

}  // namespace detail

/// W|psi> for a Pauli word W. Basis state b maps to b ^ x_mask with phase
/// i^{p + #Y} * (-1)^{|b & z_mask|}.
inline DenseState apply_pauli(const PauliWord& word, const DenseState& psi) {
  if (word.num_qubits() != psi.num_qubits()) {
    throw std::invalid_argument("apply_pauli: qubit count mismatch");
  }
  const std::uint64_t x_mask = detail::mask_of(word.x_bits());
  const std::uint64_t z_mask = detail::mask_of(word.z_bits());
  const int y_count = static_cast<int>((word.x_bits() & word.z_bits()).count());
  const Amplitude global = detail::i_power(word.phase_exp() + y_count);
  std::vector<Amplitude> out(psi.dim());
  for (std::uint64_t b = 0; b < psi.dim(); ++b) {
    const double sign = std::popcount(b & z_mask) % 2 ? -1.0 : 1.0;
    out[b ^ x_mask] = global * sign * psi.amplitude(b);
  }
  return DenseState(psi.num_qubits(), std::move(out));
}

/// <psi| W |psi>.
inline Amplitude expectation(const PauliWord& word, const DenseState& psi) {
  const DenseState w_psi = apply_pauli(word, psi);
  Amplitude acc = 0;
  for (std::uint64_t b = 0; b < psi.dim(); ++b) {
    acc += std::conj(psi.amplitude(b)) * w_psi.amplitude(b);
  }
  return acc;
}

/// Partial trace of |psi><psi| onto a vertex subset, as a dense 2^k x 2^k
/// matrix. Row/column bit t corresponds to the t-th smallest subset vertex.
class ReducedDensityMatrix {
 public:
  ReducedDensityMatrix(std::vector<int> subset, std::vector<Amplitude> entries)
      : subset_(std::move(subset)), entries_(std::move(entries)) {
    dim_ = std::size_t{1} << subset_.size();
    if (entries_.size() != dim_ * dim_) {
      throw std::invalid_argument("ReducedDensityMatrix: entry count mismatch");
    }
  }

  const std::vector<int>& subset() const { return subset_; }
  std::size_t num_qubits() const { return subset_.size(); }
  std::size_t dim() const { return dim_; }
  Amplitude entry(std::size_t r, std::size_t c) const { return entries_[r * dim_ + c]; }

  Amplitude trace() const {
    Amplitude t = 0;
    for (std::size_t r = 0; r < dim_; ++r) {
      t += entry(r, r);
    }
    return t;
  }

  /// Largest entrywise |rho - I/2^k| deviation.
  double max_deviation_from_mixed() const {
    const double diag = 1.0 / static_cast<double>(dim_);
    double dev = 0;
    for (std::size_t r = 0; r < dim_; ++r) {
      for (std::size_t c = 0; c < dim_; ++c) {
        const Amplitude want = (r == c) ? Amplitude{diag, 0} : Amplitude{0, 0};
        dev = std::max(dev, std::abs(entry(r, c) - want));
      }
    }
    return dev;
  }

  Eigen::MatrixXcd matrix() const {
    Eigen::MatrixXcd m(static_cast<Eigen::Index>(dim_), static_cast<Eigen::Index>(dim_));
    for (std::size_t r = 0; r < dim_; ++r) {
      for (std::size_t c = 0; c < dim_; ++c) {
        m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = entry(r, c);
      }
    }
    return m;
  }

 private:
  std::vector<int> subset_;
  std::size_t dim_;
  std::vector<Amplitude> entries_;
};

inline ReducedDensityMatrix reduced_density_matrix(const DenseState& psi,
                                                   const std::vector<int>& subset) {
  const std::size_t n = psi.num_qubits();
  std::vector<int> s = detail::sorted_subset(subset, n, "reduced_density_matrix");
  if (s.size() >= n) {
    throw std::invalid_argument("reduced_density_matrix: subset must be proper");
  }
  const std::size_t k = s.size();
  std::vector<int> complement;
  complement.reserve(n - k);
  for (std::size_t v = 0, t = 0; v < n; ++v) {
    if (t < k && s[t] == static_cast<int>(v)) {
      ++t;
    } else {
      complement.push_back(static_cast<int>(v));
    }
  }

  const std::size_t sub_dim = std::size_t{1} << k;
  const std::size_t env_dim = std::size_t{1} << (n - k);
  const auto scatter = [](std::uint64_t packed, const std::vector<int>& positions) {
    std::uint64_t out = 0;
    for (std::size_t t = 0; t < positions.size(); ++t) {
      out |= ((packed >> t) & 1u) << positions[t];
    }
    return out;
  };
  std::vector<std::uint64_t> sub_offsets(sub_dim), env_offsets(env_dim);
  for (std::size_t a = 0; a < sub_dim; ++a) {
    sub_offsets[a] = scatter(a, s);
  }
  for (std::size_t e = 0; e < env_dim; ++e) {
    env_offsets[e] = scatter(e, complement);
  }

  std::vector<Amplitude> entries(sub_dim * sub_dim);
  for (std::size_t r = 0; r < sub_dim; ++r) {
    for (std::size_t c = 0; c < sub_dim; ++c) {
      Amplitude acc = 0;
      for (std::size_t e = 0; e < env_dim; ++e) {
        acc += psi.amplitude(sub_offsets[r] | env_offsets[e]) *
               std::conj(psi.amplitude(sub_offsets[c] | env_offsets[e]));
      }
      entries[r * sub_dim + c] = acc;
    }
  }
  return ReducedDensityMatrix(std::move(s), std::move(entries));
}

inline bool is_maximally_mixed(const ReducedDensityMatrix& rho, double tol = 1e-10) {
  if (tol <= 0) {
    throw std::invalid_argument("is_maximally_mixed: tolerance must be positive");
  }
  return rho.max_deviation_from_mixed() <= tol;
}

inline Eigen::VectorXd eigenvalues(const ReducedDensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho.matrix(),
                                                         Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

/// Von Neumann entropy -Tr(rho ln rho) in nats.
inline double von_neumann_entropy(const ReducedDensityMatrix& rho) {
  double h = 0;
  const Eigen::VectorXd evs = eigenvalues(rho);
  for (Eigen::Index i = 0; i < evs.size(); ++i) {
    if (evs[i] > 0) {
      h -= evs[i] * std::log(evs[i]);
    }
  }
  return h;
}

/// All 2^n signed stabilizer elements as generator subset products, in
/// size-major lexicographic subset order (identity first). Each carries an
/// implicit Bloch coefficient of 1/2^n.
inline std::vector<PauliWord> bloch_expansion(const Graph& g,
                                              std::size_t cap = kExpansionQubitCap) {
  const std::size_t n = g.num_vertices();
  if (n > cap) {
    throw budget_error("expansion has 2^n terms and needs n <= " + std::to_string(cap) +
                       ", got n = " + std::to_string(n));
  }
  std::vector<PauliWord> words;
  words.reserve(std::size_t{1} << n);
  words.push_back(PauliWord::identity(n));
  for (int j = 1; j <= static_cast<int>(n); ++j) {
    std::vector<int> comb(static_cast<std::size_t>(j));
    for (int t = 0; t < j; ++t) {
      comb[static_cast<std::size_t>(t)] = t;
    }
    do {
      words.push_back(subset_product(g, comb));
    } while (next_combination(comb, static_cast<int>(n)));
  }
  return words;
}

/// Verdict of an independent uniformity scan at one subset size.
struct OracleVerdict {
  bool uniform = true;
  std::uint64_t subsets_checked = 0;
  std::optional<std::vector<int>> failing_subset;  // first in lex order
  double failure_deviation = 0.0;                  // dense method
  int failure_cut_rank = -1;                       // cut-rank method
  double failure_entropy_bits = 0.0;
};

/// Scans every k-qubit reduced density matrix of the graph state and tests
/// it entrywise against I/2^k. Checking size exactly k suffices: tracing a
/// maximally mixed k-RDM yields maximally mixed smaller RDMs.
inline OracleVerdict verify_uniformity_dense(const Graph& g, int k, double tol = 1e-10,
                                             std::size_t cap = kDenseQubitCap) {
  const std::size_t n = g.num_vertices();
  if (k < 1 || static_cast<std::size_t>(k) > n / 2) {
    throw std::invalid_argument("verify_uniformity_dense: k must be in [1, n/2]");
  }
  const DenseState psi = build_state(g, cap);
  OracleVerdict verdict;
  std::vector<int> comb(static_cast<std::size_t>(k));
  for (int t = 0; t < k; ++t) {
    comb[static_cast<std::size_t>(t)] = t;
  }
  do {
    ++verdict.subsets_checked;
    const ReducedDensityMatrix rho = reduced_density_matrix(psi, comb);
    const double dev = rho.max_deviation_from_mixed();
    if (dev > tol) {
      verdict.uniform = false;
      verdict.failing_subset = comb;
      verdict.failure_deviation = dev;
      verdict.failure_entropy_bits = von_neumann_entropy(rho) / std::log(2.0);
      return verdict;
    }
  } while (next_combination(comb, static_cast<int>(n)));
  return verdict;
}

/// GF(2) rank of the adjacency block between a proper nonempty subset and
/// its complement. For a graph state this is the subset's bipartite
/// entanglement entropy in bits; the subset's RDM is maximally mixed iff
/// the rank equals the subset size.
inline int cut_rank_entropy(const Graph& g, const std::vector<int>& subset) {
  const std::size_t n = g.num_vertices();
  std::vector<int> s = detail::sorted_subset(subset, n, "cut_rank_entropy");
  if (s.size() >= n) {
    throw std::invalid_argument("cut_rank_entropy: subset must be proper");
  }
  BitVec in_subset(n);
  for (int v : s) {
    in_subset.set(static_cast<std::size_t>(v));
  }
  // Rows of the cut block, as bit vectors over complement columns.
  std::vector<int> col_of(n, -1);
  int cols = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (!in_subset.test(v)) {
      col_of[v] = cols++;
    }
  }
  std::vector<BitVec> rows;
  rows.reserve(s.size());
  for (int v : s) {
    BitVec row(static_cast<std::size_t>(cols));
    const BitVec& nbrs = g.neighborhood(static_cast<std::size_t>(v));
    for (auto u = nbrs.find_first(); u != BitVec::npos; u = nbrs.find_next(u)) {
      if (!in_subset.test(u)) {
        row.set(static_cast<std::size_t>(col_of[u]));
      }
    }
    rows.push_back(std::move(row));
  }
  // Gaussian elimination over GF(2).
  int rank = 0;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].none()) {
      continue;
    }
    const auto pivot = rows[r].find_first();
    for (std::size_t other = r + 1; other < rows.size(); ++other) {
      if (rows[other].test(pivot)) {
        rows[other] ^= rows[r];
      }
    }
    ++rank;
  }
  return rank;
}

/// Same scan as verify_uniformity_dense, decided by cut rank instead of an
/// explicit reduced density matrix.
inline OracleVerdict verify_uniformity_cutrank(const Graph& g, int k) {
  const std::size_t n = g.num_vertices();
  if (k < 1 || static_cast<std::size_t>(k) > n / 2) {
    throw std::invalid_argument("verify_uniformity_cutrank: k must be in [1, n/2]");
  }
  OracleVerdict verdict;
  std::vector<int> comb(static_cast<std::size_t>(k));
  for (int t = 0; t < k; ++t) {
    comb[static_cast<std::size_t>(t)] = t;
  }
  do {
    ++verdict.subsets_checked;
    const int rank = cut_rank_entropy(g, comb);
    if (rank != k) {
      verdict.uniform = false;
      verdict.failing_subset = comb;
      verdict.failure_cut_rank = rank;
      verdict.failure_entropy_bits = static_cast<double>(rank);
      return verdict;
    }
  } while (next_combination(comb, static_cast<int>(n)));
  return verdict;
}

/// Applies the gates of a preparation circuit to |0...0>.
inline DenseState simulate_circuit(const Circuit& c, std::size_t cap = kDenseQubitCap) {
  if (c.n > cap) {
    throw budget_error("circuit simulation needs n <= " + std::to_string(cap) +
                       ", got n = " + std::to_string(c.n));
  }
  const std::uint64_t dim = std::uint64_t{1} << c.n;
  std::vector<Amplitude> amps(dim, Amplitude{0, 0});
  amps[0] = 1;
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (const Gate& gate : c.gates) {
    if (gate.kind == Gate::Kind::H) {
      const std::uint64_t bit = std::uint64_t{1} << gate.a;
      for (std::uint64_t b = 0; b < dim; ++b) {
        if (!(b & bit)) {
          const Amplitude lo = amps[b];
          const Amplitude hi = amps[b | bit];
          amps[b] = (lo + hi) * inv_sqrt2;
          amps[b | bit] = (lo - hi) * inv_sqrt2;
        }
      }
    } else {
      const std::uint64_t mask = (std::uint64_t{1} << gate.a) | (std::uint64_t{1} << gate.b);
      for (std::uint64_t b = 0; b < dim; ++b) {
        if ((b & mask) == mask) {
          amps[b] = -amps[b];
        }
      }
    }
  }
  return DenseState(c.n, std::move(amps));
}

}  // namespace kuniform
