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

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "kuniform/bits.hpp"

namespace kuniform {

/// An n-qubit Pauli word i^p * (L_0 tensor L_1 ... tensor L_{n-1}) with
/// letters L_j in {I, X, Y, Z} and a global phase exponent p mod 4.
///
/// Letters are stored as per-qubit (x, z) bit pairs: I=(0,0), X=(1,0),
/// Y=(1,1), Z=(0,1). The Y letter denotes the usual Pauli Y matrix, which
/// equals i*X*Z in the per-qubit X-before-Z order; the stored phase exponent
/// is the printed sign of the word (0 -> "+", 1 -> "+i", 2 -> "-", 3 -> "-i").
/// Hermitian words therefore carry phase exponent 0 or 2.
class PauliWord {
 public:
  PauliWord() = default;

  PauliWord(BitVec x, BitVec z, int phase_exp)
      : x_(std::move(x)), z_(std::move(z)), phase_(((phase_exp % 4) + 4) % 4) {
    if (x_.size() != z_.size()) {
      throw std::invalid_argument("PauliWord: x and z bit vectors differ in length");
    }
  }

  static PauliWord identity(std::size_t n) { return PauliWord(BitVec(n), BitVec(n), 0); }

  /// Parses `[+|-][i]? [IXYZ]{n}` (no whitespace; omitted sign means "+").
  static PauliWord from_string(std::string_view s) {
    std::size_t pos = 0;
    int phase = 0;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
      phase = (s[pos] == '-') ? 2 : 0;
      ++pos;
      if (pos < s.size() && s[pos] == 'i') {
        phase += 1;
        ++pos;
      }
    }
    const std::size_t n = s.size() - pos;
    if (n == 0) {
      throw std::invalid_argument("PauliWord: empty letter body in \"" + std::string(s) + "\"");
    }
    BitVec x(n), z(n);
    for (std::size_t q = 0; q < n; ++q) {
      switch (s[pos + q]) {
        case 'I':
          break;
        case 'X':
          x.set(q);
          break;
        case 'Y':
          x.set(q);
          z.set(q);
          break;
        case 'Z':
          z.set(q);
          break;
        default:
          throw std::invalid_argument(std::string("PauliWord: invalid character '") +
                                      s[pos + q] + "'");
      }
    }
    return PauliWord(std::move(x), std::move(z), phase);
  }

  std::size_t num_qubits() const { return x_.size(); }
  const BitVec& x_bits() const { return x_; }
  const BitVec& z_bits() const { return z_; }
  int phase_exp() const { return phase_; }

  char letter(std::size_t q) const {
    const bool x = x_.test(q), z = z_.test(q);
    return x ? (z ? 'Y' : 'X') : (z ? 'Z' : 'I');
  }

  /// Number of non-identity letters.
  std::size_t weight() const { return (x_ | z_).count(); }

  bool is_identity() const { return x_.none() && z_.none() && phase_ == 0; }

  /// True iff the words commute (symplectic inner product is zero).
  bool commutes_with(const PauliWord& other) const {
    require_same_size(other);
    const std::size_t anti = (x_ & other.z_).count() + (z_ & other.x_).count();
    return anti % 2 == 0;
  }

  /// Exact operator product. Letter bits XOR; the phase exponent picks up one
  /// factor of +/-i per qubit where the letters multiply out of cyclic order.
  PauliWord operator*(const PauliWord& other) const {
    require_same_size(other);
    int phase = phase_ + other.phase_;
    BitVec common = (x_ | z_) & (other.x_ | other.z_);
    for (auto q = common.find_first(); q != BitVec::npos; q = common.find_next(q)) {
      const unsigned idx = (x_.test(q) ? 1u : 0u) | (z_.test(q) ? 2u : 0u) |
                           (other.x_.test(q) ? 4u : 0u) | (other.z_.test(q) ? 8u : 0u);
      phase += kLetterProductPhase[idx];
    }
    return PauliWord(x_ ^ other.x_, z_ ^ other.z_, phase);
  }

  PauliWord& operator*=(const PauliWord& other) { return *this = *this * other; }

  /// Sign prefix ("+", "-", "+i", "-i") followed by the letters.
  std::string str() const {
    static constexpr std::array<const char*, 4> kSign = {"+", "+i", "-", "-i"};
    std::string out = kSign[static_cast<std::size_t>(phase_)];
    out.reserve(out.size() + num_qubits());
    for (std::size_t q = 0; q < num_qubits(); ++q) {
      out.push_back(letter(q));
    }
    return out;
  }

  bool operator==(const PauliWord& other) const = default;

 private:
  void require_same_size(const PauliWord& other) const {
    if (x_.size() != other.x_.size()) {
      throw std::invalid_argument("PauliWord: qubit count mismatch (" +
                                  std::to_string(x_.size()) + " vs " +
                                  std::to_string(other.x_.size()) + ")");
    }
  }

  // i-power of L1*L2 indexed by x1 | z1<<1 | x2<<2 | z2<<3, e.g. X*Z = -i Y.
  static constexpr std::array<int, 16> kLetterProductPhase = {0, 0, 0, 0, 0, 0, 1, 3,
                                                              0, 3, 0, 1, 0, 1, 3, 0};

  BitVec x_;
  BitVec z_;
  int phase_ = 0;
};

inline PauliWord multiply(const PauliWord& a, const PauliWord& b) { return a * b; }

inline std::size_t weight(const PauliWord& p) { return p.weight(); }

inline std::string to_string(const PauliWord& p) { return p.str(); }

}  // namespace kuniform
