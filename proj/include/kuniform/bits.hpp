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

#include <boost/dynamic_bitset.hpp>
#include <cstddef>
#include <vector>

namespace kuniform {

/// Bit vector indexed by qubit/vertex, packed in machine-word blocks.
using BitVec = boost::dynamic_bitset<>;

/// Sorted list of the set-bit positions of `bits`.
inline std::vector<int> set_bits(const BitVec& bits) {
  std::vector<int> out;
  out.reserve(bits.count());
  for (auto i = bits.find_first(); i != BitVec::npos; i = bits.find_next(i)) {
    out.push_back(static_cast<int>(i));
  }
  return out;
}

inline BitVec bitvec_from_indices(std::size_t n, const std::vector<int>& indices) {
  BitVec out(n);
  for (int i : indices) {
    out.set(static_cast<std::size_t>(i));
  }
  return out;
}

}  // namespace kuniform
