// Copyright 2026 The ising-nqs Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ISINGNQS_CHAIN_IO_HPP
#define ISINGNQS_CHAIN_IO_HPP

#include <istream>
#include <ostream>
#include <span>
#include <string>

#include "isingnqs/samplers.hpp"

namespace isingnqs {

/// Bit-packs a configuration row-major, +1 -> 1, site 0 in the most
/// significant bit of the first byte; two lowercase hex digits per byte.
std::string pack_spins(std::span<const Spin> config);
SpinConfig unpack_spins(const std::string& hex, int n);

/// CSV with header `sweep_index,magnetization,packed_spins` (plus
/// `,packed_hidden` when hidden snapshots were recorded). `comment`, if
/// non-empty, is written first as a `# `-prefixed provenance line.
void write_chain_csv(std::ostream& out, const SpinChain& chain, const std::string& comment = {});

/// Inverse of write_chain_csv. `n_visible` fixes the unpacked length;
/// `kind` and `interval` are not stored in the CSV.
SpinChain read_chain_csv(std::istream& in, int n_visible, ChainKind kind, std::int64_t interval,
                         int n_hidden = 0);

}  // namespace isingnqs

#endif  // ISINGNQS_CHAIN_IO_HPP
