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

#include "isingnqs/chain_io.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

#include "isingnqs/errors.hpp"

namespace isingnqs {

namespace {

constexpr char kHexDigits[] = "0123456789abcdef";

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  throw std::invalid_argument(std::string("invalid hex digit '") + c + "'");
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, sep)) fields.push_back(field);
  return fields;
}

}  // namespace

std::string pack_spins(std::span<const Spin> config) {
  const std::size_t n_bytes = (config.size() + 7) / 8;
  std::string hex;
  hex.reserve(2 * n_bytes);
  for (std::size_t byte = 0; byte < n_bytes; ++byte) {
    unsigned value = 0;
    for (std::size_t bit = 0; bit < 8; ++bit) {
      const std::size_t site = 8 * byte + bit;
      if (site < config.size() && config[site] > 0) value |= 0x80u >> bit;
    }
    hex.push_back(kHexDigits[value >> 4]);
    hex.push_back(kHexDigits[value & 0xf]);
  }
  return hex;
}

SpinConfig unpack_spins(const std::string& hex, int n) {
  if (hex.size() != 2 * ((static_cast<std::size_t>(n) + 7) / 8)) {
    throw std::invalid_argument("packed spin string has wrong length for " + std::to_string(n) +
                                " spins");
  }
  SpinConfig config(n);
  for (int site = 0; site < n; ++site) {
    const int byte = site / 8;
    const unsigned value = (hex_value(hex[2 * byte]) << 4) | hex_value(hex[2 * byte + 1]);
    config[site] = (value & (0x80u >> (site % 8))) ? 1 : -1;
  }
  return config;
}

void write_chain_csv(std::ostream& out, const SpinChain& chain, const std::string& comment) {
  const bool with_hidden = !chain.hidden.empty();
  if (!comment.empty()) out << "# " << comment << '\n';
  out << "sweep_index,magnetization,packed_spins" << (with_hidden ? ",packed_hidden" : "") << '\n';
  for (std::size_t k = 0; k < chain.samples.size(); ++k) {
    out << chain.sweep_index[k] << ',' << chain.magnetizations[k] << ',' << pack_spins(chain.samples[k]);
    if (with_hidden) out << ',' << pack_spins(chain.hidden[k]);
    out << '\n';
  }
}

SpinChain read_chain_csv(std::istream& in, int n_visible, ChainKind kind, std::int64_t interval,
                         int n_hidden) {
  SpinChain chain;
  chain.kind = kind;
  chain.n_visible = n_visible;
  chain.interval = interval;
  std::string line;
  bool header_seen = false;
  bool with_hidden = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      if (line.rfind("sweep_index,magnetization,packed_spins", 0) != 0) {
        throw std::invalid_argument("chain CSV is missing its header line");
      }
      with_hidden = line.find("packed_hidden") != std::string::npos;
      header_seen = true;
      continue;
    }
    const auto fields = split(line, ',');
    if (fields.size() != (with_hidden ? 4u : 3u)) {
      throw std::invalid_argument("malformed chain CSV row: " + line);
    }
    chain.sweep_index.push_back(std::stoll(fields[0]));
    chain.magnetizations.push_back(std::stoi(fields[1]));
    chain.samples.push_back(unpack_spins(fields[2], n_visible));
    if (magnetization(chain.samples.back()) != chain.magnetizations.back()) {
      throw std::invalid_argument("chain CSV magnetization column disagrees with packed spins");
    }
    if (with_hidden) chain.hidden.push_back(unpack_spins(fields[3], n_hidden));
  }
  if (!header_seen) throw std::invalid_argument("empty chain CSV");
  chain.total_sweeps = chain.sweep_index.empty() ? 0 : chain.sweep_index.back();
  return chain;
}

}  // namespace isingnqs
