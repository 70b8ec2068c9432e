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

#ifndef ISINGNQS_ERRORS_HPP
#define ISINGNQS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace isingnqs {

/// Numerical breakdown: overflow, non-finite parameters, failed solves,
/// non-converged eigensolvers.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A Markov chain whose observable series carries no usable information.
class StuckChainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Too many chains were excluded for an aggregate to be meaningful.
class ExclusionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by exhaustive oracles when a problem is too large to enumerate.
class SizeGuardError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace isingnqs

#endif  // ISINGNQS_ERRORS_HPP
