// Copyright 2026 The povmclone Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <random>
#include <span>

#include "povmclone/qtypes.hpp"

namespace povmclone {

/// Deterministic random source. mt19937_64 output is fully specified by the
/// standard and the Gaussian transform is hand-rolled (Box-Muller), so a seed
/// reproduces the same stream on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double gaussian();
    Complex complex_gaussian();

private:
    std::mt19937_64 gen_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

/// Default seed used by the CLI and the property suites.
inline constexpr std::uint64_t kDefaultSeed = 0xB92;

/// Haar-like random unitary: complex Gaussian matrix, columns orthonormalized.
ComplexMatrix random_unitary(std::size_t dim, Rng& rng, const Tolerances& tol = {});

PureState random_pure_state(std::size_t dim, Rng& rng, const Tolerances& tol = {});

/// Random state of the given rank: a seeded simplex spectrum conjugated by
/// random unitary columns.
DensityOperator random_state(std::size_t dim, std::size_t rank, Rng& rng,
                             const Tolerances& tol = {});
DensityOperator random_state(std::size_t dim, std::size_t rank, std::uint64_t seed,
                             const Tolerances& tol = {});

/// Random POVM: Gram pieces A_m† A_m rescaled by the inverse square root of
/// their sum so they add up to the identity.
Povm random_povm(std::size_t dim, std::size_t n_elements, Rng& rng, const Tolerances& tol = {});
Povm random_povm(std::size_t dim, std::size_t n_elements, std::uint64_t seed,
                 const Tolerances& tol = {});

/// Random channel: a QR-orthonormalized (kraus_count * dout) x din block
/// isometry sliced into Kraus operators. Requires kraus_count * dout >= din.
KrausChannel random_channel(std::size_t din, std::size_t dout, std::size_t kraus_count, Rng& rng,
                            const Tolerances& tol = {});
KrausChannel random_channel(std::size_t din, std::size_t dout, std::size_t kraus_count,
                            std::uint64_t seed, const Tolerances& tol = {});

/// Random PVM whose projector ranks are prescribed: consecutive column blocks
/// of a random unitary.
Pvm random_pvm(std::size_t dim, std::span<const std::size_t> ranks, Rng& rng,
               const Tolerances& tol = {});

/// Convex mixture of random unitary conjugations (a unistochastic channel),
/// with seeded weights.
KrausChannel random_unistochastic_channel(std::size_t dim, std::size_t unitary_count, Rng& rng,
                                          const Tolerances& tol = {});

}  // namespace povmclone
