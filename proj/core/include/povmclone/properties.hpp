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
#include <functional>
#include <string>
#include <vector>

#include "povmclone/tolerances.hpp"

namespace povmclone {

/// Outcome of one seeded invariant check.
struct PropertyResult {
    std::string name;
    std::size_t cases = 0;
    std::size_t failures = 0;
    double worst = 0.0;  ///< largest violation observed (0 when all margins held)
    std::string note;

    bool passed() const { return failures == 0; }
};

using PropertyFn =
    std::function<PropertyResult(std::size_t cases, std::uint64_t seed, const Tolerances& tol)>;

struct PropertyCheck {
    std::string name;
    std::size_t default_cases = 0;
    PropertyFn run;
};

/// The full registry of module invariants, in a stable order. Each entry is
/// deterministic for a given (cases, seed, tol) triple.
const std::vector<PropertyCheck>& all_properties();

/// Run one registered property by name; throws InvalidParameter when the
/// name is unknown. cases == 0 selects the property's default count.
PropertyResult run_property(const std::string& name, std::size_t cases, std::uint64_t seed,
                            const Tolerances& tol = {});

}  // namespace povmclone
