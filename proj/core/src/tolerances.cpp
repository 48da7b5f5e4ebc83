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

#include "povmclone/tolerances.hpp"

#include <unordered_map>

#include "povmclone/errors.hpp"

namespace povmclone {

void Tolerances::set_by_name(const std::string& name, double value) {
    static const std::unordered_map<std::string, double Tolerances::*> fields = {
        {"herm", &Tolerances::herm},
        {"unit", &Tolerances::unit},
        {"recon", &Tolerances::recon},
        {"rank", &Tolerances::rank},
        {"psd", &Tolerances::psd},
        {"norm", &Tolerances::norm},
        {"imag", &Tolerances::imag},
        {"zero", &Tolerances::zero},
        {"eq", &Tolerances::eq},
        {"strict", &Tolerances::strict},
        {"angle", &Tolerances::angle},
        {"jacobi_offdiag", &Tolerances::jacobi_offdiag},
        {"qc_bound", &Tolerances::qc_bound},
        {"monotonicity", &Tolerances::monotonicity},
        {"multiplicativity", &Tolerances::multiplicativity},
        {"povm_optimality", &Tolerances::povm_optimality},
        {"purification", &Tolerances::purification},
        {"partial_mono", &Tolerances::partial_mono},
        {"factorized", &Tolerances::factorized},
        {"contrapositive", &Tolerances::contrapositive},
        {"proof_chain", &Tolerances::proof_chain},
        {"marginal", &Tolerances::marginal},
        {"broadcast", &Tolerances::broadcast},
        {"lemma2", &Tolerances::lemma2},
        {"theorem3", &Tolerances::theorem3},
        {"clone_merit", &Tolerances::clone_merit},
        {"search_target", &Tolerances::search_target},
    };
    if (name == "jacobi_max_sweeps") {
        jacobi_max_sweeps = static_cast<int>(value);
        return;
    }
    auto it = fields.find(name);
    if (it == fields.end()) throw InvalidParameter("unknown tolerance name: " + name);
    this->*(it->second) = value;
}

}  // namespace povmclone
