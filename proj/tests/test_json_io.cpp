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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "povmclone/errors.hpp"
#include "povmclone/json_io.hpp"
#include "povmclone/random.hpp"

using namespace povmclone;

TEST_CASE("serialized objects survive a dump/parse round trip exactly") {
    Rng rng(77);

    const DensityOperator rho = random_state(3, 2, rng);
    const nlohmann::json jr = nlohmann::json::parse(to_json(rho).dump());
    CHECK(max_abs_diff(density_from_json(jr).matrix(), rho.matrix()) == 0.0);

    const Povm povm = random_povm(2, 4, rng);
    const nlohmann::json jp = nlohmann::json::parse(to_json(povm).dump());
    const Povm povm2 = povm_from_json(jp);
    for (std::size_t m = 0; m < povm.size(); ++m)
        CHECK(max_abs_diff(povm.element(m), povm2.element(m)) == 0.0);

    const KrausChannel ch = random_channel(2, 2, 3, rng);
    const nlohmann::json jc = nlohmann::json::parse(to_json(ch).dump());
    const KrausChannel ch2 = channel_from_json(jc);
    for (std::size_t i = 0; i < ch.kraus_ops().size(); ++i)
        CHECK(max_abs_diff(ch.kraus_ops()[i], ch2.kraus_ops()[i]) == 0.0);

    const PureState psi = random_pure_state(4, rng);
    const PureState psi2 = state_from_json(nlohmann::json::parse(to_json(psi).dump()));
    for (std::size_t i = 0; i < psi.dim(); ++i)
        CHECK(psi.amplitudes()[i] == psi2.amplitudes()[i]);

    const Pvm pvm = Pvm::computational(3);
    const Pvm pvm2 = pvm_from_json(nlohmann::json::parse(to_json(pvm).dump()));
    CHECK(pvm2.ranks() == pvm.ranks());
}

TEST_CASE("deserializers reject malformed or unphysical documents") {
    CHECK_THROWS_AS(matrix_from_json(nlohmann::json::parse("[[1,2],[3]]")), InvalidParameter);
    CHECK_THROWS_AS(state_from_json(nlohmann::json::parse(R"({"dim":2})")), InvalidParameter);

    // structurally fine, physically wrong: trace != 1
    const nlohmann::json bad = {{"dim", 2},
                                {"matrix", to_json(ComplexMatrix::identity(2))}};
    CHECK_THROWS_AS(density_from_json(bad), NotNormalized);

    // declared dim disagreeing with the payload
    nlohmann::json wrong_dim = to_json(DensityOperator::maximally_mixed(2));
    wrong_dim["dim"] = 3;
    CHECK_THROWS_AS(density_from_json(wrong_dim), InvalidParameter);
}

TEST_CASE("infinite relative entropies are encoded as a string sentinel") {
    CloningReport report;
    report.merit_hb = std::numeric_limits<double>::infinity();
    report.infinite_input = 1;
    const nlohmann::json j = to_json(report);
    CHECK(j["merit_hb"] == "infinity");
    CHECK(j["infinite_input"] == 1);
}
