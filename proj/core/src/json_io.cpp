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

#include "povmclone/json_io.hpp"

#include <cmath>
#include <fstream>

#include "povmclone/errors.hpp"

namespace povmclone {

namespace {

nlohmann::json complex_to_json(const Complex& z) {
    return nlohmann::json::array({z.real(), z.imag()});
}

Complex complex_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw InvalidParameter("complex numbers must be [re, im] pairs");
    return {j[0].get<double>(), j[1].get<double>()};
}

// Encode a possibly infinite value; JSON has no infinity literal.
nlohmann::json extended_to_json(double x) {
    if (std::isinf(x)) return "infinity";
    return x;
}

}  // namespace

nlohmann::json to_json(const ComplexMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

ComplexMatrix matrix_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.empty()) throw InvalidParameter("matrix must be a nested array");
    const std::size_t rows = j.size();
    const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
    if (cols == 0) throw InvalidParameter("matrix rows must be non-empty arrays");
    ComplexMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols)
            throw InvalidParameter("ragged matrix rows");
        for (std::size_t k = 0; k < cols; ++k) m(i, k) = complex_from_json(j[i][k]);
    }
    return m;
}

nlohmann::json to_json(const PureState& s) {
    nlohmann::json amps = nlohmann::json::array();
    for (const Complex& a : s.amplitudes()) amps.push_back(complex_to_json(a));
    return {{"dim", s.dim()}, {"amplitudes", std::move(amps)}};
}

PureState state_from_json(const nlohmann::json& j, const Tolerances& tol) {
    if (!j.contains("amplitudes")) throw InvalidParameter("state needs an amplitudes field");
    std::vector<Complex> amps;
    for (const auto& a : j.at("amplitudes")) amps.push_back(complex_from_json(a));
    if (j.contains("dim") && j.at("dim").get<std::size_t>() != amps.size())
        throw InvalidParameter("declared state dim disagrees with the amplitude count");
    return PureState(std::move(amps), tol);
}

nlohmann::json to_json(const DensityOperator& rho) {
    return {{"dim", rho.dim()}, {"matrix", to_json(rho.matrix())}};
}

DensityOperator density_from_json(const nlohmann::json& j, const Tolerances& tol) {
    if (!j.contains("matrix")) throw InvalidParameter("density operator needs a matrix field");
    ComplexMatrix m = matrix_from_json(j.at("matrix"));
    if (j.contains("dim") && j.at("dim").get<std::size_t>() != m.rows())
        throw InvalidParameter("declared dim disagrees with the matrix shape");
    return DensityOperator(std::move(m), tol);
}

nlohmann::json to_json(const Povm& povm) {
    nlohmann::json elements = nlohmann::json::array();
    for (const ComplexMatrix& e : povm.elements()) elements.push_back(to_json(e));
    return {{"dim", povm.dim()}, {"elements", std::move(elements)}};
}

Povm povm_from_json(const nlohmann::json& j, const Tolerances& tol) {
    if (!j.contains("elements")) throw InvalidParameter("POVM needs an elements field");
    std::vector<ComplexMatrix> elements;
    for (const auto& e : j.at("elements")) elements.push_back(matrix_from_json(e));
    Povm povm(std::move(elements), tol);
    if (j.contains("dim") && j.at("dim").get<std::size_t>() != povm.dim())
        throw InvalidParameter("declared POVM dim disagrees with the elements");
    return povm;
}

nlohmann::json to_json(const Pvm& pvm) {
    nlohmann::json projectors = nlohmann::json::array();
    for (const ComplexMatrix& p : pvm.projectors()) projectors.push_back(to_json(p));
    return {{"dim", pvm.dim()}, {"projectors", std::move(projectors)}};
}

Pvm pvm_from_json(const nlohmann::json& j, const Tolerances& tol) {
    if (!j.contains("projectors")) throw InvalidParameter("PVM needs a projectors field");
    std::vector<ComplexMatrix> projectors;
    for (const auto& p : j.at("projectors")) projectors.push_back(matrix_from_json(p));
    Pvm pvm(std::move(projectors), tol);
    if (j.contains("dim") && j.at("dim").get<std::size_t>() != pvm.dim())
        throw InvalidParameter("declared PVM dim disagrees with the projectors");
    return pvm;
}

nlohmann::json to_json(const KrausChannel& ch) {
    nlohmann::json kraus = nlohmann::json::array();
    for (const ComplexMatrix& k : ch.kraus_ops()) kraus.push_back(to_json(k));
    return {{"din", ch.din()}, {"dout", ch.dout()}, {"kraus", std::move(kraus)}};
}

KrausChannel channel_from_json(const nlohmann::json& j, const Tolerances& tol) {
    if (!j.contains("kraus")) throw InvalidParameter("channel needs a kraus field");
    std::vector<ComplexMatrix> ops;
    for (const auto& k : j.at("kraus")) ops.push_back(matrix_from_json(k));
    KrausChannel ch(std::move(ops), tol);
    if (j.contains("din") && j.at("din").get<std::size_t>() != ch.din())
        throw InvalidParameter("declared din disagrees with the Kraus shape");
    if (j.contains("dout") && j.at("dout").get<std::size_t>() != ch.dout())
        throw InvalidParameter("declared dout disagrees with the Kraus shape");
    return ch;
}

nlohmann::json to_json(const ProbDist& p) { return p.probs(); }

nlohmann::json to_json(const JointDist& t) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t j = 0; j < t.rows(); ++j) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t k = 0; k < t.cols(); ++k) row.push_back(t(j, k));
        rows.push_back(std::move(row));
    }
    return rows;
}

nlohmann::json to_json(const InputRecord& rec) {
    return {{"p", to_json(rec.p)},
            {"q", to_json(rec.q)},
            {"r", to_json(rec.r)},
            {"t", to_json(rec.t)},
            {"relative_entropy", extended_to_json(rec.relative_entropy)},
            {"broadcast_residual", rec.broadcast_residual}};
}

nlohmann::json to_json(const CloningReport& report) {
    nlohmann::json inputs = nlohmann::json::array();
    for (const InputRecord& rec : report.inputs) inputs.push_back(to_json(rec));
    nlohmann::json j = {{"inputs", std::move(inputs)},
                        {"merit_hb", extended_to_json(report.merit_hb)}};
    if (report.infinite_input) j["infinite_input"] = *report.infinite_input;
    return j;
}

nlohmann::json to_json(const NoCloningCheck& check) {
    const double fcl = check.classical_fidelity_value;
    return {{"verdict",
             check.verdict == CloningVerdict::intolerant ? "intolerant" : "inconclusive"},
            {"fidelity", check.fidelity_value},
            {"classical_fidelity", fcl},
            {"classical_fidelity_squared", fcl * fcl},
            {"degenerate", check.degenerate}};
}

nlohmann::json to_json(const PartialNoCloningCheck& check) {
    return {{"k", check.k},
            {"kappa", check.kappa},
            {"classical_partial_fidelity", check.classical_partial},
            {"quantum_partial_fidelity", check.quantum_partial},
            {"predicate_holds", check.predicate_holds},
            {"exploratory", check.exploratory}};
}

nlohmann::json to_json(const EqualityWitness& witness) {
    nlohmann::json zs = nlohmann::json::array();
    for (const auto& z : witness.z) {
        if (z)
            zs.push_back(complex_to_json(*z));
        else
            zs.push_back(nullptr);
    }
    return {{"z", std::move(zs)},
            {"max_residual", witness.max_residual},
            {"passed", witness.passed}};
}

nlohmann::json to_json(const IntoleranceSurvey& survey) {
    nlohmann::json pairs = nlohmann::json::array();
    for (const PairVerdict& pv : survey.pairs) {
        nlohmann::json entry = to_json(pv.check);
        entry["pair"] = pv.first + "/" + pv.second;
        pairs.push_back(std::move(entry));
    }
    return {{"eta", survey.eta},
            {"pairs", std::move(pairs)},
            {"all_intolerant", survey.all_intolerant}};
}

nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidParameter("cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidParameter("malformed JSON in " + path + ": " + e.what());
    }
    return j;
}

void save_json_file(const std::string& path, const nlohmann::json& j) {
    std::ofstream out(path);
    if (!out) throw InvalidParameter("cannot write " + path);
    out << j.dump(2) << "\n";
}

}  // namespace povmclone
