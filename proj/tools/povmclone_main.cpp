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

// povmclone CLI: scenario files in, reports and sweep tables out.
//
// Exit codes: 0 success, 2 input or validation error, 3 verification
// failure, 4 internal numerical failure.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "povmclone/cloning.hpp"
#include "povmclone/constructions.hpp"
#include "povmclone/errors.hpp"
#include "povmclone/json_io.hpp"
#include "povmclone/properties.hpp"
#include "povmclone/random.hpp"

namespace {

using namespace povmclone;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitVerification = 3;
constexpr int kExitNumerical = 4;

struct CommonOpts {
    std::string format = "text";
    std::uint64_t seed = kDefaultSeed;
    std::vector<std::string> tol_overrides;

    Tolerances tolerances() const {
        Tolerances tol;
        for (const std::string& spec : tol_overrides) {
            const std::size_t eq_pos = spec.find('=');
            if (eq_pos == std::string::npos)
                throw InvalidParameter("--tol expects name=value, got " + spec);
            const std::string name = spec.substr(0, eq_pos);
            double value = 0.0;
            try {
                value = std::stod(spec.substr(eq_pos + 1));
            } catch (const std::exception&) {
                throw InvalidParameter("--tol value is not a number: " + spec);
            }
            tol.set_by_name(name, value);
        }
        return tol;
    }
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_option("--seed", opts.seed, "Random seed");
    cmd->add_option("--tol", opts.tol_overrides, "Tolerance override name=value");
}

std::string fmt(double x) {
    if (std::isinf(x)) return "inf";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

std::string json_scalar(const nlohmann::json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_float()) return fmt(v.get<double>());
    return v.dump();
}

// Fallback renderers for non-tabular reports.
void emit_flat(const nlohmann::json& j, const std::string& prefix, const std::string& sep) {
    for (const auto& [key, value] : j.items()) {
        const std::string name = prefix.empty() ? key : prefix + "." + key;
        if (value.is_object())
            emit_flat(value, name, sep);
        else if (value.is_array() && !value.empty() && value[0].is_object())
            for (std::size_t i = 0; i < value.size(); ++i)
                emit_flat(value[i], name + "[" + std::to_string(i) + "]", sep);
        else if (value.is_array())
            std::cout << name << sep << value.dump() << "\n";
        else
            std::cout << name << sep << json_scalar(value) << "\n";
    }
}

void emit_report(const nlohmann::json& report, const std::string& format) {
    if (format == "json")
        std::cout << report.dump(2) << "\n";
    else if (format == "csv")
        emit_flat(report, "", ",");
    else
        emit_flat(report, "", ": ");
}

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

void emit_table(const Table& table, const nlohmann::json& report, const std::string& format) {
    if (format == "json") {
        std::cout << report.dump(2) << "\n";
        return;
    }
    const char* sep = format == "csv" ? "," : "  ";
    for (std::size_t i = 0; i < table.header.size(); ++i)
        std::cout << table.header[i] << (i + 1 < table.header.size() ? sep : "\n");
    for (const auto& row : table.rows)
        for (std::size_t i = 0; i < row.size(); ++i)
            std::cout << row[i] << (i + 1 < row.size() ? sep : "\n");
}

std::vector<double> parse_grid(const std::string& spec) {
    double start = 0.0, stop = 0.0;
    int count = 0;
    if (std::sscanf(spec.c_str(), "%lf:%lf:%d", &start, &stop, &count) != 3 || count < 2)
        throw InvalidParameter("--grid expects start:stop:n with n >= 2, got " + spec);
    std::vector<double> values(count);
    for (int i = 0; i < count; ++i)
        values[i] = start + (stop - start) * static_cast<double>(i) / (count - 1);
    return values;
}

// ---- check-pair ----

int cmd_check_pair(const std::string& input, const CommonOpts& opts) {
    Tolerances tol;
    Povm povm({ComplexMatrix::identity(1)});
    std::optional<DensityOperator> rho, omega;
    try {
        tol = opts.tolerances();
        const nlohmann::json j = load_json_file(input);
        povm = povm_from_json(j.at("povm"), tol);
        rho = density_from_json(j.at("rho"), tol);
        omega = density_from_json(j.at("omega"), tol);
        if (povm.dim() != rho->dim() || povm.dim() != omega->dim())
            throw DimensionMismatch("POVM and states disagree on the dimension");
    } catch (const std::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    }

    try {
        const NoCloningCheck check = check_no_cloning_condition(povm, *rho, *omega, tol);
        nlohmann::json report = to_json(check);
        report["schema"] = kSchemaVersion;
        report["command"] = "check-pair";
        emit_report(report, opts.format);
        return kExitOk;
    } catch (const Error& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return kExitNumerical;
    }
}

// ---- b92 ----

int cmd_b92(std::optional<double> eta, const std::string& grid, const CommonOpts& opts) {
    Tolerances tol;
    std::vector<double> etas;
    try {
        tol = opts.tolerances();
        if (eta)
            etas.push_back(*eta);
        else if (!grid.empty())
            etas = parse_grid(grid);
        else
            throw InvalidParameter("b92 needs --eta or --grid");
        for (double e : etas) b92_states(e, tol);  // range check up front
    } catch (const std::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    }

    try {
        Table table;
        table.header = {"eta", "pair", "verdict", "F", "Fcl", "Fcl^2"};
        nlohmann::json rows = nlohmann::json::array();
        bool all = true;
        for (double e : etas) {
            const IntoleranceSurvey survey = intolerance_survey(e, tol);
            all = all && survey.all_intolerant;
            rows.push_back(to_json(survey));
            for (const PairVerdict& pv : survey.pairs) {
                const double fcl = pv.check.classical_fidelity_value;
                table.rows.push_back(
                    {fmt(e), pv.first + "/" + pv.second,
                     pv.check.verdict == CloningVerdict::intolerant ? "intolerant"
                                                                    : "inconclusive",
                     fmt(pv.check.fidelity_value), fmt(fcl), fmt(fcl * fcl)});
            }
        }
        nlohmann::json report = {{"schema", kSchemaVersion},
                                 {"command", "b92"},
                                 {"surveys", std::move(rows)},
                                 {"all_intolerant", all}};
        emit_table(table, report, opts.format);
        return kExitOk;
    } catch (const Error& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return kExitNumerical;
    }
}

// ---- clone-demo ----

int cmd_clone_demo(double eta, const CommonOpts& opts) {
    Tolerances tol;
    try {
        tol = opts.tolerances();
        b92_states(eta, tol);  // range check
    } catch (const std::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    }

    try {
        const CloneExampleParams params = solve_clone_angles(eta, tol);
        const ComplexMatrix u = build_cloning_unitary(params, tol);

        // Residuals of the two defining constraints, in the eta-theta basis.
        std::vector<Complex> e0(4, Complex{});
        e0[0] = 1.0;
        double res_eta = 0.0;
        const std::vector<Complex> ue0 = mat_vec(u, e0);
        for (std::size_t i = 0; i < 4; ++i) res_eta = std::max(res_eta, std::abs(ue0[i] - e0[i]));

        const EtaThetaCoefficients full = eta_theta_coefficients(eta, params.phi);
        const EtaThetaCoefficients first = eta_theta_coefficients(eta, params.phi1);
        const EtaThetaCoefficients second = eta_theta_coefficients(eta, params.phi2);
        const std::vector<Complex> in_vec = {full.alpha, 0.0, full.beta, 0.0};
        const std::vector<Complex> want = {first.alpha * second.alpha, first.alpha * second.beta,
                                           first.beta * second.alpha, first.beta * second.beta};
        const std::vector<Complex> got = mat_vec(u, in_vec);
        double res_phi = 0.0;
        for (std::size_t i = 0; i < 4; ++i) res_phi = std::max(res_phi, std::abs(got[i] - want[i]));

        const PublishedMatrixComparison cmp = compare_published_matrix(params, tol);
        const CloningReport report = verify_perfect_cloning(eta, tol);

        nlohmann::json j = {{"schema", kSchemaVersion},
                            {"command", "clone-demo"},
                            {"eta", eta},
                            {"phi1", params.phi1},
                            {"phi2", params.phi2},
                            {"phi", params.phi},
                            {"cos_phi1", std::cos(params.phi1)},
                            {"overlap", std::abs(full.alpha)},
                            {"classical_fidelity_squared",
                             std::sin(2 * eta) * std::sin(2 * eta)},
                            {"unitarity_residual", unitarity_defect(u)},
                            {"constraint_residual_eta_eta", res_eta},
                            {"constraint_residual_phi_eta", res_phi},
                            {"published_matrix",
                             {{"unitarity_defect", cmp.published_unitarity_defect},
                              {"fixed_column_defect", cmp.fixed_column_defect},
                              {"complement_span_defect", cmp.complement_span_defect}}},
                            {"report", to_json(report)}};
        emit_report(j, opts.format);
        return report.merit_hb <= tol.clone_merit ? kExitOk : kExitVerification;
    } catch (const Error& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return kExitNumerical;
    }
}

// ---- lemma2 / theorem3 ----

int cmd_lemma2(const std::string& input, double f, const CommonOpts& opts) {
    Tolerances tol;
    std::optional<Pvm> pvm;
    std::optional<PureState> psi;
    try {
        tol = opts.tolerances();
        const nlohmann::json j = load_json_file(input);
        pvm = pvm_from_json(j.at("pvm"), tol);
        psi = state_from_json(j.at("psi"), tol);
        if (pvm->dim() != psi->dim())
            throw DimensionMismatch("PVM and state disagree on the dimension");
    } catch (const std::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    }

    try {
        const PureState phi = construct_saturating_pure_state(*pvm, *psi, f, tol);
        const ProbDist p = measure(pvm->to_povm(tol), DensityOperator::pure(*psi, tol), tol);
        const ProbDist q = measure(pvm->to_povm(tol), DensityOperator::pure(phi, tol), tol);
        const double overlap = std::abs(psi->overlap(phi));
        const double fcl = classical_fidelity(p, q);
        nlohmann::json report = {{"schema", kSchemaVersion},
                                 {"command", "lemma2"},
                                 {"f", f},
                                 {"phi", to_json(phi)},
                                 {"overlap", overlap},
                                 {"classical_fidelity", fcl},
                                 {"overlap_residual", std::abs(overlap - f)},
                                 {"classical_residual", std::abs(fcl - f)}};
        emit_report(report, opts.format);
        const bool ok = std::abs(overlap - f) <= tol.lemma2 && std::abs(fcl - f) <= tol.lemma2;
        return ok ? kExitOk : kExitVerification;
    } catch (const OutOfRange& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const Error& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return kExitNumerical;
    }
}

int cmd_theorem3(const std::string& input, double f, const CommonOpts& opts) {
    Tolerances tol;
    std::optional<Pvm> pvm;
    std::optional<DensityOperator> rho;
    try {
        tol = opts.tolerances();
        const nlohmann::json j = load_json_file(input);
        pvm = pvm_from_json(j.at("pvm"), tol);
        rho = density_from_json(j.at("rho"), tol);
        if (pvm->dim() != rho->dim())
            throw DimensionMismatch("PVM and state disagree on the dimension");
    } catch (const std::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    }

    try {
        const DensityOperator omega = construct_saturating_mixed_state(*pvm, *rho, f, tol);
        const ProbDist p = measure(pvm->to_povm(tol), *rho, tol);
        const ProbDist q = measure(pvm->to_povm(tol), omega, tol);
        const double fid = fidelity(*rho, omega, tol);
        const double fcl = classical_fidelity(p, q);
        nlohmann::json report = {{"schema", kSchemaVersion},
                                 {"command", "theorem3"},
                                 {"f", f},
                                 {"omega", to_json(omega)},
                                 {"fidelity", fid},
                                 {"classical_fidelity", fcl},
                                 {"fidelity_residual", std::abs(fid - f)},
                                 {"classical_residual", std::abs(fcl - f)}};
        emit_report(report, opts.format);
        const bool ok = std::abs(fid - f) <= tol.theorem3 && std::abs(fcl - f) <= tol.theorem3;
        return ok ? kExitOk : kExitVerification;
    } catch (const OutOfRange& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const Error& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return kExitNumerical;
    }
}

// ---- sweep-channels ----

int cmd_sweep_channels(std::size_t cases, const CommonOpts& opts) {
    Tolerances tol;
    try {
        tol = opts.tolerances();
        if (cases == 0) throw InvalidParameter("--cases must be positive");
    } catch (const std::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    }

    try {
        const PropertyResult contra = run_property("contrapositive", cases, opts.seed, tol);
        const PropertyResult chain = run_property("proof_chain", cases, opts.seed, tol);
        nlohmann::json report = {{"schema", kSchemaVersion},
                                 {"command", "sweep-channels"},
                                 {"seed", opts.seed},
                                 {"cases", contra.cases},
                                 {"contrapositive_failures", contra.failures},
                                 {"contrapositive_worst", contra.worst},
                                 {"contrapositive_note", contra.note},
                                 {"proof_chain_failures", chain.failures},
                                 {"proof_chain_worst", chain.worst}};
        emit_report(report, opts.format);
        return (contra.failures == 0 && chain.failures == 0) ? kExitOk : kExitVerification;
    } catch (const Error& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return kExitNumerical;
    }
}

// ---- properties ----

int cmd_properties(std::size_t cases, const CommonOpts& opts) {
    Tolerances tol;
    try {
        tol = opts.tolerances();
    } catch (const std::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    }

    try {
        Table table;
        table.header = {"property", "cases", "failures", "worst", "note"};
        nlohmann::json rows = nlohmann::json::array();
        std::size_t total_failures = 0;
        for (const PropertyCheck& check : all_properties()) {
            const PropertyResult r =
                check.run(cases == 0 ? check.default_cases : cases, opts.seed, tol);
            total_failures += r.failures;
            table.rows.push_back({r.name, std::to_string(r.cases), std::to_string(r.failures),
                                  fmt(r.worst), r.note.empty() ? "-" : r.note});
            rows.push_back({{"name", r.name},
                            {"cases", r.cases},
                            {"failures", r.failures},
                            {"worst", r.worst},
                            {"note", r.note}});
        }
        nlohmann::json report = {{"schema", kSchemaVersion},
                                 {"command", "properties"},
                                 {"seed", opts.seed},
                                 {"properties", std::move(rows)},
                                 {"total_failures", total_failures}};
        emit_table(table, report, opts.format);
        return total_failures == 0 ? kExitOk : kExitVerification;
    } catch (const Error& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return kExitNumerical;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"No-cloning analysis of POVM statistics: fidelity measures, intolerant state"
                 " sets and the perfect-cloning example"};
    app.require_subcommand(1);

    CommonOpts check_opts, b92_opts, clone_opts, lemma_opts, theo_opts, sweep_opts, prop_opts;

    auto* check = app.add_subcommand("check-pair", "No-cloning verdict for a {povm, rho, omega} file");
    std::string check_input;
    check->add_option("--input", check_input, "JSON file with povm, rho, omega")->required();
    add_common(check, check_opts);

    auto* b92 = app.add_subcommand("b92", "Intolerance survey of the four-state family");
    std::optional<double> b92_eta;
    std::string b92_grid;
    b92->add_option("--eta", b92_eta, "Angle in radians, inside (0, pi/4)");
    b92->add_option("--grid", b92_grid, "Angle grid start:stop:n");
    add_common(b92, b92_opts);

    auto* clone = app.add_subcommand("clone-demo", "Build and verify the perfect-cloning unitary");
    double clone_eta = 0.0;
    clone->add_option("--eta", clone_eta, "Angle in radians, inside (0, pi/4)")->required();
    add_common(clone, clone_opts);

    auto* lemma = app.add_subcommand("lemma2", "Saturating pure state for a {pvm, psi} file");
    std::string lemma_input;
    double lemma_f = 1.0;
    lemma->add_option("--input", lemma_input, "JSON file with pvm, psi")->required();
    lemma->add_option("--f", lemma_f, "Target overlap")->required();
    add_common(lemma, lemma_opts);

    auto* theo = app.add_subcommand("theorem3", "Saturating mixed state for a {pvm, rho} file");
    std::string theo_input;
    double theo_f = 1.0;
    theo->add_option("--input", theo_input, "JSON file with pvm, rho")->required();
    theo->add_option("--f", theo_f, "Target fidelity")->required();
    add_common(theo, theo_opts);

    auto* sweep = app.add_subcommand("sweep-channels", "Seeded random-channel sweep of the"
                                                       " cloning necessary condition");
    std::size_t sweep_cases = 500;
    sweep->add_option("--cases", sweep_cases, "Number of seeded cases");
    add_common(sweep, sweep_opts);

    auto* props = app.add_subcommand("properties", "Run every module invariant");
    std::size_t prop_cases = 0;
    props->add_option("--cases", prop_cases, "Case count override (0 = per-property default)");
    add_common(props, prop_opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }

    if (check->parsed()) return cmd_check_pair(check_input, check_opts);
    if (b92->parsed()) return cmd_b92(b92_eta, b92_grid, b92_opts);
    if (clone->parsed()) return cmd_clone_demo(clone_eta, clone_opts);
    if (lemma->parsed()) return cmd_lemma2(lemma_input, lemma_f, lemma_opts);
    if (theo->parsed()) return cmd_theorem3(theo_input, theo_f, theo_opts);
    if (sweep->parsed()) return cmd_sweep_channels(sweep_cases, sweep_opts);
    if (props->parsed()) return cmd_properties(prop_cases, prop_opts);
    return kExitInput;
}
