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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace povmclone {

/// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct LengthMismatch : Error {
    using Error::Error;
};

struct NotHermitian : Error {
    double max_asymmetry;
    explicit NotHermitian(double asym)
        : Error("matrix is not Hermitian, max asymmetry " + std::to_string(asym)),
          max_asymmetry(asym) {}
};

struct NoConvergence : Error {
    int sweeps;
    explicit NoConvergence(int s)
        : Error("eigensolver did not converge within " + std::to_string(s) + " sweeps"),
          sweeps(s) {}
};

struct NotPsd : Error {
    double min_eigenvalue;
    explicit NotPsd(double lam)
        : Error("matrix is not positive semidefinite, min eigenvalue " + std::to_string(lam)),
          min_eigenvalue(lam) {}
};

struct RankDeficient : Error {
    std::size_t column;
    explicit RankDeficient(std::size_t col)
        : Error("column " + std::to_string(col) + " is linearly dependent on earlier columns"),
          column(col) {}
};

struct NotNormalized : Error {
    double defect;
    NotNormalized(const std::string& what, double d) : Error(what), defect(d) {}
};

struct InvalidParameter : Error {
    using Error::Error;
};

struct SingularState : Error {
    using Error::Error;
};

struct OutOfRange : Error {
    double value;
    OutOfRange(const std::string& what, double v) : Error(what), value(v) {}
};

struct ZeroProbabilityBlock : Error {
    using Error::Error;
};

}  // namespace povmclone
