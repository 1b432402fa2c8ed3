// SPDX-License-Identifier: Apache-2.0
//
// stalecsi: net degrees of freedom of the MISO broadcast channel with delayed limited feedback
// Copyright (C) 2026 The stalecsi authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <stdexcept>
#include <string>

namespace stalecsi {

// An iterative kernel did not converge, or produced non-finite output.
class NumericalFailure : public std::runtime_error {
public:
    explicit NumericalFailure(const std::string& what) : std::runtime_error(what) {}
};

// A measure-zero random draw (rank-deficient directions, vanishing channel gain).
// Monte Carlo loops catch this and resample.
class DegenerateDraw : public std::runtime_error {
public:
    explicit DegenerateDraw(const std::string& what) : std::runtime_error(what) {}
};

// A request exceeds what an explicit enumeration can hold in memory.
class CapacityError : public std::length_error {
public:
    explicit CapacityError(const std::string& what) : std::length_error(what) {}
};

// Not enough points to fit a slope.
class InsufficientData : public std::invalid_argument {
public:
    explicit InsufficientData(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace stalecsi
