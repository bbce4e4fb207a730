// Copyright 2026 The qmaps Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qmaps/maps.hpp"
#include "qmaps/spectral.hpp"
#include "qmaps/states.hpp"

namespace qmaps {

/// Eigenvalues below this count as negative in every verdict.
inline constexpr double kNegativeEigenvalue = -1e-10;

/// Spectrum of the partial transpose on B.
Spectrum ppt_spectrum(const DensityMatrix& rho);

struct MapVerdict {
  std::string label;
  double min_eigenvalue = 0.0;
  bool detected = false;
};

/// Detected iff (I (x) map)(rho) has an eigenvalue below -1e-10.
MapVerdict map_detects(const QutritMapSpec& map, const DensityMatrix& rho);

/// Sign-carrying minor of (I (x) Lambda_alpha)(tau_x) on rows/cols {0, 4, 8}:
/// N [x (2 + x)(alpha + x / alpha) - alpha (1 + x)] / (3 (1 + x + 1/x)),
/// N = 1 / (alpha + 1/alpha).
double minor_d_tau(double alpha, double x);

/// The same principal minor taken numerically from the 9x9 matrix. Equal to
/// (N / (3 (1 + x + 1/x)))^3 times the bracket above.
double tau_principal_minor(double alpha, double x);

/// Root in x of minor_d_tau for fixed alpha, by bisection over a verified
/// sign-change bracket [lo, hi]. Returns nullopt if the bracket does not
/// change sign.
std::optional<double> minor_d_tau_root(double alpha, double lo = 1e-6, double hi = 10.0,
                                       double tolerance = 1e-12);

/// Smallest x in [1, x_max] at which (I (x) Lambda_alpha^dagger)(tau_x) picks
/// up a negative eigenvalue, located by bisection to `tolerance`.
std::optional<double> dual_npt_threshold(double alpha, double x_max = 1000.0, double tolerance = 1e-10);

struct CmcReport {
  RealMatrix c_matrix;
  double lhs = 0.0;  ///< trace norm of c_matrix
  double rhs = 0.0;  ///< sqrt((1 - Tr rhoA^2)(1 - Tr rhoB^2))
  bool violated = false;
};

/// Covariance matrix criterion with the orthonormal local observables
/// {G1/sqrt3, G2/sqrt2, ..., G9/sqrt2} on both sides. A violation
/// (lhs > rhs + 1e-12) certifies entanglement.
CmcReport cmc_check(const DensityMatrix& rho);

struct WitnessReading {
  std::string label;
  double value = 0.0;
  bool detected = false;  ///< value < -1e-10
};

struct DetectionReport {
  Spectrum ppt_spectrum;
  double ppt_min_eig = 0.0;
  bool npt = false;
  std::vector<MapVerdict> map_verdicts;
  std::vector<WitnessReading> witness_values;
  CmcReport cmc;
};

/// PPT spectrum, map verdicts for Lambda_1, Lambda_1^dagger, the Choi map
/// and the Miller-Olkiewicz map, the Lambda_1 Choi witness, and the CMC.
DetectionReport full_report(const DensityMatrix& rho);

}  // namespace qmaps
