// Copyright 2026 The irs-sim Authors
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

#include "irs_sim/model.hpp"
#include "irs_sim/types.hpp"

namespace irs {

enum class LinkDirection { Downlink, Uplink };

using CRowVector = Eigen::RowVectorXcd;

// Noise-plus-distortion matrix of the combining/beamforming problem:
//   full    = (1 + k_UE) k_BS diag(h h^H) + k_UE h h^H + (sigma^2 / p) I
//   reduced = (1 + k_UE) k_BS diag(h h^H)              + (sigma^2 / p) I
// `reduced` is diagonal; full - reduced = k_UE h h^H.
struct NoisePlusDistortionMatrix {
  CMatrix full;
  CMatrix reduced;
  double kappa_ue = 0.0;
  double noise_to_power = 0.0;
};

// sigma^2 / p for the given link. Downlink: sigma2_UE / p_BS. Uplink:
// sigma2_BS / p_UE (or sigma2_UE / p_UE under UplinkNoiseSource::UeAsPrinted).
double noise_to_power_ratio(const SystemConfig& config, LinkDirection dir);

NoisePlusDistortionMatrix build_noise_matrices(const CVector& h_eff, const SystemConfig& config,
                                               LinkDirection dir);
NoisePlusDistortionMatrix build_noise_matrices(const CVector& h_eff, double kappa_bs,
                                               double kappa_ue, double noise_to_power);

// full^{-1} h / ||full^{-1} h||. Serves both w_t (downlink) and w_r (uplink).
CVector optimal_beamformer(const CVector& h_eff, const NoisePlusDistortionMatrix& mat);

// |h^H w|^2 / (w^H full w) for a unit-norm w.
double snr(const CVector& w, const CVector& h_eff, const NoisePlusDistortionMatrix& mat);

// h^H A^{-1} h with A = full (Hermitian PD solve) or A = reduced (diagonal sum).
double quadratic_form(const CVector& h_eff, const NoisePlusDistortionMatrix& mat,
                      bool use_reduced);

// Per-antenna closed form of h^H reduced^{-1} h:
//   sum_i |h_i|^2 / ((1 + k_UE) k_BS |h_i|^2 + sigma^2 / p)
double reduced_quadratic_sum(const CVector& h_eff, double kappa_bs, double kappa_ue,
                             double noise_to_power);

// q^H (B + tau q q^H)^{-1} evaluated as q^H B^{-1} / (1 + tau q^H B^{-1} q).
// Throws SingularMatrix when B is singular or the denominator vanishes.
CRowVector rank_one_resolvent(const CMatrix& B, Complex tau, const CVector& q);

}  // namespace irs
