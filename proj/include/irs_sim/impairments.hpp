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

// Additive distortion-noise statistics of one link.
struct DistortionCovariances {
  CMatrix upsilon_bs;  // M x M, diagonal
  double v_ue = 0.0;
};

// EVM = sqrt(kappa).
double evm_from_kappa(double kappa);

// Downlink: Upsilon_BS = kappa_BS diag(Q);
// v_UE = kappa_UE (h^H Q h + h^H Upsilon_BS h), covariance form.
DistortionCovariances downlink_distortion(const CVector& h_eff, const CMatrix& Q,
                                          double kappa_bs, double kappa_ue);

// Uplink: v_UE = kappa_UE p_UE;
// Upsilon_BS = kappa_BS p_UE (1 + kappa_UE) diag(C_d + sum_i C_i).
DistortionCovariances uplink_distortion(const SystemConfig& config);

}  // namespace irs
