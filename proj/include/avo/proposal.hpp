// Copyright (c) 2026 avo authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>

#include <json.hpp>

#include "avo/rng.hpp"
#include "avo/types.hpp"

// Diagonal Gaussian proposal q(theta|psi) over simulator parameters.
// psi = (mean, log_scale) with sigma_d = exp(log_scale_d), so the
// parameterization is unconstrained and the entropy gradient is constant.
namespace avo {

struct ProposalParams {
  Vec mean;
  Vec log_scale;

  std::size_t dim() const { return mean.size(); }
  bool valid() const;
};

/// theta = mean + exp(log_scale) .* eps, eps ~ N(0, I).
Vec sample(const ProposalParams& params, RngStream& rng);

/// log q(theta|psi), summed over dimensions.
double log_density(const ProposalParams& params, std::span<const double> theta);

/// Exact score grad_psi log q(theta|psi), laid out [d mean..., d log_scale...].
/// Per dimension: d/dmean = (theta-mean)/sigma^2,
///                d/dlog_scale = ((theta-mean)/sigma)^2 - 1.
Vec score(const ProposalParams& params, std::span<const double> theta);

/// Shannon entropy: sum_d [0.5*log(2*pi*e) + log_scale_d].
double entropy(const ProposalParams& params);

/// grad_psi H: zero for mean components, one for each log_scale component.
Vec entropy_grad(const ProposalParams& params);

nlohmann::json proposal_to_json(const ProposalParams& params);
ProposalParams proposal_from_json(const nlohmann::json& j);

}  // namespace avo
