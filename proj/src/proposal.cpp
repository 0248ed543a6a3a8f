// Copyright (c) 2026 avo authors
// SPDX-License-Identifier: Apache-2.0
#include "avo/proposal.hpp"

#include <cmath>

namespace avo {

namespace {
constexpr double kLog2Pi = 1.8378770664093454835606594728112;  // log(2*pi)
}

bool ProposalParams::valid() const {
  return !mean.empty() && mean.size() == log_scale.size() && all_finite(mean) &&
         all_finite(log_scale);
}

Vec sample(const ProposalParams& params, RngStream& rng) {
  const std::size_t d = params.dim();
  Vec theta(d);
  for (std::size_t i = 0; i < d; ++i)
    theta[i] = params.mean[i] + std::exp(params.log_scale[i]) * rng.normal();
  return theta;
}

double log_density(const ProposalParams& params, std::span<const double> theta) {
  require(theta.size() == params.dim(), "log_density: dimension mismatch");
  double acc = 0.0;
  for (std::size_t i = 0; i < theta.size(); ++i) {
    const double z = (theta[i] - params.mean[i]) * std::exp(-params.log_scale[i]);
    acc += -0.5 * kLog2Pi - params.log_scale[i] - 0.5 * z * z;
  }
  return acc;
}

Vec score(const ProposalParams& params, std::span<const double> theta) {
  require(theta.size() == params.dim(), "score: dimension mismatch");
  const std::size_t d = params.dim();
  Vec g(2 * d);
  for (std::size_t i = 0; i < d; ++i) {
    const double inv_sigma = std::exp(-params.log_scale[i]);
    const double z = (theta[i] - params.mean[i]) * inv_sigma;
    g[i] = z * inv_sigma;
    g[d + i] = z * z - 1.0;
  }
  return g;
}

double entropy(const ProposalParams& params) {
  // 0.5*log(2*pi*e) per dimension plus the log standard deviations.
  double h = 0.5 * (kLog2Pi + 1.0) * static_cast<double>(params.dim());
  for (double ls : params.log_scale) h += ls;
  return h;
}

Vec entropy_grad(const ProposalParams& params) {
  const std::size_t d = params.dim();
  Vec g(2 * d, 0.0);
  for (std::size_t i = 0; i < d; ++i) g[d + i] = 1.0;
  return g;
}

nlohmann::json proposal_to_json(const ProposalParams& params) {
  return nlohmann::json{{"mean", params.mean}, {"log_scale", params.log_scale}};
}

ProposalParams proposal_from_json(const nlohmann::json& j) {
  ProposalParams p;
  p.mean = j.at("mean").get<Vec>();
  p.log_scale = j.at("log_scale").get<Vec>();
  require(p.valid(), "proposal_from_json: invalid parameters");
  return p;
}

}  // namespace avo
