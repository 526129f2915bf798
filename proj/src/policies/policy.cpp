#include "freshcsma/policies/policy.hpp"

#include <numeric>

#include "freshcsma/core/error.hpp"

namespace freshcsma {

namespace {

std::uint32_t instance_of(PolicyKind kind) { return static_cast<std::uint32_t>(kind); }

}  // namespace

Policy::Policy(PolicyKind kind, std::vector<double> weights, BackoffParams params,
               std::uint64_t seed)
    : kind_(kind),
      traits_(freshcsma::traits(kind)),
      weights_(std::move(weights)),
      params_(params),
      tie_stream_(seed, substream_id(StreamRole::TieBreak, instance_of(kind), 0)),
      central_stream_(seed, substream_id(StreamRole::CentralSampler, instance_of(kind), 0)) {
  if (weights_.empty()) throw ParameterError("at least one source is required");
  params_.validate();
  source_streams_.reserve(weights_.size());
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    source_streams_.emplace_back(
        seed, substream_id(StreamRole::SourceTimer, instance_of(kind), static_cast<std::uint32_t>(i)));
  }
  if (kind_ == PolicyKind::StationaryRandomizedOptimal) {
    sr_cumulative_ = stationary_randomized_probs(weights_);
    std::partial_sum(sr_cumulative_.begin(), sr_cumulative_.end(), sr_cumulative_.begin());
  }
}

const Decision& Policy::decide(const AgeState& ages, std::span<const std::int64_t> aoii) {
  if (ages.size() != weights_.size()) throw ParameterError("state size does not match policy");
  decision_.scheduled.reset();
  switch (kind_) {
    case PolicyKind::MaxWeight:
      decision_.scheduled = max_weight_decide(ages, weights_, tie_stream_);
      break;
    case PolicyKind::StationaryRandomizedOptimal:
      decision_.scheduled = sample_from_cumulative(sr_cumulative_, central_stream_);
      break;
    case PolicyKind::MaxAoii:
      if (aoii.size() != weights_.size()) throw ParameterError("max-AoII needs AoII values");
      decision_.scheduled = max_aoii_decide(aoii, tie_stream_);
      break;
    case PolicyKind::IdealizedCsma:
    case PolicyKind::IdealizedFreshCsma:
    case PolicyKind::NearRealisticFreshCsma:
    case PolicyKind::IdealizedFreshCsmaAoii:
    case PolicyKind::NearRealisticFreshCsmaAoii:
      fill_fresh_csma_timers(source_streams_, ages, weights_, params_, traits_.model,
                             traits_.input, aoii, decision_.timers);
      break;
  }
  return decision_;
}

}  // namespace freshcsma
