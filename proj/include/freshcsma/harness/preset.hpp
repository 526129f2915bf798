#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "freshcsma/harness/config.hpp"

namespace freshcsma {

/// Desk-scale N range used by presets that sweep the system size.
inline const std::vector<double> kPresetNRange{2, 5, 10, 20, 30};

std::vector<std::string> preset_names();

/// Figure-reproduction spec. Parameters stay formula-driven; n pins the
/// system size (collapsing an N sweep to that single point). Unknown names
/// throw ParameterError.
ExperimentSpec preset(const std::string& name, std::optional<std::size_t> n = std::nullopt,
                      LogBase log_base = LogBase::Ten);

}  // namespace freshcsma
