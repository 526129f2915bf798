#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace freshcsma {

enum class TheoremCheck { Thm1, Lemma1, Lemma2, Thm3, Thm4, Thm5 };

std::string_view to_string(TheoremCheck t);
TheoremCheck parse_theorem_check(std::string_view name);
std::vector<TheoremCheck> all_theorem_checks();

/// trials means random states for the deterministic checks (thm1, thm5,
/// lemma2; default 10^4) and Monte Carlo samples per case for the others
/// (lemma1, thm3, thm4; default 10^5).
struct VerifyOptions {
  std::optional<std::uint64_t> trials;
  std::uint64_t seed = 1;
  std::size_t n_sources = 10;
  double delta = 0.1;
  /// thm1/thm5: defaults to the match threshold for (N, delta).
  std::optional<double> alpha;
  double sigma = 3.0;
};

/// One checked case. margin >= 0 means it passed.
struct VerifyCase {
  std::string label;
  double margin = 0.0;
  bool passed = true;
};

struct VerifyReport {
  TheoremCheck check = TheoremCheck::Thm1;
  std::vector<VerifyCase> cases;
  std::uint64_t failures = 0;
  double worst_margin = 0.0;
  std::string worst_label;

  bool passed() const { return failures == 0 && !cases.empty(); }
};

VerifyReport verify(TheoremCheck check, const VerifyOptions& options = {});

}  // namespace freshcsma
