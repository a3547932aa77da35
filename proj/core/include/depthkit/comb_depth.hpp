#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "depthkit/perm_group.hpp"

namespace depthkit {

struct CombDepthOptions {
  std::size_t cap = 8;
  std::size_t max_group_order = 48;
};

struct CombDepthResult {
  // Least verified depth <= cap; empty when none holds up to cap.
  std::optional<std::size_t> depth;
  // cap + 1 when depth is empty, otherwise equal to *depth.
  std::size_t lower_bound = 0;
  bool normal = false;
  // H = G. Reported as depth 1 by the central-projectivity convention; the
  // depth-1 biset condition is not evaluated.
  bool improper_pair = false;
};

// Brute-force combinatorial depth d_c(H, G). Depth <= 2n holds iff every
// intersection H ∩ x_1Hx_1^-1 ∩ ... ∩ x_nHx_n^-1 is also an intersection of
// H with n-1 conjugates; depth <= 2n-1 (n > 1) additionally asks that y_1 can
// be chosen to act like x_1 by conjugation on that intersection.
// Throws ValidationError (H not in G, cap < 2) or ResourceError (|G| guard).
CombDepthResult combinatorial_depth(PermGroup const& g, PermGroup const& h,
                                    CombDepthOptions const& options = {});

// 2 [G : N_G(H)].
std::size_t normalizer_bound(PermGroup const& g, PermGroup const& h);

std::string to_json(CombDepthResult const& result, std::size_t normalizer_bound,
                    bool pretty = false);

}  // namespace depthkit
