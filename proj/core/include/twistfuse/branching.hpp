#pragma once

#include "twistfuse/formal_combination.hpp"
#include "twistfuse/signature.hpp"

namespace twistfuse {

// Tensor products with the exterior powers V_k = Lambda^k C^{2N}, classically
// and at level l. All outputs are in canonical order; GLSignature outputs are
// normalized.

/// V_f (x) V_k: f plus a vertical k-strip, rows <= 2N. Multiplicity free.
FormalCombination<GLSignature> pieri_classical(const GLSignature& f, int k,
                                               const LevelContext& ctx);

/// H_f (x) H_k: pieri_classical with every g of width g_1 - g_2N > l dropped.
/// A vertical strip widens a signature by at most one, so no reflection
/// terms arise.
FormalCombination<GLSignature> pieri_level(const GLSignature& f, int k,
                                           const LevelContext& ctx);

/// V_k (x) W_h for Sp(N): for each split p + q = k, add a vertical p-strip
/// to h (within N rows) and remove a vertical q-strip. The multiplicity of g
/// counts the (p, f) witnesses.
FormalCombination<SpSignature> sundaram_classical(const SpSignature& h, int k,
                                                  const LevelContext& ctx);

/// H_k boxtimes K_h. Terms of sundaram_classical with g_1 + g_2 <= l are kept;
/// those on the wall g_1 + g_2 = l + 1 vanish; those at l + 2 are reflected
/// to (l+1-g_2, l+1-g_1, g_3, ...) and subtracted. Throws InternalError if
/// anything lands beyond a single reflection or a multiplicity goes
/// negative.
FormalCombination<SpSignature> sundaram_level(const SpSignature& h, int k,
                                              const LevelContext& ctx);

}  // namespace twistfuse
