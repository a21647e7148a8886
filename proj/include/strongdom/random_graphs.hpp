#pragma once

#include <cstdint>
#include <random>

#include "strongdom/graph.hpp"
#include "strongdom/ops.hpp"

namespace strongdom {

// All randomized harness code draws from a shared mt19937_64 stream through
// the helpers below, never through std distributions, so a seed reproduces
// the same instances on every platform.
using Rng = std::mt19937_64;

// Uniform in [lo, hi] (inclusive).
int uniform_int(Rng& rng, int lo, int hi);

// True with probability p, using an explicit 53-bit uniform.
bool chance(Rng& rng, double p);

// One of {0.2, 0.5, 0.8}.
double pick_density(Rng& rng);

// Erdos-Renyi G(n, p).
Graph erdos_renyi(Rng& rng, int n, double p);

// G(n, p) sample made connected by linking components with random edges.
Graph random_connected_graph(Rng& rng, int n, double p);

// Connected parts of mixed density with uniformly chosen identified edges,
// oriented so that x1 and x2 are not pendant. min_n >= 3.
HajosSpec random_hajos_spec(Rng& rng, int min_n, int max_n);

// k in [min_k, max_k] parts of mixed density (not necessarily connected);
// centres are drawn uniformly from the non-isolated vertices, the domain on
// which the vertex-sum lower bound is valid. min_n >= 2.
VertexSumSpec random_vsum_spec(Rng& rng, int min_k, int max_k, int min_n, int max_n);

} // namespace strongdom
