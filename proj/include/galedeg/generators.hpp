#pragma once
// Built-in example families and seeded random configurations. Every generator
// is deterministic in its arguments (and seed, where one is taken), so the
// same invocation always reproduces the same file.

#include <string>
#include <vector>

#include "galedeg/configuration.hpp"
#include "galedeg/rng.hpp"

namespace galedeg {

// Convex pentagon with rational vertices, degree 1.
PointConfiguration pentagon_config();

// k-fold iterated join of that pentagon: 5k points in dimension 3k - 1,
// degree k. Requires 1 <= k <= 3.
PointConfiguration pentagon_join_config(int k);

// One point at the origin, the doubled standard basis of R^d, and the lifted
// pairs e_i +- e_{d+1}: 3d + 1 points in dimension d + 1, degree 2 for d >= 2.
PointConfiguration lifted_config(int d);

// Prism over the standard (d-1)-simplex: labels 0..d-1 on the bottom copy,
// d..2d-1 on the top, matching labels vertically adjacent. Requires d >= 2.
PointConfiguration prism_config(int d);

// Standard d-simplex with the midpoint of each edge at vertex 0: labels 0..d
// are the vertices (0 is the common vertex), d+i the midpoint toward vertex i.
PointConfiguration edge_simplex_config(int d);

// Lawrence-type vector configuration of rank r with n vectors in opposite-ray
// pairs at adjacent labels (2i, 2i+1). Requires n even and n >= 2r >= 2.
VectorConfiguration lawrence_config(int r, int n, Rng& rng);

// n distinct points with integer coordinates in [-9, 9] affinely spanning
// R^d, by rejection. Requires n >= d + 1.
PointConfiguration rand_points(std::size_t n, std::size_t d, Rng& rng);

// Named dispatch used by the command line: pentagon, pentagon-join k,
// lifted d, prism d, edge-simplex d, lawrence r n, random n d. Returns the
// serialized configuration text.
std::string generate(const std::string& name, const std::vector<std::string>& args,
                     std::uint64_t seed);

} // namespace galedeg
