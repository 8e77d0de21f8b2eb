#pragma once

#include "hitchin/surface_complex.hpp"

namespace hitchin {

/// Dual of the fundamental triangulation: the prism over a (2g+2)-cycle.
/// Upper ring vertices carry edges "au<k>" (T^u_k -> T^u_{k+1}), the lower
/// ring "al<k>", and rung "d<k>" joins T^u_k to T^l_k. Faces "inf+" and
/// "inf-" are the two rings; "0+" and "0-" alternate rungs and ring edges.
/// Throws GenusTooSmall for g < 3.
GluedSurface build_triangulation(int genus);

/// Contracts au1, au3, au5, au7 and al0, al2, al4, al6. Throws
/// InvariantViolation unless the result has 4g-4 vertices, 6g-2 edges,
/// 4 faces and is a simple graph.
GluedSurface contract_scheme(const GluedSurface& triangulation);

}  // namespace hitchin
