#pragma once

#include "mtc/grid.hpp"

#include <functional>

// Conversion between nodal values at the collocation nodes and MTC
// coefficients.  The forward map is the Gauss-type quadrature
//
//   a_k = pi/(4*ell*p) * sum_m (ell^2 + 4 x_m^2) phi_k(x_m) f(x_m),
//
// the inverse evaluates the truncated expansion at the nodes.  Both have a
// direct O(p^2) reference and an O(p log p) path through one complex FFT of
// length 2p (any p, not just powers of two).

namespace mtc {

SpectralField forward_naive(const NodalField& v, const BasisGrid& g);
SpectralField forward(const NodalField& v, const BasisGrid& g);

NodalField inverse_naive(const SpectralField& a, const BasisGrid& g);
NodalField inverse(const SpectralField& a, const BasisGrid& g);

// Sample f at the nodes and apply the forward transform.  The resulting
// expansion interpolates f at every node.
SpectralField interpolate(const std::function<double(double)>& f,
                          const BasisGrid& g);

}  // namespace mtc
