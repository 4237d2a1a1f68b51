#pragma once

#include <complex>
#include <vector>

namespace dho::fourier {

using complexd = std::complex<double>;

// Derivative of a periodic sequence: samples at x_j = j * period / M,
// j = 0..M-1; returns df/dx at the nodes (Nyquist mode dropped).
std::vector<complexd> derivative_periodic(const std::vector<complexd>& samples,
                                          double period);

// Partial derivative of a row-major ny x nx grid along axis 0 (x, contiguous)
// or axis 1 (y), treating the grid as periodic with the given box lengths.
std::vector<complexd> partial_derivative_2d(const std::vector<complexd>& grid,
                                            int nx, int ny, double length_x,
                                            double length_y, int axis);

} // namespace dho::fourier
