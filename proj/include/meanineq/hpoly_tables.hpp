#pragma once

#include <array>

namespace meanineq::tables {

// Coefficient tables shared by the convexity certificates (as s_i(x), half
// powers of x read as powers of u = sqrt(x)) and the positivity kernel (as
// h_i(t) = s_i(t^2)). Ascending degree. Checksums: h1(1)=56, h2(1)=288,
// h3(1)=416.
inline constexpr std::array<long, 11> h1 = {2, 2, -27, 75, -123, 198, -123, 75, -27, 2, 2};

inline constexpr std::array<long, 17> h2 = {1, 4,  -6, 0,  -12, 0,  14, 92, 102,
                                            92, 14, 0,  -12, 0,  -6, 4,  1};

inline constexpr std::array<long, 23> h3 = {1,  4,  -6,  4,  1,  -12, -45, -36,
                                            30, 144, 99, 48, 99, 144, 30,  -36,
                                            -45, -12, 1,  4,  -6, 4,  1};

} // namespace meanineq::tables
