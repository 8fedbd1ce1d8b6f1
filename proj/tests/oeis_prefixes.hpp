#pragma once

// Locally stored leading terms of the OEIS entries the sequences correspond to.

#include <vector>

namespace triavg::testing {

// A061278
inline const std::vector<long> kA061278 = {0, 1, 5, 20, 76, 285, 1065, 3976, 14840, 55385, 206701};
// A001834
inline const std::vector<long> kA001834 = {1, 5, 19, 71, 265, 989, 3691, 13775, 51409, 191861};
// A001353
inline const std::vector<long> kA001353 = {0, 1, 4, 15, 56, 209, 780, 2911, 10864, 40545, 151316};
// A002531
inline const std::vector<long> kA002531 = {1, 1, 2, 5, 7, 19, 26, 71, 97, 265, 362, 989};

}  // namespace triavg::testing
