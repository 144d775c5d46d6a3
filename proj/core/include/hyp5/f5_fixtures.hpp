#pragma once
#include "hyp5/f5.hpp"

namespace hyp5 {

// Printed generator matrices over F5, transcribed once and checksummed:
// alpha..eps generate Q (order 9360000) and preserve K = diag(1,1,1,1,3);
// L1, L2 generate the order-125 subgroup L.
struct F5Fixtures {
  F5Matrix alpha, beta, gamma, delta, eps;
  F5Matrix K;
  F5Matrix L1, L2;
};

const F5Fixtures& f5_fixtures();

}  // namespace hyp5
