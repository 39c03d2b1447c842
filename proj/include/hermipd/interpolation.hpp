#pragma once

#include <span>

#include "hermipd/code.hpp"

namespace hermipd {

// The received-word interpolation polynomial: R with R(P_i) = r_i for all i
// and deg_H(R) <= n + 2g - 1.  Deterministic and linear in r (pivot solution
// of the cached factorization, free coordinates zero).
RingElement interpolate(const HermitianCode& code, std::span<const Fq> received);

}  // namespace hermipd
