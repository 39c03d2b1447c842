#include "hermipd/interpolation.hpp"

#include <stdexcept>

namespace hermipd {

RingElement interpolate(const HermitianCode& code,
                        std::span<const Fq> received) {
  if (int(received.size()) != code.n)
    throw std::invalid_argument("interpolate: word length != n");
  auto coeffs = code.interp_cache.solve(code.field, received);
  if (!coeffs)
    throw std::logic_error("interpolate: inconsistent system");  // rank is n
  RingElement R = ring_zero(code.q);
  for (std::size_t j = 0; j < coeffs->size(); ++j)
    if ((*coeffs)[j] != 0) ring_set_coeff(R, code.interp_basis[j], (*coeffs)[j]);
  return R;
}

}  // namespace hermipd
