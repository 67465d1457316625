#include "latcover/halfspace.hpp"

#include <sstream>

#include "latcover/error.hpp"

namespace latcover {

std::string Halfspace::str() const {
  std::ostringstream os;
  os << normal.str() << " . x <= " << offset.str();
  return os.str();
}

Halfspace canonicalize(const Halfspace& h) {
  if (h.normal.is_zero()) throw Error(Errc::ZeroNormal, "halfspace with zero normal");
  // scale = lcm(denominators) / gcd(numerators) of the normal entries
  Int den_lcm(1), num_gcd(0);
  for (int i = 0; i < h.normal.dim(); ++i) {
    const Rat& x = h.normal[i];
    if (x.is_zero()) continue;
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.den().get_mpz_t());
    Int an = ::abs(x.num());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), an.get_mpz_t());
  }
  Rat scale(den_lcm, num_gcd);
  Vec n(h.normal.dim());
  for (int i = 0; i < h.normal.dim(); ++i) n[i] = h.normal[i] * scale;
  return Halfspace(std::move(n), h.offset * scale);
}

}  // namespace latcover
