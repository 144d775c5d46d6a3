#pragma once
#include <cstdint>
#include <string>
#include <vector>

namespace hyp5 {

// High-precision scalar with an honest absolute error bound.
struct ZetaValue {
  double value = 0.0;
  double error_bound = 0.0;
  std::string digits;  // 30 significant decimal digits
};

// Riemann zeta by Euler-Maclaurin; exposed for self-tests (zeta(2) = pi^2/6).
ZetaValue zeta_riemann(double s);

// Dedekind zeta of Q(sqrt 5): zeta(s) * L(s, chi_5) with chi_5 the quadratic
// character mod 5, each factor via Euler-Maclaurin Hurwitz sums.
ZetaValue zeta_k0(double s);

// Dedekind zeta of Q(sqrt phi) by an Euler product over rational primes.
// Local factors come from the splitting of x^4 - x^2 - 1 mod p; Z[theta] is
// certified maximal at the ramified primes {2, 5} by Dedekind's criterion
// (NotMaximalOrderError would be raised otherwise, never a silent guess).
ZetaValue zeta_l2(double s, std::uint64_t prime_cutoff = 4000000);

// Residue degrees of the distinct irreducible factors of x^4 - x^2 - 1 mod p,
// ascending (multiplicities dropped; they do not enter the zeta factor).
std::vector<int> l2_splitting_degrees(std::uint64_t p);

// vol(P) = 9 sqrt(5)^15 / (32 pi^15) * zk0(2) zk0(4) zl2(3) / zk0(3),
// and n * vol(P) with linearly propagated error.
ZetaValue vol_P(std::uint64_t prime_cutoff = 4000000);
ZetaValue vol_of_prisms(std::uint64_t n, std::uint64_t prime_cutoff = 4000000);

}  // namespace hyp5
