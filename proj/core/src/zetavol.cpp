#include "hyp5/zetavol.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "hyp5/errors.hpp"

namespace hyp5 {

namespace {

using Real = boost::multiprecision::cpp_bin_float_50;

struct Approx {
  Real v;
  Real err;  // absolute
};

Real power(const Real& x, const Real& e) {
  using boost::multiprecision::abs;
  using boost::multiprecision::floor;
  using boost::multiprecision::pow;
  if (e == floor(e) && abs(e) <= 200) {
    int n = e.convert_to<int>();
    Real p = pow(x, n < 0 ? -n : n);
    return n < 0 ? 1 / p : p;
  }
  return pow(x, e);
}

// Euler-Maclaurin Hurwitz zeta with four Bernoulli corrections; the error
// bound is twice the first omitted term plus 50-digit rounding slack.
Approx hurwitz_zeta(const Real& s, const Real& a, unsigned cutoff = 10000) {
  using boost::multiprecision::abs;
  Approx r{Real(0), Real(0)};
  for (unsigned k = 0; k < cutoff; ++k) r.v += 1 / power(a + k, s);
  const Real x = a + cutoff;
  r.v += power(x, 1 - s) / (s - 1) + power(x, -s) / 2;
  static const std::array<Real, 4> kBern2j = {Real(1) / 6, Real(-1) / 30,
                                              Real(1) / 42, Real(-1) / 30};
  Real poch = s;                   // s(s+1)...(s+2j-2)
  Real fact = 2;                   // (2j)!
  Real xp = power(x, -s - 1);      // x^{-s-2j+1}
  for (int j = 1; j <= 4; ++j) {
    r.v += kBern2j[std::size_t(j - 1)] / fact * poch * xp;
    poch *= (s + 2 * j - 1) * (s + 2 * j);
    fact *= (2 * j + 1) * (2 * j + 2);
    xp /= x * x;
  }
  r.err = abs(Real(5) / 66 / fact * poch * xp) * 2 + abs(r.v) * Real("1e-45");
  return r;
}

Approx zeta_em(const Real& s) { return hurwitz_zeta(s, 1); }

// L(s, chi_5) = 5^{-s} [zeta(s,1/5) + zeta(s,4/5) - zeta(s,2/5) - zeta(s,3/5)]
Approx l_chi5(const Real& s) {
  Approx z1 = hurwitz_zeta(s, Real(1) / 5);
  Approx z2 = hurwitz_zeta(s, Real(2) / 5);
  Approx z3 = hurwitz_zeta(s, Real(3) / 5);
  Approx z4 = hurwitz_zeta(s, Real(4) / 5);
  const Real f = power(Real(5), -s);
  return {f * (z1.v + z4.v - z2.v - z3.v), f * (z1.err + z2.err + z3.err + z4.err)};
}

Approx zeta_k0_impl(const Real& s) {
  using boost::multiprecision::abs;
  Approx z = zeta_em(s), l = l_chi5(s);
  return {z.v * l.v, z.err * abs(l.v) + l.err * abs(z.v) + z.err * l.err};
}

// ---- Arithmetic of x^4 - x^2 - 1 modulo p --------------------------------

using Poly = std::vector<std::uint64_t>;  // ascending coefficients, mod p

Poly trim(Poly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}
int deg(const Poly& a) { return int(a.size()) - 1; }

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  return trim(std::move(c));
}

// Remainder of a by monic-after-scaling b.
Poly poly_mod(Poly a, const Poly& b, std::uint64_t p) {
  a = trim(std::move(a));
  Poly bb = trim(b);
  std::uint64_t inv = pow_mod(bb.back(), p - 2, p);
  while (deg(a) >= deg(bb)) {
    std::uint64_t f = a.back() * inv % p;
    std::size_t off = a.size() - bb.size();
    for (std::size_t i = 0; i < bb.size(); ++i)
      a[off + i] = (a[off + i] + p * p - f * bb[i] % p) % p;
    a = trim(std::move(a));
    if (a.empty()) break;
  }
  return a;
}

Poly poly_divide_exact(Poly a, const Poly& b, std::uint64_t p) {
  a = trim(std::move(a));
  Poly bb = trim(b);
  std::uint64_t inv = pow_mod(bb.back(), p - 2, p);
  Poly q(a.size() >= bb.size() ? a.size() - bb.size() + 1 : 0, 0);
  while (deg(a) >= deg(bb)) {
    std::uint64_t f = a.back() * inv % p;
    std::size_t off = a.size() - bb.size();
    q[off] = f;
    for (std::size_t i = 0; i < bb.size(); ++i)
      a[off + i] = (a[off + i] + p * p - f * bb[i] % p) % p;
    a = trim(std::move(a));
  }
  if (!a.empty()) throw ConstructionMismatchError("polynomial division not exact");
  return trim(std::move(q));
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
  a = trim(std::move(a));
  b = trim(std::move(b));
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {  // monic normalization
    std::uint64_t inv = pow_mod(a.back(), p - 2, p);
    for (auto& c : a) c = c * inv % p;
  }
  return a;
}

Poly l2_poly(std::uint64_t p) {  // x^4 - x^2 - 1 mod p
  return {p - 1, 0, p - 1, 0, 1};
}

// Multiply two residues mod (x^4 - x^2 - 1), coefficients mod p.
std::array<std::uint64_t, 4> res_mul(const std::array<std::uint64_t, 4>& a,
                                     const std::array<std::uint64_t, 4>& b,
                                     std::uint64_t p) {
  std::array<std::uint64_t, 7> c{};
  for (int i = 0; i < 4; ++i) {
    if (!a[std::size_t(i)]) continue;
    for (int j = 0; j < 4; ++j)
      c[std::size_t(i + j)] =
          (c[std::size_t(i + j)] + a[std::size_t(i)] * b[std::size_t(j)]) % p;
  }
  // x^4 = x^2 + 1, x^5 = x^3 + x, x^6 = 2 x^2 + 1
  c[2] = (c[2] + c[4] + 2 * c[6]) % p;
  c[0] = (c[0] + c[4] + c[6]) % p;
  c[3] = (c[3] + c[5]) % p;
  c[1] = (c[1] + c[5]) % p;
  return {c[0], c[1], c[2], c[3]};
}

// x^p in F_p[x]/(x^4 - x^2 - 1).
std::array<std::uint64_t, 4> frobenius_of_x(std::uint64_t p) {
  std::array<std::uint64_t, 4> r{1, 0, 0, 0}, b{0, 1, 0, 0};
  std::uint64_t e = p;
  while (e) {
    if (e & 1) r = res_mul(r, b, p);
    b = res_mul(b, b, p);
    e >>= 1;
  }
  return r;
}

// Distinct-degree counts (n1, n2, n3, n4) for squarefree reduction (p != 2, 5).
std::array<int, 4> ddf_counts(std::uint64_t p) {
  const Poly f = l2_poly(p);
  const auto h = frobenius_of_x(p);  // x^p
  Poly hp{h[0], h[1], h[2], h[3]};
  Poly hx = trim(Poly{(h[0]) % p, (h[1] + p - 1) % p, h[2], h[3]});  // x^p - x
  Poly g1 = poly_gcd(hx, f, p);
  int n1 = std::max(deg(g1), 0);
  Poly f1 = n1 > 0 ? poly_divide_exact(f, g1, p) : f;

  // x^{p^2} = Frobenius applied to x^p: substitute via residue powers of h.
  std::array<std::uint64_t, 4> pw{1, 0, 0, 0}, h2{0, 0, 0, 0};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j)
      h2[std::size_t(j)] =
          (h2[std::size_t(j)] + h[std::size_t(i)] * pw[std::size_t(j)]) % p;
    pw = res_mul(pw, h, p);
  }
  Poly h2x = trim(Poly{h2[0], (h2[1] + p - 1) % p, h2[2], h2[3]});
  int n2 = 0;
  if (deg(f1) >= 2) {
    Poly g2 = poly_gcd(h2x, f1, p);
    n2 = std::max(deg(g2), 0) / 2;
  }
  int rest = deg(f1) - 2 * n2;
  return {n1, n2, rest == 3 ? 1 : 0, rest == 4 ? 1 : 0};
}

// Trial-division factorization for tiny p (the ramified primes 2 and 5):
// distinct monic irreducible factors with multiplicities.
std::vector<std::pair<Poly, int>> factor_tiny(std::uint64_t p) {
  Poly rem = l2_poly(p);
  std::vector<std::pair<Poly, int>> out;
  auto strip = [&](const Poly& g) {
    int mult = 0;
    while (deg(rem) >= deg(g)) {
      Poly r = poly_mod(rem, g, p);
      if (!r.empty()) break;
      rem = poly_divide_exact(rem, g, p);
      ++mult;
    }
    if (mult) out.emplace_back(g, mult);
  };
  for (std::uint64_t a = 0; a < p; ++a) strip(Poly{(p - a) % p, 1});
  for (std::uint64_t b = 0; b < p && deg(rem) >= 2; ++b)
    for (std::uint64_t c = 0; c < p && deg(rem) >= 2; ++c) {
      Poly g{c, b, 1};
      bool has_root = false;
      for (std::uint64_t x = 0; x < p; ++x)
        if ((x * x + b * x + c) % p == 0) has_root = true;
      if (!has_root) strip(g);
    }
  if (deg(rem) >= 1) out.emplace_back(rem, 1);  // leftover is irreducible
  return out;
}

// Dedekind's criterion at p: with fbar = prod g_i^{e_i}, g = prod g_i,
// h = fbar/g, T = (lift(g) lift(h) - f)/p, the order Z[theta] is p-maximal
// iff gcd(Tbar, g, h) = 1.
void certify_maximal_at(std::uint64_t p) {
  auto factors = factor_tiny(p);
  Poly g{1}, h{1};
  for (const auto& [gi, e] : factors) {
    g = poly_mul(g, gi, p);
    Poly pw{1};
    for (int i = 1; i < e; ++i) pw = poly_mul(pw, gi, p);
    h = poly_mul(h, pw, p);
  }
  // Integer product of the lifts, coefficients in [0, p).
  std::vector<long long> prod(g.size() + h.size() - 1, 0);
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < h.size(); ++j)
      prod[i + j] += (long long)g[i] * (long long)h[j];
  const long long fz[5] = {-1, 0, -1, 0, 1};
  Poly tbar;
  for (std::size_t i = 0; i < 5 || i < prod.size(); ++i) {
    long long coeff = (i < prod.size() ? prod[i] : 0) - (i < 5 ? fz[i] : 0);
    if (coeff % (long long)p != 0)
      throw ConstructionMismatchError("Dedekind lift is not divisible by p");
    long long t = (coeff / (long long)p) % (long long)p;
    if (t < 0) t += (long long)p;
    tbar.push_back((std::uint64_t)t);
  }
  Poly u = poly_gcd(poly_gcd(trim(tbar), g, p), h, p);
  if (deg(u) != 0)
    throw NotMaximalOrderError("Z[theta] is not maximal at p = " + std::to_string(p));
}

// Distinct residue degrees at p, ascending.
std::vector<int> splitting_degrees_impl(std::uint64_t p) {
  if (p < 2) throw InvalidArgumentError("p must be a prime");
  if (p == 2 || p == 5) {
    certify_maximal_at(p);
    std::vector<int> d;
    for (const auto& [gi, e] : factor_tiny(p)) d.push_back(deg(gi));
    std::sort(d.begin(), d.end());
    return d;
  }
  auto c = ddf_counts(p);
  std::vector<int> d;
  for (int k = 1; k <= 4; ++k)
    for (int i = 0; i < c[std::size_t(k - 1)]; ++i) d.push_back(k);
  return d;
}

Approx zeta_l2_impl(const Real& s, std::uint64_t cutoff) {
  using boost::multiprecision::abs;
  if (cutoff < 5) cutoff = 5;
  std::vector<bool> composite(cutoff + 1, false);
  Approx r{Real(1), Real(0)};
  for (std::uint64_t p = 2; p <= cutoff; ++p) {
    if (composite[p]) continue;
    for (std::uint64_t q = p * p; q <= cutoff; q += p) composite[q] = true;
    for (int dg : splitting_degrees_impl(p))
      r.v /= 1 - power(Real(p), -s * dg);
  }
  // Tail: log of the omitted factors is below 4 * sum_{n > cutoff} n^{-s}.
  const Real tail = 4 * power(Real(cutoff), 1 - s) / (s - 1);
  r.err = r.v * tail * 2 + r.v * Real("1e-44");
  return r;
}

ZetaValue to_value(const Approx& a) {
  ZetaValue z;
  z.value = a.v.convert_to<double>();
  double e = a.err.convert_to<double>();
  z.error_bound = e > 0 ? e : 1e-300;  // invariant: strictly positive
  z.digits = a.v.str(30);
  return z;
}

Real require_s(double s) {
  if (!(s > 1.0)) throw InvalidArgumentError("zeta arguments require s > 1");
  return Real(s);
}

Approx vol_p_uncached(std::uint64_t cutoff) {
  using boost::multiprecision::abs;
  using boost::multiprecision::pow;
  using boost::multiprecision::sqrt;
  const Real pi = boost::math::constants::pi<Real>();
  const Real pref = 9 * pow(sqrt(Real(5)), 15) / (32 * pow(pi, 15));
  Approx z2 = zeta_k0_impl(Real(2));
  Approx z3 = zeta_k0_impl(Real(3));
  Approx z4 = zeta_k0_impl(Real(4));
  Approx l2 = zeta_l2_impl(Real(3), cutoff);
  Real v = pref * z2.v * z4.v * l2.v / z3.v;
  Real rel = z2.err / abs(z2.v) + z3.err / abs(z3.v) + z4.err / abs(z4.v) +
             l2.err / abs(l2.v) + Real("1e-44");
  return {v, abs(v) * rel};
}

// The Euler product dominates the cost; every call for a given cutoff yields
// the identical value, so memoize behind a lock.
Approx vol_p_impl(std::uint64_t cutoff) {
  static std::mutex mu;
  static std::map<std::uint64_t, Approx> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(cutoff);
  if (it == cache.end()) it = cache.emplace(cutoff, vol_p_uncached(cutoff)).first;
  return it->second;
}

}  // namespace

ZetaValue zeta_riemann(double s) { return to_value(zeta_em(require_s(s))); }

ZetaValue zeta_k0(double s) { return to_value(zeta_k0_impl(require_s(s))); }

ZetaValue zeta_l2(double s, std::uint64_t prime_cutoff) {
  return to_value(zeta_l2_impl(require_s(s), prime_cutoff));
}

std::vector<int> l2_splitting_degrees(std::uint64_t p) {
  return splitting_degrees_impl(p);
}

ZetaValue vol_P(std::uint64_t prime_cutoff) {
  return to_value(vol_p_impl(prime_cutoff));
}

ZetaValue vol_of_prisms(std::uint64_t n, std::uint64_t prime_cutoff) {
  Approx v = vol_p_impl(prime_cutoff);
  return to_value({v.v * n, v.err * n});
}

}  // namespace hyp5
