#pragma once
#include <cstddef>
#include <cstdint>
#include <vector>

namespace hyp5 {

using Perm = std::vector<int>;

Perm perm_identity(int degree);
Perm perm_compose(const Perm& a, const Perm& b);  // apply a, then b
Perm perm_inverse(const Perm& a);
bool perm_is_identity(const Perm& a);

// Deterministic (non-randomized) Schreier-Sims stabilizer chain. Degree is
// capped at 1024; base points and transversals depend only on the generator
// list, so downstream data is reproducible.
class PermutationGroup {
 public:
  PermutationGroup(int degree, std::vector<Perm> gens);

  int degree() const { return deg_; }
  const std::vector<Perm>& generators() const { return gens_; }
  std::uint64_t order() const;
  bool contains(const Perm& g) const;

 private:
  struct Level {
    int base = 0;
    std::vector<Perm> strong;
    std::vector<int> orbit;              // discovery order, orbit[0] == base
    std::vector<Perm> transversal;       // transversal[i] maps base to orbit[i]
    std::vector<int> where;              // point -> index in orbit, or -1
  };

  void add_level(int base);
  void recompute_orbit(std::size_t l);
  Perm sift(Perm g, std::size_t from, std::size_t* stop) const;
  void place(const Perm& g, std::size_t lo);

  int deg_ = 0;
  std::vector<Perm> gens_;
  std::vector<Level> levels_;
};

// Orbit partition of {0..degree-1}; orbits sorted, listed by smallest element.
std::vector<std::vector<int>> point_orbits(int degree, const std::vector<Perm>& gens);

// BFS orbit of a vertex set under elementwise action; sets canonicalized by
// sorting, output in discovery order. Throws when the orbit exceeds cap.
std::vector<std::vector<int>> set_orbit(const std::vector<Perm>& gens, std::vector<int> seed,
                                        std::size_t cap);

// Unordered pair of vertex sets, canonicalized as two sorted sets in
// lexicographic order.
struct SetPair {
  std::vector<int> a, b;
  bool operator==(const SetPair&) const = default;
};
std::vector<SetPair> set_pair_orbit(const std::vector<Perm>& gens, SetPair seed, std::size_t cap);

// |g| / |orbit(seed)| with a divisibility check.
std::uint64_t set_stabilizer_order(const PermutationGroup& g, const std::vector<int>& seed,
                                   std::size_t cap);

}  // namespace hyp5
