#pragma once
#include <cstdint>

#include "hyp5/bitmatrix.hpp"

namespace hyp5 {

// Fixture data transcribed once; guarded by fnv1a checksums at load.
struct QrCodeTables {
  BitMatrix A;  // 9 x 17
  BitMatrix B;  // 8 x 17
  BitMatrix R;  // 9 x 9, cyclic shift: R * A_i = A_{i+1 mod 17}
  BitVec w;     // length 9, w * A = u_17
};

// Shared immutable instance; verifies checksums and the four table
// invariants (duality, shift, witness) on first use.
const QrCodeTables& qr_tables();

std::uint64_t fnv1a_rows(const BitMatrix& m);

enum class TypeSign { Plus, Minus };

// + iff k is a square mod 17, i.e. k mod 17 in {1,2,4,8,9,13,15,16}.
TypeSign classify_type(int k);  // throws InvalidArgumentError when 17 | k

// 9 x 17 matrix whose column j is A_{k^{-1} j mod 17}.
BitMatrix build_shifted_family(int k);  // throws InvalidArgumentError when 17 | k

struct Code13Result {
  BitMatrix generator;  // 4 x 13, systematic [I4 | X]
  BitMatrix dual;       // 9 x 13 kernel basis; columns serve as colors
};

// First X (row-major lexicographic over 4 rows of 9 bits) making the row
// space of [I4 | X] have minimum distance >= 6. Deterministic.
Code13Result find_code_13_4_6();

}  // namespace hyp5
