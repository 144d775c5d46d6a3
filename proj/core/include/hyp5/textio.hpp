#pragma once
#include <iosfwd>
#include <string>

#include "hyp5/bitmatrix.hpp"

namespace hyp5 {

// Text matrix format: first line "rows cols", then one contiguous 0/1
// string per row. Used everywhere a matrix crosses the CLI boundary.
void write_matrix(std::ostream& os, const BitMatrix& m);
BitMatrix read_matrix(std::istream& is);
void write_matrix_file(const std::string& path, const BitMatrix& m);
BitMatrix read_matrix_file(const std::string& path);

}  // namespace hyp5
