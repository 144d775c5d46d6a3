#include "hyp5/textio.hpp"

#include <fstream>
#include <sstream>

#include "hyp5/errors.hpp"

namespace hyp5 {

void write_matrix(std::ostream& os, const BitMatrix& m) {
  os << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) os << m.row_string(r) << '\n';
}

BitMatrix read_matrix(std::istream& is) {
  std::size_t rows = 0, cols = 0;
  if (!(is >> rows >> cols)) throw IoError("matrix header must be \"rows cols\"");
  std::vector<std::string> lines;
  lines.reserve(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    std::string s;
    if (!(is >> s)) throw IoError("truncated matrix body");
    if (s.size() != cols) throw IoError("matrix row length differs from header");
    lines.push_back(std::move(s));
  }
  if (rows == 0) return BitMatrix(0, cols);
  return BitMatrix::from_strings(lines);
}

void write_matrix_file(const std::string& path, const BitMatrix& m) {
  std::ofstream f(path);
  if (!f) throw IoError("cannot open for writing: " + path);
  write_matrix(f, m);
}

BitMatrix read_matrix_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot open for reading: " + path);
  return read_matrix(f);
}

}  // namespace hyp5
