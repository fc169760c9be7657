#include "tpcone/matrix_io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "tpcone/errors.hpp"

namespace tpcone {

Matrix read_matrix(std::istream& in) {
  std::vector<Vec> rows;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    Vec row;
    double v;
    while (ls >> v) row.push_back(v);
    if (!ls.eof()) throw InputError("matrix file: non-numeric token in row " +
                                    std::to_string(rows.size() + 1));
    if (row.empty()) continue;
    if (!rows.empty() && row.size() != rows.front().size())
      throw InputError("matrix file: ragged rows");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw InputError("matrix file: no data rows");
  const int r = static_cast<int>(rows.size());
  const int c = static_cast<int>(rows.front().size());
  Matrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < c; ++k) m(i, k) = rows[i][k];
  m.require_finite("matrix file");
  return m;
}

Matrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open matrix file: " + path);
  return read_matrix(in);
}

Matrix parse_matrix(const std::string& text) {
  std::istringstream in(text);
  return read_matrix(in);
}

void write_matrix(std::ostream& out, const Matrix& a) {
  out << std::setprecision(17);
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < a.cols(); ++k) {
      if (k) out << ' ';
      out << a(i, k);
    }
    out << '\n';
  }
}

void write_matrix_file(const std::string& path, const Matrix& a) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot open output file: " + path);
  write_matrix(out, a);
}

}  // namespace tpcone
