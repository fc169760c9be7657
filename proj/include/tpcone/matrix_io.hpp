#pragma once

#include <iosfwd>
#include <string>

#include "tpcone/matrix.hpp"

namespace tpcone {

// Text matrix format: one row per line, whitespace-separated entries,
// comment lines start with '#', blank lines ignored, dimensions inferred.
Matrix read_matrix(std::istream& in);
Matrix read_matrix_file(const std::string& path);
Matrix parse_matrix(const std::string& text);

void write_matrix(std::ostream& out, const Matrix& a);
void write_matrix_file(const std::string& path, const Matrix& a);

}  // namespace tpcone
