#ifndef LRSOLVE_MATRIX_IO_HPP_
#define LRSOLVE_MATRIX_IO_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "lrsolve/linalg.hpp"

namespace lrsolve {

// csv: one row per line, comma-separated, no header.
// dense_text: first line "rows cols", then rows lines of space-separated values.
enum class MatrixFormat { csv, dense_text };

std::optional<MatrixFormat> parse_matrix_format(std::string_view name);
const char* format_name(MatrixFormat format);

// %.17g: round-trip safe for IEEE doubles.
std::string format_value(double v);

DenseMatrix parse_matrix(const std::string& content, MatrixFormat format,
                         const std::string& origin);
std::string render_matrix(const DenseMatrix& m, MatrixFormat format);

DenseMatrix read_matrix(const std::filesystem::path& path, MatrixFormat format);
void write_matrix(const std::filesystem::path& path, const DenseMatrix& m,
                  MatrixFormat format);

}  // namespace lrsolve

#endif  // LRSOLVE_MATRIX_IO_HPP_
