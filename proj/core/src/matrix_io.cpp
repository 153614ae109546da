#include "lrsolve/matrix_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

namespace lrsolve {

namespace {

double parse_number(const std::string& token, const std::string& origin,
                    std::size_t line_no) {
  const char* begin = token.c_str();
  char* end = nullptr;
  errno = 0;
  const double value = std::strtod(begin, &end);
  while (end != nullptr && (*end == ' ' || *end == '\t' || *end == '\r')) {
    ++end;
  }
  if (end == begin || (end != nullptr && *end != '\0')) {
    throw ParseError(origin + ":" + std::to_string(line_no) +
                     ": invalid number '" + token + "'");
  }
  if (!std::isfinite(value)) {
    throw ParseError(origin + ":" + std::to_string(line_no) +
                     ": non-finite value '" + token + "'");
  }
  return value;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(line.substr(start));
      break;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  return out;
}

bool is_blank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

DenseMatrix parse_csv(const std::string& content, const std::string& origin) {
  std::istringstream in(content);
  std::string line;
  std::vector<std::vector<double>> rows;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_blank(line)) {
      if (in.peek() == EOF) {
        break;  // tolerate a trailing newline
      }
      throw ParseError(origin + ":" + std::to_string(line_no) + ": blank row");
    }
    std::vector<double> row;
    for (const std::string& token : split(line, ',')) {
      row.push_back(parse_number(token, origin, line_no));
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw ParseError(origin + ":" + std::to_string(line_no) +
                       ": expected " + std::to_string(rows.front().size()) +
                       " columns, got " + std::to_string(row.size()));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) {
    throw ParseError(origin + ": empty matrix");
  }
  DenseMatrix m(static_cast<Index>(rows.size()),
                static_cast<Index>(rows.front().size()));
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
  }
  return m;
}

DenseMatrix parse_dense_text(const std::string& content, const std::string& origin) {
  std::istringstream in(content);
  std::string line;
  if (!std::getline(in, line)) {
    throw ParseError(origin + ": empty matrix");
  }
  std::istringstream header(line);
  long long rows = 0;
  long long cols = 0;
  std::string extra;
  if (!(header >> rows >> cols) || (header >> extra) || rows < 1 || cols < 1) {
    throw ParseError(origin + ":1: expected header 'rows cols'");
  }

  DenseMatrix m(static_cast<Index>(rows), static_cast<Index>(cols));
  std::size_t line_no = 1;
  for (Index i = 0; i < m.rows(); ++i) {
    if (!std::getline(in, line)) {
      throw ParseError(origin + ": expected " + std::to_string(rows) +
                       " data rows, got " + std::to_string(i));
    }
    ++line_no;
    std::istringstream fields(line);
    std::string token;
    for (Index j = 0; j < m.cols(); ++j) {
      if (!(fields >> token)) {
        throw ParseError(origin + ":" + std::to_string(line_no) +
                         ": expected " + std::to_string(cols) + " values");
      }
      m(i, j) = parse_number(token, origin, line_no);
    }
    if (fields >> token) {
      throw ParseError(origin + ":" + std::to_string(line_no) +
                       ": extra value '" + token + "'");
    }
  }
  while (std::getline(in, line)) {
    ++line_no;
    if (!is_blank(line)) {
      throw ParseError(origin + ":" + std::to_string(line_no) + ": extra data row");
    }
  }
  return m;
}

}  // namespace

std::optional<MatrixFormat> parse_matrix_format(std::string_view name) {
  if (name == "csv") {
    return MatrixFormat::csv;
  }
  if (name == "dense_text") {
    return MatrixFormat::dense_text;
  }
  return std::nullopt;
}

const char* format_name(MatrixFormat format) {
  return format == MatrixFormat::csv ? "csv" : "dense_text";
}

std::string format_value(double v) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", v);
  return buffer;
}

DenseMatrix parse_matrix(const std::string& content, MatrixFormat format,
                         const std::string& origin) {
  return format == MatrixFormat::csv ? parse_csv(content, origin)
                                     : parse_dense_text(content, origin);
}

std::string render_matrix(const DenseMatrix& m, MatrixFormat format) {
  std::string out;
  if (format == MatrixFormat::dense_text) {
    out += std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
  }
  const char sep = format == MatrixFormat::csv ? ',' : ' ';
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      if (j > 0) {
        out += sep;
      }
      out += format_value(m(i, j));
    }
    out += '\n';
  }
  return out;
}

DenseMatrix read_matrix(const std::filesystem::path& path, MatrixFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open '" + path.string() + "' for reading");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) {
    throw IoError("failed to read '" + path.string() + "'");
  }
  return parse_matrix(buffer.str(), format, path.string());
}

void write_matrix(const std::filesystem::path& path, const DenseMatrix& m,
                  MatrixFormat format) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError("cannot open '" + path.string() + "' for writing");
  }
  out << render_matrix(m, format);
  if (!out) {
    throw IoError("failed to write '" + path.string() + "'");
  }
}

}  // namespace lrsolve
