#include <fstream>
#include <iostream>
#include <sstream>

#include "irbar/errors.hpp"
#include "irbar/imatrix.hpp"

namespace irbar {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

}  // namespace

IMatrix parse_matrix(std::string_view text) {
  std::vector<std::vector<Interval>> rows;
  std::size_t line_no = 0;
  std::size_t first_row_line = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    std::vector<Interval> row;
    std::size_t pos = 0;
    while (pos < line.size()) {
      while (pos < line.size() && is_space(line[pos])) ++pos;
      if (pos >= line.size()) break;
      std::size_t tok_end = pos;
      while (tok_end < line.size() && !is_space(line[tok_end])) ++tok_end;
      try {
        row.push_back(parse_interval(line.substr(pos, tok_end - pos)));
      } catch (const ParseError& e) {
        throw ParseError(e.reason(), line_no, pos + e.column());
      }
      pos = tok_end;
    }
    if (!row.empty()) {
      if (rows.empty()) first_row_line = line_no;
      if (!rows.empty() && row.size() != rows.front().size()) {
        throw ParseError("row has " + std::to_string(row.size()) + " entries, expected " +
                             std::to_string(rows.front().size()),
                         line_no, 1);
      }
      rows.push_back(std::move(row));
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  if (rows.empty()) throw ParseError("no matrix rows", line_no, 1);
  if (rows.size() != rows.front().size()) {
    throw ParseError("matrix is " + std::to_string(rows.size()) + "x" + std::to_string(rows.front().size()) +
                         ", expected square",
                     first_row_line, 1);
  }
  return IMatrix::from_rows(rows);
}

IMatrix read_matrix_file(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::InvalidArgument, "cannot open " + path);
    buf << in.rdbuf();
  }
  return parse_matrix(buf.str());
}

std::string format_matrix(const IMatrix& a) {
  std::string out;
  for (std::size_t i = 0; i < a.order(); ++i) {
    for (std::size_t j = 0; j < a.order(); ++j) {
      if (j) out += ' ';
      out += format_interval(a(i, j));
    }
    out += '\n';
  }
  return out;
}

}  // namespace irbar
