#include "crr/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "crr/errors.hpp"

namespace crr {

namespace {

// Line-oriented reader that tracks the current line number for diagnostics.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  std::string next(const char* what) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      return line;
    }
    throw ParseError(std::string("unexpected end of file, expected ") + what, line_);
  }

  std::size_t line() const { return line_; }

 private:
  std::istream& in_;
  std::size_t line_ = 0;
};

std::size_t parse_count(LineReader& r, const std::string& key) {
  const std::string line = r.next(key.c_str());
  std::istringstream ls(line);
  std::string k;
  long long v = -1;
  ls >> k >> v;
  std::string extra;
  if (k != key || v < 0 || (ls >> extra))
    throw ParseError("expected '" + key + " <count>', got '" + line + "'", r.line());
  return static_cast<std::size_t>(v);
}

void expect_marker(LineReader& r, const std::string& marker) {
  const std::string line = r.next(marker.c_str());
  if (line != marker)
    throw ParseError("expected '" + marker + "', got '" + line + "'", r.line());
}

BitMatrix parse_block(LineReader& r, std::size_t rows, std::size_t cols) {
  BitMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const std::string line = r.next("matrix row");
    if (line.size() != cols)
      throw ParseError("row has " + std::to_string(line.size()) + " cells, expected " +
                           std::to_string(cols),
                       r.line());
    for (std::size_t j = 0; j < cols; ++j) {
      if (line[j] == '1')
        m.set(i, j, true);
      else if (line[j] != '0')
        throw ParseError(std::string("matrix cell must be 0 or 1, got '") + line[j] + "'",
                         r.line());
    }
  }
  return m;
}

}  // namespace

void write_instance(const CrrInstance& inst, std::ostream& out) {
  out << "crr 1\n";
  out << "n " << inst.n() << '\n';
  out << "m " << inst.m() << '\n';
  out << "S\n" << inst.s().to_lines();
  out << "R\n" << inst.r().to_lines();
}

CrrInstance read_instance(std::istream& in) {
  LineReader r(in);
  expect_marker(r, "crr 1");
  const std::size_t n = parse_count(r, "n");
  const std::size_t m = parse_count(r, "m");
  expect_marker(r, "S");
  BitMatrix s = parse_block(r, n, n);
  expect_marker(r, "R");
  BitMatrix row = parse_block(r, m, m);
  return CrrInstance(std::move(s), std::move(row));
}

void write_sb(const SbInstance& sb, std::ostream& out) {
  out << "sb 1\n";
  out << "n " << sb.s.rows() << '\n';
  out << "m " << sb.s.cols() << '\n';
  out << "k " << sb.k << '\n';
  out << "S\n" << sb.s.to_lines();
}

SbInstance read_sb(std::istream& in) {
  LineReader r(in);
  expect_marker(r, "sb 1");
  const std::size_t n = parse_count(r, "n");
  const std::size_t m = parse_count(r, "m");
  const std::size_t k = parse_count(r, "k");
  expect_marker(r, "S");
  return SbInstance{parse_block(r, n, m), k};
}

void write_solution(const Reconstruction& rec, std::ostream& out) {
  out << "sol 1\n";
  out << "E\n" << rec.e.to_lines();
  out << "P\n" << rec.p.to_lines();
}

Reconstruction read_solution(std::istream& in) {
  LineReader r(in);
  expect_marker(r, "sol 1");
  expect_marker(r, "E");
  std::vector<std::string> e_rows;
  std::string line;
  while (true) {
    line = r.next("E row or 'P'");
    if (line == "P") break;
    e_rows.push_back(line);
  }
  const std::size_t n = e_rows.size();
  const std::size_t m = n ? e_rows[0].size() : 0;
  BitMatrix e(n, m);
  for (std::size_t i = 0; i < n; ++i) {
    if (e_rows[i].size() != m) throw ParseError("ragged E block");
    for (std::size_t a = 0; a < m; ++a) {
      if (e_rows[i][a] == '1')
        e.set(i, a, true);
      else if (e_rows[i][a] != '0')
        throw ParseError("matrix cell must be 0 or 1");
    }
  }
  // P has m rows; its width comes from the data so the same container also
  // carries rectangular factor pairs (Set Basis extraction output).
  std::vector<std::string> p_rows;
  for (std::size_t a = 0; a < m; ++a) p_rows.push_back(r.next("P row"));
  const std::size_t p_cols = m ? p_rows[0].size() : 0;
  BitMatrix p(m, p_cols);
  for (std::size_t a = 0; a < m; ++a) {
    if (p_rows[a].size() != p_cols) throw ParseError("ragged P block");
    for (std::size_t j = 0; j < p_cols; ++j) {
      if (p_rows[a][j] == '1')
        p.set(a, j, true);
      else if (p_rows[a][j] != '0')
        throw ParseError("matrix cell must be 0 or 1");
    }
  }
  return Reconstruction{std::move(e), std::move(p)};
}

std::string sniff_format(std::istream& in) {
  std::string tok;
  in >> tok;
  in.seekg(0);
  return tok;
}

std::string slurp_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write file: " + path);
  out << content;
}

}  // namespace crr
