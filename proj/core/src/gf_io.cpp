#include "mrt/gf/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "mrt/util/error.hpp"

namespace mrt::gf {

void write_matrix(std::ostream& os, const Matrix& m) {
  const Field& f = m.field();
  os << "GFMAT " << f.characteristic() << ' ' << f.degree() << ' ' << m.rows() << ' ' << m.cols()
     << '\n';
  std::vector<std::uint8_t> digits(f.degree());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ' ';
      if (f.degree() == 1) {
        os << m.at(i, j);
      } else {
        f.digits_of(m.at(i, j), digits.data());
        for (unsigned d = 0; d < f.degree(); ++d) {
          if (d) os << '.';
          os << unsigned(digits[d]);
        }
      }
    }
    os << '\n';
  }
}

std::string format_matrix(const Matrix& m) {
  std::ostringstream os;
  write_matrix(os, m);
  return os.str();
}

namespace {

unsigned long parse_uint(const std::string& tok, const char* what) {
  if (tok.empty()) throw input_error(std::string("GFMAT: empty ") + what);
  for (char c : tok)
    if (c < '0' || c > '9') throw input_error(std::string("GFMAT: malformed ") + what + " '" + tok + "'");
  return std::stoul(tok);
}

}  // namespace

Matrix read_matrix(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw input_error("GFMAT: missing header line");
  std::istringstream hs(line);
  std::string tag, sp, sk, srows, scols, extra;
  if (!(hs >> tag >> sp >> sk >> srows >> scols) || tag != "GFMAT" || (hs >> extra))
    throw input_error("GFMAT: malformed header '" + line + "'");
  unsigned p = unsigned(parse_uint(sp, "characteristic"));
  unsigned k = unsigned(parse_uint(sk, "degree"));
  std::size_t rows = parse_uint(srows, "row count");
  std::size_t cols = parse_uint(scols, "column count");
  Field f = k == 1 ? Field::prime(p) : Field::extension(p, k);
  Matrix m(f, rows, cols);
  std::vector<std::uint8_t> digits(k);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!std::getline(is, line)) throw input_error("GFMAT: truncated matrix body");
    std::istringstream ls(line);
    std::string tok;
    for (std::size_t j = 0; j < cols; ++j) {
      if (!(ls >> tok)) throw input_error("GFMAT: short row " + std::to_string(i + 1));
      if (k == 1) {
        unsigned long v = parse_uint(tok, "entry");
        if (v >= p) throw input_error("GFMAT: entry not canonical: " + tok);
        m.set(i, j, Fel(v));
      } else {
        std::size_t pos = 0;
        for (unsigned d = 0; d < k; ++d) {
          std::size_t dot = tok.find('.', pos);
          std::string part = d + 1 < k ? tok.substr(pos, dot - pos) : tok.substr(pos);
          if (d + 1 < k) {
            if (dot == std::string::npos) throw input_error("GFMAT: malformed entry " + tok);
            pos = dot + 1;
          } else if (dot != std::string::npos) {
            throw input_error("GFMAT: malformed entry " + tok);
          }
          unsigned long v = parse_uint(part, "digit");
          if (v >= p) throw input_error("GFMAT: digit not canonical: " + part);
          digits[d] = std::uint8_t(v);
        }
        m.set(i, j, f.from_digits(digits.data()));
      }
    }
    if (ls >> tok) throw input_error("GFMAT: trailing tokens on row " + std::to_string(i + 1));
  }
  return m;
}

Matrix parse_matrix(const std::string& text) {
  std::istringstream is(text);
  return read_matrix(is);
}

}  // namespace mrt::gf
