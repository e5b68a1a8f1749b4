#include "mrt/brauer/decmat_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "mrt/util/error.hpp"

namespace mrt::brauer {

using exact::ParamInt;
using exact::ParamPoly;

void write_decmat(std::ostream& os, const DecMatrix& d) {
  os << "DECMAT " << d.name << " params{";
  bool first = true;
  for (const auto& n : d.system.param_order()) {
    const auto& dom = d.system.domain(n);
    for (std::size_t i = 1; i < dom.size(); ++i)
      if (dom[i] != dom[i - 1] + 1)
        throw math_error("write_decmat: only interval domains are serializable");
    if (!first) os << ',';
    os << n << ':' << dom.front() << ".." << dom.back();
    first = false;
  }
  os << "} constraints{";
  first = true;
  for (const auto& c : d.system.constraints()) {
    ParamInt affine;
    for (const auto& [mono, coeff] : c.poly.terms()) {
      if (mono.empty())
        affine += ParamInt(coeff);
      else if (mono.size() == 1)
        affine += ParamInt::param(mono[0]).scaled(coeff);
      else
        throw math_error("write_decmat: only affine constraints are serializable");
    }
    if (!first) os << ';';
    if (c.kind == exact::ParamConstraint::Kind::eq0 && !affine.terms().empty()) {
      exact::Int rhs = -affine.constant();
      ParamInt lhs = affine - ParamInt(affine.constant());
      os << lhs.to_string() << '=' << rhs;
    } else {
      os << affine.to_string() << (c.kind == exact::ParamConstraint::Kind::eq0 ? "=0" : ">=0");
    }
    first = false;
  }
  os << "}\n";
  for (std::size_t i = 0; i < d.matrix.rows(); ++i) {
    os << d.row_names.at(i) << ':';
    for (std::size_t j = 0; j < d.matrix.cols(); ++j) os << ' ' << d.matrix.at(i, j).to_string();
    os << '\n';
  }
}

namespace {

std::string expect_block(const std::string& header, const std::string& key, std::size_t& pos) {
  std::size_t start = header.find(key + "{", pos);
  if (start == std::string::npos) throw input_error("DECMAT: missing " + key + "{...} in header");
  std::size_t end = header.find('}', start);
  if (end == std::string::npos) throw input_error("DECMAT: unterminated " + key + "{...}");
  pos = end + 1;
  return header.substr(start + key.size() + 1, end - start - key.size() - 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i <= s.size()) {
    std::size_t j = s.find(sep, i);
    if (j == std::string::npos) {
      out.push_back(s.substr(i));
      break;
    }
    out.push_back(s.substr(i, j - i));
    i = j + 1;
  }
  if (out.size() == 1 && out[0].empty()) out.clear();
  return out;
}

}  // namespace

DecMatrix read_decmat(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw input_error("DECMAT: missing header");
  if (line.rfind("DECMAT ", 0) != 0) throw input_error("DECMAT: malformed header '" + line + "'");
  DecMatrix d;
  {
    std::size_t name_end = line.find(' ', 7);
    if (name_end == std::string::npos) throw input_error("DECMAT: missing params block");
    d.name = line.substr(7, name_end - 7);
  }
  std::size_t pos = 0;
  std::string params = expect_block(line, "params", pos);
  std::string constraints = expect_block(line, "constraints", pos);
  for (const std::string& p : split(params, ',')) {
    std::size_t colon = p.find(':');
    std::size_t dots = p.find("..");
    if (colon == std::string::npos || dots == std::string::npos || dots < colon)
      throw input_error("DECMAT: malformed parameter declaration '" + p + "'");
    std::string name = p.substr(0, colon);
    long long lo = std::stoll(p.substr(colon + 1, dots - colon - 1));
    long long hi = std::stoll(p.substr(dots + 2));
    d.system.declare(name, lo, hi);
  }
  for (const std::string& c : split(constraints, ';')) {
    bool geq = c.find(">=") != std::string::npos;
    std::size_t op = geq ? c.find(">=") : c.find('=');
    if (op == std::string::npos) throw input_error("DECMAT: malformed constraint '" + c + "'");
    ParamInt lhs = ParamInt::parse(c.substr(0, op));
    ParamInt rhs = ParamInt::parse(c.substr(op + (geq ? 2 : 1)));
    if (geq)
      d.system.require_geq0(ParamPoly(lhs - rhs), c);
    else
      d.system.require_eq0(ParamPoly(lhs - rhs), c);
  }
  std::vector<std::vector<ParamInt>> rows;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::size_t colon = line.find(':');
    if (colon == std::string::npos) throw input_error("DECMAT: row without ':' — '" + line + "'");
    d.row_names.push_back(line.substr(0, colon));
    std::istringstream ls(line.substr(colon + 1));
    std::vector<ParamInt> row;
    std::string tok;
    while (ls >> tok) row.push_back(ParamInt::parse(tok));
    if (!rows.empty() && row.size() != rows.front().size())
      throw input_error("DECMAT: ragged rows");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw input_error("DECMAT: no rows");
  d.matrix = exact::ParamMatrix(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) d.matrix.at(i, j) = rows[i][j];
  // every mentioned parameter must be declared
  for (std::size_t i = 0; i < d.matrix.rows(); ++i)
    for (std::size_t j = 0; j < d.matrix.cols(); ++j) {
      std::vector<std::string> names;
      d.matrix.at(i, j).collect_params(names);
      for (const auto& n : names)
        if (!d.system.declared(n))
          throw input_error("DECMAT: entry mentions undeclared parameter '" + n + "'");
    }
  return d;
}

DecMatrix read_decmat_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw input_error("DECMAT: cannot open " + path);
  return read_decmat(f);
}

}  // namespace mrt::brauer
