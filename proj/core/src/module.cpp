#include "mrt/mtx/module.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "mrt/util/error.hpp"

namespace mrt::mtx {

Module::Module(gf::Field f, std::vector<gf::Matrix> generators, std::vector<std::string> names)
    : field(std::move(f)), gens(std::move(generators)), labels(std::move(names)) {
  if (gens.empty()) throw math_error("Module: at least one generator required");
  dim = gens[0].rows();
  for (const auto& g : gens) {
    if (g.rows() != dim || g.cols() != dim) throw math_error("Module: generators must be square of equal size");
    if (!g.field().same_spec(field)) throw math_error("Module: generator field mismatch");
  }
  if (labels.empty())
    for (std::size_t i = 0; i < gens.size(); ++i) labels.push_back("g" + std::to_string(i));
  if (labels.size() != gens.size()) throw math_error("Module: label count mismatch");
}

void Module::require_invertible() const {
  for (const auto& g : gens)
    if (g.rank() != dim) throw math_error("Module: generator is singular");
}

gf::Matrix Module::act_word(const std::vector<std::size_t>& word) const {
  gf::Matrix m = gf::Matrix::identity(field, dim);
  for (std::size_t gi : word) {
    if (gi >= gens.size()) throw math_error("Module: word references missing generator");
    m = m * gens[gi];
  }
  return m;
}

Module Module::tensor(const Module& o) const {
  if (gens.size() != o.gens.size()) throw math_error("Module: tensor needs matching generator lists");
  std::vector<gf::Matrix> t;
  for (std::size_t i = 0; i < gens.size(); ++i) t.push_back(gens[i].kron(o.gens[i]));
  return Module(field, std::move(t), labels);
}

Module Module::extend_scalars(const gf::Field& bigger) const {
  if (field.degree() != 1 || bigger.characteristic() != field.characteristic())
    throw math_error("Module: scalar extension only from the prime field");
  std::vector<gf::Matrix> t;
  for (const auto& g : gens) {
    gf::Matrix m(bigger, dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) m.set(i, j, g.at(i, j));
    t.push_back(std::move(m));
  }
  return Module(bigger, std::move(t), labels);
}

Module permutation_module(const gf::Field& f, const std::vector<perm::Perm>& gens) {
  if (gens.empty()) throw math_error("permutation_module: no generators");
  std::size_t n = gens[0].degree();
  std::vector<gf::Matrix> mats;
  for (const auto& g : gens) {
    if (g.degree() != n) throw math_error("permutation_module: degree mismatch");
    gf::Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, g.apply(std::uint32_t(i)), 1);
    mats.push_back(std::move(m));
  }
  Module out(f, std::move(mats));
  out.require_invertible();
  return out;
}

void write_module(std::ostream& os, const Module& m) {
  os << "FGMOD " << m.field.characteristic() << ' ' << m.field.degree() << ' ' << m.dim << ' '
     << m.gens.size() << '\n';
  for (const auto& g : m.gens) gf::write_matrix(os, g);
}

Module read_module(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw input_error("FGMOD: missing header");
  std::istringstream hs(line);
  std::string tag;
  unsigned p = 0, k = 0;
  std::size_t dim = 0, ngens = 0;
  if (!(hs >> tag >> p >> k >> dim >> ngens) || tag != "FGMOD")
    throw input_error("FGMOD: malformed header '" + line + "'");
  std::vector<gf::Matrix> gens;
  for (std::size_t i = 0; i < ngens; ++i) {
    gf::Matrix g = gf::read_matrix(is);
    if (g.rows() != dim || g.cols() != dim || g.field().characteristic() != p || g.field().degree() != k)
      throw input_error("FGMOD: generator block does not match header");
    gens.push_back(std::move(g));
  }
  if (gens.empty()) throw input_error("FGMOD: no generators");
  gf::Field field = gens[0].field();
  Module out(std::move(field), std::move(gens));
  out.require_invertible();
  return out;
}

}  // namespace mrt::mtx
