#include "mrt/chartab/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "mrt/util/error.hpp"

namespace mrt::chartab {

void write_table(std::ostream& os, const Table& t, std::optional<std::uint64_t> prime) {
  os << "CHARTAB " << t.name() << ' ' << t.group_order();
  if (prime) os << ' ' << *prime;
  os << '\n';
  for (const auto& c : t.classes())
    os << c.name << ' ' << c.order << ' ' << c.size << ' ' << c.centralizer << '\n';
  for (const auto& [p, pm] : t.power_maps()) {
    os << "POW " << p << ':';
    for (auto i : pm) os << ' ' << i + 1;
    os << '\n';
  }
  for (std::size_t i = 0; i < t.irreducibles().size(); ++i) {
    os << "CHI " << t.char_names()[i] << ':';
    for (const auto& v : t.irreducible(i)) os << ' ' << v.to_string();
    os << '\n';
  }
}

Table read_table(std::istream& is, std::optional<std::uint64_t>* prime_out) {
  std::string line;
  if (!std::getline(is, line)) throw input_error("CHARTAB: missing header");
  std::istringstream hs(line);
  std::string tag, name, order_s;
  if (!(hs >> tag >> name >> order_s) || tag != "CHARTAB")
    throw input_error("CHARTAB: malformed header '" + line + "'");
  exact::Int order(order_s);
  std::uint64_t prime = 0;
  if (hs >> prime) {
    if (prime_out) *prime_out = prime;
  } else if (prime_out) {
    *prime_out = std::nullopt;
  }

  std::vector<ClassInfo> classes;
  std::map<std::uint64_t, std::vector<std::size_t>> power_maps;
  std::vector<CharVector> irreducibles;
  std::vector<std::string> char_names;

  std::size_t lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string first;
    ls >> first;
    auto err = [&](const std::string& what) {
      return input_error("CHARTAB line " + std::to_string(lineno) + ": " + what);
    };
    if (first == "POW") {
      std::string rest;
      std::getline(ls, rest);
      std::size_t colon = rest.find(':');
      if (colon == std::string::npos) throw err("missing ':' in POW line");
      std::uint64_t p = 0;
      {
        std::istringstream ps(rest.substr(0, colon));
        if (!(ps >> p) || p < 2) throw err("malformed POW prime");
      }
      std::istringstream idx(rest.substr(colon + 1));
      std::vector<std::size_t> pm;
      std::uint64_t v;
      while (idx >> v) {
        if (v == 0 || v > classes.size()) throw err("POW index out of range");
        pm.push_back(std::size_t(v - 1));
      }
      if (pm.size() != classes.size()) throw err("POW length differs from class count");
      power_maps[p] = std::move(pm);
    } else if (first == "CHI") {
      std::string rest;
      std::getline(ls, rest);
      std::size_t colon = rest.find(':');
      if (colon == std::string::npos) throw err("missing ':' in CHI line");
      std::string cname = rest.substr(0, colon);
      while (!cname.empty() && cname.front() == ' ') cname.erase(cname.begin());
      while (!cname.empty() && cname.back() == ' ') cname.pop_back();
      if (cname.empty()) throw err("empty character name");
      std::istringstream vs(rest.substr(colon + 1));
      CharVector values;
      std::string tok;
      while (vs >> tok) {
        try {
          values.push_back(exact::Cyclotomic::parse(tok));
        } catch (const input_error& e) {
          throw err(std::string("bad value: ") + e.what());
        }
      }
      if (values.size() != classes.size()) throw err("CHI length differs from class count");
      char_names.push_back(cname);
      irreducibles.push_back(std::move(values));
    } else {
      if (!power_maps.empty() || !irreducibles.empty())
        throw err("class line after POW/CHI section");
      ClassInfo c;
      c.name = first;
      std::string size_s, cent_s;
      if (!(ls >> c.order >> size_s >> cent_s)) throw err("malformed class line");
      c.size = exact::Int(size_s);
      c.centralizer = exact::Int(cent_s);
      std::string extra;
      if (ls >> extra) throw err("trailing tokens on class line");
      classes.push_back(std::move(c));
    }
  }
  return Table(name, order, std::move(classes), std::move(power_maps), std::move(irreducibles),
               std::move(char_names));
}

void write_fusion(std::ostream& os, const Fusion& f) {
  os << "FUSION " << f.source_name << ' ' << f.target_name << ':';
  for (auto j : f.map) os << ' ' << j + 1;
  os << '\n';
}

Fusion read_fusion(std::istream& is) {
  std::string line;
  while (std::getline(is, line))
    if (!line.empty()) break;
  std::istringstream ls(line);
  std::string tag, src, dst;
  if (!(ls >> tag >> src >> dst) || tag != "FUSION")
    throw input_error("FUSION: malformed header '" + line + "'");
  if (dst.empty() || dst.back() != ':') throw input_error("FUSION: missing ':'");
  dst.pop_back();
  Fusion f;
  f.source_name = src;
  f.target_name = dst;
  std::uint64_t v;
  while (ls >> v) {
    if (v == 0) throw input_error("FUSION: indices are 1-based");
    f.map.push_back(std::size_t(v - 1));
  }
  return f;
}

}  // namespace mrt::chartab
