#include "mrt/brauer/fixtures.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <sstream>

#include "mrt/util/error.hpp"

namespace mrt::brauer {

using exact::ParamInt;

TwistData read_twist(std::istream& is) {
  TwistData out;
  std::string line;
  bool have_header = false;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "TWIST") {
      if (!(ls >> out.name)) throw input_error("TWIST: missing name");
      have_header = true;
    } else if (tag == "ROWSWAP" || tag == "COLSWAP") {
      std::size_t i = 0, j = 0;
      if (!(ls >> i >> j) || i == 0 || j == 0 || i == j)
        throw input_error("TWIST: malformed swap line '" + line + "'");
      auto& v = tag == "ROWSWAP" ? out.row_swaps : out.col_swaps;
      v.emplace_back(i - 1, j - 1);
    } else {
      throw input_error("TWIST: unknown line '" + line + "'");
    }
  }
  if (!have_header) throw input_error("TWIST: missing header");
  return out;
}

std::vector<std::size_t> involution_perm(
    std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& swaps) {
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  for (auto& [i, j] : swaps) {
    if (i >= n || j >= n) throw math_error("involution_perm: index out of range");
    if (perm[i] != i || perm[j] != j) throw math_error("involution_perm: overlapping swaps");
    std::swap(perm[i], perm[j]);
  }
  return perm;
}

bool eps_twist_holds(const DecMatrix& d, const TwistData& twist) {
  std::vector<std::size_t> rows = involution_perm(d.matrix.rows(), twist.row_swaps);
  std::vector<std::size_t> cols = involution_perm(d.matrix.cols(), twist.col_swaps);
  std::vector<std::size_t> id_rows(d.matrix.rows()), id_cols(d.matrix.cols());
  for (std::size_t i = 0; i < id_rows.size(); ++i) id_rows[i] = i;
  for (std::size_t j = 0; j < id_cols.size(); ++j) id_cols[j] = j;
  return d.matrix.permuted(rows, id_cols) == d.matrix.permuted(id_rows, cols);
}

namespace {

// parse `key{a:b,c:d,...}` blocks out of a token like `terms{6:1,17:at}`
std::vector<std::pair<std::string, std::string>> parse_pairs(const std::string& body,
                                                             const std::string& context) {
  std::vector<std::pair<std::string, std::string>> out;
  std::size_t i = 0;
  while (i < body.size()) {
    std::size_t comma = body.find(',', i);
    std::string item = body.substr(i, comma == std::string::npos ? std::string::npos : comma - i);
    std::size_t colon = item.find(':');
    if (colon == std::string::npos)
      throw input_error("FACTS: malformed item '" + item + "' in " + context);
    out.emplace_back(item.substr(0, colon), item.substr(colon + 1));
    if (comma == std::string::npos) break;
    i = comma + 1;
  }
  return out;
}

std::map<std::string, std::string> tokenize_blocks(std::istringstream& ls) {
  std::map<std::string, std::string> out;
  std::string tok;
  while (ls >> tok) {
    std::size_t brace = tok.find('{');
    if (brace != std::string::npos) {
      if (tok.back() != '}') throw input_error("FACTS: unterminated block in '" + tok + "'");
      out[tok.substr(0, brace)] = tok.substr(brace + 1, tok.size() - brace - 2);
    } else {
      std::size_t eq = tok.find('=');
      if (eq != std::string::npos)
        out[tok.substr(0, eq)] = tok.substr(eq + 1);
      else
        out[tok] = "";
    }
  }
  return out;
}

}  // namespace

FactsData read_facts(std::istream& is, DecMatrix& dec, const DecMatrix* projectives) {
  FactsData out;
  std::string line;
  bool have_header = false;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "FACTS") {
      have_header = true;
      continue;
    }
    if (tag == "COLFACT") {
      ColumnFact f;
      if (!(ls >> f.label)) throw input_error("FACTS: COLFACT missing label");
      auto blocks = tokenize_blocks(ls);
      f.require_nonneg_coeffs = blocks.count("nonneg") > 0;
      auto t = blocks.find("target");
      if (t == blocks.end()) throw input_error("FACTS: COLFACT missing target");
      if (t->second.empty() || t->second[0] != 'P')
        throw input_error("FACTS: COLFACT target must reference a projective column P<j>");
      if (!projectives) throw input_error("FACTS: COLFACT target needs a projectives table");
      std::size_t pcol = std::stoul(t->second.substr(1));
      if (pcol == 0 || pcol > projectives->matrix.cols())
        throw input_error("FACTS: projective column out of range");
      if (projectives->matrix.rows() != dec.matrix.rows())
        throw input_error("FACTS: projective table row count differs from the matrix");
      for (std::size_t r = 0; r < dec.matrix.rows(); ++r)
        f.target.push_back(projectives->matrix.at(r, pcol - 1));
      if (auto fr = blocks.find("fresh"); fr != blocks.end() && !fr->second.empty())
        for (auto& [name, dom] : parse_pairs(fr->second, "fresh")) {
          std::size_t dots = dom.find("..");
          if (dots == std::string::npos) throw input_error("FACTS: malformed fresh domain " + dom);
          dec.system.declare(name, std::stoll(dom.substr(0, dots)), std::stoll(dom.substr(dots + 2)));
        }
      auto tr = blocks.find("terms");
      if (tr == blocks.end()) throw input_error("FACTS: COLFACT missing terms");
      for (auto& [col, coeff] : parse_pairs(tr->second, "terms")) {
        std::size_t c = std::stoul(col);
        if (c == 0 || c > dec.matrix.cols()) throw input_error("FACTS: term column out of range");
        f.terms.emplace_back(c - 1, ParamInt::parse(coeff));
      }
      out.column_facts.push_back(std::move(f));
      continue;
    }
    if (tag == "TRACEFACT") {
      TraceFact f;
      if (!(ls >> f.label)) throw input_error("FACTS: TRACEFACT missing label");
      auto blocks = tokenize_blocks(ls);
      auto p = blocks.find("p");
      if (p == blocks.end()) throw input_error("FACTS: TRACEFACT missing p");
      f.prime = std::stoull(p->second);
      auto ob = blocks.find("observed");
      if (ob == blocks.end()) throw input_error("FACTS: TRACEFACT missing observed");
      for (auto& [tr, count] : parse_pairs(ob->second, "observed"))
        f.observed.emplace_back(std::stoull(tr), std::stoull(count));
      auto tm = blocks.find("terms");
      if (tm == blocks.end()) throw input_error("FACTS: TRACEFACT missing terms");
      // items are col:trace:mult
      std::size_t i = 0;
      const std::string& body = tm->second;
      while (i < body.size()) {
        std::size_t comma = body.find(',', i);
        std::string item =
            body.substr(i, comma == std::string::npos ? std::string::npos : comma - i);
        std::size_t c1 = item.find(':');
        std::size_t c2 = c1 == std::string::npos ? std::string::npos : item.find(':', c1 + 1);
        if (c2 == std::string::npos)
          throw input_error("FACTS: malformed trace term '" + item + "'");
        TraceFact::Term term;
        std::size_t col = std::stoul(item.substr(0, c1));
        if (col == 0 || col > dec.matrix.cols())
          throw input_error("FACTS: trace term column out of range");
        term.column = col - 1;
        term.predicted_trace = std::stoull(item.substr(c1 + 1, c2 - c1 - 1));
        term.multiplicity = ParamInt::parse(item.substr(c2 + 1));
        f.terms.push_back(std::move(term));
        if (comma == std::string::npos) break;
        i = comma + 1;
      }
      out.trace_facts.push_back(std::move(f));
      continue;
    }
    throw input_error("FACTS: unknown line '" + line + "'");
  }
  if (!have_header) throw input_error("FACTS: missing header");
  return out;
}

CondensedFactors read_condensed_factors(std::istream& is) {
  std::string line;
  while (std::getline(is, line))
    if (!line.empty()) break;
  std::istringstream ls(line);
  std::string tag;
  ls >> tag;
  if (tag != "MOD7FACTORS") throw input_error("condensed factors: malformed header");
  auto blocks = tokenize_blocks(ls);
  CondensedFactors out;
  auto d = blocks.find("dim_st");
  auto v = blocks.find("v_order");
  auto deg = blocks.find("degrees");
  if (d == blocks.end() || v == blocks.end() || deg == blocks.end())
    throw input_error("condensed factors: missing fields");
  out.dim_st = exact::Int(d->second);
  out.v_order = std::stoull(v->second);
  {
    std::istringstream ds(deg->second);
    std::string item;
    while (std::getline(ds, item, ',')) out.degrees.push_back(std::stoull(item));
  }
  exact::Int sum = 0;
  for (auto x : out.degrees) sum += x;
  if (sum * out.v_order != out.dim_st)
    throw math_error("condensed factors: degrees do not sum to dim(St)/|V|");
  return out;
}

CosetFixture read_coset_fixture(std::istream& is) {
  CosetFixture out;
  std::string line;
  std::map<std::string, CosetFixture::ZSet> sets;
  std::vector<std::string> order_of_sets;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "LEMMA51") continue;
    if (tag == "PAIRS") {
      if (!(ls >> out.pair_count)) throw input_error("LEMMA51: malformed PAIRS");
      continue;
    }
    // Z-set line
    if (!sets.count(tag)) order_of_sets.push_back(tag);
    CosetFixture::ZSet& z = sets[tag];
    z.name = tag;
    std::string what;
    ls >> what;
    if (what.rfind("classes{", 0) == 0) {
      std::string body = what.substr(8, what.size() - 9);
      for (auto& [name, count] : parse_pairs(body, "classes"))
        z.classes.emplace_back(name, std::stoull(count));
    } else if (what.rfind("orders{", 0) == 0) {
      std::string body = what.substr(7, what.size() - 8);
      for (auto& [o, count] : parse_pairs(body, "orders"))
        z.orders.emplace_back(std::stoull(o), std::stoull(count));
    } else if (what.rfind("centralizers{", 0) == 0) {
      std::string body = what.substr(13, what.size() - 14);
      for (auto& [c, count] : parse_pairs(body, "centralizers"))
        z.centralizers.emplace_back(std::stoull(c), std::stoull(count));
    } else if (what == "sum_chi_plus") {
      if (!(ls >> z.chi_plus_sum)) throw input_error("LEMMA51: malformed sum line");
    } else {
      throw input_error("LEMMA51: unknown line '" + line + "'");
    }
  }
  std::uint64_t v_order = 0;
  for (const auto& name : order_of_sets) {
    CosetFixture::ZSet& z = sets[name];
    std::uint64_t tc = 0, to = 0, tz = 0;
    for (auto& [n, c] : z.classes) tc += c;
    for (auto& [n, c] : z.orders) to += c;
    for (auto& [n, c] : z.centralizers) tz += c;
    if (tc != to || tc != tz)
      throw math_error("LEMMA51: multiset totals disagree for " + name);
    if (v_order == 0) v_order = tc;
    if (tc != v_order) throw math_error("LEMMA51: |V| differs between coset sets");
    // order multiset must match the class-name orders (leading digits)
    std::map<std::uint64_t, std::uint64_t> by_order;
    for (auto& [cname, count] : z.classes) {
      std::size_t i = 0;
      while (i < cname.size() && isdigit(static_cast<unsigned char>(cname[i]))) ++i;
      if (i == 0) throw math_error("LEMMA51: class name without order prefix: " + cname);
      by_order[std::stoull(cname.substr(0, i))] += count;
    }
    std::map<std::uint64_t, std::uint64_t> stated;
    for (auto& [o, c] : z.orders) stated[o] += c;
    if (by_order != stated)
      throw math_error("LEMMA51: class distribution disagrees with the order distribution for " +
                       name);
    out.sets.push_back(z);
  }
  out.v_order = v_order;
  return out;
}

}  // namespace mrt::brauer
