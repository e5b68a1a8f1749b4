// mrt: modular representation toolkit command line.
//
// Subcommands: validate-table, decompose, condense, coset-classify.
// Exit codes: 0 success, 1 mathematical inconsistency, 2 input error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mrt/brauer/basicset.hpp"
#include "mrt/brauer/decmat_io.hpp"
#include "mrt/brauer/fixtures.hpp"
#include "mrt/brauer/solve.hpp"
#include "mrt/chartab/blocks.hpp"
#include "mrt/chartab/io.hpp"
#include "mrt/mtx/condense.hpp"
#include "mrt/mtx/meataxe.hpp"
#include "mrt/perm/group.hpp"
#include "mrt/perm/steinberg.hpp"
#include "mrt/util/error.hpp"

using nlohmann::json;
using namespace mrt;

namespace {

struct Output {
  std::string path;       // empty = stdout
  std::string format;     // "text" | "structured"

  void emit(const std::string& text, const json& structured) const {
    std::string payload = format == "structured" ? structured.dump(2) + "\n" : text;
    if (path.empty()) {
      std::cout << payload;
      return;
    }
    // atomic: temp file in place, then rename
    std::string tmp = path + ".tmp";
    {
      std::ofstream f(tmp);
      if (!f) throw input_error("cannot write " + tmp);
      f << payload;
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
      throw input_error("cannot rename " + tmp + " to " + path);
  }
};

perm::Group load_group(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw input_error("cannot open group file " + path);
  return perm::read_group_file(f);
}

std::vector<perm::Perm> load_perm_list(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw input_error("cannot open permutation file " + path);
  std::size_t degree = 0;
  return perm::read_perms(f, degree);
}

std::vector<std::size_t> parse_word(const std::string& text, std::size_t ngens) {
  std::istringstream is(text);
  std::vector<std::size_t> out;
  long long v;
  while (is >> v) {
    if (v < 0 || std::size_t(v) >= ngens)
      throw input_error("element word references generator " + std::to_string(v) +
                        " of " + std::to_string(ngens));
    out.push_back(std::size_t(v));
  }
  return out;
}

perm::Perm word_to_perm(const perm::Group& g, const std::vector<std::size_t>& word) {
  perm::Perm p(g.degree());
  for (auto i : word) p = p * g.generators()[i];
  return p;
}

// ---------------------------------------------------------------------------

int cmd_validate_table(const std::string& path, const Output& out) {
  std::ifstream f(path);
  if (!f) throw input_error("cannot open table file " + path);
  chartab::Table t = chartab::read_table(f);
  t.validate();
  std::ostringstream os;
  os << "table " << t.name() << ": " << t.num_classes() << " classes, order " << t.group_order()
     << ", valid\n";
  json j{{"command", "validate-table"},
         {"table", t.name()},
         {"classes", t.num_classes()},
         {"valid", true}};
  std::ostringstream ord;
  ord << t.group_order();
  j["order"] = ord.str();
  out.emit(os.str(), j);
  return 0;
}

// ---------------------------------------------------------------------------

struct DecomposeJob {
  std::string table;
  std::uint64_t prime = 0;
  std::size_t block = 0;
  std::vector<std::string> basic_set;
  std::optional<std::size_t> ell;
  std::string decmat, relations, projectives, facts;
};

DecomposeJob read_job(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw input_error("cannot open job file " + path);
  json j;
  try {
    f >> j;
  } catch (const std::exception& e) {
    throw input_error("job file parse error: " + std::string(e.what()));
  }
  DecomposeJob job;
  job.table = j.value("table", "");
  job.prime = j.value("prime", 0);
  job.block = j.value("block", 0);
  if (j.count("basic_set")) job.basic_set = j["basic_set"].get<std::vector<std::string>>();
  if (j.count("ell")) job.ell = j["ell"].get<std::size_t>();
  job.decmat = j.value("decmat", "");
  job.relations = j.value("relations", "");
  job.projectives = j.value("projectives", "");
  job.facts = j.value("facts", "");
  if (job.prime < 2) throw input_error("job: a prime must be given");
  return job;
}

int cmd_decompose(const std::string& job_path, std::uint64_t seed, const Output& out) {
  (void)seed;
  DecomposeJob job = read_job(job_path);
  std::ostringstream log;
  json rep{{"command", "decompose"}, {"prime", job.prime}};
  brauer::DecMatrix dec;
  std::optional<brauer::Relations> relations;
  std::vector<std::string> nonbasic_names;

  if (!job.table.empty()) {
    // table-driven route: validate, blocks, basic set, relations
    std::ifstream f(job.table);
    if (!f) throw input_error("cannot open table " + job.table);
    chartab::Table t = chartab::read_table(f);
    t.validate();
    log << "stage table: " << t.name() << " valid\n";
    auto blocks = chartab::block_partition(t, job.prime);
    if (job.block >= blocks.size()) throw input_error("job: block index out of range");
    const chartab::Block& b = blocks[job.block];
    log << "stage blocks: " << blocks.size() << " blocks, target k(B) = " << b.members.size()
        << " defect " << b.defect << "\n";
    std::vector<std::size_t> candidate;
    for (const auto& name : job.basic_set) {
      auto idx = t.find_char(name);
      if (!idx) throw input_error("job: unknown character '" + name + "' in basic set");
      candidate.push_back(*idx);
    }
    auto check = brauer::verify_basic_set(t, job.prime, b.members, candidate, job.ell);
    if (!check.ok) throw math_error("stage basic-set: " + check.failure);
    relations = check.relations;
    log << "stage basic-set: verified, l(B) = " << candidate.size() << "\n";
    for (auto i : relations->nonbasic_indices) nonbasic_names.push_back(t.char_names()[i]);
  }
  if (!job.decmat.empty()) {
    dec = brauer::read_decmat_file(job.decmat);
    log << "stage decmat: " << dec.name << " " << dec.matrix.rows() << "x" << dec.matrix.cols()
        << "\n";
  } else {
    throw input_error("job: no decomposition matrix available (decmat missing)");
  }
  if (!job.relations.empty()) {
    brauer::DecMatrix y = brauer::read_decmat_file(job.relations);
    brauer::Relations rel;
    rel.basic.char_indices.resize(dec.matrix.rows());
    for (std::size_t i = 0; i < y.matrix.rows(); ++i) {
      std::vector<exact::Int> row;
      for (std::size_t j = 0; j < y.matrix.cols(); ++j) {
        if (!y.matrix.at(i, j).is_constant())
          throw input_error("relations matrix must be parameter-free");
        row.push_back(y.matrix.at(i, j).constant());
      }
      rel.rows.push_back(std::move(row));
      rel.nonbasic_indices.push_back(dec.matrix.rows() + i);
    }
    nonbasic_names = y.row_names;
    relations = std::move(rel);
    log << "stage relations: " << y.matrix.rows() << " expansions loaded\n";
  }

  std::optional<brauer::DecMatrix> projectives;
  if (!job.projectives.empty()) projectives = brauer::read_decmat_file(job.projectives);

  json survivors = json::array();
  if (!job.facts.empty()) {
    std::ifstream f(job.facts);
    if (!f) throw input_error("cannot open facts " + job.facts);
    auto facts = brauer::read_facts(f, dec, projectives ? &*projectives : nullptr);
    auto solved = brauer::solve_parameters(dec, facts.column_facts, facts.trace_facts);
    log << "stage solve: " << solved.result.survivors.size() << " surviving assignment(s)\n";
    for (const auto& a : solved.result.survivors) {
      json ja;
      std::ostringstream line;
      for (const auto& [k, v] : a) {
        ja[k] = v;
        line << k << "=" << v << " ";
      }
      survivors.push_back(ja);
      log << "  " << line.str() << "\n";
    }
    if (solved.result.survivors.size() == 1) {
      dec.matrix = dec.matrix.substitute(solved.result.survivors[0]);
      dec.system = exact::ParamSystem();
      log << "stage solve: unique assignment substituted\n";
    }
  }
  rep["survivors"] = survivors;

  brauer::DecMatrix full = dec;
  if (relations) {
    full = brauer::expand_nonbasic(dec, *relations, nonbasic_names);
    log << "stage expand: full matrix " << full.matrix.rows() << "x" << full.matrix.cols() << "\n";
  }
  std::ostringstream dm;
  brauer::write_decmat(dm, full);
  rep["decmat"] = dm.str();
  rep["log"] = log.str();
  out.emit(log.str() + dm.str(), rep);
  return 0;
}

// ---------------------------------------------------------------------------

// BN-pair file: `BN <degree>` then keyword blocks GENS / U / W / COX, images
// 1-based; W lines carry the Coxeter length first.
perm::BNData read_bn_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw input_error("cannot open BN file " + path);
  std::string line;
  if (!std::getline(f, line)) throw input_error("BN: empty file");
  std::istringstream hs(line);
  std::string tag;
  std::size_t degree = 0;
  if (!(hs >> tag >> degree) || tag != "BN" || degree == 0)
    throw input_error("BN: malformed header '" + line + "'");
  std::vector<perm::Perm> gens, u, cox;
  std::vector<std::pair<perm::Perm, unsigned>> w;
  enum class Sec { none, gens, u, w, cox } sec = Sec::none;
  while (std::getline(f, line)) {
    if (line.empty()) continue;
    if (line == "GENS") { sec = Sec::gens; continue; }
    if (line == "U") { sec = Sec::u; continue; }
    if (line == "W") { sec = Sec::w; continue; }
    if (line == "COX") { sec = Sec::cox; continue; }
    std::istringstream ls(line);
    std::vector<std::uint32_t> images;
    unsigned len = 0;
    if (sec == Sec::w) {
      if (!(ls >> len)) throw input_error("BN: W line without length");
    }
    std::uint64_t v;
    while (ls >> v) images.push_back(std::uint32_t(v));
    if (images.size() != degree) throw input_error("BN: wrong image count in '" + line + "'");
    perm::Perm p = perm::Perm::from_images1(images);
    switch (sec) {
      case Sec::gens: gens.push_back(p); break;
      case Sec::u: u.push_back(p); break;
      case Sec::w: w.emplace_back(p, len); break;
      case Sec::cox: cox.push_back(p); break;
      default: throw input_error("BN: data before a section keyword");
    }
  }
  if (gens.empty()) throw input_error("BN: missing GENS section");
  perm::BNData bn{perm::Group(degree, gens), std::move(u), std::move(w), std::move(cox)};
  return bn;
}

int cmd_condense(const std::string& group_path, const std::string& v_path,
                 const std::string& module_path, const std::string& bn_path,
                 const std::vector<std::string>& element_words, std::uint64_t prime,
                 std::uint64_t seed, const Output& out) {
  if (prime < 2 || !gf::is_prime(prime)) throw input_error("--prime must be a prime");
  gf::Field F = gf::Field::prime(unsigned(prime));
  std::ostringstream log;
  json rep{{"command", "condense"}, {"prime", prime}, {"seed", seed}};

  std::optional<perm::Group> group;
  std::optional<mtx::Module> module;
  if (!bn_path.empty()) {
    perm::BNData bn = read_bn_file(bn_path);
    group = bn.group;
    module = perm::steinberg_element_module(bn, F);
    log << "steinberg module dim " << module->dim << "\n";
  } else {
    if (group_path.empty()) throw input_error("--group is required");
    group = load_group(group_path);
    if (!module_path.empty()) {
      std::ifstream f(module_path);
      if (!f) throw input_error("cannot open module " + module_path);
      module = mtx::read_module(f);
      if (module->gens.size() != group->generators().size())
        throw input_error("module generator count differs from the group file");
    }
  }
  std::vector<perm::Perm> v_elems = v_path.empty()
                                        ? std::vector<perm::Perm>{perm::Perm(group->degree())}
                                        : load_perm_list(v_path);
  std::vector<std::vector<std::size_t>> extra_words;
  for (const auto& w : element_words)
    extra_words.push_back(parse_word(w, group->generators().size()));

  std::vector<gf::Matrix> cond_gens, cond_extras;
  std::size_t condensed_dim = 0;
  if (module) {
    // matrix-module condensation: V matrices via enumeration words
    const perm::Enumeration& en = group->enumerate();
    std::vector<gf::Matrix> v_action;
    for (const auto& v : v_elems) {
      auto it = en.index.find(v);
      if (it == en.index.end()) throw input_error("V element is not in the group");
      v_action.push_back(module->act_word(group->word_of(it->second)));
    }
    mtx::MatrixCondenser cond(*module, v_action);
    condensed_dim = cond.condensed_dim();
    for (const auto& g : module->gens) cond_gens.push_back(cond.condense(g));
    for (const auto& w : extra_words) cond_extras.push_back(cond.condense(module->act_word(w)));
  } else {
    mtx::CondensationSetup setup{F, v_elems};
    for (const auto& g : group->generators()) cond_gens.push_back(condense_permutation(setup, g));
    for (const auto& w : extra_words)
      cond_extras.push_back(condense_permutation(setup, word_to_perm(*group, w)));
    condensed_dim = cond_gens.empty() ? 0 : cond_gens[0].rows();
  }
  log << "condensed dimension " << condensed_dim << " (|V| = " << v_elems.size() << ")\n";
  rep["condensed_dim"] = condensed_dim;
  rep["v_order"] = v_elems.size();

  // chop over the condensed algebra, extra condensed elements included
  std::vector<gf::Matrix> algebra = cond_gens;
  for (const auto& e : cond_extras) algebra.push_back(e);
  mtx::Module cond_mod(F, algebra);
  mtx::CompositionSeries cs = mtx::chop(cond_mod, seed);
  log << "composition factors:";
  json jfactors = json::array();
  for (const auto& f : cs.factors) {
    log << ' ' << f.module.dim << 'x' << f.multiplicity;
    jfactors.push_back({{"dim", f.module.dim}, {"mult", f.multiplicity}});
  }
  log << "\n";
  rep["factors"] = jfactors;

  json jtraces = json::array();
  for (std::size_t e = 0; e < cond_extras.size(); ++e) {
    for (std::size_t fi = 0; fi < cs.factors.size(); ++fi) {
      gf::Fel tr = mtx::factor_trace(cs, cond_extras[e], fi);
      log << "trace of element " << e << " on factor " << fi << " (dim "
          << cs.factors[fi].module.dim << ") = " << tr << "\n";
      jtraces.push_back({{"element", e}, {"factor", fi}, {"trace", tr}});
    }
  }
  rep["traces"] = jtraces;

  // factors must stay irreducible under the extra elements
  mtx::Module group_part(F, cond_gens);
  auto verify = mtx::verify_factors_irreducible(cs, group_part, cond_extras, seed);
  for (const auto& line : verify) log << line << "\n";
  rep["irreducibility"] = verify;
  rep["certificate"] = cs.certificate;
  out.emit(log.str() + cs.certificate, rep);
  return 0;
}

// ---------------------------------------------------------------------------

int cmd_coset_classify(const std::string& group_path, const std::string& word_text,
                       const std::string& v_path, bool fixed_points, const Output& out) {
  perm::Group g = load_group(group_path);
  std::vector<std::size_t> word = parse_word(word_text, g.generators().size());
  perm::Perm y = word_to_perm(g, word);
  std::vector<perm::Perm> v = v_path.empty() ? std::vector<perm::Perm>{perm::Perm(g.degree())}
                                             : load_perm_list(v_path);
  perm::InvariantOptions opts;
  opts.fixed_point_counts = fixed_points;
  perm::CosetDistribution dist = perm::coset_distribution(g, y, v, opts);

  // report in the two-row (class invariants / count) table shape
  std::ostringstream os;
  json rep{{"command", "coset-classify"}, {"v_order", v.size()}};
  std::ostringstream h1, h2;
  h1 << "Class";
  h2 << "No.  ";
  json lines = json::array();
  for (const auto& line : dist.lines) {
    std::ostringstream label;
    label << line.order;
    if (line.centralizer) label << "|C=" << *line.centralizer;
    if (line.fixed_points) label << "|fix=" << *line.fixed_points;
    h1 << '\t' << label.str();
    h2 << '\t' << line.count;
    json jl{{"order", line.order}, {"count", line.count}};
    if (line.centralizer) jl["centralizer"] = *line.centralizer;
    if (line.square_centralizer) jl["square_centralizer"] = *line.square_centralizer;
    if (line.fixed_points) jl["fixed_points"] = *line.fixed_points;
    if (line.class_index) jl["class_index"] = *line.class_index;
    lines.push_back(jl);
  }
  os << h1.str() << "\n" << h2.str() << "\n";
  for (const auto& n : dist.notes) os << "note: " << n << "\n";
  rep["lines"] = lines;
  rep["notes"] = dist.notes;
  out.emit(os.str(), rep);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"modular representation toolkit"};
  app.require_subcommand(1);
  app.fallthrough(true);

  std::string out_path, format = "text";
  std::uint64_t seed = 0;
  app.add_option("--out", out_path, "output file (atomic write)");
  app.add_option("--format", format, "text|structured")->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--seed", seed, "PRNG seed for all randomized stages");

  auto* validate = app.add_subcommand("validate-table", "check a character table file");
  std::string table_path;
  validate->add_option("table", table_path, "CHARTAB file")->required();

  auto* decompose = app.add_subcommand("decompose", "run the decomposition-matrix pipeline");
  std::string job_path;
  decompose->add_option("--job", job_path, "job description (JSON)")->required();

  auto* condense = app.add_subcommand("condense", "fixed-point condensation and chop");
  std::string grp, vfile, modfile, bnfile;
  std::vector<std::string> elements;
  std::uint64_t prime = 0;
  condense->add_option("--group", grp, "group generators (PERM file)");
  condense->add_option("--subgroup", vfile, "condensation subgroup V (PERM file)");
  condense->add_option("--module", modfile, "FGMOD module file");
  condense->add_option("--steinberg", bnfile, "BN-pair data file (builds the Steinberg module)");
  condense->add_option("--element", elements, "extra element as generator word, e.g. \"0 3 2 1\"");
  condense->add_option("--prime", prime, "characteristic")->required();

  auto* classify = app.add_subcommand("coset-classify", "order/class distribution of a coset yV");
  std::string cgrp, cword, cvfile;
  bool fixed_points = false;
  classify->add_option("--group", cgrp, "group generators (PERM file)")->required();
  classify->add_option("--element", cword, "y as generator word")->required();
  classify->add_option("--subgroup", cvfile, "V element list (PERM file)");
  classify->add_flag("--fixed-points", fixed_points, "include fixed-point counts");

  CLI11_PARSE(app, argc, argv);
  Output out{out_path, format};
  try {
    if (*validate) return cmd_validate_table(table_path, out);
    if (*decompose) return cmd_decompose(job_path, seed, out);
    if (*condense)
      return cmd_condense(grp, vfile, modfile, bnfile, elements, prime, seed, out);
    if (*classify) return cmd_coset_classify(cgrp, cword, cvfile, fixed_points, out);
  } catch (const input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const math_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const budget_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
