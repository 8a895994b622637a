// Command-line front end: analysis tables and theorem checks for restricted Lie algebras.

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>

#include <CLI11.hpp>

#include "rlie/catalog.hpp"
#include "rlie/cohomology.hpp"
#include "rlie/io.hpp"
#include "rlie/verify.hpp"

namespace fs = std::filesystem;
using namespace rlie;

namespace {

// A FILE argument may also name a built-in catalog entry.
RestrictedLieAlgebra load(const std::string& arg) {
  if (!fs::exists(arg))
    if (auto l = catalog_lookup(arg)) return *l;
  return load_algebra(arg);
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

int cmd_check(const std::string& file) {
  RestrictedLieAlgebra l = load(file);
  std::cout << "algebra   " << l.name() << "\n"
            << "p         " << l.p() << "\n"
            << "dim       " << l.dim() << "\n"
            << "valid     yes\n"
            << "solvable  " << yes_no(is_solvable(l)) << "\n"
            << "abelian   " << yes_no(is_abelian(l)) << "\n"
            << "strongly abelian  " << yes_no(is_strongly_abelian(l)) << "\n";
  if (l.dim() > 0) std::cout << "p-perfect " << yes_no(is_p_perfect(l)) << "\n";
  return 0;
}

void print_series(const RestrictedLieAlgebra& l, const PChiefSeries& s, const IrreducibleCatalog& cat) {
  std::cout << "seed " << s.seed << ": dims";
  for (const auto& c : s.chain) std::cout << " " << c.dim();
  std::cout << "\n";
  for (std::size_t k = 0; k < s.factors.size(); ++k) {
    const auto& f = s.factors[k];
    std::cout << "  L" << k + 1 << "/L" << k << "  dim " << f.dim() << "  "
              << (f.strongly_abelian ? "strongly abelian" : "not strongly abelian");
    if (f.split) std::cout << ", " << (*f.split ? "split" : "non-split");
    if (f.iso_class) std::cout << ", class " << cat[*f.iso_class].label;
    std::cout << "\n";
  }
  (void)l;
}

int cmd_chief(const std::string& file, std::uint64_t seed, std::size_t count) {
  RestrictedLieAlgebra l = load(file);
  UEnvelope u(l);
  IrreducibleCatalog cat = irreducible_catalog(u, seed);
  for (std::size_t k = 0; k < count; ++k) {
    PChiefSeries s = p_chief_series(l, seed + k);
    assign_classes(l, s, cat);
    print_series(l, s, cat);
  }
  return 0;
}

int cmd_irreducibles(const std::string& file, std::uint64_t seed) {
  AlgebraAnalysis a = analyze(load(file), seed);
  std::cout << std::left << std::setw(14) << "class" << std::right << std::setw(5) << "dim" << std::setw(5) << "d_S"
            << std::setw(8) << "block" << "\n";
  for (std::size_t i = 0; i < a.catalog.size(); ++i)
    std::cout << std::left << std::setw(14) << a.catalog[i].label << std::right << std::setw(5) << a.catalog[i].module.dim
              << std::setw(5) << a.catalog[i].end_dim << std::setw(8) << a.block_partition.block_of[i]
              << (a.in_principal_block(i) ? "  principal" : "") << "\n";
  return 0;
}

int cmd_h1(const std::string& file, const std::string& module_file, bool ordinary) {
  RestrictedLieAlgebra l = load(file);
  RestrictedModule m = parse_module(read_file(module_file), l, !ordinary);
  CohomologySpace h = ordinary ? h1_ordinary(l, m) : h1_restricted(l, m);
  std::cout << (ordinary ? "ordinary" : "restricted") << " H^1(" << l.name() << ", " << m.label << ")\n"
            << "cocycles     " << h.cocycle_basis.size() << "\n"
            << "coboundaries " << h.coboundary_basis.size() << "\n"
            << "dim_F H^1    " << h.dim_F << "\n"
            << "dim End(M)   " << end_dim(m) << "\n";
  return 0;
}

int cmd_multiplicity(const std::string& file, std::uint64_t seed) {
  AlgebraAnalysis a = analyze(load(file), seed);
  std::cout << std::left << std::setw(14) << "class" << std::right << std::setw(5) << "dim" << std::setw(5) << "d_S"
            << std::setw(9) << "p-split" << std::setw(7) << "split" << std::setw(7) << "rhs" << std::setw(9) << "H1/D"
            << "\n";
  for (const auto& r : a.multiplicities)
    std::cout << std::left << std::setw(14) << r.label << std::right << std::setw(5) << r.dim << std::setw(5) << r.d_S
              << std::setw(9) << r.p_split << std::setw(7) << r.split_ordinary << std::setw(7) << r.rhs_main
              << std::setw(9) << r.h1_dim_over_D << "\n";
  return 0;
}

int cmd_loewy(const std::string& file, std::uint64_t seed) {
  AlgebraAnalysis a = analyze(load(file), seed);
  std::cout << "dim u(L) = " << a.envelope->dim() << ", dim Jac = " << a.radical.ideal.dim()
            << ", nilpotency " << a.radical.nilpotency << "\n"
            << "P(F): dim " << a.cover.module.dim << ", Loewy length " << a.cover_loewy.length() << "\n";
  for (std::size_t k = 0; k < a.cover_loewy.layers.size(); ++k) {
    const auto& layer = a.cover_loewy.layers[k];
    std::cout << "  layer " << k + 1 << " (dim " << layer.module.dim << "):";
    for (std::size_t i = 0; i < a.catalog.size(); ++i)
      if (layer.multiplicities[i]) std::cout << " " << a.catalog[i].label << "^" << layer.multiplicities[i];
    std::cout << "\n";
  }
  return 0;
}

int cmd_blocks(const std::string& file, std::uint64_t seed) {
  AlgebraAnalysis a = analyze(load(file), seed);
  const auto& bp = a.block_partition;
  for (std::size_t b = 0; b < bp.blocks.size(); ++b) {
    std::cout << "block " << b << (b == bp.principal() ? " (principal)" : "") << ":";
    for (auto i : bp.blocks[b]) std::cout << " " << a.catalog[i].label;
    std::cout << "\n";
  }
  std::cout << "Ext^1 table (row S, column T):\n";
  for (std::size_t i = 0; i < a.catalog.size(); ++i) {
    std::cout << "  " << std::left << std::setw(12) << a.catalog[i].label << std::right;
    for (std::size_t j = 0; j < a.catalog.size(); ++j) std::cout << std::setw(4) << bp.ext_table[i][j];
    std::cout << "\n";
  }
  return 0;
}

int run_checks(const AlgebraAnalysis& a, const std::vector<std::string>& ids, bool tables) {
  bool ok = true;
  for (const auto& id : ids) {
    VerificationReport r = verify(a, id);
    if (tables) std::cout << r.table();
    std::cout << r.check_line() << "\n";
    ok = ok && r.pass;
  }
  return ok ? 0 : 1;
}

int cmd_verify(const std::string& file, const std::string& theorem, std::uint64_t seed) {
  AlgebraAnalysis a = analyze(load(file), seed);
  std::vector<std::string> ids = theorem == "all" ? theorem_ids() : std::vector<std::string>{theorem};
  return run_checks(a, ids, true);
}

int cmd_verify_all(const std::vector<std::string>& files, bool catalog, bool family, bool large, std::uint64_t seed) {
  std::vector<RestrictedLieAlgebra> algebras;
  for (const auto& f : files) algebras.push_back(load(f));
  if (catalog || (files.empty() && !family))
    for (auto& l : builtin_catalog(large)) algebras.push_back(std::move(l));
  if (family)
    for (unsigned p : {2u, 3u})
      for (std::size_t d : {1u, 2u})
        for (auto& l : exhaustive_family(p, d)) algebras.push_back(std::move(l));
  int status = 0;
  for (const auto& l : algebras) status = std::max(status, run_checks(analyze(l, seed), theorem_ids(), false));
  return status;
}

int cmd_explore(const std::string& file, std::uint64_t seed) {
  AlgebraAnalysis a = analyze(load(file), seed);
  std::cout << "composition factors of P(F) (dim " << a.cover.module.dim << "), report only\n";
  std::cout << std::left << std::setw(14) << "class" << std::setw(20) << "s.a. chief factor" << std::setw(12)
            << "principal" << "in P(F)\n";
  bool factors_covered = true, block_covered = true;
  for (const auto& r : explore(a)) {
    std::cout << std::left << std::setw(14) << r.label << std::setw(20) << yes_no(r.strongly_abelian_factor)
              << std::setw(12) << yes_no(r.principal_block) << r.in_cover << "\n";
    if (r.strongly_abelian_factor && r.in_cover == 0) factors_covered = false;
    if (r.principal_block && r.in_cover == 0) block_covered = false;
  }
  std::cout << "every strongly abelian p-chief factor occurs in P(F): " << yes_no(factors_covered) << "\n"
            << "every principal-block irreducible occurs in P(F): " << yes_no(block_covered) << "\n";
  return 0;
}

int cmd_catalog(const std::string& export_dir, bool large) {
  auto cat = builtin_catalog(large);
  if (!export_dir.empty()) fs::create_directories(export_dir);
  for (const auto& l : cat) {
    std::cout << std::left << std::setw(24) << l.name() << " p=" << l.p() << " dim=" << l.dim() << "\n";
    if (!export_dir.empty()) std::ofstream(fs::path(export_dir) / (l.name() + ".json")) << serialize_algebra(l);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Restricted Lie algebras over prime fields: p-chief series, restricted cohomology, u(L)"};
  app.require_subcommand(1);
  std::string file, module_file, theorem, export_dir;
  std::uint64_t seed = 0;
  std::size_t count = 1;
  bool ordinary = false, catalog = false, family = false, large = false;
  std::vector<std::string> files;

  auto* check = app.add_subcommand("check", "parse and validate an algebra file");
  check->add_option("FILE", file, "algebra file or catalog name")->required();
  auto* chief = app.add_subcommand("chief-series", "seeded p-chief series with factor classification");
  chief->add_option("FILE", file)->required();
  chief->add_option("--seed", seed);
  chief->add_option("--count", count, "number of consecutive seeds");
  auto* irr = app.add_subcommand("irreducibles", "irreducible restricted modules");
  irr->add_option("FILE", file)->required();
  irr->add_option("--seed", seed);
  auto* h1 = app.add_subcommand("h1", "first cohomology with coefficients in a module file");
  h1->add_option("FILE", file)->required();
  h1->add_option("MODULEFILE", module_file)->required();
  h1->add_flag("--ordinary", ordinary, "ordinary instead of restricted cohomology");
  auto* mult = app.add_subcommand("multiplicity", "split factor multiplicities and main-formula terms");
  mult->add_option("FILE", file)->required();
  mult->add_option("--seed", seed);
  auto* loewy = app.add_subcommand("loewy", "Loewy layers of the projective cover of the trivial module");
  loewy->add_option("FILE", file)->required();
  loewy->add_option("--seed", seed);
  auto* blk = app.add_subcommand("blocks", "block partition from Ext^1 linkage");
  blk->add_option("FILE", file)->required();
  blk->add_option("--seed", seed);
  auto* ver = app.add_subcommand("verify", "check one theorem on one algebra");
  ver->add_option("FILE", file)->required();
  ver->add_option("--theorem", theorem, "main, triv, split, block, charsolv, loewybd, llpim, psplitsolv, five-term or all")
      ->required();
  ver->add_option("--seed", seed);
  auto* all = app.add_subcommand("verify-all", "check every theorem on files, the catalog or the small family");
  all->add_option("FILES", files);
  all->add_flag("--catalog", catalog, "built-in catalog (default when no files are given)");
  all->add_flag("--family", family, "all restricted structures of dimension <= 2 over F_2 and F_3");
  all->add_flag("--large", large, "include sl2_5");
  all->add_option("--seed", seed);
  auto* exp = app.add_subcommand("explore", "report which irreducibles occur in P(F)");
  exp->add_option("FILE", file)->required();
  exp->add_option("--seed", seed);
  auto* cat = app.add_subcommand("catalog", "list the built-in algebras");
  cat->add_option("--export", export_dir, "write each entry as an algebra file into this directory");
  cat->add_flag("--large", large, "include sl2_5");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*check) return cmd_check(file);
    if (*chief) return cmd_chief(file, seed, count);
    if (*irr) return cmd_irreducibles(file, seed);
    if (*h1) return cmd_h1(file, module_file, ordinary);
    if (*mult) return cmd_multiplicity(file, seed);
    if (*loewy) return cmd_loewy(file, seed);
    if (*blk) return cmd_blocks(file, seed);
    if (*ver) return cmd_verify(file, theorem, seed);
    if (*all) return cmd_verify_all(files, catalog, family, large, seed);
    if (*exp) return cmd_explore(file, seed);
    if (*cat) return cmd_catalog(export_dir, large);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
