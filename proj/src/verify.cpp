#include "rlie/verify.hpp"

#include <chrono>
#include <iomanip>
#include <sstream>

#include "rlie/cohomology.hpp"

namespace rlie {

std::size_t AlgebraAnalysis::second_layer(std::size_t i) const {
  if (cover_loewy.layers.size() < 2) return 0;
  return cover_loewy.layers[1].multiplicities.at(i);
}

std::size_t AlgebraAnalysis::composition_multiplicity(std::size_t i) const {
  std::size_t total = 0;
  for (const auto& layer : cover_loewy.layers) total += layer.multiplicities.at(i);
  return total;
}

bool AlgebraAnalysis::in_principal_block(std::size_t i) const {
  return block_partition.block_of.at(i) == block_partition.principal();
}

AlgebraAnalysis analyze(const RestrictedLieAlgebra& l, std::uint64_t seed) {
  AlgebraAnalysis a;
  a.algebra = l;
  a.seed = seed;
  a.envelope.emplace(l);
  const UEnvelope& u = *a.envelope;
  a.catalog = irreducible_catalog(u, seed);
  a.radical = jacobson_radical(u, a.catalog);
  a.cover = projective_cover_trivial(u, a.radical, a.catalog);
  a.cover_loewy = loewy_series(u, a.radical, a.catalog, a.cover.module);
  a.series = p_chief_series(l, seed);
  assign_classes(l, a.series, a.catalog);
  a.ordinary = ordinary_chief_series(l, seed);
  assign_classes(l, a.ordinary, a.catalog);
  a.multiplicities = multiplicity_report(l, a.catalog, a.series, a.ordinary);
  a.block_partition = blocks(l, a.catalog);
  a.solvable = is_solvable(l);
  Subspace powers = p_power_span(l);
  Subspace derived = derived_algebra(l);
  a.p_power_dim = powers.dim();
  a.derived_plus_p_dim = sum(derived, powers).dim();
  a.derived_cap_p_dim = intersect(derived, powers).dim();
  return a;
}

std::string VerificationReport::check_line() const {
  return "CHECK theorem=" + theorem + " algebra=" + algebra + " status=" + (pass ? "PASS" : "FAIL") +
         " seed=" + std::to_string(seed);
}

std::string VerificationReport::table() const {
  std::ostringstream os;
  os << theorem << " on " << algebra << ": " << (pass ? "PASS" : "FAIL") << "\n";
  if (!rows.empty()) {
    os << "  " << std::left << std::setw(18) << "row" << std::right << std::setw(6) << "lhs" << "  " << std::setw(4)
       << "rel" << std::setw(6) << "rhs" << "  ok\n";
    for (const auto& r : rows) {
      os << "  " << std::left << std::setw(18) << r.label << std::right << std::setw(6) << r.lhs << "  " << std::setw(4)
         << r.relation << std::setw(6) << r.rhs << "  " << (r.ok ? "yes" : "NO");
      if (!r.note.empty()) os << "  " << r.note;
      os << "\n";
    }
  }
  for (const auto& n : notes) os << "  note: " << n << "\n";
  return os.str();
}

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids{"main",     "triv",     "split",      "block",    "charsolv",
                                            "loewybd",  "llpim",    "psplitsolv", "five-term"};
  return ids;
}

std::vector<std::vector<std::size_t>> seeded_split_tables(const RestrictedLieAlgebra& l, const IrreducibleCatalog& catalog,
                                                           std::uint64_t first_seed, std::size_t count) {
  std::vector<std::vector<std::size_t>> tables;
  for (std::size_t k = 0; k < count; ++k) {
    PChiefSeries s = p_chief_series(l, first_seed + k);
    assign_classes(l, s, catalog);
    tables.push_back(count_split_factors(s, catalog.size()));
  }
  return tables;
}

namespace {

using Rows = std::vector<CheckRow>;

CheckRow row(std::string label, long long lhs, const char* rel, long long rhs, bool ok, std::string note = {}) {
  return CheckRow{std::move(label), lhs, rhs, rel, ok, std::move(note)};
}

void check_main(const AlgebraAnalysis& a, VerificationReport& rep) {
  auto tables = seeded_split_tables(a.algebra, a.catalog, a.seed, kSeriesSeeds);
  for (std::size_t i = 0; i < a.catalog.size(); ++i) {
    const long long rhs = static_cast<long long>(a.multiplicities[i].rhs_main);
    std::string bad;
    for (std::size_t k = 0; k < tables.size(); ++k)
      if (static_cast<long long>(tables[k][i]) != rhs) bad += (bad.empty() ? "differs for seeds " : ",") + std::to_string(a.seed + k);
    rep.rows.push_back(row(a.catalog[i].label, static_cast<long long>(tables[0][i]), "=", rhs, bad.empty(), bad));
  }
  rep.notes.push_back(std::to_string(kSeriesSeeds) + " seeded p-chief series compared");
}

void check_triv(const AlgebraAnalysis& a, VerificationReport& rep) {
  const std::size_t t = trivial_class(a.catalog);
  const long long lhs = static_cast<long long>(a.multiplicities[t].p_split);
  const long long rhs = static_cast<long long>(a.algebra.dim() - a.derived_plus_p_dim);
  rep.rows.push_back(row(a.catalog[t].label, lhs, "=", rhs, lhs == rhs, "dim L - dim([L,L]+<L^[p]>)"));
}

void check_split(const AlgebraAnalysis& a, VerificationReport& rep) {
  const long long correction = static_cast<long long>(a.p_power_dim - a.derived_cap_p_dim);
  for (std::size_t i = 0; i < a.catalog.size(); ++i) {
    const auto& m = a.multiplicities[i];
    const long long lhs = static_cast<long long>(m.p_split);
    long long rhs = static_cast<long long>(m.split_ordinary);
    if (a.catalog[i].trivial) rhs -= correction;
    const bool ok = lhs == rhs && m.p_split <= m.split_ordinary;
    rep.rows.push_back(row(a.catalog[i].label, lhs, "=", rhs, ok,
                           "split=" + std::to_string(m.split_ordinary) + (a.catalog[i].trivial ? " minus " + std::to_string(correction) : "")));
  }
}

void check_block(const AlgebraAnalysis& a, VerificationReport& rep) {
  for (std::size_t k = 0; k < a.series.factors.size(); ++k) {
    const auto& f = a.series.factors[k];
    if (!f.strongly_abelian) continue;
    const std::size_t c = *f.iso_class;
    rep.rows.push_back(row("factor " + std::to_string(k + 1) + " " + a.catalog[c].label,
                           static_cast<long long>(a.block_partition.block_of[c]), "=",
                           static_cast<long long>(a.block_partition.principal()), a.in_principal_block(c), "block index"));
  }
  if (rep.rows.empty()) rep.notes.push_back("no strongly abelian p-chief factors");
}

// Shared by charsolv and llpim: equality for every S (and for every S in the principal block)
// must hold exactly when L is solvable.
void check_biconditional(const AlgebraAnalysis& a, VerificationReport& rep, bool loewy) {
  bool all_equal = true, principal_equal = true;
  for (std::size_t i = 0; i < a.catalog.size(); ++i) {
    const auto& m = a.multiplicities[i];
    const long long lhs = static_cast<long long>(loewy ? a.second_layer(i) : m.h1_dim_F);
    const long long rhs = static_cast<long long>(loewy ? m.p_split : m.d_S * m.p_split);
    const bool equal = lhs == rhs;
    all_equal = all_equal && equal;
    if (a.in_principal_block(i)) principal_equal = principal_equal && equal;
    std::string note = a.in_principal_block(i) ? "principal" : "";
    if (!equal) note += std::string(note.empty() ? "" : ", ") + "violating S";
    rep.rows.push_back(row(a.catalog[i].label, lhs, "=", rhs, equal || !a.solvable, note));
  }
  const bool ok_all = a.solvable == all_equal;
  const bool ok_principal = a.solvable == principal_equal;
  rep.rows.push_back(row("solvable<->all", a.solvable, "iff", all_equal, ok_all));
  rep.rows.push_back(row("solvable<->block", a.solvable, "iff", principal_equal, ok_principal));
}

void check_loewybd(const AlgebraAnalysis& a, VerificationReport& rep) {
  for (std::size_t i = 0; i < a.catalog.size(); ++i) {
    const auto& m = a.multiplicities[i];
    const long long layer = static_cast<long long>(a.second_layer(i));
    rep.rows.push_back(row(a.catalog[i].label, layer, ">=", static_cast<long long>(m.p_split), layer >= static_cast<long long>(m.p_split)));
    const long long scaled = static_cast<long long>(m.d_S) * layer;
    rep.rows.push_back(row(a.catalog[i].label + " ext", scaled, "=", static_cast<long long>(m.h1_dim_F),
                           scaled == static_cast<long long>(m.h1_dim_F), "d_S*layer vs dim H^1"));
  }
}

void check_psplitsolv(const AlgebraAnalysis& a, VerificationReport& rep) {
  for (std::size_t i = 0; i < a.catalog.size(); ++i) {
    const auto& m = a.multiplicities[i];
    const long long layer = static_cast<long long>(a.second_layer(i));
    const bool composition = m.p_split == 0 || a.composition_multiplicity(i) > 0;
    rep.rows.push_back(row(a.catalog[i].label, static_cast<long long>(m.p_split), "<=", layer,
                           static_cast<long long>(m.p_split) <= layer && composition,
                           "in P(F): " + std::to_string(a.composition_multiplicity(i))));
  }
}

void check_five_term(const AlgebraAnalysis& a, VerificationReport& rep) {
  std::vector<Subspace> annihilators;
  for (const auto& s : a.catalog) annihilators.push_back(annihilator(a.algebra, s.module));
  for (std::size_t k = 0; k < a.series.chain.size(); ++k) {
    const Subspace& ideal = a.series.chain[k];
    for (std::size_t i = 0; i < a.catalog.size(); ++i) {
      if (!annihilators[i].contains(ideal)) continue;
      FiveTermReport ft = five_term_bounds(a.algebra, ideal, a.catalog[i].module);
      rep.rows.push_back(row("L" + std::to_string(k) + "," + a.catalog[i].label, static_cast<long long>(ft.h1), "in",
                             static_cast<long long>(ft.h1_quotient + ft.hom), ft.ok(),
                             std::to_string(ft.h1_quotient) + " <= " + std::to_string(ft.h1) + " <= " +
                                 std::to_string(ft.h1_quotient) + "+" + std::to_string(ft.hom)));
    }
  }
}

}  // namespace

VerificationReport verify(const AlgebraAnalysis& a, const std::string& theorem) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.algebra = a.algebra.name();
  rep.theorem = theorem;
  rep.seed = a.seed;
  if (theorem == "main") {
    check_main(a, rep);
  } else if (theorem == "triv") {
    check_triv(a, rep);
  } else if (theorem == "split") {
    check_split(a, rep);
  } else if (theorem == "block") {
    check_block(a, rep);
  } else if (theorem == "charsolv") {
    check_biconditional(a, rep, false);
  } else if (theorem == "loewybd") {
    check_loewybd(a, rep);
  } else if (theorem == "llpim") {
    check_biconditional(a, rep, true);
  } else if (theorem == "psplitsolv") {
    check_psplitsolv(a, rep);
  } else if (theorem == "five-term") {
    check_five_term(a, rep);
  } else {
    throw PreconditionError("unknown theorem id '" + theorem + "'");
  }
  for (const auto& r : rep.rows) rep.pass = rep.pass && r.ok;
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

std::vector<ExploreRow> explore(const AlgebraAnalysis& a) {
  std::vector<ExploreRow> out;
  for (std::size_t i = 0; i < a.catalog.size(); ++i) {
    ExploreRow r;
    r.label = a.catalog[i].label;
    for (const auto& f : a.series.factors)
      if (f.strongly_abelian && f.iso_class == i) r.strongly_abelian_factor = true;
    r.principal_block = a.in_principal_block(i);
    r.in_cover = a.composition_multiplicity(i);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace rlie
