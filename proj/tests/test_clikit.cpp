#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "rlie/catalog.hpp"
#include "rlie/io.hpp"
#include "rlie/verify.hpp"

using namespace rlie;

namespace {

const std::string data_dir = RLIE_DATA_DIR;

using Mat2 = std::array<std::array<unsigned, 2>, 2>;

Mat2 mul(unsigned p, const Mat2& a, const Mat2& b) {
  Mat2 c{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) c[i][j] = (a[i][0] * b[0][j] + a[i][1] * b[1][j]) % p;
  return c;
}

/// Names of all valid 2-dimensional structures, from ad(e)^p = ad(e^{[p]}) with
/// ad(x) = [0 b], ad(y) = [-b 0] written out by hand.
std::set<std::string> family_oracle(unsigned p) {
  std::set<std::string> names;
  auto digits = [](unsigned a, unsigned b) { return std::to_string(a) + std::to_string(b); };
  for (unsigned b0 = 0; b0 < p; ++b0)
    for (unsigned b1 = 0; b1 < p; ++b1) {
      Mat2 adx{{{0, b0}, {0, b1}}};
      Mat2 ady{{{(p - b0) % p, 0}, {(p - b1) % p, 0}}};
      auto power = [&](Mat2 m) {
        Mat2 r = m;
        for (unsigned k = 1; k < p; ++k) r = mul(p, r, m);
        return r;
      };
      const Mat2 px = power(adx), py = power(ady);
      auto combo = [&](unsigned s, unsigned t) {
        Mat2 m{};
        for (int i = 0; i < 2; ++i)
          for (int j = 0; j < 2; ++j) m[i][j] = (s * adx[i][j] + t * ady[i][j]) % p;
        return m;
      };
      for (unsigned a0 = 0; a0 < p; ++a0)
        for (unsigned a1 = 0; a1 < p; ++a1) {
          if (combo(a0, a1) != px) continue;
          for (unsigned c0 = 0; c0 < p; ++c0)
            for (unsigned c1 = 0; c1 < p; ++c1)
              if (combo(c0, c1) == py)
                names.insert("fam_F" + std::to_string(p) + "_d2_b" + digits(b0, b1) + "_x" + digits(a0, a1) + "_y" +
                             digits(c0, c1));
        }
    }
  return names;
}

const CheckRow& row(const VerificationReport& r, const std::string& label) {
  for (const auto& x : r.rows)
    if (x.label == label) return x;
  FAIL("no row " << label);
  return r.rows.front();
}

}  // namespace

TEST_CASE("parse fixture files") {
  auto s = load_algebra(data_dir + "/algebras/sl2_3.json");
  CHECK(s.dim() == 3);
  CHECK(s.name() == "sl2_3");
  CHECK(s.basis_pmap(1) == Vec{0, 1, 0});
  CHECK(same_structure(s, sl2(3)));

  auto line = parse_algebra(R"({"p": 3, "basis": ["x"]})");
  CHECK(line.dim() == 1);
  CHECK(is_strongly_abelian(line));

  CHECK_THROWS_AS(load_algebra(data_dir + "/invalid/aff2_bad_pmap.json"), ValidationError);
}

TEST_CASE("parse errors carry positions") {
  try {
    load_algebra(data_dir + "/invalid/malformed.json");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
  }
  CHECK_THROWS_AS(load_algebra(data_dir + "/invalid/unknown_label.json"), ParseError);
  CHECK_THROWS_AS(parse_algebra(R"({"p": 4, "basis": ["x"]})"), ParseError);
  CHECK_THROWS_AS(parse_algebra(R"({"p": 3, "basis": ["x", "x"]})"), ParseError);
  CHECK_THROWS_AS(parse_algebra(R"({"p": 3, "basis": ["x"], "extra": 1})"), ParseError);
  CHECK_THROWS_AS(parse_algebra(R"({"p": 3, "basis": ["x", "y"], "brackets": {"x,x": {"y": 1}}})"), ParseError);
}

TEST_CASE("reversed bracket keys are read with a sign") {
  auto a = parse_algebra(R"({"p": 3, "basis": ["x", "y"], "brackets": {"y,x": {"y": 2}}, "pmap": {"x": {"x": 1}}})");
  CHECK(a.basis_bracket(0, 1) == Vec{0, 1});
  auto b = parse_algebra(R"({"p": 3, "basis": ["x", "y"], "brackets": {"x,y": {"y": -2}}, "pmap": {"x": {"x": 1}}})");
  CHECK(b.basis_bracket(0, 1) == Vec{0, 1});
}

TEST_CASE("round trips") {
  for (const auto& l : builtin_catalog(true)) CHECK_MESSAGE(same_structure(parse_algebra(serialize_algebra(l)), l), l.name());
  for (unsigned p : {2u, 3u})
    for (std::size_t d : {1u, 2u})
      for (const auto& l : exhaustive_family(p, d)) CHECK(same_structure(parse_algebra(serialize_algebra(l)), l));
  // every exported fixture matches its built-in definition
  for (const auto& l : builtin_catalog())
    CHECK_MESSAGE(same_structure(load_algebra(data_dir + "/algebras/" + l.name() + ".json"), l), l.name());
}

TEST_CASE("module files") {
  auto s = sl2(3);
  auto m = parse_module(read_file(data_dir + "/modules/sl2_3_natural.json"), s);
  CHECK(m.dim == 2);
  CHECK(m.label == "S2");
  CHECK(validate_module(s, m).ok());
  auto back = parse_module(serialize_module(m, s), s);
  CHECK(back.action == m.action);
  CHECK_THROWS_AS(parse_module(read_file(data_dir + "/invalid/torus_nilpotent_action.json"), torus(3, 1)),
                  ValidationError);
  CHECK_NOTHROW(parse_module(read_file(data_dir + "/invalid/torus_nilpotent_action.json"), torus(3, 1), false));
}

TEST_CASE("catalog") {
  auto s = catalog_lookup("sl2_3");
  REQUIRE(s);
  CHECK(s->basis_pmap(1) == Vec{0, 1, 0});
  CHECK(catalog_lookup("sl2_5"));
  CHECK_FALSE(catalog_lookup("nonexistent"));
  std::set<std::string> names;
  for (const auto& l : builtin_catalog()) names.insert(l.name());
  CHECK(names.size() == builtin_catalog().size());
}

TEST_CASE("exhaustive families match the enumeration oracle") {
  for (unsigned p : {2u, 3u}) {
    std::set<std::string> got;
    for (const auto& l : exhaustive_family(p, 2)) got.insert(l.name());
    CHECK(got == family_oracle(p));
    CHECK(exhaustive_family(p, 1).size() == p);
  }
  CHECK(family_oracle(2).size() == 19);
  CHECK(family_oracle(3).size() == 89);
  CHECK_THROWS_AS(exhaustive_family(3, 3), PreconditionError);
}

TEST_CASE("verify examples") {
  auto h = analyze(heisenberg(3));
  auto main = verify(h, "main");
  CHECK(main.pass);
  CHECK(row(main, "F").lhs == 2);
  CHECK(row(main, "F").rhs == 2);
  CHECK(main.check_line() == "CHECK theorem=main algebra=heis3_F3 status=PASS seed=0");

  auto s = analyze(sl2(3));
  auto cs = verify(s, "charsolv");
  CHECK(cs.pass);
  CHECK_FALSE(s.solvable);
  CHECK(row(cs, "S2").lhs == 2);
  CHECK(row(cs, "S2").rhs == 0);
  CHECK(row(cs, "S2").ok);

  auto t = verify(analyze(ab2(3)), "triv");
  CHECK(t.pass);
  CHECK(row(t, "F").lhs == 1);
  CHECK(row(t, "F").rhs == 1);

  CHECK_THROWS_AS(verify(h, "nope"), PreconditionError);
}
