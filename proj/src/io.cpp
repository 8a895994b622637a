#include "rlie/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

namespace rlie {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

std::pair<std::size_t, std::size_t> position_of(const std::string& text, std::size_t offset) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

// Semantic errors point at the first occurrence of the offending key.
[[noreturn]] void fail(const std::string& text, const std::string& what, const std::string& token = {}) {
  std::size_t offset = token.empty() ? std::string::npos : text.find("\"" + token + "\"");
  auto [line, col] = offset == std::string::npos ? std::make_pair<std::size_t, std::size_t>(1, 1) : position_of(text, offset);
  throw ParseError(what, line, col);
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    auto [line, col] = position_of(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError("malformed JSON: " + std::string(e.what()), line, col);
  }
}

Residue reduce(const std::string& text, const json& c, unsigned p, const std::string& where) {
  if (!c.is_number_integer()) fail(text, "coefficient must be an integer", where);
  long long v = c.get<long long>() % static_cast<long long>(p);
  if (v < 0) v += p;
  return Residue(v);
}

Vec sparse_vector(const std::string& text, const json& obj, const std::map<std::string, std::size_t>& index,
                  unsigned p, const std::string& where) {
  if (!obj.is_object()) fail(text, "expected an object of label: coefficient pairs", where);
  Vec v(index.size());
  const auto& f = PrimeField::of(p);
  for (const auto& [label, c] : obj.items()) {
    auto it = index.find(label);
    if (it == index.end()) fail(text, "unknown basis label '" + label + "'", label);
    v[it->second] = f.add(v[it->second], reduce(text, c, p, label));
  }
  return v;
}

ordered_json sparse_json(const Vec& v, const std::vector<std::string>& names) {
  ordered_json obj = ordered_json::object();
  for (std::size_t k = 0; k < v.size(); ++k)
    if (v[k]) obj[names[k]] = v[k];
  return obj;
}

}  // namespace

RestrictedLieAlgebra parse_algebra(const std::string& text) {
  json doc = parse_json(text);
  if (!doc.is_object()) fail(text, "algebra file must be a JSON object");
  if (!doc.contains("p") || !doc["p"].is_number_unsigned()) fail(text, "missing or invalid prime 'p'", "p");
  const unsigned long long pp = doc["p"].get<unsigned long long>();
  if (pp >= 256 || !is_prime(unsigned(pp))) fail(text, "'p' must be a prime below 256", "p");
  const unsigned p = unsigned(pp);
  if (!doc.contains("basis") || !doc["basis"].is_array()) fail(text, "missing basis label list", "basis");

  std::vector<std::string> names;
  std::map<std::string, std::size_t> index;
  for (const auto& b : doc["basis"]) {
    if (!b.is_string()) fail(text, "basis labels must be strings", "basis");
    std::string label = b.get<std::string>();
    if (label.empty() || label.find(',') != std::string::npos) fail(text, "invalid basis label '" + label + "'", "basis");
    if (!index.emplace(label, names.size()).second) fail(text, "duplicate basis label '" + label + "'", label);
    names.push_back(label);
  }
  const std::size_t n = names.size();
  const auto& f = PrimeField::of(p);

  RestrictedLieAlgebra::BracketTable table;
  if (doc.contains("brackets")) {
    if (!doc["brackets"].is_object()) fail(text, "'brackets' must be an object", "brackets");
    for (const auto& [key, value] : doc["brackets"].items()) {
      auto comma = key.find(',');
      if (comma == std::string::npos) fail(text, "bracket key must have the form \"a,b\"", key);
      auto a = index.find(key.substr(0, comma));
      auto b = index.find(key.substr(comma + 1));
      if (a == index.end() || b == index.end()) fail(text, "bracket key names an unknown label", key);
      if (a->second == b->second) fail(text, "bracket of a basis element with itself", key);
      Vec v = sparse_vector(text, value, index, p, key);
      std::size_t i = a->second, j = b->second;
      if (i > j) {
        std::swap(i, j);
        for (auto& x : v) x = f.neg(x);
      }
      auto [it, fresh] = table.emplace(std::make_pair(i, j), v);
      if (!fresh) fail(text, "bracket given twice", key);
    }
  }
  std::vector<Vec> pmap(n, zero_vec(n));
  if (doc.contains("pmap")) {
    if (!doc["pmap"].is_object()) fail(text, "'pmap' must be an object", "pmap");
    for (const auto& [label, value] : doc["pmap"].items()) {
      auto it = index.find(label);
      if (it == index.end()) fail(text, "p-map of unknown label '" + label + "'", label);
      pmap[it->second] = sparse_vector(text, value, index, p, label);
    }
  }
  for (const auto& [key, value] : doc.items())
    if (key != "name" && key != "p" && key != "basis" && key != "brackets" && key != "pmap")
      fail(text, "unknown field '" + key + "'", key);
  std::string name;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) fail(text, "'name' must be a string", "name");
    name = doc["name"].get<std::string>();
  }
  RestrictedLieAlgebra l(p, names, table, pmap, name);
  ValidationReport rep = validate(l);
  if (!rep.ok()) throw ValidationError("invalid restricted Lie algebra: " + rep.summary(l));
  return l;
}

std::string serialize_algebra(const RestrictedLieAlgebra& l) {
  ordered_json doc;
  if (!l.name().empty()) doc["name"] = l.name();
  doc["p"] = l.p();
  doc["basis"] = l.basis_names();
  ordered_json brackets = ordered_json::object();
  for (std::size_t i = 0; i < l.dim(); ++i)
    for (std::size_t j = i + 1; j < l.dim(); ++j) {
      const Vec& v = l.basis_bracket(i, j);
      if (!vec_is_zero(v)) brackets[l.basis_names()[i] + "," + l.basis_names()[j]] = sparse_json(v, l.basis_names());
    }
  doc["brackets"] = brackets;
  ordered_json pmap = ordered_json::object();
  for (std::size_t i = 0; i < l.dim(); ++i)
    if (!vec_is_zero(l.basis_pmap(i))) pmap[l.basis_names()[i]] = sparse_json(l.basis_pmap(i), l.basis_names());
  doc["pmap"] = pmap;
  return doc.dump(2) + "\n";
}

RestrictedModule parse_module(const std::string& text, const RestrictedLieAlgebra& l, bool restricted) {
  json doc = parse_json(text);
  if (!doc.is_object()) fail(text, "module file must be a JSON object");
  if (!doc.contains("dim") || !doc["dim"].is_number_unsigned()) fail(text, "missing or invalid 'dim'", "dim");
  if (!doc.contains("action") || !doc["action"].is_object()) fail(text, "missing 'action' object", "action");
  RestrictedModule m;
  m.p = l.p();
  m.dim = doc["dim"].get<std::size_t>();
  m.label = doc.contains("label") && doc["label"].is_string() ? doc["label"].get<std::string>() : "M";
  m.action.assign(l.dim(), Matrix(l.p(), m.dim, m.dim));
  const auto& names = l.basis_names();
  for (const auto& [label, rows] : doc["action"].items()) {
    auto it = std::find(names.begin(), names.end(), label);
    if (it == names.end()) fail(text, "action of unknown label '" + label + "'", label);
    if (!rows.is_array() || rows.size() != m.dim) fail(text, "action matrix must have dim rows", label);
    Matrix a(l.p(), m.dim, m.dim);
    for (std::size_t r = 0; r < m.dim; ++r) {
      if (!rows[r].is_array() || rows[r].size() != m.dim) fail(text, "action matrix must be square", label);
      for (std::size_t c = 0; c < m.dim; ++c) a.set(r, c, reduce(text, rows[r][c], l.p(), label));
    }
    m.action[std::size_t(it - names.begin())] = std::move(a);
  }
  ModuleReport rep = validate_module(l, m);
  if (!rep.shape_ok || !rep.bracket_failures.empty() || (restricted && !rep.pmap_failures.empty()))
    throw ValidationError("invalid module: " + rep.summary());
  return m;
}

std::string serialize_module(const RestrictedModule& m, const RestrictedLieAlgebra& l) {
  ordered_json doc;
  doc["label"] = m.label;
  doc["dim"] = m.dim;
  ordered_json action = ordered_json::object();
  for (std::size_t i = 0; i < l.dim(); ++i) {
    ordered_json rows = ordered_json::array();
    for (std::size_t r = 0; r < m.dim; ++r) {
      ordered_json row = ordered_json::array();
      for (std::size_t c = 0; c < m.dim; ++c) row.push_back(unsigned(m.action[i](r, c)));
      rows.push_back(row);
    }
    action[l.basis_names()[i]] = rows;
  }
  doc["action"] = action;
  return doc.dump(2) + "\n";
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

RestrictedLieAlgebra load_algebra(const std::filesystem::path& path) {
  RestrictedLieAlgebra l = parse_algebra(read_file(path));
  if (l.name().empty()) l.set_name(path.stem().string());
  return l;
}

bool same_structure(const RestrictedLieAlgebra& a, const RestrictedLieAlgebra& b) {
  if (a.p() != b.p() || a.basis_names() != b.basis_names() || a.name() != b.name()) return false;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (a.basis_pmap(i) != b.basis_pmap(i)) return false;
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (a.basis_bracket(i, j) != b.basis_bracket(i, j)) return false;
  }
  return true;
}

}  // namespace rlie
