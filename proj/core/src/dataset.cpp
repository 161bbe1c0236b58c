#include "bredonk/dataset.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace bredonk {

using nlohmann::json;

namespace {

mpz_class parse_integer(const json& v, const std::string& where) {
  if (v.is_number_integer()) return mpz_class(std::to_string(v.get<long long>()));
  if (v.is_string()) {
    mpz_class z;
    if (z.set_str(v.get<std::string>(), 10) == 0) return z;
  }
  throw ParseError(where + ": expected an integer");
}

GroupElement parse_matrix(const json& v, std::size_t dim, const std::string& where) {
  if (!v.is_array()) throw ParseError(where + ": expected a flat integer array");
  if (v.size() != dim * dim) {
    throw ParseError(where + ": expected " + std::to_string(dim * dim) + " entries, got " + std::to_string(v.size()));
  }
  std::vector<mpz_class> entries;
  entries.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) entries.push_back(parse_integer(v[i], where + "[" + std::to_string(i) + "]"));
  return GroupElement(dim, std::move(entries));
}

json matrix_to_json(const GroupElement& g) {
  json arr = json::array();
  for (const auto& e : g.entries()) {
    if (e.fits_slong_p()) {
      arr.push_back(e.get_si());
    } else {
      arr.push_back(e.get_str());
    }
  }
  return arr;
}

const json& member(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) throw ParseError(where + ": missing \"" + key + "\"");
  return obj.at(key);
}

}  // namespace

GCWComplex parse_dataset(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }

  try {
    GCWComplex X;
    X.name = doc.value("name", std::string());
    const json& dim = member(doc, "matrix_dim", "dataset");
    if (!dim.is_number_integer() || dim.get<long long>() <= 0) throw ParseError("matrix_dim must be a positive integer");
    X.matrix_dim = dim.get<std::size_t>();

    const json& cells = member(doc, "cells", "dataset");
    if (!cells.is_array()) throw ParseError("\"cells\" must be an array");
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const std::string where = "cells[" + std::to_string(i) + "]";
      Cell cell;
      cell.id = member(cells[i], "id", where).get<std::string>();
      cell.dim = member(cells[i], "dim", where).get<int>();
      const json& gens = member(cells[i], "stabilizer_gens", where);
      if (!gens.is_array()) throw ParseError(where + ".stabilizer_gens must be an array");
      for (std::size_t j = 0; j < gens.size(); ++j)
        cell.stabilizer_gens.push_back(
            parse_matrix(gens[j], X.matrix_dim, where + ".stabilizer_gens[" + std::to_string(j) + "]"));
      X.cells.push_back(std::move(cell));
    }

    if (doc.contains("boundaries")) {
      const json& bds = doc.at("boundaries");
      if (!bds.is_array()) throw ParseError("\"boundaries\" must be an array");
      for (std::size_t i = 0; i < bds.size(); ++i) {
        const std::string where = "boundaries[" + std::to_string(i) + "]";
        const std::string cell = member(bds[i], "cell", where).get<std::string>();
        const json& terms = member(bds[i], "terms", where);
        if (!terms.is_array()) throw ParseError(where + ".terms must be an array");
        auto& out = X.boundaries[cell];
        for (std::size_t t = 0; t < terms.size(); ++t) {
          const std::string tw = where + ".terms[" + std::to_string(t) + "]";
          BoundaryTerm term;
          term.sign = member(terms[t], "sign", tw).get<int>();
          term.target = member(terms[t], "target", tw).get<std::string>();
          if (terms[t].contains("g") && !terms[t].at("g").is_null())
            term.witness = parse_matrix(terms[t].at("g"), X.matrix_dim, tw + ".g");
          out.push_back(std::move(term));
        }
      }
    }
    return X;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed dataset: ") + e.what());
  }
}

GCWComplex load_dataset(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_dataset(buf.str());
}

std::string serialize_dataset(const GCWComplex& X) {
  json doc;
  doc["name"] = X.name;
  doc["matrix_dim"] = X.matrix_dim;
  doc["cells"] = json::array();
  for (const auto& cell : X.cells) {
    json gens = json::array();
    for (const auto& g : cell.stabilizer_gens) gens.push_back(matrix_to_json(g));
    doc["cells"].push_back({{"id", cell.id}, {"dim", cell.dim}, {"stabilizer_gens", gens}});
  }
  doc["boundaries"] = json::array();
  auto emit = [&](const std::string& id, const std::vector<BoundaryTerm>& terms) {
    json arr = json::array();
    for (const auto& t : terms) {
      json jt = {{"sign", t.sign}, {"target", t.target}};
      if (t.witness) jt["g"] = matrix_to_json(*t.witness);
      arr.push_back(std::move(jt));
    }
    doc["boundaries"].push_back({{"cell", id}, {"terms", arr}});
  };
  for (const auto& cell : X.cells)
    if (auto it = X.boundaries.find(cell.id); it != X.boundaries.end()) emit(cell.id, it->second);
  for (const auto& [id, terms] : X.boundaries)
    if (!X.find(id)) emit(id, terms);
  return doc.dump(2) + "\n";
}

std::vector<GroupElement> parse_generators(std::string_view json_text) {
  try {
    const json doc = json::parse(json_text);
    const json& dim = member(doc, "matrix_dim", "generators");
    if (!dim.is_number_integer() || dim.get<long long>() <= 0) throw ParseError("matrix_dim must be a positive integer");
    const json& gens = member(doc, "gens", "generators");
    if (!gens.is_array() || gens.empty()) throw ParseError("\"gens\" must be a non-empty array");
    std::vector<GroupElement> out;
    for (std::size_t i = 0; i < gens.size(); ++i)
      out.push_back(parse_matrix(gens[i], dim.get<std::size_t>(), "gens[" + std::to_string(i) + "]"));
    return out;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed generator file: ") + e.what());
  }
}

GroupElement parse_flat_element(std::string_view csv) {
  std::vector<mpz_class> entries;
  std::string text(csv);
  std::istringstream is(text);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    const auto b = tok.find_first_not_of(" \t");
    const auto e = tok.find_last_not_of(" \t");
    if (b == std::string::npos) throw ParseError("empty entry in \"" + text + "\"");
    mpz_class z;
    if (z.set_str(tok.substr(b, e - b + 1), 10) != 0) throw ParseError("bad integer \"" + tok + "\"");
    entries.push_back(z);
  }
  const auto dim = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(entries.size()))));
  if (dim == 0 || dim * dim != entries.size()) {
    throw ParseError("\"" + text + "\" does not have a square number of entries");
  }
  return GroupElement(dim, std::move(entries));
}

}  // namespace bredonk
