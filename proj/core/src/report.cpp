#include "bredonk/report.hpp"

#include <sstream>

#include "json.hpp"

namespace bredonk {

using nlohmann::json;

namespace {

json integer_json(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

// Run-length rendering of a divisor chain: "1^18", "1^3 2^1 6^2".
std::string format_divisors(const std::vector<mpz_class>& divisors) {
  if (divisors.empty()) return "(none)";
  std::ostringstream os;
  std::size_t i = 0;
  while (i < divisors.size()) {
    std::size_t j = i;
    while (j < divisors.size() && divisors[j] == divisors[i]) ++j;
    os << (i ? " " : "") << divisors[i] << '^' << (j - i);
    i = j;
  }
  return os.str();
}

std::string locate(const Diagnostic& d) {
  std::string where;
  if (!d.cell.empty()) where += "cell " + d.cell;
  if (d.term) where += (where.empty() ? "" : ", ") + std::string("term ") + std::to_string(*d.term);
  if (d.degree) where += (where.empty() ? "" : ", ") + std::string("degree ") + std::to_string(*d.degree);
  return where;
}

std::string join_sources(const std::vector<std::string>& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? " x " : "") + s[i];
  return out;
}

}  // namespace

std::string format_homology(const std::vector<FgAbelianGroup>& groups, char letter) {
  std::ostringstream os;
  for (std::size_t d = 0; d < groups.size(); ++d) os << (d ? "; " : "") << letter << d << " = " << groups[d].to_string();
  return os.str();
}

std::string format_k_theory(const KTheoryResult& k) {
  if (k.status == KStatus::Determined) return "K0 = " + k.k0->to_string() + "; K1 = " + k.k1->to_string();
  std::string s = "indeterminate (";
  for (std::size_t i = 0; i < k.obstructions.size(); ++i)
    s += (i ? ", " : "") + std::string("H") + std::to_string(k.obstructions[i]);
  return s + " nonzero)";
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << command;
  if (!sources.empty()) os << ' ' << join_sources(sources);

  if (validation) {
    os << ": " << (validation->ok() ? "ok" : "FAILED") << ", " << validation->cells.size()
       << (validation->cells.size() == 1 ? " orbit cell\n" : " orbit cells\n");
    for (const auto& c : validation->cells) {
      os << "  " << c.id << "  dim " << c.dim << "  order " << c.order << "  classes " << c.class_count << "  degrees ";
      for (std::size_t i = 0; i < c.degrees.size(); ++i) os << (i ? "," : "") << c.degrees[i];
      os << '\n';
    }
    for (const auto& d : validation->diagnostics) {
      const std::string where = locate(d);
      os << "  " << to_string(d.code) << (where.empty() ? "" : " at " + where) << ": " << d.message << '\n';
    }
  } else {
    os << '\n';
  }

  if (char_table) {
    const auto& ct = *char_table;
    os << "group order " << ct.order << ", " << ct.classes.size() << " classes\n";
    for (std::size_t c = 0; c < ct.classes.size(); ++c) {
      os << "  C" << c << "  size " << ct.classes[c].size << "  order " << ct.classes[c].element_order << "  rep "
         << ct.classes[c].representative << '\n';
    }
    os << "degrees:";
    for (const auto& d : ct.degrees) os << ' ' << d;
    os << '\n';
    for (std::size_t i = 0; i < ct.rows.size(); ++i) {
      os << "  X" << i << ":";
      for (const auto& v : ct.rows[i]) os << "  " << v;
      os << '\n';
    }
  }

  if (!chain_ranks.empty()) {
    os << "chain ranks:";
    for (auto r : chain_ranks) os << ' ' << r;
    os << '\n';
  }
  for (std::size_t d = 0; d < psi_divisors.size(); ++d)
    os << "psi_" << d + 1 << " divisors: " << format_divisors(psi_divisors[d]) << '\n';
  if (!homology.empty()) os << format_homology(homology) << '\n';
  if (euler_characteristic) os << "euler characteristic: " << *euler_characteristic << '\n';
  if (k_theory) os << format_k_theory(*k_theory) << '\n';
  if (expected_h0_rank && h0_check) {
    os << "expected H0 rank " << *expected_h0_rank << ": " << (*h0_check ? "ok" : "MISMATCH") << '\n';
  }
  for (const auto& e : errors) os << "error: " << e << '\n';
  return os.str();
}

std::string Report::to_json() const {
  json j;
  j["command"] = command;
  j["sources"] = sources;
  j["exit_code"] = exit_code;
  j["errors"] = errors;

  if (validation) {
    json cells = json::array();
    for (const auto& c : validation->cells) {
      cells.push_back({{"id", c.id},
                       {"dim", c.dim},
                       {"order", c.order},
                       {"class_count", c.class_count},
                       {"degrees", c.degrees}});
    }
    json diags = json::array();
    for (const auto& d : validation->diagnostics) {
      json jd = {{"code", std::string(to_string(d.code))}, {"cell", d.cell}, {"message", d.message}};
      jd["term"] = d.term ? json(*d.term) : json(nullptr);
      jd["degree"] = d.degree ? json(*d.degree) : json(nullptr);
      diags.push_back(std::move(jd));
    }
    j["validation"] = {{"ok", validation->ok()}, {"cells", cells}, {"diagnostics", diags}};
  }
  if (!chain_ranks.empty()) j["chain_ranks"] = chain_ranks;
  if (!psi_divisors.empty()) {
    json all = json::array();
    for (const auto& divs : psi_divisors) {
      json arr = json::array();
      for (const auto& d : divs) arr.push_back(integer_json(d));
      all.push_back(std::move(arr));
    }
    j["psi_divisors"] = std::move(all);
  }
  if (!homology.empty()) {
    json arr = json::array();
    for (const auto& h : homology) arr.push_back(h.to_string());
    j["homology"] = std::move(arr);
  }
  if (euler_characteristic) j["euler_characteristic"] = *euler_characteristic;
  if (k_theory) {
    json k = {{"status", k_theory->status == KStatus::Determined ? "determined" : "indeterminate"},
              {"obstructions", k_theory->obstructions}};
    k["K0"] = k_theory->k0 ? json(k_theory->k0->to_string()) : json(nullptr);
    k["K1"] = k_theory->k1 ? json(k_theory->k1->to_string()) : json(nullptr);
    j["k_theory"] = std::move(k);
  }
  if (expected_h0_rank) j["expected_h0_rank"] = *expected_h0_rank;
  if (h0_check) j["h0_check"] = *h0_check;
  if (char_table) {
    json classes = json::array();
    for (const auto& c : char_table->classes)
      classes.push_back({{"size", c.size}, {"order", c.element_order}, {"representative", c.representative}});
    j["char_table"] = {{"order", char_table->order},
                       {"classes", classes},
                       {"degrees", char_table->degrees},
                       {"irreducibles", char_table->rows}};
  }
  return j.dump(2) + "\n";
}

}  // namespace bredonk
