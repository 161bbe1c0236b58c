#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "bredonk/dataset.hpp"
#include "bredonk/report.hpp"

using namespace bredonk;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "bredonk_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

fs::path write_file(const std::string& name, const std::string& text) {
  const fs::path p = scratch(name);
  std::ofstream(p) << text;
  return p;
}

std::string homology_line(const Report& r) { return format_homology(r.homology); }

}  // namespace

TEST(Dataset, BuiltinRoundTrips) {
  const GCWComplex X = builtin_sl3z();
  const std::string text = serialize_dataset(X);
  EXPECT_EQ(parse_dataset(text), X);
  EXPECT_EQ(serialize_dataset(parse_dataset(text)), text);
}

TEST(Dataset, AcceptsStringIntegersAndMissingWitness) {
  const GCWComplex X = parse_dataset(R"({"name":"p","matrix_dim":1,
    "cells":[{"id":"v","dim":0,"stabilizer_gens":[["-1"]]},{"id":"e","dim":1,"stabilizer_gens":[]}],
    "boundaries":[{"cell":"e","terms":[{"sign":1,"target":"v"},{"sign":-1,"target":"v","g":[1]}]}]})");
  EXPECT_EQ(X.cells[0].stabilizer_gens[0], GroupElement::from_rows({{-1}}));
  EXPECT_FALSE(X.boundaries.at("e")[0].witness.has_value());
  EXPECT_TRUE(X.boundaries.at("e")[1].witness.has_value());
}

TEST(Dataset, ParseErrors) {
  EXPECT_THROW(parse_dataset("{"), ParseError);
  EXPECT_THROW(parse_dataset(R"({"matrix_dim":2,"cells":[{"id":"v","dim":0,"stabilizer_gens":[[1,0,0]]}]})"), ParseError);
  EXPECT_THROW(parse_dataset(R"({"cells":[]})"), ParseError);
  EXPECT_THROW(parse_dataset(R"({"matrix_dim":1,"cells":[{"id":"v","dim":0,"stabilizer_gens":[["x"]]}]})"), ParseError);
  EXPECT_THROW(load_dataset("/nonexistent/file.json"), ParseError);
  EXPECT_THROW(parse_flat_element("1,2,3"), ParseError);
  EXPECT_EQ(parse_flat_element("0, 1, -1, 0"), GroupElement::from_rows({{0, 1}, {-1, 0}}));
  EXPECT_THROW(parse_generators(R"({"matrix_dim":3,"gens":[]})"), ParseError);
}

TEST(Commands, Validate) {
  const Report r = cmd_validate(builtin_source("sl3z"));
  EXPECT_EQ(r.exit_code, kExitOk);
  EXPECT_EQ(r.to_text().substr(0, r.to_text().find('\n')), "validate sl3z: ok, 19 orbit cells");
  const Report c = cmd_validate(builtin_source("c2point"));
  EXPECT_EQ(c.exit_code, kExitOk);
  EXPECT_EQ(c.validation->cells.size(), 1u);
}

TEST(Commands, ValidateTamperedFile) {
  GCWComplex X = builtin_sl3z();
  X.boundaries["e5"][0].witness.reset();
  const Report r = cmd_validate(file_source(write_file("broken.json", serialize_dataset(X))));
  EXPECT_EQ(r.exit_code, kExitValidation);
  ASSERT_FALSE(r.validation->ok());
  EXPECT_EQ(r.validation->diagnostics[0].code, ErrorCode::NotSubconjugate);
  EXPECT_EQ(r.validation->diagnostics[0].cell, "e5");
  EXPECT_NE(r.to_text().find("NotSubconjugate at cell e5, term 0"), std::string::npos);
}

TEST(Commands, Homology) {
  const Report r = cmd_homology(builtin_source("sl3z"));
  EXPECT_EQ(r.exit_code, kExitOk);
  EXPECT_EQ(homology_line(r), "H0 = Z^8; H1 = 0; H2 = 0; H3 = 0");
  EXPECT_EQ(r.chain_ranks, (std::vector<std::size_t>{26, 28, 11, 1}));
  EXPECT_EQ(homology_line(cmd_homology(builtin_source("c2point"))), "H0 = Z^2");

  CommandOptions expect;
  expect.expect_h0_rank = 8;
  EXPECT_EQ(cmd_homology(builtin_source("sl3z"), expect).exit_code, kExitOk);
  expect.expect_h0_rank = 7;
  EXPECT_EQ(cmd_homology(builtin_source("sl3z"), expect).exit_code, kExitMismatch);
}

TEST(Commands, DumpMatrices) {
  CommandOptions opts;
  opts.dump_dir = scratch("dump");
  fs::remove_all(*opts.dump_dir);
  ASSERT_EQ(cmd_homology(builtin_source("sl3z"), opts).exit_code, kExitOk);
  std::ifstream in(*opts.dump_dir / "sl3z.psi2.txt");
  std::stringstream buf;
  buf << in.rdbuf();
  const IntegerMatrix psi2 = IntegerMatrix::from_grid(buf.str());
  EXPECT_EQ(psi2.rows(), 28u);
  EXPECT_EQ(psi2.cols(), 11u);
  EXPECT_EQ(buf.str().substr(0, 6), "28 11\n");
}

TEST(Commands, KHomology) {
  const Report r = cmd_khomology(builtin_source("sl3z"));
  ASSERT_TRUE(r.k_theory.has_value());
  EXPECT_EQ(format_k_theory(*r.k_theory), "K0 = Z^8; K1 = 0");
  EXPECT_EQ(format_k_theory(*cmd_khomology(builtin_source("c2point")).k_theory), "K0 = Z^2; K1 = 0");

  const GCWComplex H2 = parse_dataset(R"({"name":"sphere2","matrix_dim":1,
    "cells":[{"id":"v","dim":0,"stabilizer_gens":[[1]]},{"id":"f","dim":2,"stabilizer_gens":[[1]]}]})");
  const Report s = cmd_khomology(file_source(write_file("sphere2.json", serialize_dataset(H2))));
  EXPECT_EQ(s.exit_code, kExitOk);
  EXPECT_EQ(format_k_theory(*s.k_theory), "indeterminate (H2 nonzero)");
}

TEST(Commands, Kunneth) {
  const Report r = cmd_kunneth(builtin_source("sl3z"), builtin_source("c2point"));
  EXPECT_EQ(homology_line(r), "H0 = Z^16; H1 = 0; H2 = 0; H3 = 0");
  EXPECT_EQ(format_k_theory(*r.k_theory), "K0 = Z^16; K1 = 0");
  EXPECT_EQ(homology_line(cmd_kunneth(builtin_source("c2point"), builtin_source("c2point"))), "H0 = Z^4");
  EXPECT_EQ(cmd_kunneth(builtin_source("sl3z"), builtin_source("trivialpoint")).homology,
            cmd_homology(builtin_source("sl3z")).homology);
  EXPECT_EQ(cmd_homology(builtin_source("gl3z")).homology, r.homology);
}

TEST(Commands, CharTable) {
  const Report s4 = cmd_chartable({*named_element("g2"), *named_element("g3")});
  ASSERT_TRUE(s4.char_table.has_value());
  EXPECT_EQ(s4.char_table->order, 24u);
  EXPECT_EQ(s4.char_table->degrees, (std::vector<std::string>{"1", "1", "2", "3", "3"}));
  const Report c2 = cmd_chartable({*named_element("g2")});
  EXPECT_EQ(c2.char_table->rows.size(), 2u);
  const Report d4 = cmd_chartable({*named_element("g6"), *named_element("g8")});
  EXPECT_EQ(d4.char_table->order, 8u);
  EXPECT_EQ(d4.char_table->rows.size(), 5u);
  const Report inf = cmd_chartable({GroupElement::from_rows({{1, 1}, {0, 1}})});
  EXPECT_EQ(inf.exit_code, kExitValidation);
  EXPECT_NE(inf.errors.at(0).find("GroupTooLargeOrInfinite"), std::string::npos);
}

TEST(Commands, SourceErrors) {
  EXPECT_THROW(builtin_source("nope"), ParseError);
  EXPECT_THROW(file_source("/nonexistent.json"), ParseError);
}

TEST(Report, DeterministicJson) {
  const std::string a = cmd_kunneth(builtin_source("sl3z"), builtin_source("c2point")).to_json();
  const std::string b = cmd_kunneth(builtin_source("sl3z"), builtin_source("c2point")).to_json();
  EXPECT_EQ(a, b);
  const auto pos_chain = a.find("\"chain_ranks\"");
  const auto pos_command = a.find("\"command\"");
  const auto pos_homology = a.find("\"homology\"");
  EXPECT_LT(pos_chain, pos_command);
  EXPECT_LT(pos_command, pos_homology);
  EXPECT_NE(a.find("\"Z^16\""), std::string::npos);
  EXPECT_EQ(cmd_validate(builtin_source("sl3z")).to_text(), cmd_validate(builtin_source("sl3z")).to_text());
}
