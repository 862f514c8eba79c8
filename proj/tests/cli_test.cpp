#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "polyfam/cli.hpp"

using namespace polyfam;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "polyfam");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("polyfam_cli_test_" + name);
}

}  // namespace

TEST(Cli, PolyBernoulliCsv) {
  const auto r = cli({"compute", "--family", "poly-bernoulli", "--k", "2", "--n-max", "6", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 8U);
  EXPECT_EQ(rows[0], "n,value");
  EXPECT_EQ(rows[1], "0,1");
  EXPECT_EQ(rows[2], "1,1/4");
}

TEST(Cli, MultiPolyEulerVanishingRows) {
  const auto r = cli({"compute", "--family", "multi-poly-euler", "--k", "1,1", "--alpha", "1", "--beta", "0", "--gamma",
                      "1", "--x", "1/2", "--n-max", "5"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 7U);
  EXPECT_EQ(rows[1], "0,0");
  EXPECT_EQ(rows[2], "1,0");
}

TEST(Cli, HurwitzLerchFirstRow) {
  // the all-zero chain gives 1/((a-1)^1 a^2) = 1/4 at a = 2
  const auto r = cli({"compute", "--family", "hl-multi-pb", "--k", "1,2", "--a", "2", "--x", "0", "--n-max", "4"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 6U);
  EXPECT_EQ(rows[1], "0,1/4");
}

TEST(Cli, CsvRoundTrip) {
  FamilySpec spec;
  spec.tag = FamilyTag::multi_poly_bernoulli;
  spec.k = MultiIndex{2, -1, 1};
  spec.params = {Rational(2), Rational(1), Rational(1, 2)};
  spec.x = Rational(-1, 3);
  spec.n_max = 7;
  const auto expect = std::get<std::vector<Rational>>(compute(spec).values);
  const auto r = cli({"compute", "--family", "multi-poly-bernoulli", "--k", "2,-1,1", "--alpha", "2", "--beta", "1",
                      "--gamma", "1/2", "--x", "-1/3", "--n-max", "7"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), expect.size() + 1);
  for (std::size_t n = 0; n < expect.size(); ++n) {
    const auto& row = rows[n + 1];
    const auto comma = row.find(',');
    EXPECT_EQ(row.substr(0, comma), std::to_string(n));
    EXPECT_EQ(Rational::parse(row.substr(comma + 1)), expect[n]);
  }
}

TEST(Cli, SymbolicAndBivariateCsv) {
  const auto sym = cli({"compute", "--family", "poly-euler", "--k", "1", "--x", "sym", "--n-max", "2"});
  ASSERT_EQ(sym.code, 0) << sym.err;
  // E_2^{(1)}(x) = 2 E_1(x) = 2x - 1, coefficients in ascending degree
  EXPECT_EQ(lines(sym.out).back(), "2,-1;2");

  const auto bi = cli({"compute", "--family", "symmetrized-D", "--alpha", "2", "--beta", "1", "--gamma", "1/2", "--x",
                       "1/2", "--y", "-1", "--n-max", "2", "--m-max", "1"});
  ASSERT_EQ(bi.code, 0) << bi.err;
  const auto rows = lines(bi.out);
  EXPECT_EQ(rows[0], "n,m,value");
  EXPECT_EQ(rows.size(), 7U);
  EXPECT_EQ(rows[1], "0,0,0");
}

TEST(Cli, JsonAndLatex) {
  const auto j = cli({"compute", "--family", "hurwitz-pb", "--k", "2", "--a", "1/2", "--n-max", "3", "--format", "json"});
  ASSERT_EQ(j.code, 0) << j.err;
  const auto doc = nlohmann::json::parse(j.out);
  EXPECT_EQ(doc.at("family"), "hurwitz-pb");
  EXPECT_EQ(doc.at("reference"), "Eq. (1.2)");
  EXPECT_EQ(doc.at("values").size(), 4U);
  EXPECT_EQ(doc.at("values")[1], "4/9");

  const auto l = cli({"compute", "--family", "poly-bernoulli", "--k", "2", "--n-max", "2", "--format", "latex"});
  ASSERT_EQ(l.code, 0) << l.err;
  EXPECT_NE(l.out.find("\\begin{tabular}"), std::string::npos);
  EXPECT_NE(l.out.find("\\frac{1}{4}"), std::string::npos);
  EXPECT_EQ(l.out.find("documentclass"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(cli({}).code, exit_code::usage);
  EXPECT_EQ(cli({"compute"}).code, exit_code::usage);
  EXPECT_EQ(cli({"compute", "--family", "poly-bernoulli", "--k", "1", "--format", "xml"}).code, exit_code::usage);
  EXPECT_EQ(cli({"compute", "--family", "poly-bernoulli"}).code, exit_code::usage);
  EXPECT_EQ(cli({"compute", "--family", "poly-euler", "--k", "1,2"}).code, exit_code::usage);
  EXPECT_EQ(cli({"compute", "--family", "poly-euler", "--k", "x"}).code, exit_code::usage);
  EXPECT_EQ(cli({"compute", "--family", "poly-euler", "--k", "1", "--x", "1/0"}).code, exit_code::bad_rational);
  EXPECT_EQ(cli({"compute", "--family", "poly-euler", "--k", "1", "--x", "0.5"}).code, exit_code::bad_rational);
  EXPECT_EQ(cli({"compute", "--family", "hurwitz-pb", "--k", "2", "--a", "-1"}).code, exit_code::pole);
  EXPECT_EQ(cli({"compute", "--family", "hl-multi-pb", "--k", "1,2", "--a", "1"}).code, exit_code::pole);
  EXPECT_EQ(cli({"compute", "--family", "no-such-family"}).code, exit_code::unknown_family);
  EXPECT_EQ(cli({"compute", "--family", "multi-poly-bernoulli", "--k", "1", "--alpha", "1", "--beta", "-1"}).code,
            exit_code::parameter);
  EXPECT_EQ(cli({"compute", "--family", "symmetrized-Dcal", "--r", "1"}).code, exit_code::parameter);
  EXPECT_EQ(cli({"verify", "--id", "nonexistent"}).code, exit_code::usage);
  EXPECT_EQ(cli({"compute", "--family", "poly-bernoulli", "--k", "1", "--out", "/nonexistent-dir/x.csv"}).code,
            exit_code::io);
  const auto help = cli({"--help"});
  EXPECT_EQ(help.code, exit_code::ok);
  EXPECT_NE(help.out.find("compute"), std::string::npos);
}

TEST(Cli, ErrorsGoToStderr) {
  const auto r = cli({"compute", "--family", "hurwitz-pb", "--k", "2", "--a", "0"});
  EXPECT_EQ(r.code, exit_code::pole);
  EXPECT_TRUE(r.out.empty());
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, ListFamilies) {
  const auto r = cli({"list-families"});
  ASSERT_EQ(r.code, 0);
  const auto rows = lines(r.out);
  EXPECT_EQ(rows.size(), 11U);
  auto row_of = [&](const std::string& name) {
    for (const auto& row : rows)
      if (row.rfind(name + " ", 0) == 0) return row;
    return std::string();
  };
  EXPECT_NE(row_of("multi-poly-euler").find("Eq. (1.11)"), std::string::npos);
  EXPECT_NE(row_of("hl-multi-pb").find("Eq. (5.4)"), std::string::npos);
}

TEST(Cli, VerifySingleCheckToFile) {
  const auto path = temp_file("report.json");
  const auto r = cli({"verify", "--id", "thm5.1", "--order", "4", "--out", path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  const auto doc = nlohmann::json::parse(in);
  EXPECT_EQ(doc.at("order"), 4);
  ASSERT_EQ(doc.at("checks").size(), 1U);
  EXPECT_EQ(doc.at("checks")[0].at("id"), "thm5.1");
  EXPECT_EQ(doc.at("summary").at("fail"), 0);
  std::filesystem::remove(path);
}

TEST(Cli, VerifyIsDeterministicAcrossJobCounts) {
  const auto one = cli({"verify", "--id", "thm3.1", "--id", "eq1.13", "--order", "4", "--jobs", "1"});
  const auto many = cli({"verify", "--id", "thm3.1", "--id", "eq1.13", "--order", "4", "--jobs", "3"});
  ASSERT_EQ(one.code, 0) << one.err;
  EXPECT_EQ(one.out, many.out);
}
