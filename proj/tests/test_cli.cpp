#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cli_expectations.hpp"

#ifndef DAEHEE_CLI_PATH
#error "DAEHEE_CLI_PATH must point at the built binary"
#endif

namespace {
const std::string kBin = DAEHEE_CLI_PATH;
}

TEST_CASE("documented invocations are byte-exact with the right exit codes") {
  for (const cli::Case& c : cli::documented_cases()) {
    std::string why;
    const bool ok = cli::check_case(kBin, c, &why);
    CAPTURE(c.name);
    CAPTURE(why);
    CHECK(ok);
  }
}

TEST_CASE("equal outputs for the lambda=0 degeneration pair") {
  const auto degen = cli::run(kBin, "table --family degen-daehee-2nd --n-max 2 --lambda 0");
  const auto classical = cli::run(kBin, "table --family daehee --n-max 2");
  CHECK(degen.exit_code == 0);
  CHECK(classical.exit_code == 0);
  CHECK(degen.out == classical.out);
}

TEST_CASE("usage errors exit 2 with a message on standard error") {
  const auto unknown = cli::run(kBin, "table --family nope --n-max 1");
  CHECK(unknown.exit_code == 2);
  CHECK(unknown.err.find("unknown family") != std::string::npos);

  const auto no_sub = cli::run(kBin, "");
  CHECK(no_sub.exit_code == 2);

  const auto bad_flag = cli::run(kBin, "table --family daehee --n-max 1 --no-such-flag");
  CHECK(bad_flag.exit_code == 2);

  const auto bad_rational = cli::run(kBin, "table --family daehee --n-max 1 --x 1.5");
  CHECK(bad_rational.exit_code == 2);

  const auto bad_order = cli::run(kBin, "table --family daehee --n-max 1 --order-r 2");
  CHECK(bad_order.exit_code == 2);

  const auto verify_csv = cli::run(kBin, "verify --n-max 0 --format csv");
  CHECK(verify_csv.exit_code == 2);

  const auto triangle_series = cli::run(kBin, "series --family stirling1 --n-max 2");
  CHECK(triangle_series.exit_code == 2);
}

TEST_CASE("help exits 0") {
  const auto help = cli::run(kBin, "--help");
  CHECK(help.exit_code == 0);
  CHECK(help.out.find("table") != std::string::npos);
}

TEST_CASE("n-max cap from the environment") {
  const auto capped = cli::run(kBin, "table --family daehee --n-max 6", "DAEHEE_NMAX_LIMIT=5");
  CHECK(capped.exit_code == 2);
  CHECK(capped.err.find("DAEHEE_NMAX_LIMIT") != std::string::npos);

  const auto raised = cli::run(kBin, "table --family daehee --n-max 6 --format csv",
                               "DAEHEE_NMAX_LIMIT=6");
  CHECK(raised.exit_code == 0);
}

TEST_CASE("csv requires numeric values") {
  // polynomial families default to their numbers specialization (x = 0)
  const auto withx = cli::run(kBin, "table --family bernoulli --n-max 2 --x 1/2 --format csv");
  CHECK(withx.exit_code == 0);
  CHECK(withx.out == "n,value\n0,1\n1,0\n2,-1/12\n");

  // a symbolic lambda cannot be flattened
  const auto symbolic = cli::run(kBin, "table --family degen-bernoulli --n-max 2 --format csv");
  CHECK(symbolic.exit_code == 2);

  const auto substituted =
      cli::run(kBin, "table --family degen-bernoulli --n-max 2 --lambda 1/2 --format csv");
  CHECK(substituted.exit_code == 0);
  CHECK(substituted.out == "n,value\n0,1\n1,-1/4\n2,1/8\n");

  const auto series_csv = cli::run(kBin, "series --family bernoulli --n-max 1 --format csv");
  CHECK(series_csv.exit_code == 2);
}

TEST_CASE("triangle tables in csv and markdown") {
  const auto csv = cli::run(kBin, "table --family stirling2 --n-max 3 --format csv");
  CHECK(csv.exit_code == 0);
  CHECK(csv.out ==
        "n,k,value\n0,0,1\n1,0,0\n1,1,1\n2,0,0\n2,1,1\n2,2,1\n3,0,0\n3,1,1\n3,2,3\n3,3,1\n");

  const auto md = cli::run(kBin, "table --family stirling1 --n-max 2 --format markdown");
  CHECK(md.exit_code == 0);
  CHECK(md.out == "| n | row |\n| --- | --- |\n| 0 | 1 |\n| 1 | 0, 1 |\n| 2 | 0, -1, 1 |\n");
}

TEST_CASE("higher-order families through the CLI") {
  const auto neg = cli::run(
      kBin, "table --family higher-degen-daehee-2nd --order-r -1 --n-max 1 --x 0 --format json");
  CHECK(neg.exit_code == 0);
  // ((1+lambda log(1+t))^{1/lambda}-1)/log(1+t): value 1 is (1-lambda)/2
  CHECK(neg.out ==
        R"([{"n":0,"value":"1"},{"n":1,"value":[["1/2",0,0,0],["-1/2",1,0,0]]}])"
        "\n");
}

TEST_CASE("output path writes the same bytes") {
  const std::string path = "cli_out_file_test.txt";
  const auto r = cli::run(kBin,
                          "table --family daehee --n-max 3 --format csv --output " + path);
  CHECK(r.exit_code == 0);
  CHECK(r.out.empty());
  CHECK(cli::slurp(path) == cli::kDaeheeCsv);
  std::remove(path.c_str());
}

TEST_CASE("series substitution flags") {
  const auto r = cli::run(kBin, "series --family degen-daehee-2nd --n-max 1 --lambda 0 --x 0");
  CHECK(r.exit_code == 0);
  CHECK(r.out == R"({"order":1,"coeffs":[[["1",0,0,0]],[["-1/2",0,0,0]]]})" "\n");
}
