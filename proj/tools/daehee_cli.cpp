#include "daehee/serialize.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

namespace {

using namespace daehee;

constexpr std::size_t kDefaultNmaxLimit = 64;

std::size_t nmax_limit() {
  const char* raw = std::getenv("DAEHEE_NMAX_LIMIT");
  if (!raw || !*raw)
    return kDefaultNmaxLimit;
  try {
    long long v = std::stoll(raw);
    if (v >= 0)
      return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
  }
  return kDefaultNmaxLimit;
}

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Target = std::variant<FamilyId, TriangleKind>;

Target parse_family(const std::string& name, long long order_r) {
  static const std::pair<const char*, FamilyName> families[] = {
      {"bernoulli", FamilyName::bernoulli},
      {"bernoulli-2nd", FamilyName::bernoulli2nd},
      {"higher-bernoulli", FamilyName::higher_bernoulli},
      {"degen-bernoulli", FamilyName::degen_bernoulli},
      {"higher-degen-bernoulli", FamilyName::higher_degen_bernoulli},
      {"daehee", FamilyName::daehee},
      {"higher-daehee", FamilyName::higher_daehee},
      {"degen-daehee-1st", FamilyName::degen_daehee_1st},
      {"degen-daehee-2nd", FamilyName::degen_daehee_2nd},
      {"higher-degen-daehee-2nd", FamilyName::higher_degen_daehee_2nd},
  };
  static const std::pair<const char*, TriangleKind> triangles[] = {
      {"stirling1", TriangleKind::stirling1},
      {"stirling2", TriangleKind::stirling2},
      {"degen-stirling2", TriangleKind::degen_stirling2},
  };
  for (const auto& [key, value] : families)
    if (name == key) {
      try {
        return FamilyId(value, order_r);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
    }
  for (const auto& [key, value] : triangles)
    if (name == key) {
      if (order_r != 1)
        throw UsageError("--order-r does not apply to triangle tables");
      return value;
    }
  throw UsageError("unknown family '" + name + "'");
}

enum class Format { json, csv, markdown };

Format parse_format(const std::string& s) {
  if (s == "json")
    return Format::json;
  if (s == "csv")
    return Format::csv;
  if (s == "markdown")
    return Format::markdown;
  throw UsageError("unknown format '" + s + "' (expected json, csv or markdown)");
}

Rational parse_rational_flag(const std::string& flag, const std::string& value) {
  try {
    return Rational::from_string(value);
  } catch (const std::exception& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

std::vector<long long> parse_k_set(const std::string& csv) {
  std::vector<long long> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      long long v = std::stoll(item, &used);
      if (used != item.size())
        throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw UsageError("--k-set: cannot parse '" + item + "' as an integer");
    }
  }
  if (out.empty())
    throw UsageError("--k-set: empty list");
  return out;
}

struct Substitutions {
  std::optional<Rational> lambda_value;
  std::optional<Rational> x_value;
};

MultiPoly apply_substitutions(const MultiPoly& p, const Substitutions& subs) {
  MultiPoly out = p;
  if (subs.lambda_value)
    out = out.substitute_lambda(*subs.lambda_value);
  if (subs.x_value)
    out = out.substitute_x_affine(*subs.x_value, Rational(0));
  return out;
}

/// CSV cells must be numeric. The polynomial argument defaults to its
/// numbers specialization (x = 0, y = 0); lambda has no canonical value and
/// must be substituted explicitly.
MultiPoly csv_value(const MultiPoly& p) {
  MultiPoly v = p.substitute_x_affine(Rational(0), Rational(0))
                    .substitute_y_affine(Rational(0), Rational(0));
  if (!v.is_constant())
    throw UsageError("csv output requires numeric values; substitute lambda via --lambda "
                     "or use json/markdown");
  return v;
}

void write_out(const std::optional<std::string>& path, const std::string& content) {
  if (!path) {
    std::cout << content;
    return;
  }
  std::ofstream os(*path, std::ios::binary);
  if (!os)
    throw UsageError("cannot open output file '" + *path + "'");
  os << content;
}

std::string render_family_table(const std::vector<MultiPoly>& values, Format format) {
  switch (format) {
    case Format::json: {
      Json arr = Json::array();
      for (std::size_t n = 0; n < values.size(); ++n) {
        Json row;
        row["n"] = n;
        row["value"] = value_json(values[n]);
        arr.push_back(std::move(row));
      }
      return arr.dump() + "\n";
    }
    case Format::csv: {
      std::ostringstream os;
      os << "n,value\n";
      for (std::size_t n = 0; n < values.size(); ++n)
        os << n << "," << csv_value(values[n]).constant_value().str() << "\n";
      return os.str();
    }
    case Format::markdown: {
      std::ostringstream os;
      os << "| n | value |\n| --- | --- |\n";
      for (std::size_t n = 0; n < values.size(); ++n)
        os << "| " << n << " | " << values[n] << " |\n";
      return os.str();
    }
  }
  throw UsageError("unreachable format");
}

std::string render_triangle_table(const Triangle& tr, const Substitutions& subs, Format format) {
  auto cell = [&](std::size_t n, std::size_t k) {
    return apply_substitutions(tr.rows[n][k], subs);
  };
  switch (format) {
    case Format::json: {
      Json arr = Json::array();
      for (std::size_t n = 0; n < tr.rows.size(); ++n) {
        Json row_vals = Json::array();
        for (std::size_t k = 0; k <= n; ++k)
          row_vals.push_back(value_json(cell(n, k)));
        Json row;
        row["n"] = n;
        row["row"] = std::move(row_vals);
        arr.push_back(std::move(row));
      }
      return arr.dump() + "\n";
    }
    case Format::csv: {
      std::ostringstream os;
      os << "n,k,value\n";
      for (std::size_t n = 0; n < tr.rows.size(); ++n)
        for (std::size_t k = 0; k <= n; ++k)
          os << n << "," << k << "," << csv_value(cell(n, k)).constant_value().str() << "\n";
      return os.str();
    }
    case Format::markdown: {
      std::ostringstream os;
      os << "| n | row |\n| --- | --- |\n";
      for (std::size_t n = 0; n < tr.rows.size(); ++n) {
        os << "| " << n << " | ";
        for (std::size_t k = 0; k <= n; ++k) {
          if (k)
            os << ", ";
          os << cell(n, k);
        }
        os << " |\n";
      }
      return os.str();
    }
  }
  throw UsageError("unreachable format");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact tables, generating series and identity verification for the degenerate "
               "Daehee/Bernoulli polynomial families"};
  app.require_subcommand(1);

  std::string family_name;
  long long order_r = 1;
  std::size_t n_max = 0;
  std::string format_str = "json";
  std::string lambda_str, x_str;
  std::string output_path_str;

  auto add_common = [&](CLI::App* cmd, bool with_family) {
    if (with_family) {
      cmd->add_option("--family", family_name, "family or triangle name")->required();
      cmd->add_option("--order-r", order_r, "order of a higher-* family (default 1)");
      cmd->add_option("--lambda", lambda_str, "substitute a rational value for lambda");
      cmd->add_option("--x", x_str, "substitute a rational value for x");
    }
    cmd->add_option("--n-max", n_max, "largest index n")->required(with_family);
    cmd->add_option("--format", format_str, "output format: json, csv or markdown");
    cmd->add_option("--output", output_path_str, "write to a file instead of standard output");
  };

  CLI::App* table = app.add_subcommand("table", "sequence or triangle values for n = 0..n-max");
  add_common(table, true);

  CLI::App* series = app.add_subcommand("series", "generating series with plain t^n coefficients");
  add_common(series, true);

  std::size_t v_n_max = 12;
  long long v_r_max = 4;
  std::size_t v_d_max = 3;
  std::string k_set_str = "-1,0,1,2,3";
  bool timings = false;
  bool inject_fault = false;
  CLI::App* verify = app.add_subcommand("verify", "run the identity verification battery");
  verify->add_option("--n-max", v_n_max, "largest index n (default 12)");
  verify->add_option("--r-max", v_r_max, "largest higher-family order (default 4)");
  verify->add_option("--d-max", v_d_max, "largest modulus for the multiplication formula (default 3)");
  verify->add_option("--k-set", k_set_str, "comma-separated integer exponents (default -1,0,1,2,3)");
  verify->add_option("--format", format_str, "output format: json or markdown");
  verify->add_option("--output", output_path_str, "write to a file instead of standard output");
  verify->add_flag("--timings", timings, "include elapsed_ms in markdown output");
  verify->add_flag("--inject-fault", inject_fault)->group("");  // test fixture

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const Format format = parse_format(format_str);
    const std::optional<std::string> output_path =
        output_path_str.empty() ? std::nullopt : std::optional<std::string>(output_path_str);
    const std::size_t limit = nmax_limit();

    if (table->parsed() || series->parsed()) {
      if (n_max > limit)
        throw UsageError("--n-max " + std::to_string(n_max) + " exceeds the limit " +
                         std::to_string(limit) + " (set DAEHEE_NMAX_LIMIT to raise it)");
      Substitutions subs;
      if (!lambda_str.empty())
        subs.lambda_value = parse_rational_flag("--lambda", lambda_str);
      if (!x_str.empty())
        subs.x_value = parse_rational_flag("--x", x_str);
      const Target target = parse_family(family_name, order_r);

      if (table->parsed()) {
        std::string out;
        if (std::holds_alternative<TriangleKind>(target)) {
          out = render_triangle_table(triangle(std::get<TriangleKind>(target), n_max), subs,
                                      format);
        } else {
          std::vector<MultiPoly> values = family_values(std::get<FamilyId>(target), n_max);
          for (MultiPoly& v : values)
            v = apply_substitutions(v, subs);
          out = render_family_table(values, format);
        }
        write_out(output_path, out);
        return 0;
      }

      // series
      if (std::holds_alternative<TriangleKind>(target))
        throw UsageError("series output is defined for families, not triangles");
      if (format != Format::json)
        throw UsageError("series output is json only");
      TruncatedSeries s = generating_series(std::get<FamilyId>(target), n_max);
      if (subs.lambda_value || subs.x_value) {
        std::vector<MultiPoly> coeffs;
        for (std::size_t n = 0; n <= s.order(); ++n)
          coeffs.push_back(apply_substitutions(s.coeff(n), subs));
        s = TruncatedSeries::from_coeffs(std::move(coeffs));
      }
      write_out(output_path, series_json(s).dump() + "\n");
      return 0;
    }

    // verify
    if (v_n_max > limit)
      throw UsageError("--n-max " + std::to_string(v_n_max) + " exceeds the limit " +
                       std::to_string(limit) + " (set DAEHEE_NMAX_LIMIT to raise it)");
    if (format == Format::csv)
      throw UsageError("verify output is json or markdown");
    if (v_r_max < 1)
      throw UsageError("--r-max must be at least 1");
    if (v_d_max < 1)
      throw UsageError("--d-max must be at least 1");
    VerifyConfig cfg;
    cfg.n_max = v_n_max;
    cfg.r_max = v_r_max;
    cfg.d_max = v_d_max;
    cfg.k_set = parse_k_set(k_set_str);
    cfg.inject_fault = inject_fault;
    const std::vector<VerificationReport> reports = run_all(cfg);
    const std::string out = format == Format::json ? reports_json(reports).dump() + "\n"
                                                   : reports_markdown(reports, timings);
    write_out(output_path, out);
    for (const VerificationReport& r : reports)
      if (!r.passed)
        return 1;
    return 0;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
