#include "lucaspi/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <optional>
#include <ostream>

#include "lucaspi/errors.hpp"
#include "lucaspi/lucas_lehmer.hpp"
#include "lucaspi/numerics.hpp"
#include "lucaspi/pi_formulas.hpp"
#include "lucaspi/radicals.hpp"
#include "lucaspi/verify.hpp"

namespace lucaspi {

int RunConfig::precision_bits() const {
  return static_cast<int>(std::ceil(precision_digits * std::log2(10.0))) + 32;
}

namespace {

using nlohmann::ordered_json;

struct Range {
  int first = 0;
  int last = 0;
};

int parse_int(std::string_view text, std::string_view what) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ArgumentError("bad " + std::string(what) + ": '" + std::string(text) + "'");
  }
  return value;
}

// "A..B" or a single "A".
Range parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int n = parse_int(text, "--n");
    return {n, n};
  }
  return {parse_int(std::string_view(text).substr(0, dots), "--n"),
          parse_int(std::string_view(text).substr(dots + 2), "--n")};
}

// Minimal CSV quoting: words and numbers never need it, but empty words do.
std::string csv_field(const std::string& s) {
  if (s.empty() || s.find_first_of(",\"\n") != std::string::npos) {
    std::string q = "\"";
    for (char c : s) {
      if (c == '"') q += '"';
      q += c;
    }
    return q + "\"";
  }
  return s;
}

void print_table(std::ostream& out, const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& r : rows) {
    for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
  }
  const auto line = [&](const std::vector<std::string>& r) {
    for (std::size_t c = 0; c < r.size(); ++c) {
      out << r[c];
      if (c + 1 < r.size()) out << std::string(width[c] - r[c].size() + 2, ' ');
    }
    out << '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
}

void print_csv(std::ostream& out, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
  const auto line = [&](const std::vector<std::string>& r) {
    for (std::size_t c = 0; c < r.size(); ++c) out << (c ? "," : "") << csv_field(r[c]);
    out << '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
}

std::string word_text(const GrayWord& w) { return w.empty() ? "(empty)" : w.to_string(); }

int cmd_radical(const std::string& word_string, const RunConfig& cfg, std::ostream& out) {
  const GrayWord word = GrayWord::parse(word_string);
  const int p = cfg.precision_bits();
  const std::string value = evaluate(word, p).to_fixed(cfg.precision_digits);
  const bool has_closed_form = word.size() <= 61;
  std::uint64_t j = 0;
  PiRational angle(1, 2);
  if (has_closed_form) {
    j = rank(word);
    angle = closed_form(word).angle;
  }
  const int den_exp = static_cast<int>(word.size()) + 2;

  switch (cfg.format) {
    case OutputFormat::json: {
      ordered_json doc{{"word", word.to_string()}, {"length", word.size()}, {"value", value}};
      if (has_closed_form) {
        doc["rank"] = j;
        doc["angle_num"] = angle.num();
        doc["angle_den_exp"] = den_exp;
      } else {
        doc["rank"] = nullptr;
        doc["angle_num"] = nullptr;
        doc["angle_den_exp"] = nullptr;
      }
      out << doc.dump(2) << '\n';
      break;
    }
    case OutputFormat::csv: {
      const std::string rank_text = has_closed_form ? std::to_string(j) : "";
      const std::string num_text = has_closed_form ? std::to_string(angle.num()) : "";
      const std::string den_text = has_closed_form ? std::to_string(den_exp) : "";
      print_csv(out, {"word", "length", "rank", "angle_num", "angle_den_exp", "value"},
                {{word.to_string(), std::to_string(word.size()), rank_text, num_text, den_text,
                  value}});
      break;
    }
    case OutputFormat::text:
      out << "word    " << word_text(word) << " (" << word.size() << " signs)\n";
      out << "value   " << value << '\n';
      if (has_closed_form) {
        out << "rank    j = " << j << '\n';
        out << "angle   (2j-1)/2^" << den_exp << " · π = " << angle.num() << "/2^" << den_exp
            << " · π\n";
      } else {
        out << "rank    not representable (more than 61 signs)\n";
      }
      break;
  }
  return kExitOk;
}

struct PiOptions {
  std::string method = "classic";
  std::optional<int> m;
  std::optional<std::uint64_t> h;
  std::string n_range;
};

int cmd_pi(const PiOptions& o, const RunConfig& cfg, std::ostream& out) {
  TableSpec spec;
  const Range r = parse_range(o.n_range);
  spec.n_first = r.first;
  spec.n_last = r.last;
  if (o.method == "gray") {
    if (!o.m || !o.h) throw ArgumentError("--method gray needs --m and --h");
    spec.method = Method::gray;
    spec.m = *o.m;
    spec.h = *o.h;
  } else if (o.m || o.h) {
    throw ArgumentError("--m and --h only apply to --method gray");
  }
  const int p = cfg.precision_bits();
  const std::vector<ApproxRecord> table = convergence_table(spec, p);

  const std::vector<std::string> header{"n",           "m",         "h",
                                        "word",        "approximant", "abs_error",
                                        "digits_correct"};
  if (cfg.format == OutputFormat::json) {
    ordered_json rows = ordered_json::array();
    for (const auto& rec : table) {
      ordered_json row{{"n", rec.n}};
      row["m"] = rec.m ? ordered_json(*rec.m) : ordered_json(nullptr);
      row["h"] = rec.h ? ordered_json(*rec.h) : ordered_json(nullptr);
      row["word"] = rec.word.to_string();
      row["approximant"] = rec.approximant.to_fixed(cfg.precision_digits);
      row["abs_error"] = rec.abs_error.to_scientific(6);
      row["digits_correct"] = rec.digits_correct();
      rows.push_back(std::move(row));
    }
    out << ordered_json{{"method", o.method}, {"digits", cfg.precision_digits}, {"rows", rows}}.dump(2)
        << '\n';
    return kExitOk;
  }
  std::vector<std::vector<std::string>> rows;
  for (const auto& rec : table) {
    rows.push_back({std::to_string(rec.n), rec.m ? std::to_string(*rec.m) : "",
                    rec.h ? std::to_string(*rec.h) : "", rec.word.to_string(),
                    rec.approximant.to_fixed(cfg.precision_digits), rec.abs_error.to_scientific(6),
                    std::to_string(rec.digits_correct())});
  }
  if (cfg.format == OutputFormat::csv) {
    print_csv(out, header, rows);
  } else {
    print_table(out, header, rows);
  }
  return kExitOk;
}

int cmd_verify(const std::string& suite_text, const RunConfig& cfg, std::ostream& out,
               std::ostream& err) {
  const std::optional<Suite> suite = parse_suite(suite_text);
  if (!suite) throw ArgumentError("unknown suite '" + suite_text + "'");
  VerifyOptions options;
  options.precision_bits = cfg.precision_bits();
  options.seed = cfg.seed;
  const std::vector<SuiteResult> results = run_verify(*suite, options);

  bool all_passed = true;
  for (const auto& s : results) all_passed = all_passed && s.passed();

  const std::vector<std::string> header{"suite", "check", "cases", "worst", "tolerance", "status"};
  std::vector<std::vector<std::string>> rows;
  for (const auto& s : results) {
    for (const auto& r : s.rows) {
      rows.push_back({s.name, r.label, std::to_string(r.cases), r.worst, r.tolerance,
                      r.passed ? "pass" : "FAIL"});
    }
  }
  switch (cfg.format) {
    case OutputFormat::json: {
      ordered_json suites = ordered_json::array();
      for (const auto& s : results) {
        ordered_json checks = ordered_json::array();
        for (const auto& r : s.rows) {
          checks.push_back({{"check", r.label},
                            {"cases", r.cases},
                            {"worst", r.worst},
                            {"tolerance", r.tolerance},
                            {"passed", r.passed}});
        }
        suites.push_back({{"suite", s.name},
                          {"passed", s.passed()},
                          {"checks", checks},
                          {"failures", s.failures}});
      }
      out << ordered_json{{"digits", cfg.precision_digits},
                          {"seed", cfg.seed},
                          {"passed", all_passed},
                          {"suites", suites}}
                 .dump(2)
          << '\n';
      break;
    }
    case OutputFormat::csv:
      print_csv(out, header, rows);
      break;
    case OutputFormat::text:
      print_table(out, header, rows);
      out << (all_passed ? "all checks passed\n" : "some checks FAILED\n");
      break;
  }
  for (const auto& s : results) {
    for (const auto& f : s.failures) err << "FAIL " << s.name << ": " << f << '\n';
  }
  return all_passed ? kExitOk : kExitFailure;
}

int cmd_zeros(int n, const std::optional<std::string>& a_text, const RunConfig& cfg,
              std::ostream& out) {
  const int p = cfg.precision_bits();
  std::vector<ZeroDescriptor> zeros;
  if (a_text) {
    zeros = m_zeros(n, BigReal::from_string(*a_text, p + 2 * n), p);
  } else {
    zeros = positive_zeros(n, p);
  }
  const std::vector<std::string> header{"n",          "j", "word", "angle_num", "angle_den_exp",
                                        "value_decimal"};
  if (cfg.format == OutputFormat::json) {
    ordered_json entries = ordered_json::array();
    for (const auto& z : zeros) {
      entries.push_back({{"n", z.n},
                         {"j", z.j},
                         {"word", z.word.to_string()},
                         {"angle_num", z.angle.num()},
                         {"angle_den_exp", z.angle.den_exp()},
                         {"value_decimal", z.value.to_fixed(cfg.precision_digits)}});
    }
    ordered_json doc{{"n", n}};
    doc["a"] = a_text ? ordered_json(*a_text) : ordered_json(nullptr);
    doc["digits"] = cfg.precision_digits;
    doc["zeros"] = entries;
    out << doc.dump(2) << '\n';
    return kExitOk;
  }
  std::vector<std::vector<std::string>> rows;
  for (const auto& z : zeros) {
    rows.push_back({std::to_string(z.n), std::to_string(z.j), z.word.to_string(),
                    std::to_string(z.angle.num()), std::to_string(z.angle.den_exp()),
                    z.value.to_fixed(cfg.precision_digits)});
  }
  if (cfg.format == OutputFormat::csv) {
    print_csv(out, header, rows);
  } else {
    print_table(out, header, rows);
  }
  return kExitOk;
}

int cmd_phi(const std::string& n_range, const std::string& variant, const RunConfig& cfg,
            std::ostream& out) {
  const Range r = parse_range(n_range);
  const int p = cfg.precision_bits();
  const BigReal phi = reference_phi(p);
  std::vector<std::string> kinds;
  if (variant == "all") {
    kinds = {"standard", "shifted", "exact"};
  } else {
    kinds = {variant};
  }
  std::vector<std::vector<std::string>> rows;
  for (int n = r.first; n <= r.last; ++n) {
    for (const auto& kind : kinds) {
      BigReal value = kind == "exact"     ? phi_exact(n, p)
                      : kind == "shifted" ? phi_asymptotic(n, p, PhiVariant::shifted)
                                          : phi_asymptotic(n, p, PhiVariant::standard);
      rows.push_back({std::to_string(n), kind, value.to_fixed(cfg.precision_digits),
                      abs(value - phi).to_scientific(6)});
    }
  }
  const std::vector<std::string> header{"n", "variant", "value", "abs_error"};
  if (cfg.format == OutputFormat::json) {
    ordered_json entries = ordered_json::array();
    for (const auto& row : rows) {
      entries.push_back({{"n", std::stoi(row[0])},
                         {"variant", row[1]},
                         {"value", row[2]},
                         {"abs_error", row[3]}});
    }
    out << ordered_json{{"digits", cfg.precision_digits}, {"rows", entries}}.dump(2) << '\n';
  } else if (cfg.format == OutputFormat::csv) {
    print_csv(out, header, rows);
  } else {
    print_table(out, header, rows);
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Nested radicals of 2, Gray codes and Lucas-Lehmer zeros", "lucaspi"};
  app.require_subcommand(1);
  app.fallthrough();
  // -h is taken by the pi subcommand's --h.
  app.set_help_flag("--help", "print this help and exit");

  RunConfig cfg;
  const std::map<std::string, OutputFormat> formats{
      {"text", OutputFormat::text}, {"csv", OutputFormat::csv}, {"json", OutputFormat::json}};
  app.add_option("--digits", cfg.precision_digits, "decimal digits of precision")
      ->check(CLI::Range(20, 100000))
      ->capture_default_str();
  app.add_option("--format", cfg.format, "output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
      ->default_str("text");
  app.add_option("--seed", cfg.seed, "seed for randomized sampling")->capture_default_str();

  std::string word;
  auto* radical = app.add_subcommand("radical", "evaluate a nested radical given its sign word");
  radical->add_option("word", word, "0 = plus, 1 = minus, outermost sign first")->required();

  PiOptions pi_opts;
  auto* pi = app.add_subcommand("pi", "convergence table of radical approximants of pi");
  pi->add_option("--method", pi_opts.method)
      ->check(CLI::IsMember({"classic", "gray"}))
      ->capture_default_str();
  pi->add_option("--m", pi_opts.m, "Gray code order");
  pi->add_option("--h", pi_opts.h, "Gray code offset, 0 <= h <= 2^m - 1");
  pi->add_option("--n", pi_opts.n_range, "depth range A..B")->required();

  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "run an invariant suite");
  verify->add_option("--suite", suite)
      ->check(CLI::IsMember({"identities", "ordering", "interleaving", "exact-pi", "golden",
                             "appendix", "all"}))
      ->capture_default_str();

  int zeros_n = 0;
  std::optional<std::string> zeros_a;
  auto* zeros = app.add_subcommand("zeros", "positive zeros of L_n (or M^a_n) in Gray order");
  zeros->add_option("--n", zeros_n)->required();
  zeros->add_option("--a", zeros_a, "scale parameter of M^a_n, a > 0");

  std::string phi_range;
  std::string phi_variant = "standard";
  auto* phi = app.add_subcommand("phi", "radical expressions for the golden ratio");
  phi->add_option("--n", phi_range, "depth range A..B")->required();
  phi->add_option("--variant", phi_variant)
      ->check(CLI::IsMember({"standard", "shifted", "exact", "all"}))
      ->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*radical) return cmd_radical(word, cfg, out);
    if (*pi) return cmd_pi(pi_opts, cfg, out);
    if (*verify) return cmd_verify(suite, cfg, out, err);
    if (*zeros) return cmd_zeros(zeros_n, zeros_a, cfg, out);
    if (*phi) return cmd_phi(phi_range, phi_variant, cfg, out);
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ConfigurationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace lucaspi
