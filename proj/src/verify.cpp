#include "lucaspi/verify.hpp"

#include <array>
#include <functional>
#include <optional>

#include "lucaspi/errors.hpp"
#include "lucaspi/lucas_lehmer.hpp"
#include "lucaspi/numerics.hpp"
#include "lucaspi/pi_formulas.hpp"
#include "lucaspi/radicals.hpp"

namespace lucaspi {
namespace {

constexpr std::array<std::pair<std::string_view, Suite>, 7> kSuiteNames{{
    {"identities", Suite::identities},
    {"ordering", Suite::ordering},
    {"interleaving", Suite::interleaving},
    {"exact-pi", Suite::exact_pi},
    {"golden", Suite::golden},
    {"appendix", Suite::three_term},
    {"all", Suite::all},
}};

constexpr std::size_t kMaxFailures = 32;

std::string sci(const BigReal& x) { return x.to_scientific(3); }

// Accumulates the worst residual of a family of cases against one bound.
class ResidualRow {
 public:
  ResidualRow(std::string label, int tolerance_exponent, int precision_bits)
      : label_(std::move(label)),
        tolerance_(pow2(tolerance_exponent - precision_bits, 64)),
        worst_(64) {}

  void add(const BigReal& residual, const std::function<std::string()>& describe,
           SuiteResult& suite) {
    ++cases_;
    if (residual > worst_) worst_ = residual.with_precision(64);
    if (!(residual < tolerance_)) {
      passed_ = false;
      if (suite.failures.size() < kMaxFailures) {
        suite.failures.push_back(label_ + " " + describe() + " residual " + sci(residual) +
                                 " >= " + sci(tolerance_));
      }
    }
  }

  CheckRow row() const { return CheckRow{label_, sci(worst_), sci(tolerance_), cases_, passed_}; }

 private:
  std::string label_;
  BigReal tolerance_;
  BigReal worst_;
  std::size_t cases_ = 0;
  bool passed_ = true;
};

template <class Cell>
std::vector<BigReal> sweep(const std::vector<Cell>& cells, Execution exec,
                           const std::function<BigReal(const Cell&)>& kernel) {
  std::vector<std::optional<BigReal>> slots(cells.size());
  parallel_for(cells.size(), exec, [&](std::size_t i) { slots[i] = kernel(cells[i]); });
  std::vector<BigReal> out;
  out.reserve(cells.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

SuiteResult identities_suite(const VerifyOptions& o) {
  SuiteResult suite{"identities", {}, {}};
  const int p = o.precision_bits;
  std::array<ResidualRow, 4> rows{
      ResidualRow("L_n = 2 T_{2^{n-1}}(x^2/2-1)", 32, p),
      ResidualRow("L_n(2cos t) = 2cos(2^n t)", 32, p),
      ResidualRow("prod L_i = U_{2^n-1}(x^2/2-1)", 32, p),
      ResidualRow("prod L_i(2cos t) = sin(2^{n+1}t)/sin 2t", 32, p),
  };
  for (int n = 1; n <= 14; ++n) {
    const IdentityReport r = identity_suite(n, o.identity_samples, p, o.seed, o.exec);
    const auto where = [n] { return "(n=" + std::to_string(n) + ")"; };
    rows[0].add(r.t_form, where, suite);
    rows[1].add(r.cos_form, where, suite);
    rows[2].add(r.u_form, where, suite);
    rows[3].add(r.sin_form, where, suite);
  }
  // L_n(2 cos q pi) = 2 cos(2^n q pi) on dyadic angles, where cos_pi is exact.
  ResidualRow dyadic("L_n(2cos_pi q) = 2cos_pi(2^n q)", 32, p);
  for (int n = 1; n <= 20; ++n) {
    for (std::uint64_t num : {1ULL, 3ULL, 5ULL, 7ULL}) {
      const int e = n + 4;
      const PiRational q(num, e);
      const PiRational folded(num, e - n);
      const BigReal x = 2 * cos_pi(q, p + 2 * n + 32);
      const BigReal residual = abs(eval_L(n, x, p) - 2 * cos_pi(folded, p));
      dyadic.add(residual, [&] { return "(n=" + std::to_string(n) + ", q=" + q.to_string() + ")"; },
                 suite);
    }
  }
  for (const auto& r : rows) suite.rows.push_back(r.row());
  suite.rows.push_back(dyadic.row());
  return suite;
}

SuiteResult ordering_suite(const VerifyOptions& o) {
  SuiteResult suite{"ordering", {}, {}};
  const int p = o.precision_bits;
  for (int length = 1; length <= 12; ++length) {
    std::vector<std::uint64_t> ranks(std::size_t{1} << length);
    for (std::size_t i = 0; i < ranks.size(); ++i) ranks[i] = i + 1;
    const std::vector<BigReal> values = sweep<std::uint64_t>(
        ranks, o.exec, [&](const std::uint64_t& j) { return evaluate(word_at(length, j), p); });
    CheckRow row{"strictly decreasing in Gray order, length " + std::to_string(length), "", "> 0",
                 values.size() - 1, true};
    BigReal min_gap(4, 64);
    for (std::size_t i = 1; i < values.size(); ++i) {
      const BigReal gap = values[i - 1] - values[i];
      if (gap < min_gap) min_gap = gap.with_precision(64);
      if (!(gap > 0L)) {
        row.passed = false;
        if (suite.failures.size() < kMaxFailures) {
          suite.failures.push_back("ordering (word=" + word_at(length, i + 1).to_string() +
                                   ") not below its predecessor");
        }
      }
    }
    row.worst = "min gap " + sci(min_gap);
    suite.rows.push_back(row);

    ResidualRow oracle("radical = 2cos_pi(closed form), length " + std::to_string(length), 16, p);
    const std::vector<BigReal> residuals = sweep<std::uint64_t>(
        ranks, o.exec, [&](const std::uint64_t& j) {
          return abs(values[j - 1] - closed_form(word_at(length, j)).value(p));
        });
    for (std::size_t i = 0; i < residuals.size(); ++i) {
      oracle.add(residuals[i], [&] { return "(word=" + word_at(length, i + 1).to_string() + ")"; },
                 suite);
    }
    suite.rows.push_back(oracle.row());
  }

  // sqrt w(1 0...0 g_{m,h+1}) = 2 sin((2h+1) pi / 2^{n+2}).
  struct Cell {
    int n, m;
    std::uint64_t h;
  };
  std::vector<Cell> cells;
  for (int m = 1; m <= 6; ++m) {
    for (int n = m + 2; n <= 20; ++n) {
      for (std::uint64_t h = 0; h < (std::uint64_t{1} << m); ++h) cells.push_back({n, m, h});
    }
  }
  const std::vector<BigReal> residuals = sweep<Cell>(cells, o.exec, [&](const Cell& c) {
    const BigReal lhs = evaluate(prefixed_gray_word(c.n, c.m, c.h + 1), p);
    return abs(lhs - 2 * sin_pi(PiRational(2 * c.h + 1, c.n + 2), p));
  });
  ResidualRow family("sqrt w(10..0 g_{m,h+1}) = 2sin((2h+1)pi/2^{n+2})", 16, p);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const Cell& c = cells[i];
    family.add(residuals[i], [&] {
      return "(n=" + std::to_string(c.n) + ", m=" + std::to_string(c.m) + ", h=" +
             std::to_string(c.h) + ", word=" + prefixed_gray_word(c.n, c.m, c.h + 1).to_string() + ")";
    }, suite);
  }
  suite.rows.push_back(family.row());
  return suite;
}

SuiteResult interleaving_suite(const VerifyOptions& o) {
  SuiteResult suite{"interleaving", {}, {}};
  for (int n = 2; n <= 12; ++n) {
    const InterleavingReport r = check_interleaving(n, o.precision_bits);
    const auto flag = [](bool ok) { return ok ? "ok" : "FAIL"; };
    suite.rows.push_back(CheckRow{"clauses i-iii, L_" + std::to_string(n) + " vs L_" +
                                      std::to_string(n + 1),
                                  std::string("i ") + flag(r.clause_i) + ", ii " +
                                      flag(r.clause_ii) + ", iii " + flag(r.clause_iii),
                                  "all hold", r.gap_count, r.passed()});
    for (const auto& v : r.violations) {
      if (suite.failures.size() < kMaxFailures) {
        suite.failures.push_back("(n=" + std::to_string(n) + ") " + v);
      }
    }
  }
  for (int n = 2; n <= 12; ++n) {
    const InterlacingReport r = check_interlacing(n, o.precision_bits);
    suite.rows.push_back(CheckRow{"strict alternation, L_" + std::to_string(n) + " vs L_" +
                                      std::to_string(n + 1),
                                  std::to_string(r.violations.size()) + " violations", "0",
                                  r.comparisons, r.passed()});
    for (const auto& v : r.violations) {
      if (suite.failures.size() < kMaxFailures) {
        suite.failures.push_back("(n=" + std::to_string(n) + ") alternation: " + v);
      }
    }
  }
  return suite;
}

SuiteResult exact_pi_suite(const VerifyOptions& o) {
  SuiteResult suite{"exact-pi", {}, {}};
  const int p = o.precision_bits;
  const BigReal pi = reference_pi(p);
  for (int n = 2; n <= 14; ++n) {
    std::vector<std::uint64_t> hs(std::size_t{1} << (n - 2));
    for (std::size_t i = 0; i < hs.size(); ++i) hs[i] = i;
    const std::vector<BigReal> residuals = sweep<std::uint64_t>(
        hs, o.exec, [&](const std::uint64_t& h) { return abs(exact_pi(n, h, p) - pi); });
    ResidualRow row("exact pi identity, n=" + std::to_string(n), 24, p);
    for (std::size_t i = 0; i < hs.size(); ++i) {
      row.add(residuals[i], [&] {
        return "(n=" + std::to_string(n) + ", h=" + std::to_string(hs[i]) + ", word=" +
               word_at(n - 1, (std::uint64_t{1} << (n - 1)) - hs[i]).to_string() + ")";
      }, suite);
    }
    suite.rows.push_back(row.row());
  }
  return suite;
}

SuiteResult golden_suite(const VerifyOptions& o) {
  SuiteResult suite{"golden", {}, {}};
  const int p = o.precision_bits;
  const BigReal phi = reference_phi(p);
  ResidualRow exact("exact golden-ratio identity, n=4..16", 24, p);
  for (int n = 4; n <= 16; ++n) {
    exact.add(abs(phi_exact(n, p) - phi), [n] { return "(n=" + std::to_string(n) + ")"; }, suite);
  }
  suite.rows.push_back(exact.row());

  CheckRow decreasing{"asymptotic golden-ratio error strictly decreasing, n=6..40", "", "", 34, true};
  std::optional<BigReal> previous;
  for (int n = 6; n <= 40; ++n) {
    BigReal err = abs(phi_asymptotic(n, p) - phi);
    if (previous && !(err < *previous)) {
      decreasing.passed = false;
      if (suite.failures.size() < kMaxFailures) {
        suite.failures.push_back("(n=" + std::to_string(n) + ") asymptotic error " + sci(err) +
                                 " not below " + sci(*previous));
      }
    }
    previous = std::move(err);
  }
  decreasing.worst = "error at n=40 " + sci(*previous);
  decreasing.tolerance = "monotone";
  suite.rows.push_back(decreasing);
  return suite;
}

SuiteResult three_term_suite(const VerifyOptions& o) {
  SuiteResult suite{"appendix", {}, {}};
  const int p = o.precision_bits;
  struct Cell {
    int n, m;
    std::uint64_t h;
  };
  std::vector<Cell> cells;
  for (int m = 1; m <= 4; ++m) {
    for (int n = m + 2; n <= 12; ++n) {
      for (std::uint64_t h = 0; h + 2 <= (std::uint64_t{1} << m); ++h) cells.push_back({n, m, h});
    }
  }
  const auto describe = [&](const Cell& c) {
    return "(n=" + std::to_string(c.n) + ", m=" + std::to_string(c.m) + ", h=" +
           std::to_string(c.h) + ", word=" + prefixed_gray_word(c.n, c.m, c.h + 2).to_string() + ")";
  };
  const std::vector<BigReal> literal = sweep<Cell>(
      cells, o.exec, [&](const Cell& c) { return verify_three_term(c.n, c.m, c.h, p); });
  ResidualRow literal_row("three-term identity, literal form", 16, p);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    literal_row.add(literal[i], [&] { return describe(cells[i]); }, suite);
  }
  suite.rows.push_back(literal_row.row());

  const std::vector<BigReal> derived = sweep<Cell>(
      cells, o.exec, [&](const Cell& c) { return verify_three_term_derived(c.n, c.m, c.h, p); });
  ResidualRow derived_row("three-term identity, angle-addition form", 16, p);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    derived_row.add(derived[i], [&] { return describe(cells[i]); }, suite);
  }
  suite.rows.push_back(derived_row.row());
  return suite;
}

}  // namespace

std::optional<Suite> parse_suite(std::string_view name) {
  for (const auto& [text, suite] : kSuiteNames) {
    if (text == name) return suite;
  }
  return std::nullopt;
}

std::string_view suite_name(Suite suite) {
  for (const auto& [text, s] : kSuiteNames) {
    if (s == suite) return text;
  }
  return "unknown";
}

std::vector<SuiteResult> run_verify(Suite suite, const VerifyOptions& options) {
  require_precision(options.precision_bits);
  std::vector<SuiteResult> out;
  const auto want = [suite](Suite s) { return suite == Suite::all || suite == s; };
  if (want(Suite::identities)) out.push_back(identities_suite(options));
  if (want(Suite::ordering)) out.push_back(ordering_suite(options));
  if (want(Suite::interleaving)) out.push_back(interleaving_suite(options));
  if (want(Suite::exact_pi)) out.push_back(exact_pi_suite(options));
  if (want(Suite::golden)) out.push_back(golden_suite(options));
  if (want(Suite::three_term)) out.push_back(three_term_suite(options));
  return out;
}

}  // namespace lucaspi
