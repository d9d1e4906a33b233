// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
// INFO lines report companion checks that do not affect the status.

#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lucaspi/cli.hpp"
#include "lucaspi/graycode.hpp"
#include "lucaspi/lucas_lehmer.hpp"
#include "lucaspi/numerics.hpp"
#include "lucaspi/parallel.hpp"
#include "lucaspi/pi_formulas.hpp"
#include "lucaspi/radicals.hpp"

using namespace lucaspi;

namespace {

int bits_for(int digits) { return RunConfig{digits}.precision_bits(); }

// 10^-(digits - k), rounded at 64 bits
BigReal decimal_tol(int digits, int k) {
  return BigReal::from_string("1e-" + std::to_string(digits - k), 64);
}

struct Outcome {
  bool passed = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double budget_seconds;
  std::function<Outcome()> run;
};

int failures = 0;

void report(const Criterion& c) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = c.run();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = secs < c.budget_seconds;
  const bool ok = o.passed && in_time;
  if (!ok) ++failures;
  std::printf("%s  %2d  %-44s %7.2fs (<%gs)  %s%s\n", ok ? "PASS" : "FAIL", c.id, c.title.c_str(),
              secs, c.budget_seconds, o.detail.c_str(), in_time ? "" : " [over time budget]");
  std::fflush(stdout);
}

void info(const std::string& label, const Outcome& o) {
  std::printf("INFO      %-44s %s: %s\n", label.c_str(), o.passed ? "holds" : "does not hold",
              o.detail.c_str());
  std::fflush(stdout);
}

template <class Cell>
std::vector<BigReal> sweep(const std::vector<Cell>& cells, const std::function<BigReal(const Cell&)>& f) {
  std::vector<std::optional<BigReal>> slots(cells.size());
  parallel_for(cells.size(), Execution::parallel, [&](std::size_t i) { slots[i] = f(cells[i]); });
  std::vector<BigReal> out;
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

struct Worst {
  BigReal value{64};
  std::string where;
  std::size_t cases = 0;

  void add(const BigReal& r, const std::string& w) {
    ++cases;
    if (r > value) {
      value = r.with_precision(64);
      where = w;
    }
  }
  std::string text(const BigReal& tol) const {
    std::ostringstream s;
    s << cases << " cases, worst " << value.to_scientific(3) << (where.empty() ? "" : " at ")
      << where << " vs tol " << tol.to_scientific(1);
    return s.str();
  }
};

struct NMH {
  int n, m;
  std::uint64_t h;
};

std::string nmh(int n, int m, std::uint64_t h, const GrayWord& w) {
  return "(n=" + std::to_string(n) + ",m=" + std::to_string(m) + ",h=" + std::to_string(h) +
         ",word=" + w.to_string() + ")";
}

Outcome criterion_1() {
  const int p = bits_for(50);
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const std::string a = gray_term(3, 5, 8, p).approximant.to_fixed(6);
  const double s8 = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const auto t1 = std::chrono::steady_clock::now();
  const std::string b = gray_term(3, 5, 12, p).approximant.to_fixed(9);
  const double s12 = std::chrono::duration<double>(std::chrono::steady_clock::now() - t1).count();
  o.passed = a == "3.140996" && b == "3.141590324" && s8 < 1.0 && s12 < 1.0;
  o.detail = "n=8 -> " + a + ", n=12 -> " + b + " (" + std::to_string(s8) + "s, " +
             std::to_string(s12) + "s)";
  return o;
}

Outcome criterion_2() {
  const int digits = 50;
  const int p = bits_for(digits);
  const BigReal pi = reference_pi(p);
  const BigReal tol = decimal_tol(digits, 8);
  std::vector<NMH> cells;
  for (int n = 2; n <= 14; ++n) {
    for (std::uint64_t h = 0; h < (std::uint64_t{1} << (n - 2)); ++h) cells.push_back({n, 0, h});
  }
  const auto r = sweep<NMH>(cells, [&](const NMH& c) { return abs(exact_pi(c.n, c.h, p) - pi); });
  Worst w;
  bool ok = true;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    w.add(r[i], "(n=" + std::to_string(cells[i].n) + ",h=" + std::to_string(cells[i].h) + ")");
    ok = ok && r[i] < tol;
  }
  return {ok, w.text(tol)};
}

Outcome criterion_3() {
  const int p = bits_for(40);
  std::size_t values = 0;
  std::size_t comparisons = 0;
  for (int l = 1; l <= 12; ++l) {
    std::vector<std::uint64_t> js(std::size_t{1} << l);
    for (std::size_t i = 0; i < js.size(); ++i) js[i] = i + 1;
    const auto v =
        sweep<std::uint64_t>(js, [&](const std::uint64_t& j) { return evaluate(word_at(l, j), p); });
    values += v.size();
    for (std::size_t i = 1; i < v.size(); ++i) {
      ++comparisons;
      if (!(v[i - 1] > v[i])) {
        return {false, "not decreasing at " + word_at(l, i + 1).to_string()};
      }
    }
  }
  return {true, std::to_string(values) + " radicals, " + std::to_string(comparisons) +
                    " comparisons, all strictly decreasing"};
}

Outcome criterion_4() {
  const int p = bits_for(50);
  Outcome o;
  std::string failed;
  std::string first_violation;
  for (int n = 2; n <= 12; ++n) {
    const InterleavingReport r = check_interleaving(n, p);
    if (!r.passed()) {
      o.passed = false;
      failed += " n=" + std::to_string(n) + "[" + (r.clause_i ? "" : "i") +
                (r.clause_ii ? "" : "ii") + (r.clause_ii || r.clause_iii ? "" : ",") +
                (r.clause_iii ? "" : "iii") + "]";
      if (first_violation.empty() && !r.violations.empty()) first_violation = r.violations.front();
    }
  }
  o.detail = o.passed ? "clauses i-iii hold for n=2..12"
                      : "violated:" + failed + "; first: " + first_violation;
  return o;
}

Outcome interlacing_info() {
  const int p = bits_for(50);
  std::size_t comparisons = 0;
  for (int n = 2; n <= 12; ++n) {
    const InterlacingReport r = check_interlacing(n, p);
    comparisons += r.comparisons;
    if (!r.passed()) return {false, "n=" + std::to_string(n) + ": " + r.violations.front()};
  }
  return {true, "z^{n+1}_{2k-1} > z^n_k > z^{n+1}_{2k} for n=2..12 (" +
                    std::to_string(comparisons) + " comparisons)"};
}

Outcome criterion_5() {
  const int digits = 50;
  const int p = bits_for(digits);
  const BigReal tol = decimal_tol(digits, 6);
  std::vector<NMH> cells;
  for (int m = 1; m <= 6; ++m) {
    for (int n = m + 1; n <= 20; ++n) {
      for (std::uint64_t h = 0; h < (std::uint64_t{1} << m); ++h) cells.push_back({n, m, h});
    }
  }
  const auto r = sweep<NMH>(cells, [&](const NMH& c) {
    return abs(evaluate(prefixed_gray_word(c.n, c.m, c.h + 1), p) -
               2 * sin_pi(PiRational(2 * c.h + 1, c.n + 2), p));
  });
  Worst w;
  bool ok = true;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const auto& c = cells[i];
    w.add(r[i], nmh(c.n, c.m, c.h, prefixed_gray_word(c.n, c.m, c.h + 1)));
    ok = ok && r[i] < tol;
  }
  return {ok, w.text(tol)};
}

std::vector<NMH> three_term_cells() {
  std::vector<NMH> cells;
  for (int m = 1; m <= 4; ++m) {
    for (int n = m + 2; n <= 12; ++n) {
      for (std::uint64_t h = 0; h + 2 <= (std::uint64_t{1} << m); ++h) cells.push_back({n, m, h});
    }
  }
  return cells;
}

Outcome three_term(bool derived) {
  const int digits = 50;
  const int p = bits_for(digits);
  const BigReal tol = decimal_tol(digits, 6);
  const auto cells = three_term_cells();
  const auto r = sweep<NMH>(cells, [&](const NMH& c) {
    return derived ? verify_three_term_derived(c.n, c.m, c.h, p)
                   : verify_three_term(c.n, c.m, c.h, p);
  });
  Worst w;
  std::size_t bad = 0;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const auto& c = cells[i];
    w.add(r[i], nmh(c.n, c.m, c.h, prefixed_gray_word(c.n, c.m, c.h + 2)));
    if (!(r[i] < tol)) ++bad;
  }
  return {bad == 0, std::to_string(bad) + " of " + w.text(tol)};
}

Outcome criterion_7() {
  const int p = bits_for(100);
  std::vector<BigReal> e;
  for (int n = 1; n <= 61; ++n) e.push_back(error_sequence(n, p));
  for (int n = 1; n <= 60; ++n) {
    if (!(e[n - 1] > 0L)) return {false, "e(" + std::to_string(n) + ") <= 0"};
    if (!(e[n] < e[n - 1])) return {false, "e(" + std::to_string(n + 1) + ") >= e(n)"};
  }
  // pi/2^n minus the radical with n occurrences of 2 and a leading minus.
  const BigReal pi = reference_pi(p);
  for (int n = 1; n <= 60; ++n) {
    const GrayWord w = n == 1 ? GrayWord() : compose_word(true, n - 2, GrayWord());
    const BigReal gap = ldexp(pi, -n) - evaluate(w, p);
    if (gap < 0L) return {false, "pi/2^" + std::to_string(n) + " below the radical"};
  }
  return {true, "e(1..61) positive and strictly decreasing; e(60) = " + e[59].to_scientific(4) +
                    "; pi/2^n - radical >= 0 for n=1..60"};
}

Outcome criterion_8() {
  const int digits = 50;
  const int p = bits_for(digits);
  const BigReal tol = decimal_tol(digits, 10);
  Worst w;
  bool ok = true;
  for (int n = 1; n <= 14; ++n) {
    const IdentityReport r = identity_suite(n, 200, p, 20240607);
    const std::pair<const char*, const BigReal*> parts[] = {
        {"T form", &r.t_form},
        {"cos form", &r.cos_form},
        {"U form", &r.u_form},
        {"sin form", &r.sin_form}};
    for (const auto& [name, v] : parts) {
      w.add(*v, std::string(name) + " n=" + std::to_string(n));
      ok = ok && *v < tol;
    }
  }
  return {ok, "200 samples x 4 identities x n=1..14; " + w.text(tol)};
}

Outcome criterion_9() {
  const int digits = 50;
  const int p = bits_for(digits);
  const BigReal phi = reference_phi(p);
  const BigReal tol = decimal_tol(digits, 10);
  Worst w;
  bool ok = true;
  for (int n = 4; n <= 16; ++n) {
    const BigReal r = abs(phi_exact(n, p) - phi);
    w.add(r, "n=" + std::to_string(n));
    ok = ok && r < tol;
  }
  std::optional<BigReal> previous;
  for (int n = 6; n <= 40; ++n) {
    BigReal err = abs(phi_asymptotic(n, p) - phi);
    if (previous && !(err < *previous)) {
      return {false, "asymptotic error not decreasing at n=" + std::to_string(n)};
    }
    previous = std::move(err);
  }
  return {ok, "exact: " + w.text(tol) + "; asymptotic error decreasing to " +
                  previous->to_scientific(3) + " at n=40"};
}

Outcome criterion_10() {
  const std::vector<std::pair<std::vector<int>, std::uint64_t>> examples{
      {{1, 1, 1}, 1},   {{1, 1, -1}, 2},   {{1, -1, -1}, 3}, {{1, -1, 1}, 4},
      {{-1, -1, 1}, 5}, {{-1, -1, -1}, 6}, {{-1, 1, -1}, 7}, {{-1, 1, 1}, 8},
  };
  for (const auto& [signs, j] : examples) {
    if (moreno_index(SignSequence(signs)) != j) return {false, "example j=" + std::to_string(j)};
  }
  std::size_t checked = 0;
  for (int k = 1; k <= 12; ++k) {
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << k); ++x) {
      std::vector<int> s(k);
      for (int i = 0; i < k; ++i) s[i] = (x >> (k - 1 - i)) & 1 ? -1 : 1;
      const SignSequence signs(s);
      ++checked;
      if (moreno_index(signs) != rank(word_from_signs(signs))) {
        return {false, "mismatch at " + word_from_signs(signs).to_string()};
      }
    }
  }
  return {true, "8 examples exact; " + std::to_string(checked) + " sign sequences k=1..12"};
}

Outcome criterion_11() {
  const int p = bits_for(50);
  std::size_t zeros = 0;
  for (const char* a_text : {"0.25", "0.5", "1", "3"}) {
    const BigReal a = BigReal::from_string(a_text, p + 64);
    const BigReal tol = pow2(24 - p, 64) / a;
    for (int n = 2; n <= 10; ++n) {
      for (const auto& z : m_zeros(n, a, p)) {
        ++zeros;
        if (!(abs(eval_M(n, a, z.value, p)) < tol)) {
          return {false, std::string("a=") + a_text + " n=" + std::to_string(n) +
                             " word=" + z.word.to_string()};
        }
      }
    }
  }
  std::size_t steps = 0;
  for (int n : {2, 3, 4}) {
    for (const char* a_text : {"0.25", "0.5", "1", "3"}) {
      const BigReal a = BigReal::from_string(a_text, 256);
      std::optional<BigReal> previous;
      for (int k = 4; k <= 20; ++k) {
        BigReal d = maclaurin_defect(n, a, pow2(-k, 256));
        if (previous) {
          ++steps;
          if (!(d < *previous)) {
            return {false, "Maclaurin defect not decreasing n=" + std::to_string(n) + " a=" +
                               a_text + " k=" + std::to_string(k)};
          }
        }
        previous = std::move(d);
      }
    }
  }
  return {true, std::to_string(zeros) + " zeros within 2^(24-p)/a; " + std::to_string(steps) +
                    " Maclaurin steps decreasing"};
}

}  // namespace

int main() {
  std::printf("acceptance run: %d OpenMP thread(s), 50 digits = %d bits, 100 digits = %d bits\n",
              max_threads(), bits_for(50), bits_for(100));
  report({1, "worked example digits (gray m=3 h=5)", 2.0, criterion_1});
  report({2, "exact pi identity, n=2..14 all h", 60.0, criterion_2});
  report({3, "Gray-order strict decrease, l<=12", 30.0, criterion_3});
  report({4, "interleaving clauses i-iii, n=2..12", 30.0, criterion_4});
  info("strict alternation of zeros of L_n, L_{n+1}", interlacing_info());
  report({5, "1 0..0 g_{m,h+1} = 2 sin((2h+1)pi/2^{n+2})", 60.0, criterion_5});
  report({6, "three-term identity, m<=4 n<=12", 30.0, [] { return three_term(false); }});
  info("three-term identity, angle-addition form", three_term(true));
  report({7, "error sequence at 100 digits", 10.0, criterion_7});
  report({8, "Chebyshev and trig identity suite", 60.0, criterion_8});
  report({9, "golden ratio exact and asymptotic", 10.0, criterion_9});
  report({10, "Moreno index = Gray rank", 5.0, criterion_10});
  report({11, "generalized map zeros and Maclaurin", 20.0, criterion_11});
  std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
