#include <CLI11.hpp>

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "logint/approx.hpp"
#include "logint/complexpath.hpp"
#include "logint/constants.hpp"
#include "logint/historical.hpp"
#include "logint/lifn.hpp"
#include "logint/primes.hpp"
#include "logint/quadrature.hpp"
#include "logint/tables.hpp"

namespace {

using namespace logint;

struct GlobalOpts {
  long precision = Real::kDefaultDigits;  // working decimal digits
  long digits = 12;                       // display digits after the point
  std::string format = "csv";
  std::optional<std::string> out;
  std::optional<std::string> sieve_cache;
};

long effective_digits(const GlobalOpts& g) {
  long cap = g.precision - Real::kGuardDigits;
  if (g.digits > cap) {
    std::cerr << "WARNING: display digits clamped to " << cap << " (working precision "
              << g.precision << " minus " << Real::kGuardDigits << " guard digits)\n";
    return cap;
  }
  return g.digits;
}

OutputSpec output_spec(const GlobalOpts& g, long digits) {
  OutputSpec spec;
  spec.format = g.format == "md" ? TableFormat::Markdown : TableFormat::Csv;
  spec.path = g.out;
  spec.digits = digits;
  return spec;
}

Real parse_real(const std::string& text, long precision) {
  try {
    return Real::from_string(text, precision);
  } catch (const std::invalid_argument&) {
    throw CLI::ValidationError("argument", "'" + text + "' is not a number");
  }
}

std::uint64_t parse_u64(const std::string& text) {
  Real v = Real::from_string(text, 32);
  if (v.sign() < 0 || floor(v) != v || v > Real::from_string("1e18", 32))
    throw CLI::ValidationError("argument", "'" + text + "' is not a non-negative integer");
  return static_cast<std::uint64_t>(v.to_long());
}

primes::PrimeCounts cached_block_counts(std::uint64_t limit, std::uint64_t block_size,
                                        const std::optional<std::string>& cache) {
  if (cache && std::filesystem::exists(*cache)) {
    primes::PrimeCounts pc = primes::load_counts(*cache);
    if (pc.block_size == block_size && pc.limit >= limit) return pc;
  }
  primes::PrimeCounts pc = primes::block_counts(limit, block_size);
  if (cache) primes::save_counts(pc, *cache);
  return pc;
}

int report_verification(const VerifyReport& report, const std::string& what) {
  for (const auto& line : report.info) std::cout << line << '\n';
  if (report.passed()) {
    std::cout << "OK: " << what << " verified\n";
    return 0;
  }
  for (const auto& line : report.failures) std::cerr << line << '\n';
  std::cerr << "ERROR:2: " << what << " verification failed (" << report.failures.size()
            << " cell(s))\n";
  return 2;
}

int run_complex_demo(const GlobalOpts& g) {
  long p = g.precision;
  Real two_pi = 2 * Real::pi(p);

  // 1. path independence over homotopic pairs in the right half-plane
  std::mt19937 rng(18101812u);
  auto coin = [&](double lo, double hi) {
    return Real(lo + (hi - lo) * (rng() / 4294967296.0), p);
  };
  Real max_diff(0, p);
  for (int trial = 0; trial < 20; ++trial) {
    Complex a{Real(1, p), Real(0, p)};
    Complex b{Real(2, p), Real(3, p)};
    Polyline first({a, {coin(0.5, 4.0), coin(-4.0, 4.0)}, {coin(0.5, 4.0), coin(-4.0, 4.0)}, b});
    Polyline second({a, {coin(0.5, 4.0), coin(-4.0, 4.0)}, b});
    Real diff = abs(contour_integral_exp_over_z(first) - contour_integral_exp_over_z(second));
    if (diff > max_diff) max_diff = diff;
  }
  std::cout << "path-independence max |difference| over 20 homotopic pairs: "
            << max_diff.to_string_sig(3) << '\n';

  // 2. winding: k counterclockwise unit squares around 0 add k*2*pi*i
  Complex base_end{Real(2, p), Real(2, p)};
  std::vector<Complex> open_path{{Real(1, p), Real(0, p)}, base_end};
  Complex open_value = contour_integral_exp_over_z(Polyline(open_path));
  std::vector<Complex> loop = {{Real(1, p), Real(0, p)},  {Real(1, p), Real(1, p)},
                               {Real(-1, p), Real(1, p)}, {Real(-1, p), Real(-1, p)},
                               {Real(1, p), Real(-1, p)}, {Real(1, p), Real(0, p)}};
  std::vector<Complex> path = {{Real(1, p), Real(0, p)}};
  for (int k = 1; k <= 3; ++k) {
    path.insert(path.end(), loop.begin() + 1, loop.end());
    std::vector<Complex> closed = path;
    closed.push_back(base_end);
    Complex value = contour_integral_exp_over_z(Polyline(closed));
    Real residual = abs(value - open_value - Complex{Real(0, p), Real(k, p) * two_pi});
    std::cout << "winding k=" << k << " |integral - open - 2 pi i k|: "
              << residual.to_string_sig(3) << '\n';
  }

  // 3. art. 18 identities, definite form, plus the printed 2ix form
  for (const char* xs : {"0.1", "1", ""}) {
    Real x = *xs ? Real::from_string(xs, p) : Real::pi(p);
    Art18Residuals r = bessel_art18_check(x);
    std::cout << "art18 x=" << (*xs ? xs : "pi") << " cosine-integral residual "
              << r.ci_residual.to_string_sig(3) << ", sine-integral residual "
              << r.si_residual.to_string_sig(3) << '\n';
    // printed form divides by 2ix instead of 2i and omits the pi/2 shift
    Complex e_plus = ei_complex(Complex{Real(0, p), x});
    Real printed_residual = abs(e_plus.im / x - si_series(x));
    std::cout << "INFO art18 x=" << (*xs ? xs : "pi")
              << " residual of the printed 2ix normalization: "
              << printed_residual.to_string_sig(3) << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"logarithmic integral toolkit: series, historical recursions, quadrature,\n"
               "prime counts and the classical pi(x) approximations"};
  app.require_subcommand(1);

  GlobalOpts g;
  if (const char* env = std::getenv("LOGINT_PRECISION")) g.precision = std::atol(env);
  app.add_option("--precision", g.precision, "working precision in decimal digits")
      ->capture_default_str();
  app.add_option("--digits", g.digits, "display digits after the decimal point")
      ->capture_default_str();
  app.add_option("--format", g.format, "table output format (csv|md)")
      ->check(CLI::IsMember({"csv", "md"}));
  app.add_option("--out", g.out, "write table output to a file instead of stdout");
  app.add_option("--sieve-cache", g.sieve_cache, "sieve checkpoint file for prime counts");

  std::string arg_x, arg_y, arg_method, convention = "pv";
  std::uint64_t arg_limit = 0;
  std::string arg_n, arg_size;
  std::string quad_from, quad_to;
  int quad_nodes = 10, quad_panels = 1;
  std::string table_id, golden_path;
  std::string fit_lo = "10000", fit_hi = "10000000";
  int fit_samples = 40;
  std::string soldner_max = "1280";

  auto* c_li = app.add_subcommand("li", "logarithmic integral li(x)");
  c_li->add_option("x", arg_x)->required();
  c_li->add_option("--convention", convention, "pv (from 0) or from2")
      ->check(CLI::IsMember({"pv", "from2"}));

  auto* c_ei = app.add_subcommand("ei", "exponential integral Ei(y)");
  c_ei->add_option("y", arg_y)->required();

  auto* c_const = app.add_subcommand("constants", "Euler-Mascheroni gamma and Soldner's mu");

  auto* c_pi = app.add_subcommand("pi", "exact prime count pi(x)");
  c_pi->add_option("x", arg_n)->required();
  c_pi->add_option("--convention", convention, "modern or bessel1810 (counts 1 as prime)")
      ->check(CLI::IsMember({"modern", "bessel1810"}));

  auto* c_blocks = app.add_subcommand("blocks", "primes per chiliad/myriad block");
  c_blocks->add_option("limit", arg_n)->required();
  c_blocks->add_option("size", arg_size)->required();

  auto* c_quad = app.add_subcommand(
      "quad", "Gauss-Legendre integral of dt/ln t (no --from/--to: the 1815 demo)");
  c_quad->add_option("--from", quad_from);
  c_quad->add_option("--to", quad_to);
  c_quad->add_option("--nodes", quad_nodes)->capture_default_str();
  c_quad->add_option("--panels", quad_panels)->capture_default_str();

  auto* c_table = app.add_subcommand("table", "emit or verify a named table");
  c_table->add_option("id", table_id, "bessel1810 | soldner | comparativa")
      ->required()
      ->check(CLI::IsMember({"bessel1810", "soldner", "comparativa"}));
  c_table->add_option("--verify", golden_path, "golden CSV to verify against");
  c_table->add_option("--x-max", soldner_max, "soldner table endpoint")->capture_default_str();

  std::string flag_method;
  auto* c_approx = app.add_subcommand("approx", "pi(x) approximation formulas");
  c_approx->add_option("method", arg_method,
                       "x_over_lnx | legendre[:A] | discrete_sum | encke | li_pv | li_from2 | "
                       "riemann_r[:nmax]");
  c_approx->add_option("x", arg_x)->required();
  c_approx->add_option("--method", flag_method, "overrides the positional method");

  auto* c_fit = app.add_subcommand("fit-legendre", "least-squares Legendre constant");
  c_fit->add_option("--lo", fit_lo)->capture_default_str();
  c_fit->add_option("--hi", fit_hi)->capture_default_str();
  c_fit->add_option("--samples", fit_samples)->capture_default_str();

  auto* c_demo = app.add_subcommand("complex-demo", "path independence, winding and art. 18 checks");

  auto* c_verify = app.add_subcommand("verify", "verify a table against its golden file");
  c_verify->add_option("id", table_id, "bessel1810 | comparativa | constants")
      ->required()
      ->check(CLI::IsMember({"bessel1810", "comparativa", "constants"}));
  c_verify->add_option("golden", golden_path)->required();

  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  try {
    app.parse(argc, argv);

    if (g.precision < 16 || g.precision > 10000) {
      std::cerr << "ERROR:3: --precision must lie in [16, 10000]\n";
      return 3;
    }
    long digits = effective_digits(g);

    if (c_li->parsed()) {
      Real x = parse_real(arg_x, g.precision);
      LiConvention conv = convention == "from2" ? LiConvention::FromTwo : LiConvention::PvFromZero;
      std::cout << li(x, conv).to_string(digits) << '\n';
      return 0;
    }
    if (c_ei->parsed()) {
      std::cout << ei(parse_real(arg_y, g.precision)).to_string(digits) << '\n';
      return 0;
    }
    if (c_const->parsed()) {
      ConstantResult gamma = euler_gamma(std::min(digits, 100L));
      ConstantResult mu = soldner_mu(std::min(digits, 50L));
      std::cout << "gamma = " << gamma.value.to_string(gamma.digits_requested) << "  ("
                << gamma.method_tag << ")\n";
      std::cout << "mu    = " << mu.value.to_string(mu.digits_requested) << "  ("
                << mu.method_tag << ")\n";
      return 0;
    }
    if (c_pi->parsed()) {
      std::uint64_t x = parse_u64(arg_n);
      auto conv = convention == "bessel1810" ? primes::CountingConvention::Bessel1810
                                             : primes::CountingConvention::Modern;
      if (g.sieve_cache && x % 10000 == 0) {
        std::cout << cached_block_counts(x, 10000, g.sieve_cache).checkpoint(x, conv) << '\n';
      } else {
        std::cout << primes::prime_pi(x, conv) << '\n';
      }
      return 0;
    }
    if (c_blocks->parsed()) {
      std::uint64_t limit = parse_u64(arg_n), size = parse_u64(arg_size);
      primes::PrimeCounts pc = cached_block_counts(limit, size, g.sieve_cache);
      OutputSpec spec = output_spec(g, digits);
      std::string sep = spec.format == TableFormat::Csv ? "," : " | ";
      std::string head = spec.format == TableFormat::Csv ? "" : "| ";
      std::string tail = spec.format == TableFormat::Csv ? "" : " |";
      std::string body = head + "block_start" + sep + "block_end" + sep + "count" + tail + "\n";
      if (spec.format == TableFormat::Markdown) body += "| --- | --- | --- |\n";
      std::uint64_t total = 0;
      for (std::uint64_t k = 0; k < limit / size && k * size < limit; ++k) {
        total += pc.block_counts[k];
        body += head + std::to_string(k * size) + sep + std::to_string((k + 1) * size) + sep +
                std::to_string(pc.block_counts[k]) + tail + "\n";
      }
      body += head + "total" + sep + std::to_string(limit) + sep + std::to_string(total) + tail + "\n";
      emit(body, spec);
      return 0;
    }
    if (c_quad->parsed()) {
      if (quad_from.empty() != quad_to.empty()) {
        std::cerr << "ERROR:3: quad needs both --from and --to (or neither for the demo)\n";
        return 3;
      }
      OutputSpec spec = output_spec(g, digits);
      if (quad_from.empty()) {
        emit(render_gauss_demo(gauss_1815_demo(g.precision), spec), spec);
        return 0;
      }
      Real a = parse_real(quad_from, g.precision), b = parse_real(quad_to, g.precision);
      QuadratureRule rule = legendre_rule(quad_nodes, g.precision);
      std::cout << integrate_recip_log(a, b, rule, quad_panels).to_string(digits) << '\n';
      return 0;
    }
    if (c_table->parsed()) {
      OutputSpec spec = output_spec(g, digits);
      if (table_id == "bessel1810") {
        LiTable table = bessel_table_1810(g.precision);
        if (!golden_path.empty()) return report_verification(verify_bessel_1810(table, golden_path), "bessel1810");
        emit(render_li_table(table, spec), spec);
      } else if (table_id == "soldner") {
        LiTable table = soldner_table(parse_real(soldner_max, g.precision));
        emit(render_li_table(table, spec), spec);
      } else {
        std::vector<std::uint64_t> ns = {1000,   10000,   50000,   100000,
                                         500000, 1000000, 10000000};
        auto rows = comparison_table(ns, g.precision);
        if (!golden_path.empty()) return report_verification(verify_comparativa(rows, golden_path), "comparativa");
        emit(render_comparison_table(rows, spec), spec);
      }
      return 0;
    }
    if (c_approx->parsed()) {
      if (arg_method.empty() && flag_method.empty()) {
        std::cerr << "ERROR:3: approx needs a method (positional or --method)\n";
        return 3;
      }
      ApproxMethod method = ApproxMethod::parse(flag_method.empty() ? arg_method : flag_method);
      std::cout << approx_value(method, parse_real(arg_x, g.precision)).to_string(digits) << '\n';
      return 0;
    }
    if (c_fit->parsed()) {
      Real a = fit_legendre_constant(parse_u64(fit_lo), parse_u64(fit_hi), fit_samples, g.precision);
      std::cout << a.to_string(digits) << '\n';
      return 0;
    }
    if (c_demo->parsed()) return run_complex_demo(g);
    if (c_verify->parsed()) {
      if (table_id == "bessel1810")
        return report_verification(verify_bessel_1810(bessel_table_1810(g.precision), golden_path),
                                   "bessel1810");
      if (table_id == "comparativa") {
        std::vector<std::uint64_t> ns = {1000,   10000,   50000,   100000,
                                         500000, 1000000, 10000000};
        return report_verification(verify_comparativa(comparison_table(ns, g.precision), golden_path),
                                   "comparativa");
      }
      return report_verification(verify_constants(golden_path), "constants");
    }
    std::cerr << "ERROR:3: no subcommand given\n";
    return 3;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "ERROR:3: " << e.what() << '\n';
    return 3;
  } catch (const std::domain_error& e) {
    std::cerr << "ERROR:1: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "ERROR:1: " << e.what() << '\n';
    return 1;
  } catch (const std::out_of_range& e) {
    std::cerr << "ERROR:1: " << e.what() << '\n';
    return 1;
  } catch (const std::overflow_error& e) {
    std::cerr << "ERROR:1: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "ERROR:1: " << e.what() << '\n';
    return 1;
  }
}
