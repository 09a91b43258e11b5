// zws: evaluate zeta_w and chi, export figure data, print the exact table and
// run the self-verification suites.
//
// Exit codes: 0 ok, 1 usage or I/O error, 2 pole, 3 verification failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "zws/exact_poly.hpp"
#include "zws/reflection.hpp"
#include "zws/scan.hpp"
#include "zws/types.hpp"
#include "zws/verify.hpp"
#include "zws/zeta_w.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitPole = 2;
constexpr int kExitVerifyFailed = 3;

zws::ComplexValue parse_s(const std::string& text) {
  std::vector<double> parts;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    const double v = std::stod(item, &used);
    if (used != item.size()) throw zws::DomainError("malformed --s value '" + text + "'");
    parts.push_back(v);
  }
  if (parts.empty() || parts.size() > 2) throw zws::DomainError("--s takes one or two comma-separated reals");
  return {parts[0], parts.size() == 2 ? parts[1] : 0.0};
}

std::string describe(zws::ComplexValue s) {
  if (s.imag() == 0.0) return zws::format_real(s.real());
  return zws::format_real(s.real()) + (s.imag() < 0 ? "" : "+") + zws::format_real(s.imag()) + "i";
}

unsigned resolve_threads(unsigned requested) {
  if (const char* env = std::getenv("ZWS_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring invalid ZWS_THREADS='" << env << "'\n";
  }
  if (requested > 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Truncated zeta approximation zeta_w(N;s) and its reflection function chi(N;s)"};
  app.require_subcommand(1);

  // eval
  auto* eval = app.add_subcommand("eval", "Evaluate zeta_w or chi at one point");
  std::string fn = "zeta_w";
  std::int64_t eval_n = 1;
  std::string s_text;
  eval->add_option("--fn", fn, "Function to evaluate")->check(CLI::IsMember({"zeta_w", "chi"}));
  eval->add_option("--N", eval_n, "Truncation index N")->required();
  eval->add_option("--s", s_text, "s as 're' or 're,im'")->required();

  // scan
  auto* scan = app.add_subcommand("scan", "Export figure data as CSV");
  std::string kind_text;
  std::string out_path = "-";
  unsigned threads = 0;
  std::int64_t n_min = 0;
  std::int64_t n_max = 0;
  double s_min = 0.0;
  double s_max = 0.0;
  double s_step = 0.0;
  scan->add_option("--kind", kind_text, "zeta_family | chi_family | residue0 | residue0_inv")
      ->required()
      ->check(CLI::IsMember({"zeta_family", "chi_family", "residue0", "residue0_inv"}));
  auto* n_min_opt = scan->add_option("--n-min", n_min, "Smallest N");
  auto* n_max_opt = scan->add_option("--n-max", n_max, "Largest N");
  auto* s_min_opt = scan->add_option("--s-min", s_min, "Smallest real s");
  auto* s_max_opt = scan->add_option("--s-max", s_max, "Largest real s");
  auto* s_step_opt = scan->add_option("--s-step", s_step, "Step in s");
  scan->add_option("--out", out_path, "Output CSV path ('-' for stdout)");
  scan->add_option("--threads", threads, "Worker threads (default: hardware concurrency)");

  // table
  auto* table = app.add_subcommand("table", "Print the exact zeta_w(N;1-n) polynomials");
  int table_n_max = 12;
  table->add_option("--n-max", table_n_max, "Last row n (2..12)");

  // verify
  auto* verify = app.add_subcommand("verify", "Run the invariant suites");
  std::string level = "fast";
  std::string golden = ZWS_DEFAULT_GOLDEN_TABLE;
  verify->add_option("--level", level, "fast | full")->check(CLI::IsMember({"fast", "full"}));
  verify->add_option("--golden", golden, "Golden table file to check against the engine");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*eval) {
      const zws::TruncationIndex n(eval_n);
      const zws::ComplexValue s = parse_s(s_text);
      const zws::EvalResult r = fn == "chi" ? zws::chi(n, s) : zws::zeta_w(n, s);
      if (r.pole) {
        std::cerr << "pole at s=" << describe(s) << '\n';
        return kExitPole;
      }
      std::cout << zws::format_real(r.value.real()) << ' ' << zws::format_real(r.value.imag()) << '\n';
      return kExitOk;
    }

    if (*scan) {
      const zws::ScanKind kind = *zws::parse_scan_kind(kind_text);
      zws::ScanOptions opts = zws::default_scan_options(kind);
      if (*n_min_opt) opts.n_min = n_min;
      if (*n_max_opt) opts.n_max = n_max;
      if (*s_min_opt) opts.s_min = s_min;
      if (*s_max_opt) opts.s_max = s_max;
      if (*s_step_opt) opts.s_step = s_step;
      opts.threads = resolve_threads(threads);
      const auto rows = zws::run_scan(opts);
      if (out_path == "-") {
        zws::write_csv(std::cout, kind, rows);
      } else {
        std::ofstream out(out_path);
        if (!out) {
          std::cerr << "cannot write " << out_path << '\n';
          return kExitUsage;
        }
        zws::write_csv(out, kind, rows);
        if (!out.flush()) {
          std::cerr << "write to " << out_path << " failed\n";
          return kExitUsage;
        }
      }
      return kExitOk;
    }

    if (*table) {
      zws::write_table(std::cout, zws::zeta_w_neg_table(table_n_max));
      return kExitOk;
    }

    if (*verify) {
      zws::VerifyOptions opts;
      opts.level = level == "full" ? zws::VerifyLevel::full : zws::VerifyLevel::fast;
      opts.golden_table_path = golden;
      bool all_passed = true;
      for (const auto& r : zws::run_verify(opts)) {
        std::cout << r.name << ": " << (r.passed ? "PASS" : "FAIL");
        if (!r.passed) std::cout << " (" << r.detail << ')';
        std::cout << '\n';
        all_passed = all_passed && r.passed;
      }
      return all_passed ? kExitOk : kExitVerifyFailed;
    }
  } catch (const zws::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    // A scan that runs into a pole reports it like eval does.
    return std::string(e.what()).find("pole") != std::string::npos ? kExitPole : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
