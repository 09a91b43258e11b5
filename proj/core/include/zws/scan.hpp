#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace zws {

enum class ScanKind { zeta_family, chi_family, residue0, residue0_inv };

std::optional<ScanKind> parse_scan_kind(std::string_view name);
bool scan_has_s_columns(ScanKind kind);

/// One CSV row. Residue scans leave s_re/s_im at zero and do not emit them.
struct ScanRecord {
  std::int64_t n = 0;
  double s_re = 0.0;
  double s_im = 0.0;
  double value_re = 0.0;
  double value_im = 0.0;
};

struct ScanOptions {
  ScanKind kind = ScanKind::zeta_family;
  std::int64_t n_min = 1;
  std::int64_t n_max = 25;
  double s_min = -1.0;
  double s_max = 0.0;
  double s_step = 1.0 / 256.0;
  unsigned threads = 1;
};

/// Figure defaults: zeta family on s in [-1, 0] and chi family on [1, 2], both
/// with step 1/256 and N = 1..25; residue scans over N = 1..250.
ScanOptions default_scan_options(ScanKind kind);

/// s grid s_min + k s_step, k = 0..round((s_max - s_min)/s_step).
std::vector<double> scan_grid(const ScanOptions& opts);

/// Evaluates every (N, s) cell, partitioned by N over `threads` workers.
/// Rows come back N-major then s ascending regardless of thread count.
/// Throws DomainError when a cell hits a pole.
std::vector<ScanRecord> run_scan(const ScanOptions& opts);

/// CSV with header "N,s_re,s_im,value_re,value_im" (residue kinds:
/// "N,value_re,value_im"); reals written with 17 significant digits.
void write_csv(std::ostream& out, ScanKind kind, const std::vector<ScanRecord>& rows);

/// "%.17g" formatting shared by the CLI.
std::string format_real(double x);

}  // namespace zws
