#include "zws/scan.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <ostream>
#include <string>
#include <thread>

#include "zws/reflection.hpp"
#include "zws/types.hpp"
#include "zws/zeta_w.hpp"

namespace zws {

std::optional<ScanKind> parse_scan_kind(std::string_view name) {
  if (name == "zeta_family") return ScanKind::zeta_family;
  if (name == "chi_family") return ScanKind::chi_family;
  if (name == "residue0") return ScanKind::residue0;
  if (name == "residue0_inv") return ScanKind::residue0_inv;
  return std::nullopt;
}

bool scan_has_s_columns(ScanKind kind) {
  return kind == ScanKind::zeta_family || kind == ScanKind::chi_family;
}

ScanOptions default_scan_options(ScanKind kind) {
  ScanOptions opts;
  opts.kind = kind;
  switch (kind) {
    case ScanKind::zeta_family:
      break;
    case ScanKind::chi_family:
      opts.s_min = 1.0;
      opts.s_max = 2.0;
      break;
    case ScanKind::residue0:
    case ScanKind::residue0_inv:
      opts.n_max = 250;
      break;
  }
  return opts;
}

std::vector<double> scan_grid(const ScanOptions& opts) {
  if (!(opts.s_step > 0.0) || !(opts.s_max >= opts.s_min)) {
    throw DomainError("scan needs s_step > 0 and s_max >= s_min");
  }
  const auto count = static_cast<std::int64_t>(std::llround((opts.s_max - opts.s_min) / opts.s_step));
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(count) + 1);
  for (std::int64_t k = 0; k <= count; ++k) grid.push_back(opts.s_min + static_cast<double>(k) * opts.s_step);
  return grid;
}

namespace {

void fill_row(const ScanOptions& opts, std::int64_t n, const std::vector<double>& grid,
              ScanRecord* out) {
  const TruncationIndex index(n);
  switch (opts.kind) {
    case ScanKind::zeta_family:
    case ScanKind::chi_family:
      for (std::size_t i = 0; i < grid.size(); ++i) {
        const ComplexValue s{grid[i], 0.0};
        const EvalResult r = opts.kind == ScanKind::zeta_family ? zeta_w(index, s) : chi(index, s);
        if (r.pole) throw DomainError("scan hit a pole at N=" + std::to_string(n) + ", s=" + format_real(grid[i]));
        out[i] = {n, s.real(), s.imag(), r.value.real(), r.value.imag()};
      }
      break;
    case ScanKind::residue0:
    case ScanKind::residue0_inv: {
      const double residue = residue_chi_at_0(index).value;
      out[0] = {n, 0.0, 0.0, opts.kind == ScanKind::residue0 ? residue : 1.0 / residue, 0.0};
      break;
    }
  }
}

}  // namespace

std::vector<ScanRecord> run_scan(const ScanOptions& opts) {
  if (opts.n_min < 1 || opts.n_max < opts.n_min) throw DomainError("scan needs 1 <= n_min <= n_max");
  const std::vector<double> grid = scan_has_s_columns(opts.kind) ? scan_grid(opts) : std::vector<double>{0.0};
  const auto n_count = static_cast<std::size_t>(opts.n_max - opts.n_min + 1);
  std::vector<ScanRecord> rows(n_count * grid.size());

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < n_count; i = next++) {
      try {
        fill_row(opts, opts.n_min + static_cast<std::int64_t>(i), grid, rows.data() + i * grid.size());
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };

  const unsigned threads = std::clamp<unsigned>(opts.threads, 1, static_cast<unsigned>(n_count));
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();
  if (failure) std::rethrow_exception(failure);
  return rows;
}

std::string format_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x == 0.0 ? 0.0 : x);
  return buf;
}

void write_csv(std::ostream& out, ScanKind kind, const std::vector<ScanRecord>& rows) {
  const bool with_s = scan_has_s_columns(kind);
  out << (with_s ? "N,s_re,s_im,value_re,value_im\n" : "N,value_re,value_im\n");
  for (const auto& r : rows) {
    out << r.n;
    if (with_s) out << ',' << format_real(r.s_re) << ',' << format_real(r.s_im);
    out << ',' << format_real(r.value_re) << ',' << format_real(r.value_im) << '\n';
  }
}

}  // namespace zws
