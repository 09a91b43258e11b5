#include <gtest/gtest.h>

#include <cmath>
#include <sstream>
#include <string>

#include "zws/scan.hpp"
#include "zws/types.hpp"

namespace {

std::string csv_for(zws::ScanOptions opts, unsigned threads) {
  opts.threads = threads;
  std::ostringstream out;
  zws::write_csv(out, opts.kind, zws::run_scan(opts));
  return out.str();
}

TEST(Scan, ParseKinds) {
  EXPECT_EQ(zws::parse_scan_kind("chi_family"), zws::ScanKind::chi_family);
  EXPECT_EQ(zws::parse_scan_kind("residue0_inv"), zws::ScanKind::residue0_inv);
  EXPECT_FALSE(zws::parse_scan_kind("bogus").has_value());
  EXPECT_TRUE(zws::scan_has_s_columns(zws::ScanKind::zeta_family));
  EXPECT_FALSE(zws::scan_has_s_columns(zws::ScanKind::residue0));
}

TEST(Scan, FigureDefaults) {
  const auto zeta = zws::default_scan_options(zws::ScanKind::zeta_family);
  EXPECT_EQ(zeta.s_min, -1.0);
  EXPECT_EQ(zeta.s_max, 0.0);
  EXPECT_EQ(zeta.s_step, 1.0 / 256.0);
  EXPECT_EQ(zeta.n_max, 25);
  const auto grid = zws::scan_grid(zeta);
  EXPECT_EQ(grid.size(), 257u);
  EXPECT_EQ(grid.front(), -1.0);
  EXPECT_EQ(grid.back(), 0.0);
  const auto chi = zws::default_scan_options(zws::ScanKind::chi_family);
  EXPECT_EQ(chi.s_min, 1.0);
  EXPECT_EQ(chi.s_max, 2.0);
  EXPECT_EQ(zws::default_scan_options(zws::ScanKind::residue0).n_max, 250);
}

TEST(Scan, ZetaFamilyZerosAndOrdering) {
  auto opts = zws::default_scan_options(zws::ScanKind::zeta_family);
  opts.threads = 3;
  const auto rows = zws::run_scan(opts);
  ASSERT_EQ(rows.size(), 25u * 257u);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    EXPECT_EQ(r.n, static_cast<std::int64_t>(i / 257 + 1));
    if (r.s_re == 0.0 || r.s_re == -1.0) EXPECT_LE(std::abs(r.value_re), 1e-12) << r.n << " " << r.s_re;
  }
}

TEST(Scan, CsvIdenticalAcrossThreadCounts) {
  auto opts = zws::default_scan_options(zws::ScanKind::chi_family);
  opts.n_max = 12;
  opts.s_step = 1.0 / 64.0;
  const std::string one = csv_for(opts, 1);
  EXPECT_EQ(one.substr(0, one.find('\n')), "N,s_re,s_im,value_re,value_im");
  EXPECT_EQ(csv_for(opts, 4), one);
  EXPECT_EQ(csv_for(opts, 7), one);
}

TEST(Scan, ResidueRowsChangeSign) {
  zws::ScanOptions opts = zws::default_scan_options(zws::ScanKind::residue0);
  opts.n_min = 170;
  opts.n_max = 180;
  opts.threads = 4;
  const auto rows = zws::run_scan(opts);
  ASSERT_EQ(rows.size(), 11u);
  EXPECT_EQ(rows[6].n, 176);
  EXPECT_LT(rows[6].value_re, 0.0);
  EXPECT_GT(rows[7].value_re, 0.0);
  std::ostringstream out;
  zws::write_csv(out, opts.kind, rows);
  EXPECT_EQ(out.str().substr(0, out.str().find('\n')), "N,value_re,value_im");
  EXPECT_EQ(csv_for(opts, 1), out.str());
}

TEST(Scan, PoleAndRangeErrors) {
  zws::ScanOptions opts;
  opts.kind = zws::ScanKind::zeta_family;
  opts.s_min = 0.5;
  opts.s_max = 1.5;
  opts.s_step = 0.5;
  opts.n_max = 2;
  EXPECT_THROW(zws::run_scan(opts), zws::DomainError);
  opts.n_min = 3;
  EXPECT_THROW(zws::run_scan(opts), zws::DomainError);
}

TEST(Scan, FormatReal) {
  EXPECT_EQ(zws::format_real(1.25), "1.25");
  EXPECT_EQ(zws::format_real(-0.0), "0");
  EXPECT_EQ(std::stod(zws::format_real(0.1)), 0.1);
}

}  // namespace
