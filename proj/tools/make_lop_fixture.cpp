// Writes a synthetic price-deviation panel shaped like a quarterly
// item-by-city data set (48 items x 51 cities, 72 quarters), plus the
// goods-only and services-only subsets used by the kstest examples.
// Deterministic in --seed.

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "hetpanel/csv.hpp"
#include "hetpanel/montecarlo.hpp"
#include "hetpanel/panel.hpp"
#include "hetpanel/rng.hpp"

namespace {

using namespace hetpanel;

std::vector<std::string> quarter_labels(std::size_t periods) {
  std::vector<std::string> labels;
  int year = 1990, quarter = 1;
  for (std::size_t t = 0; t < periods; ++t) {
    labels.push_back(std::to_string(year) + "Q" + std::to_string(quarter));
    if (++quarter == 5) {
      quarter = 1;
      ++year;
    }
  }
  return labels;
}

std::string pad2(std::size_t v) {
  char buf[8];
  std::snprintf(buf, sizeof(buf), "%02zu", v);
  return buf;
}

double truncated_gaussian(rng::Stream& stream, double mean, double sd, double lo, double hi) {
  for (;;) {
    const double x = mean + sd * stream.next_gaussian();
    if (x > lo && x < hi) return x;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"write a synthetic item-by-city price deviation panel"};
  std::string out_dir = ".";
  std::uint64_t seed = 20070131;
  std::size_t items = 48, cities = 51, periods = 72, goods_items = 28;
  app.add_option("--out-dir", out_dir, "output directory (default .)");
  app.add_option("--seed", seed, "rng seed");
  app.add_option("--items", items, "number of items (default 48)");
  app.add_option("--cities", cities, "number of cities (default 51)");
  app.add_option("--periods", periods, "number of quarters (default 72)");
  app.add_option("--goods-items", goods_items, "items classified as goods (default 28)");
  CLI11_PARSE(app, argc, argv);

  if (goods_items > items) {
    std::cerr << "goods-items cannot exceed items\n";
    return 2;
  }

  const std::size_t n_units = items * cities;
  std::vector<UnitParams> params(n_units);
  std::vector<std::string> unit_ids(n_units);
  for (std::size_t item = 0; item < items; ++item) {
    const bool is_good = item < goods_items;
    for (std::size_t city = 0; city < cities; ++city) {
      const std::size_t u = item * cities + city;
      rng::Stream stream(rng::derive_key(seed, {7, u}));
      UnitParams p;
      p.mean = truncated_gaussian(stream, -0.04, 0.13, -0.8, 0.8);
      p.variance = std::exp(-4.1 + 0.7 * stream.next_gaussian());
      // services adjust more slowly than goods
      p.ar1 = is_good ? truncated_gaussian(stream, 0.45, 0.17, -0.9, 0.95)
                      : truncated_gaussian(stream, 0.63, 0.14, -0.9, 0.97);
      params[u] = p;
      unit_ids[u] = "i" + pad2(item + 1) + "_c" + pad2(city + 1);
    }
  }

  const Panel raw = simulate_panel(params, periods, rng::derive_key(seed, {8}));
  const auto times = quarter_labels(periods);
  const Panel panel(raw.values(), n_units, periods, unit_ids, times);

  auto unit_slice = [&](std::size_t first_unit, std::size_t count) {
    std::vector<double> values(raw.values().begin() + first_unit * periods,
                               raw.values().begin() + (first_unit + count) * periods);
    std::vector<std::string> ids(unit_ids.begin() + first_unit,
                                 unit_ids.begin() + first_unit + count);
    return Panel(std::move(values), count, periods, std::move(ids), times);
  };

  const std::string base = out_dir.empty() ? "." : out_dir;
  write_long_csv(panel, base + "/lop_panel.csv");
  write_long_csv(unit_slice(0, goods_items * cities), base + "/lop_goods.csv");
  write_long_csv(unit_slice(goods_items * cities, (items - goods_items) * cities),
                 base + "/lop_services.csv");
  std::cerr << "wrote " << base << "/lop_panel.csv (N=" << n_units << ", T=" << periods
            << "), lop_goods.csv, lop_services.csv\n";
  return 0;
}
