#include "toeplitz/limitset.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <mutex>
#include <numbers>
#include <numeric>
#include <random>
#include <thread>

#include "toeplitz/errors.hpp"

namespace toeplitz {

void SweepConfig::validate() const {
  if (n < 1) throw ParameterError("n must be >= 1");
  if (m < 3) throw ParameterError("m must be >= 3");
  if (l < 1) throw ParameterError("l must be >= 1");
  if (sweeps < 1) throw ParameterError("sweeps must be >= 1");
  if (n / sweeps < 1) throw ParameterError("n / sweeps must be >= 1");
  if (ma_window < 1 || ma_window % 2 == 0) throw ParameterError("ma_window must be odd and >= 1");
  if (!(threshold_divisor >= 1.0)) throw ParameterError("threshold_divisor must be >= 1");
  if (threads < 0) throw ParameterError("threads must be >= 0");
}

void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& fn) {
  std::size_t workers = threads > 0 ? static_cast<std::size_t>(threads)
                                    : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

std::vector<double> moving_average(const std::vector<double>& values, int window) {
  if (window < 1 || window % 2 == 0) throw ParameterError("moving average window must be odd and >= 1");
  const std::ptrdiff_t size = static_cast<std::ptrdiff_t>(values.size());
  const std::ptrdiff_t half = window / 2;
  std::vector<double> out(values.size());
  for (std::ptrdiff_t i = 0; i < size; ++i) {
    const std::ptrdiff_t lo = std::max<std::ptrdiff_t>(0, i - half);
    const std::ptrdiff_t hi = std::min(size - 1, i + half);
    double acc = 0.0;
    for (std::ptrdiff_t k = lo; k <= hi; ++k) acc += values[static_cast<std::size_t>(k)];
    out[static_cast<std::size_t>(i)] = acc / static_cast<double>(hi - lo + 1);
  }
  return out;
}

Partition sample_rhos(const RhoInterval& interval, int count, RhoSampling mode) {
  if (count < 1) throw ParameterError("rho sample count must be >= 1");
  const double lo = interval.rho_l;
  const double hi = interval.rho_h;
  if (!(lo > 0.0) || !(hi >= lo)) throw ParameterError("invalid rho interval");
  if (mode == RhoSampling::uniform || count == 1 || lo >= 1.0) return Partition::uniform(lo, hi, count);

  Partition p;
  if (hi <= 1.0) {
    const Partition rec = Partition::uniform(1.0 / hi, 1.0 / lo, count);
    for (auto it = rec.points.rbegin(); it != rec.points.rend(); ++it) p.points.push_back(1.0 / *it);
    p.points.front() = lo;
    p.points.back() = hi;
    return p;
  }

  const double mass_below = 1.0 / lo - 1.0;
  const double mass_above = hi - 1.0;
  int below = static_cast<int>(std::lround(count * mass_below / (mass_below + mass_above)));
  below = std::clamp(below, 1, count - 1);
  const int above = count - below;
  for (int j = below; j >= 1; --j) {
    p.points.push_back(j == below ? lo : 1.0 / (1.0 + j * mass_below / below));
  }
  const Partition upper = above == 1 ? Partition{{hi}} : Partition::uniform(1.0, hi, above);
  p.points.insert(p.points.end(), upper.points.begin(), upper.points.end());
  return p;
}

FixedPointFrame working_frame(const LaurentSymbol& b, const RhoInterval& interval, int m) {
  const Box box = symbol_extent(b, interval);
  const double dv = 2.0 * std::numbers::pi / m;
  double c = 0.0;
  for (const double rho : {interval.rho_l, interval.rho_h, 1.0}) {
    c = std::max(c, second_derivative_bound(b, rho, CurvatureBound::rigorous));
  }
  const double margin = 2.0 * c * dv * dv * 1.01 + 1e-6 * box.diagonal();
  return FixedPointFrame::fit(box, margin);
}

namespace {

using Clock = std::chrono::steady_clock;

int worker_count(int threads) {
  return threads > 0 ? threads : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

struct Run {
  const LaurentSymbol& b;
  const SweepConfig& cfg;
  Diagnostics diag;
  Partition vs;
  FixedPointFrame frame;
  Region polygon;
  Region superset;
  bool started = false;

  Run(const LaurentSymbol& symbol, const SweepConfig& config)
      : b(symbol), cfg(config), vs(uniform_angles(config.m)) {
    diag.seed = cfg.seed;
    diag.interval = rho_bounds(b, &diag.warnings);
    frame = working_frame(b, diag.interval, cfg.m);
    polygon = Region(frame);
    superset = Region(frame);
  }

  // Intersects both chains with every rho of the batch, in order.
  void intersect_batch(const std::vector<double>& rhos) {
    const std::size_t chunk = static_cast<std::size_t>(worker_count(cfg.threads)) * 2;
    std::vector<std::pair<Region, Region>> pieces;
    for (std::size_t start = 0; start < rhos.size(); start += chunk) {
      const std::size_t count = std::min(chunk, rhos.size() - start);
      pieces.assign(count, {});
      parallel_for(count, cfg.threads, [&](std::size_t k) {
        const SpectrumPolygon sp = discretize(b, rhos[start + k], vs);
        pieces[k] = {region(sp, frame), expanded(sp, b, frame, cfg.cbound)};
      });
      for (std::size_t k = 0; k < count; ++k) {
        if (!started) {
          polygon = normalized(pieces[k].first);
          superset = normalized(pieces[k].second);
          started = true;
        } else {
          polygon = intersect(polygon, pieces[k].first);
          superset = intersect(superset, pieces[k].second);
        }
        diag.rhos.push_back(rhos[start + k]);
        diag.vertex_counts.push_back(polygon.vertex_count());
      }
    }
    diag.polygon_areas.push_back(area(polygon));
    diag.superset_areas.push_back(area(superset));
  }

  LimitSetResult finish(Clock::time_point start) {
    if (polygon.empty()) diag.warnings.push_back("approximating polygon is empty");
    if (superset.empty()) diag.warnings.push_back("approximating superset is empty");
    diag.wall_seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return {std::move(polygon), std::move(superset), std::move(diag)};
  }
};

// Area-reduction scores on the fixed sweep grid. Scores never increase as the polygon
// shrinks, so a cached score is an upper bound for the current one.
class SweepScores {
 public:
  SweepScores(std::vector<double> grid) : grid_(std::move(grid)), values_(grid_.size(), 0.0) {}

  const std::vector<double>& grid() const noexcept { return grid_; }
  const std::vector<double>& values() const noexcept { return values_; }

  void refresh(Run& run) {
    const double base = area(run.polygon);
    std::vector<char> fresh(values_.size(), 0);
    auto evaluate = [&](const std::vector<std::size_t>& idx) {
      std::vector<double> out(idx.size(), 0.0);
      parallel_for(idx.size(), run.cfg.threads, [&](std::size_t k) {
        if (run.polygon.empty()) return;
        const SpectrumPolygon sp = discretize(run.b, grid_[idx[k]], run.vs);
        out[k] = std::max(0.0, base - area(intersect(run.polygon, region(sp, run.frame))));
      });
      for (std::size_t k = 0; k < idx.size(); ++k) {
        values_[idx[k]] = out[k];
        fresh[idx[k]] = 1;
      }
      run.diag.sweep_evaluations += idx.size();
    };

    if (!initialized_) {
      std::vector<std::size_t> all(values_.size());
      std::iota(all.begin(), all.end(), std::size_t{0});
      evaluate(all);
      initialized_ = true;
      return;
    }

    const std::size_t step = static_cast<std::size_t>(worker_count(run.cfg.threads));
    double fresh_max = 0.0;
    for (;;) {
      std::vector<std::size_t> stale;
      for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!fresh[i] && values_[i] > fresh_max) stale.push_back(i);
      }
      if (stale.empty()) break;
      std::stable_sort(stale.begin(), stale.end(),
                       [&](std::size_t x, std::size_t y) { return values_[x] > values_[y]; });
      stale.resize(std::min(stale.size(), step));
      evaluate(stale);
      for (std::size_t i = 0; i < values_.size(); ++i) {
        if (fresh[i]) fresh_max = std::max(fresh_max, values_[i]);
      }
    }
    const double threshold = fresh_max / run.cfg.threshold_divisor;
    std::vector<std::size_t> stale;
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (!fresh[i] && values_[i] > 0.0 && values_[i] >= threshold) stale.push_back(i);
    }
    evaluate(stale);
  }

 private:
  std::vector<double> grid_;
  std::vector<double> values_;
  bool initialized_ = false;
};

// Spacing of the sweep grid around index i.
double local_spacing(const std::vector<double>& grid, std::size_t i) {
  if (grid.size() < 2) return 0.0;
  if (i == 0) return grid[1] - grid[0];
  if (i + 1 == grid.size()) return grid[i] - grid[i - 1];
  return 0.5 * (grid[i + 1] - grid[i - 1]);
}

std::vector<double> next_batch(Run& run, const SweepScores& scores, int count, std::mt19937_64& rng) {
  const auto& grid = scores.grid();
  const std::vector<double> smooth = moving_average(scores.values(), run.cfg.ma_window);
  const double top = smooth.empty() ? 0.0 : *std::max_element(smooth.begin(), smooth.end());
  const RhoInterval& iv = run.diag.interval;

  std::vector<std::pair<double, double>> chosen;
  if (top > 0.0) {
    const double threshold = top / run.cfg.threshold_divisor;
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (std::size_t i = 0; i < smooth.size();) {
      if (smooth[i] < threshold) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j + 1 < smooth.size() && smooth[j + 1] >= threshold) ++j;
      const double hl = local_spacing(grid, i);
      const double hr = local_spacing(grid, j);
      double left = grid[i] - 0.5 * hl + hl * unit(rng);
      double right = grid[j] + 0.5 * hr - hr * unit(rng);
      if (left > right) std::swap(left, right);
      left = std::clamp(left, iv.rho_l, iv.rho_h);
      right = std::clamp(right, iv.rho_l, iv.rho_h);
      chosen.emplace_back(left, right);
      i = j + 1;
    }
  }

  if (chosen.empty()) {
    run.diag.warnings.push_back("no rho interval reduces the area; sampling the full interval");
    run.diag.intervals.push_back({{iv.rho_l, iv.rho_h}});
    return sample_rhos(iv, count, run.cfg.rho_sampling).points;
  }
  run.diag.intervals.push_back(chosen);

  // Largest-remainder allocation proportional to interval length.
  double total = 0.0;
  for (const auto& [a, c] : chosen) total += c - a;
  std::vector<double> share(chosen.size());
  for (std::size_t k = 0; k < chosen.size(); ++k) {
    share[k] = total > 0.0 ? count * (chosen[k].second - chosen[k].first) / total
                           : static_cast<double>(count) / static_cast<double>(chosen.size());
  }
  std::vector<int> alloc(chosen.size());
  int assigned = 0;
  for (std::size_t k = 0; k < chosen.size(); ++k) {
    alloc[k] = static_cast<int>(std::floor(share[k]));
    assigned += alloc[k];
  }
  std::vector<std::size_t> order(chosen.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return share[x] - alloc[x] > share[y] - alloc[y];
  });
  for (std::size_t k = 0; assigned < count; k = (k + 1) % order.size(), ++assigned) ++alloc[order[k]];

  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(count));
  for (std::size_t k = 0; k < chosen.size(); ++k) {
    if (alloc[k] == 0) continue;
    const Partition p = Partition::uniform(chosen[k].first, chosen[k].second, alloc[k]);
    out.insert(out.end(), p.points.begin(), p.points.end());
  }
  return out;
}

}  // namespace

LimitSetResult compute_basic(const LaurentSymbol& b, const SweepConfig& cfg) {
  SweepConfig basic = cfg;
  basic.sweeps = 1;
  basic.validate();
  const auto start = Clock::now();
  Run run(b, basic);
  run.intersect_batch(sample_rhos(run.diag.interval, basic.n + 1, basic.rho_sampling).points);
  return run.finish(start);
}

LimitSetResult compute_basic(const LaurentSymbol& b, int n, int m) {
  SweepConfig cfg;
  cfg.n = n;
  cfg.m = m;
  return compute_basic(b, cfg);
}

LimitSetResult compute_sweep(const LaurentSymbol& b, const SweepConfig& cfg) {
  cfg.validate();
  const auto start = Clock::now();
  Run run(b, cfg);

  std::vector<int> sizes(static_cast<std::size_t>(cfg.sweeps), cfg.n / cfg.sweeps);
  sizes.front() += 1;
  sizes.back() += cfg.n % cfg.sweeps;

  std::mt19937_64 rng(cfg.seed);
  SweepScores scores(cfg.sweeps > 1 ? sample_rhos(run.diag.interval, cfg.l, cfg.rho_sampling).points
                                    : std::vector<double>{});
  std::vector<double> batch = sample_rhos(run.diag.interval, sizes.front(), cfg.rho_sampling).points;
  for (int round = 0; round < cfg.sweeps; ++round) {
    run.intersect_batch(batch);
    if (round + 1 == cfg.sweeps) break;
    scores.refresh(run);
    batch = next_batch(run, scores, sizes[static_cast<std::size_t>(round) + 1], rng);
  }
  return run.finish(start);
}

}  // namespace toeplitz
