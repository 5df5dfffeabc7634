#include "proshrink/experiments.hpp"

#include "proshrink/rng.hpp"

#include <atomic>
#include <cmath>
#include <iostream>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <vector>

namespace proshrink {

Instance generate_instance(const InstanceSpec& spec) {
  if (spec.m < 1 || spec.n < 1)
    throw std::invalid_argument("generate_instance: m and n must be >= 1");
  if (spec.sparsity < 1 || spec.sparsity > spec.n)
    throw std::invalid_argument("generate_instance: need 1 <= s <= n");

  rng::Generator gen(spec.seed);
  Instance inst;
  inst.A.resize(spec.m, spec.n);
  for (std::size_t i = 0; i < spec.m; ++i)
    for (std::size_t j = 0; j < spec.n; ++j)
      inst.A(static_cast<long>(i), static_cast<long>(j)) = gen.gaussian();

  // Support via partial Fisher-Yates, then one sign draw per spike.
  std::vector<std::size_t> idx(spec.n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  for (std::size_t i = 0; i < spec.sparsity; ++i) {
    const std::size_t j = i + gen.index_below(spec.n - i);
    std::swap(idx[i], idx[j]);
  }
  inst.x0 = Vector::Zero(static_cast<long>(spec.n));
  for (std::size_t i = 0; i < spec.sparsity; ++i) {
    const double sign = gen.uniform01() < 0.5 ? 1.0 : -1.0;
    inst.x0[static_cast<long>(idx[i])] = sign * spec.amplitude;
  }
  inst.b = inst.A * inst.x0;
  return inst;
}

bool recovered(const Vector& x, const Vector& x0, double threshold) {
  if (x.size() != x0.size())
    throw std::invalid_argument("recovered: length mismatch");
  const double ref = x0.norm();
  if (ref == 0) throw std::invalid_argument("recovered: ground truth is zero");
  return (x - x0).norm() / ref <= threshold;
}

namespace {

struct TrialOutcome {
  bool rec_pro = false;
  bool rec_lb = false;
  bool div_pro = false;
  bool div_lb = false;
};

}  // namespace

SweepReport sweep(std::size_t m, std::size_t n,
                  const std::vector<std::size_t>& s_list, std::size_t trials,
                  double tau, const BoxSet& box, const SolverConfig& cfg,
                  std::uint64_t base_seed, std::size_t threads) {
  if (box.size() != n) throw std::invalid_argument("sweep: box length must be n");
  if (trials < 1) throw std::invalid_argument("sweep: trials must be >= 1");
  if (s_list.empty()) throw std::invalid_argument("sweep: empty sparsity list");
  if (!(tau > 0)) throw std::invalid_argument("sweep: tau must be > 0");

  const BoxSet free_box = BoxSet::whole_line(n);
  const std::size_t total = s_list.size() * trials;
  std::vector<TrialOutcome> outcomes(total);

  auto run_one = [&](std::size_t flat) {
    const std::size_t si = flat / trials;
    const std::size_t trial = flat % trials;
    const std::size_t s = s_list[si];
    InstanceSpec ispec;
    ispec.m = m;
    ispec.n = n;
    ispec.sparsity = s;
    ispec.seed = rng::derive_seed(base_seed, s, trial);
    const Instance inst = generate_instance(ispec);

    TrialOutcome& o = outcomes[flat];
    try {
      const Problem P(inst.A, inst.b, box, tau);
      o.rec_pro = recovered(proshrink_solve(P, cfg).x, inst.x0);
    } catch (const std::exception& e) {
      o.div_pro = true;
      std::cerr << "sweep: proshrink arm diverged (s=" << s
                << ", trial=" << trial << "): " << e.what() << "\n";
    }
    try {
      const Problem P(inst.A, inst.b, free_box, tau);
      o.rec_lb = recovered(proshrink_solve(P, cfg).x, inst.x0);
    } catch (const std::exception& e) {
      o.div_lb = true;
      std::cerr << "sweep: lbreg arm diverged (s=" << s << ", trial=" << trial
                << "): " << e.what() << "\n";
    }
  };

  std::size_t nthreads = threads == 0
                             ? std::max<std::size_t>(1, std::thread::hardware_concurrency())
                             : threads;
  nthreads = std::min(nthreads, total);
  if (nthreads <= 1) {
    for (std::size_t i = 0; i < total; ++i) run_one(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (std::size_t t = 0; t < nthreads; ++t)
      pool.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < total; i = next.fetch_add(1))
          run_one(i);
      });
    for (auto& th : pool) th.join();
  }

  SweepReport report;
  report.rows.reserve(s_list.size());
  for (std::size_t si = 0; si < s_list.size(); ++si) {
    SweepRow row;
    row.s = s_list[si];
    row.trials = trials;
    for (std::size_t t = 0; t < trials; ++t) {
      const TrialOutcome& o = outcomes[si * trials + t];
      row.recovered_proshrink += o.rec_pro ? 1 : 0;
      row.recovered_lbreg += o.rec_lb ? 1 : 0;
      row.diverged_proshrink += o.div_pro ? 1 : 0;
      row.diverged_lbreg += o.div_lb ? 1 : 0;
    }
    row.rate_proshrink =
        static_cast<double>(row.recovered_proshrink) / static_cast<double>(trials);
    row.rate_lbreg =
        static_cast<double>(row.recovered_lbreg) / static_cast<double>(trials);
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace proshrink
