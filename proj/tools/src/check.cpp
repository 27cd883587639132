#include <algorithm>
#include <atomic>
#include <thread>

#include "curvetopo/curvegen.hpp"
#include "curvetopo/crossings.hpp"
#include "curvetopo/errors.hpp"
#include "curvetopo/rotation.hpp"
#include "curvetopo_cli/cli.hpp"

namespace curvetopo::cli {

namespace {

TrialResult run_trial(const CheckOptions& options, int index) {
  TrialResult r;
  r.seed = options.seed + static_cast<std::uint64_t>(index);
  r.order = 1 + index % options.max_order;
  try {
    const ClosedPolyline curve = random_generic_curve(r.order, r.seed, options.samples);
    const Analysis a = analyze_full(curve, default_tolerances(curve));
    r.crossings = a.diagram.crossing_count();
    r.turning = a.report.rotation_turning;
    r.whitney = a.report.rotation_whitney;
    r.rotation_new = a.report.rotation_new;
    r.agree = r.turning == r.whitney && r.whitney == r.rotation_new;

    r.basepoint_independent = true;
    for (int e = 0; e < static_cast<int>(a.diagram.edges().size()); ++e) {
      if (rotation_whitney_from_edge(a.diagram, a.labels, e) != r.whitney) {
        r.basepoint_independent = false;
      }
    }

    const EulerStats s = a.report.euler;
    const int n = r.crossings;
    r.euler_ok = s.euler_characteristic == 2 &&
                 (n == 0 || (s.n_faces == n + 2 && s.n_edges == 2 * n && s.n_vertices == n));
  } catch (const GenerationExhausted& e) {
    r.error = e.what();
    r.generation_failed = true;
  } catch (const Error& e) {
    r.error = e.what();
  }
  return r;
}

}  // namespace

CheckSummary run_check(const CheckOptions& options) {
  CheckSummary summary;
  summary.trials.resize(std::max(options.trials, 0));
  const int workers = std::max(
      1, options.threads > 0 ? options.threads
                             : static_cast<int>(std::thread::hardware_concurrency()));
  std::atomic<int> next{0};
  auto work = [&]() {
    for (int i = next++; i < options.trials; i = next++) {
      summary.trials[i] = run_trial(options, i);
    }
  };
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  for (const TrialResult& t : summary.trials) {
    summary.agreements += t.error.empty() && t.agree;
    summary.basepoint_checks += t.error.empty() && t.basepoint_independent;
    summary.euler_checks += t.error.empty() && t.euler_ok;
    summary.failures += !t.passed();
  }
  return summary;
}

}  // namespace curvetopo::cli
