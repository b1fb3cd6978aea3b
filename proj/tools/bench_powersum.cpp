// Wall-clock comparison of the two power-sum recursions against direct
// summation. Each value is also cross-checked, so a wrong timing row
// cannot be printed for a wrong answer.
#include <chrono>
#include <cstdio>
#include <vector>

#include <CLI11.hpp>

#include "stirsum/powersum.hpp"
#include "stirsum/stirling.hpp"

using namespace stirsum;

namespace {

template <typename F>
double time_us(int reps, F&& f) {
  const auto start = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) f();
  return std::chrono::duration<double, std::micro>(std::chrono::steady_clock::now() - start).count() / reps;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Time S_p(n) by direct summation and both recursions"};
  std::vector<std::int64_t> ps{5, 10, 20, 40, 80};
  std::vector<std::int64_t> ns{100, 10000, 1000000};
  int reps = 5;
  app.add_option("--p", ps, "Exponents")->capture_default_str();
  app.add_option("--n", ns, "Upper limits")->capture_default_str();
  app.add_option("--reps", reps, "Repetitions per cell")->check(CLI::PositiveNumber)->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  // warm the shared triangle so the Stirling column measures the recursion only
  std::int64_t p_top = 0;
  for (auto p : ps) p_top = std::max(p_top, p);
  static_cast<void>(StirlingTriangle::shared().row(p_top + 1));

  std::printf("%6s %10s %14s %14s %14s\n", "p", "n", "direct_us", "binomial_us", "stirling_us");
  for (auto p : ps) {
    for (auto n : ns) {
      const ExactInt expect = powersum_binomial(p, n);
      if (powersum_stirling(p, n) != expect) {
        std::fprintf(stderr, "recursions disagree at p=%lld n=%lld\n", static_cast<long long>(p),
                     static_cast<long long>(n));
        return 1;
      }
      const bool run_direct = n <= 10000;
      const double direct = run_direct ? time_us(reps, [&] { static_cast<void>(powersum_direct(p, n)); }) : -1.0;
      const double binom = time_us(reps, [&] { static_cast<void>(powersum_binomial(p, n)); });
      const double stir = time_us(reps, [&] { static_cast<void>(powersum_stirling(p, n)); });
      if (run_direct) {
        std::printf("%6lld %10lld %14.1f %14.1f %14.1f\n", static_cast<long long>(p), static_cast<long long>(n), direct,
                    binom, stir);
      } else {
        std::printf("%6lld %10lld %14s %14.1f %14.1f\n", static_cast<long long>(p), static_cast<long long>(n), "-", binom,
                    stir);
      }
    }
  }
  return 0;
}
