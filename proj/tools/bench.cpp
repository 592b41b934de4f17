// Times the serial reference against the OpenMP kernels on the two hot
// paths (character table rows, superinduction count sums) and checks that
// both produce identical results.

#include <chrono>
#include <cstdio>

#include "sct/induction.hpp"

using namespace sct;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

void bench_table(const Poset& P, int p, const char* name) {
  auto t0 = std::chrono::steady_clock::now();
  Theory serial(P, p, Budget{}, /*parallel=*/false);
  serial.value(0, 0);
  double ts = seconds_since(t0);

  t0 = std::chrono::steady_clock::now();
  Theory parallel(P, p, Budget{}, /*parallel=*/true);
  parallel.value(0, 0);
  double tp = seconds_since(t0);

  bool same = true;
  for (int r = 0; r < serial.num_chars() && same; ++r)
    for (int c = 0; c < serial.num_classes() && same; ++c)
      same = (serial.value(r, c) == parallel.value(r, c));
  std::printf("table   %-18s serial %.3fs  parallel %.3fs  speedup %.2fx  %s\n",
              name, ts, tp, ts / tp, same ? "identical" : "MISMATCH");
}

void bench_sind(const Poset& sub, const Poset& super, int p, const char* name) {
  auto t0 = std::chrono::steady_clock::now();
  Embedding serial(sub, super, p, Budget{}, /*parallel=*/false);
  auto a = serial.sind_class_counts();
  double ts = seconds_since(t0);

  t0 = std::chrono::steady_clock::now();
  Embedding parallel(sub, super, p, Budget{}, /*parallel=*/true);
  auto b = parallel.sind_class_counts();
  double tp = seconds_since(t0);

  std::printf("sind    %-18s serial %.3fs  parallel %.3fs  speedup %.2fx  %s\n",
              name, ts, tp, ts / tp, a == b ? "identical" : "MISMATCH");
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled\n");
#else
  std::printf("OpenMP not enabled; both columns run the serial path\n");
#endif
  bench_table(Poset::total(5), 2, "U_5(F_2)");
  bench_table(Poset::total(4), 3, "U_4(F_3)");
  bench_sind(Poset::product(3, 2), Poset::total(5), 2, "U_3xU_2 -> U_5");
  bench_sind(Poset::last_column(5), Poset::total(5), 2, "U_4 -> U_5");
  return 0;
}
