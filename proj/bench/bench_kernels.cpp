// Benchmark of the data-parallel kernels against their serial reference
// implementations.  Results must match exactly; the table reports timings
// and speedup.
//
//   ./srw_bench [--large]
//
// --large raises the prime so the scan kernel has real work per thread.

#ifdef _OPENMP
#include <omp.h>
#endif

#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>

#include "srw/deformation.hpp"
#include "srw/modular.hpp"
#include "srw/psl2.hpp"

using namespace srw;

namespace {

template <typename F>
double time_s(F&& fn) {
  auto start = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void row(const char* name, double serial, double parallel, bool equal) {
  std::printf("%-34s %9.3fs %9.3fs %7.2fx   %s\n", name, serial, parallel,
              parallel > 0 ? serial / parallel : 0.0, equal ? "results equal" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  bool large = false;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--large") == 0) large = true;

#ifdef _OPENMP
  std::printf("kernels on %d OpenMP thread(s)\n\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP; both columns run serially\n\n");
#endif
  std::printf("%-34s %10s %10s %8s\n", "kernel", "serial", "parallel", "speedup");

  {
    const int64_t p = large ? 47 : 23;
    Field f2(p, 2);
    SupersingularScan a, b;
    double ts = time_s([&] { a = supersingular_scan(f2, Exec::serial); });
    double tp = time_s([&] { b = supersingular_scan(f2, Exec::parallel); });
    std::string name = "supersingular-scan  p=" + std::to_string(p);
    row(name.c_str(), ts, tp, a.lambdas == b.lambdas && a.oracles_agree == b.oracles_agree);
  }

  {
    // p = 7 over F_49 evaluates C(47,3) = 16215 lambda-triples
    const int64_t p = large ? 7 : 5;
    Signature sig{std::vector<int64_t>((p - 1) / 2, 2)};
    SearchOptions ser, par;
    ser.exec = Exec::serial;
    par.exec = Exec::parallel;
    SearchResult a, b;
    double ts = time_s([&] { a = sdd_search(p, sig, 2, ser); });
    double tp = time_s([&] { b = sdd_search(p, sig, 2, par); });
    std::string name = "deformation-search  p=" + std::to_string(p) + " k=2";
    row(name.c_str(), ts, tp, a.tuples == b.tuples && a.candidates == b.candidates);
  }

  {
    const int64_t p = large ? 31 : 23;
    bool a = false, b = false;
    double ts = time_s([&] { a = psl2_symbolic_all(p, Exec::serial); });
    double tp = time_s([&] { b = psl2_symbolic_all(p, Exec::parallel); });
    std::string name = "psl2-symbolic-check p=" + std::to_string(p);
    row(name.c_str(), ts, tp, a == b);
  }

  return 0;
}
