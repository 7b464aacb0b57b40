#include "vxf/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace vxf {

namespace {
int read_thread_env() {
  if (const char* v = std::getenv("VXF_THREADS")) {
    int n = std::atoi(v);
    if (n >= 1) return n;
    return 1;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}
thread_local bool g_in_worker = false;
}  // namespace

int max_threads() {
  static const int n = read_thread_env();
  return n;
}

void parallel_for(int64_t n, const std::function<void(int64_t, int64_t)>& fn,
                  int64_t min_chunk) {
  if (n <= 0) return;
  const int nt_max = max_threads();
  int64_t want = std::min<int64_t>(nt_max, n / std::max<int64_t>(1, min_chunk));
  if (g_in_worker || want < 2) {
    fn(0, n);
    return;
  }
  const int64_t nt = want;
  const int64_t chunk = (n + nt - 1) / nt;
  std::vector<std::thread> workers;
  workers.reserve(static_cast<size_t>(nt - 1));
  for (int64_t t = 1; t < nt; ++t) {
    const int64_t b = t * chunk;
    const int64_t e = std::min(n, b + chunk);
    if (b >= e) break;
    workers.emplace_back([&fn, b, e] {
      g_in_worker = true;
      fn(b, e);
      g_in_worker = false;
    });
  }
  g_in_worker = true;
  fn(0, std::min(n, chunk));
  g_in_worker = false;
  for (auto& w : workers) w.join();
}

}  // namespace vxf
