#include "framerecon/threading.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace framerecon::threading {

namespace {
int g_pool_size = 0;

int env_threads() {
  const char* s = std::getenv("FRAME_RECON_THREADS");
  if (!s) return 0;
  const int v = std::atoi(s);
  return v > 0 ? v : 0;
}
}  // namespace

void set_pool_size(int n) { g_pool_size = n > 0 ? n : 0; }

int pool_size() {
  if (g_pool_size > 0) return g_pool_size;
  if (const int e = env_threads(); e > 0) return e;
  const unsigned hc = std::thread::hardware_concurrency();
  return hc > 0 ? static_cast<int>(hc) : 1;
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
  const int workers = pool_size();
  if (workers <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      fn(i);
    }
  };
  std::vector<std::thread> threads;
  const int spawn = static_cast<int>(std::min<std::size_t>(count, static_cast<std::size_t>(workers)));
  threads.reserve(static_cast<size_t>(spawn));
  for (int t = 0; t < spawn; ++t) threads.emplace_back(work);
  for (auto& t : threads) t.join();
}

}  // namespace framerecon::threading
