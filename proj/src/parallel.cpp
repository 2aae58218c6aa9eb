#include "groupkit/parallel.hpp"

#include <atomic>
#include <cstdlib>

namespace groupkit {

namespace {
std::atomic<int> g_workers{0};

int default_workers() {
  if (const char* env = std::getenv("RIORDAN_JOBS")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}
}  // namespace

int worker_count() {
  const int w = g_workers.load();
  return w >= 1 ? w : default_workers();
}

void set_worker_count(int workers) { g_workers.store(workers >= 1 ? workers : 0); }

}  // namespace groupkit
