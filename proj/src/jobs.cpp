#include "cymat/jobs.hpp"

#include <atomic>

namespace cymat {

namespace {
std::atomic<unsigned> g_jobs{1};
}

void set_jobs(unsigned j) { g_jobs.store(j == 0 ? 1 : j); }

unsigned jobs() { return g_jobs.load(); }

} // namespace cymat
