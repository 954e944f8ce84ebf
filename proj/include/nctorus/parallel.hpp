#pragma once

namespace nctorus {

/// 0 selects the runtime default.
void set_thread_count(int threads);
int thread_count();
bool parallel_enabled();

}  // namespace nctorus
