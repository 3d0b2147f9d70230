// Copyright (c) the maxwell-enclosures authors.
// SPDX-License-Identifier: Apache-2.0

#include "mxe/runtime.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>

extern "C" {
// Present when linking OpenBLAS; weak so other BLAS backends still link.
void openblas_set_num_threads(int) __attribute__((weak));
}

namespace mxe {

namespace {

std::atomic<int> g_threads{0};

int resolve_default() {
  if (const char* env = std::getenv("ENCLOSURE_FEM_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace

int thread_count() {
  int n = g_threads.load();
  if (n == 0) {
    n = resolve_default();
    set_thread_count(n);
  }
  return n;
}

void set_thread_count(int n) {
  if (n < 1) n = 1;
  g_threads.store(n);
  if (openblas_set_num_threads) openblas_set_num_threads(n);
}

}  // namespace mxe
