#pragma once

// Optional free-list allocator for GMP limb storage.  Exact rational
// arithmetic allocates and frees huge numbers of tiny blocks; recycling them
// through per-thread buckets removes most of that overhead.  Install once at
// the start of main() in throughput-sensitive executables.

#include <gmp.h>

#include <cstdlib>
#include <cstring>

namespace picardium {

namespace pool_detail {

constexpr size_t kBuckets = 4;   // 16, 32, 48, 64 bytes
constexpr size_t kStep = 16;

struct FreeList {
  void* head[kBuckets] = {nullptr, nullptr, nullptr, nullptr};
};

inline FreeList& lists() {
  thread_local FreeList fl;
  return fl;
}

inline size_t bucket_of(size_t n) { return (n + kStep - 1) / kStep; }  // 1-based

inline void* pool_alloc(size_t n) {
  size_t b = bucket_of(n);
  if (b <= kBuckets) {
    FreeList& fl = lists();
    if (void* p = fl.head[b - 1]) {
      fl.head[b - 1] = *static_cast<void**>(p);
      return p;
    }
    return std::malloc(b * kStep);
  }
  return std::malloc(n);
}

inline void pool_free(void* p, size_t n) {
  size_t b = bucket_of(n);
  if (b <= kBuckets) {
    FreeList& fl = lists();
    *static_cast<void**>(p) = fl.head[b - 1];
    fl.head[b - 1] = p;
    return;
  }
  std::free(p);
}

inline void* pool_realloc(void* p, size_t old_n, size_t new_n) {
  size_t bo = bucket_of(old_n), bn = bucket_of(new_n);
  if (bo == bn && bo <= kBuckets) return p;
  void* q = pool_alloc(new_n);
  std::memcpy(q, p, old_n < new_n ? old_n : new_n);
  pool_free(p, old_n);
  return q;
}

}  // namespace pool_detail

// route GMP limb allocation through the per-thread free lists
inline void install_gmp_pool() {
  mp_set_memory_functions(pool_detail::pool_alloc, pool_detail::pool_realloc,
                          pool_detail::pool_free);
}

}  // namespace picardium
