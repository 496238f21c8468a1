#include "multifan/kernels.hpp"

#include "multifan/error.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

namespace multifan::kernels {

void accumulate_row_scalar(const RowBatch& b, std::size_t length, std::int64_t* out) {
  for (std::size_t c = 0; c < b.cones; ++c) {
    const std::size_t base = c * b.width;
    for (std::size_t t = 0; t < length; ++t) {
      bool pass = true;
      for (std::size_t j = 0; j < b.width && pass; ++j) {
        const std::int64_t value = b.start[base + j] + static_cast<std::int64_t>(t) * b.step[base + j];
        pass = value > b.threshold[base + j];
      }
      if (pass) out[t] += b.weight[c];
    }
  }
}

const char* to_string(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

bool cpu_supports(Isa isa) {
  if (isa == Isa::scalar) return true;
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Isa detected_isa() { return cpu_supports(Isa::avx2) ? Isa::avx2 : Isa::scalar; }

namespace {

Isa initial_isa() {
  const char* env = std::getenv("MULTIFAN_ISA");
  if (env && std::strcmp(env, "scalar") == 0) return Isa::scalar;
  return detected_isa();
}

std::atomic<Isa>& current() {
  static std::atomic<Isa> isa{initial_isa()};
  return isa;
}

} // namespace

Isa active_isa() { return current().load(std::memory_order_relaxed); }

void force_isa(Isa isa) {
  if (!cpu_supports(isa)) throw Error(ErrorKind::unsupported, std::string("CPU lacks ") + to_string(isa));
  current().store(isa, std::memory_order_relaxed);
}

void accumulate_row(const RowBatch& batch, std::size_t length, std::int64_t* out) {
  if (active_isa() == Isa::avx2 && batch.width <= kMaxWidth)
    accumulate_row_avx2(batch, length, out);
  else
    accumulate_row_scalar(batch, length, out);
}

} // namespace multifan::kernels
