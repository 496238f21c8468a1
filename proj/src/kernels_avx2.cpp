// Compiled with -mavx2; only reached after a runtime CPU check.
#include "multifan/kernels.hpp"

#include <immintrin.h>

namespace multifan::kernels {

void accumulate_row_avx2(const RowBatch& b, std::size_t length, std::int64_t* out) {
  const std::size_t blocks = length / 4;
  const std::size_t tail = blocks * 4;
  __m256i cur[kMaxWidth];
  __m256i inc[kMaxWidth];
  __m256i thr[kMaxWidth];
  for (std::size_t c = 0; c < b.cones; ++c) {
    const std::size_t base = c * b.width;
    for (std::size_t j = 0; j < b.width; ++j) {
      const std::int64_t s = b.step[base + j];
      // start + lane*step without a 64-bit multiply.
      __m256i offs = _mm256_set_epi64x(3 * s, 2 * s, s, 0);
      cur[j] = _mm256_add_epi64(_mm256_set1_epi64x(b.start[base + j]), offs);
      inc[j] = _mm256_set1_epi64x(4 * s);
      thr[j] = _mm256_set1_epi64x(b.threshold[base + j]);
    }
    const __m256i w = _mm256_set1_epi64x(b.weight[c]);
    for (std::size_t k = 0; k < blocks; ++k) {
      __m256i mask = _mm256_set1_epi64x(-1);
      for (std::size_t j = 0; j < b.width; ++j) {
        mask = _mm256_and_si256(mask, _mm256_cmpgt_epi64(cur[j], thr[j]));
        cur[j] = _mm256_add_epi64(cur[j], inc[j]);
      }
      if (_mm256_testz_si256(mask, mask)) continue;
      auto* dst = reinterpret_cast<__m256i*>(out + 4 * k);
      _mm256_storeu_si256(dst, _mm256_add_epi64(_mm256_loadu_si256(dst), _mm256_and_si256(mask, w)));
    }
    for (std::size_t t = tail; t < length; ++t) {
      bool pass = true;
      for (std::size_t j = 0; j < b.width && pass; ++j) {
        const std::int64_t value = b.start[base + j] + static_cast<std::int64_t>(t) * b.step[base + j];
        pass = value > b.threshold[base + j];
      }
      if (pass) out[t] += b.weight[c];
    }
  }
}

} // namespace multifan::kernels
