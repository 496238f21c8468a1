#pragma once

#include <cstddef>
#include <cstdint>

namespace multifan::kernels {

/// Linear tests for one row of lattice points u_t = u_0 + t*e_last. For cone c
/// and slot j the test at step t is
///   start[c*width + j] + t * step[c*width + j] > threshold[c*width + j]
/// and when every slot passes, weight[c] is added to out[t].
struct RowBatch {
  std::size_t cones = 0;
  std::size_t width = 0;
  const std::int64_t* start = nullptr;
  const std::int64_t* step = nullptr;
  const std::int64_t* threshold = nullptr;
  const std::int64_t* weight = nullptr;
};

/// Widest supported slot count.
inline constexpr std::size_t kMaxWidth = 16;

void accumulate_row_scalar(const RowBatch& batch, std::size_t length, std::int64_t* out);
void accumulate_row_avx2(const RowBatch& batch, std::size_t length, std::int64_t* out);

enum class Isa { scalar, avx2 };

const char* to_string(Isa isa);
bool cpu_supports(Isa isa);
/// Best ISA the running CPU supports.
Isa detected_isa();
/// ISA used by accumulate_row. Defaults to detected_isa(); the environment
/// variable MULTIFAN_ISA=scalar forces the reference path.
Isa active_isa();
/// Overrides the dispatch; throws Error(unsupported) if the CPU lacks it.
void force_isa(Isa isa);

void accumulate_row(const RowBatch& batch, std::size_t length, std::int64_t* out);

} // namespace multifan::kernels
