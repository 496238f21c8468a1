#include "doctest.h"

#include "multifan/error.hpp"
#include "multifan/kernels.hpp"
#include "multifan/random.hpp"

#include <vector>

using namespace multifan;
using namespace multifan::kernels;

namespace {

struct Batch {
  std::vector<std::int64_t> start, step, threshold, weight;
  RowBatch view(std::size_t cones, std::size_t width) const {
    return {cones, width, start.data(), step.data(), threshold.data(), weight.data()};
  }
};

Batch random_batch(Rng& rng, std::size_t cones, std::size_t width, std::int64_t range) {
  std::uniform_int_distribution<std::int64_t> val(-range, range), st(-3, 3), w(-4, 4);
  Batch b;
  for (std::size_t i = 0; i < cones * width; ++i) {
    b.start.push_back(val(rng));
    b.step.push_back(st(rng));
    b.threshold.push_back(val(rng));
  }
  for (std::size_t c = 0; c < cones; ++c) b.weight.push_back(w(rng));
  return b;
}

} // namespace

TEST_CASE("scalar row kernel by hand") {
  // One cone, one slot: 0 + t > 2 passes for t = 3, 4.
  Batch b{{0}, {1}, {2}, {5}};
  std::vector<std::int64_t> out(5, 0);
  accumulate_row_scalar(b.view(1, 1), out.size(), out.data());
  CHECK(out == std::vector<std::int64_t>{0, 0, 0, 5, 5});
}

TEST_CASE("AVX2 kernel matches the scalar reference") {
  if (!cpu_supports(Isa::avx2)) {
    MESSAGE("CPU lacks AVX2; only the scalar path is exercised");
    CHECK_THROWS_AS(force_isa(Isa::avx2), Error);
    return;
  }
  Rng rng(77);
  for (int trial = 0; trial < 400; ++trial) {
    std::uniform_int_distribution<std::size_t> cones(1, 40), width(1, kMaxWidth), len(1, 70);
    const std::size_t c = cones(rng), w = width(rng), n = len(rng);
    const std::int64_t range = trial % 2 ? 20 : (std::int64_t{1} << 40);
    auto b = random_batch(rng, c, w, range);
    std::vector<std::int64_t> a(n, 1), s(n, 1);
    accumulate_row_scalar(b.view(c, w), n, s.data());
    accumulate_row_avx2(b.view(c, w), n, a.data());
    REQUIRE(a == s);
  }
}

TEST_CASE("dispatch honours the forced ISA") {
  const Isa before = active_isa();
  force_isa(Isa::scalar);
  CHECK(active_isa() == Isa::scalar);
  if (cpu_supports(Isa::avx2)) {
    force_isa(Isa::avx2);
    CHECK(active_isa() == Isa::avx2);
  }
  force_isa(before);
  CHECK(std::string(to_string(Isa::avx2)) == "avx2");
}
