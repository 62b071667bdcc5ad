#include <doctest.h>

#include <algorithm>
#include <set>

#include "qaens/random.hpp"

using namespace qaens;

TEST_CASE("SplitMix64 and xoshiro256** match reference outputs") {
  std::uint64_t state = 0;
  CHECK(splitmix64(state) == 0xE220A8397B1DCDAFULL);

  Rng zero(0);
  CHECK(zero.next_u64() == 0x99EC5F36CB75F2B4ULL);
  CHECK(zero.next_u64() == 0xBF6E1F784956452AULL);
  CHECK(zero.next_u64() == 0x1A5F849D4933E6E0ULL);

  Rng answer(42);
  CHECK(answer.next_u64() == 0x15780B2E0C2EC716ULL);
  CHECK(answer.next_u64() == 0x6104D9866D113A7EULL);
  CHECK(answer.next_u64() == 0xAE17533239E499A1ULL);
}

TEST_CASE("bounded draws stay in range and cover it") {
  Rng rng(3);
  std::set<std::uint64_t> seen;
  for (int i = 0; i < 2000; ++i) {
    const auto v = rng.below(7);
    CHECK(v < 7);
    seen.insert(v);
    const auto w = rng.between(-3, 3);
    CHECK(w >= -3);
    CHECK(w <= 3);
    const double u = rng.uniform01();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
  CHECK(seen.size() == 7);
}

TEST_CASE("derived seeds separate streams by label") {
  CHECK(derive_seed(1, "squad") == derive_seed(1, "squad"));
  CHECK(derive_seed(1, "squad") != derive_seed(1, "newsqa"));
  CHECK(derive_seed(1, "squad") != derive_seed(2, "squad"));
  CHECK(derive_seed(9, std::uint64_t{0}) != derive_seed(9, std::uint64_t{1}));
}

TEST_CASE("sample_without_replacement draws distinct indices") {
  Rng rng(8);
  auto s = sample_without_replacement(50, 20, rng);
  CHECK(s.size() == 20);
  std::sort(s.begin(), s.end());
  CHECK(std::adjacent_find(s.begin(), s.end()) == s.end());
  CHECK(s.back() < 50);
  CHECK(sample_without_replacement(5, 10, rng).size() == 5);
}
