#include <gtest/gtest.h>

#include <random>
#include <string>

#include <diosum/continued_fraction.hpp>
#include <diosum/counting.hpp>
#include <diosum/irrational.hpp>

#include "discrepancy.hpp"  // private: the MPFR route on its own
#include "frozen_values.hpp"
#include "quadratic.hpp"
#include "reference.hpp"

using namespace diosum;
using oracle::QuadraticNumber;

namespace {

const auto kPhi = IrrationalSpec::golden_ratio();

std::vector<IrrationalSpec> grid_specs() {
  return {kPhi, IrrationalSpec::sqrt2(), IrrationalSpec::euler(), IrrationalSpec::lazy_uniform(1),
          IrrationalSpec::lazy_uniform(2)};
}

// |{n <= N : value(n x) <= t}| from the exact oracle
std::uint64_t oracle_count(const QuadraticNumber& x, std::uint64_t N, const Rational& t, CountVariant v) {
  std::uint64_t c = 0;
  for (std::uint64_t n = 1; n <= N; ++n) {
    const auto y = x.times(n);
    QuadraticNumber value = y.dist_nearest();
    if (v == CountVariant::frac) value = y.frac();
    if (v == CountVariant::complement) value = y.frac().one_minus();
    if (value.compare(t) <= 0) ++c;
  }
  return c;
}

}  // namespace

TEST(CountDistLe, Examples) {
  EXPECT_EQ(count_dist_le(kPhi, 5, Rational(1, 4)), 3u);
  EXPECT_EQ(count_dist_le(IrrationalSpec::euler(), 777, Rational(1, 2)), 777u);
  EXPECT_EQ(count_dist_le(kPhi, 3, Rational(1, 10)), 0u);
}

TEST(CountDistLe, MatchesExactOracle) {
  const auto x = QuadraticNumber::surd(0, 2, 1);
  for (CountVariant v : {CountVariant::dist, CountVariant::frac, CountVariant::complement})
    for (const Rational& t : {Rational(1, 3), Rational(1, 17), Rational(2, 5), Rational(5, 7)})
      EXPECT_EQ(count_dist_le(IrrationalSpec::sqrt2(), 3000, t, v), oracle_count(x, 3000, t, v));
}

TEST(CountDistLe, ShiftedCount) {
  const auto x = QuadraticNumber::surd(1, 5, 2);
  const Rational beta(2, 7), t(1, 9);
  std::uint64_t want = 0;
  for (std::uint64_t n = 1; n <= 1000; ++n)
    if (x.times(n).plus(beta).dist_nearest().compare(t) <= 0) ++want;
  EXPECT_EQ(count_dist_le(kPhi, 1000, t, CountVariant::dist, beta), want);
}

TEST(CountFast, Examples) {
  EXPECT_EQ(count_fast(kPhi, 10000, Rational(1, 97)), count_dist_le(kPhi, 10000, Rational(1, 97)));
  EXPECT_EQ(count_fast(IrrationalSpec::euler(), 123456, Rational(1, 2)), 123456u);
  EXPECT_EQ(count_fast(IrrationalSpec::sqrt2(), 2000, Rational(3, 1000)),
            count_dist_le(IrrationalSpec::sqrt2(), 2000, Rational(3, 1000)));
}

TEST(CountFast, LargeN) {
  // far beyond brute force for the test suite, checked against linear growth
  const std::uint64_t N = 1000000000000ull;
  const auto c = count_fast(kPhi, N, Rational(1, 10));
  EXPECT_NEAR(static_cast<double>(c), 0.2 * static_cast<double>(N), 100.0);
}

TEST(CountingProperties, FastEqualsBruteForce) {
  for (const auto& spec : grid_specs()) {
    for (std::uint64_t N : {1ull, 2ull, 3ull, 50ull, 129ull, 2000ull}) {
      for (int k = 2; k <= 200; k += 3) {
        const Rational t(1, k);
        for (CountVariant v : {CountVariant::dist, CountVariant::frac, CountVariant::complement})
          ASSERT_EQ(count_fast(spec, N, t, v), count_dist_le(spec, N, t, v))
              << spec.name() << " N=" << N << " t=1/" << k << " variant=" << static_cast<int>(v);
      }
    }
  }
}

TEST(CountingProperties, PigeonholeAndMonotone) {
  for (const auto& spec : grid_specs()) {
    for (std::uint64_t N : {1ull, 10ull, 333ull, 2000ull}) {
      std::uint64_t prev = 0;
      for (int k = 200; k >= 2; k -= 7) {
        const Rational t(1, k);
        const auto c = count_dist_le(spec, N, t);
        EXPECT_GE(c, prev) << spec.name();
        prev = c;
        const auto b = pigeonhole_bound(spec, N, t);
        EXPECT_LE(to_bigint(c), b.floor) << spec.name() << " N=" << N << " t=1/" << k;
      }
    }
  }
}

TEST(PigeonholeBound, Examples) {
  const auto b = pigeonhole_bound(kPhi, 10, Rational(1, 10));
  EXPECT_EQ(b.K, 5u);
  EXPECT_EQ(b.value, Rational(31, 5));
  EXPECT_EQ(b.floor, 6);
  EXPECT_LE(count_dist_le(kPhi, 10, Rational(1, 10)), 6u);
  const auto s = pigeonhole_bound(IrrationalSpec::sqrt2(), 12, Rational(1, 29));
  EXPECT_EQ(s.value, 5);
  EXPECT_EQ(s.floor, 5);
}

TEST(Discrepancy, Examples) {
  for (const auto& spec : grid_specs()) {
    const auto d = discrepancy(spec, 1);
    EXPECT_EQ(d.compare(Rational(1)), 0) << spec.name();
    EXPECT_NEAR(d.mid_double(), 1.0, 1e-20);
  }
  const auto d5 = discrepancy(kPhi, 5);
  EXPECT_EQ(d5.compare(10), -1);
  for (std::uint64_t N : {2ull, 17ull, 1000ull}) EXPECT_LE(discrepancy(IrrationalSpec::euler(), N).compare(Rational(to_bigint(N))), 0);
}

TEST(Discrepancy, MatchesFrozenOracle) {
  for (const auto& d : frozen::discrepancies) {
    const auto spec = parse_spec(d.spec);
    EXPECT_TRUE(oracle::matches(discrepancy(spec, d.N), d.value, 1e-30)) << d.spec << " N=" << d.N;
  }
}

TEST(Discrepancy, FallbackPathAgrees) {
  for (const auto& spec : grid_specs()) {
    for (std::uint64_t N : {1ull, 7ull, 300ull, 4096ull}) {
      const auto fast = discrepancy(spec, N);
      const auto slow = detail::discrepancy_mpfr(spec, N, PrecisionPolicy::from_env());
      EXPECT_TRUE(fast.overlaps(slow)) << spec.name() << " N=" << N;
    }
  }
}

TEST(CountingProperties, DiscrepancyBound) {
  for (const auto& spec : {kPhi, IrrationalSpec::sqrt2(), IrrationalSpec::euler(), IrrationalSpec::lazy_uniform(1)}) {
    const auto cf = cf_data(spec, 40);
    for (std::uint64_t N = 1; N <= 600; ++N) {
      const auto D = discrepancy(spec, N);
      for (std::size_t K = 0; K + 1 < cf.q.size() && cf.q[K] <= N; ++K) {
        if (cf.q[K + 1] <= N) continue;
        const Rational bound = 2 * (Rational(cf.s[K]) + Rational(to_bigint(N), cf.q[K]));
        EXPECT_LE(D.compare(bound), 0) << spec.name() << " N=" << N << " K=" << K;
      }
    }
  }
}

TEST(LocalDiscExtrema, Examples) {
  const auto m = local_disc_extrema(kPhi, 1, Rational(7, 10));
  EXPECT_EQ(m.max, Rational(3, 10));
  // tiny t: counts stay at 0 or 1
  const auto tiny = local_disc_extrema(IrrationalSpec::sqrt2(), 6, Rational(1, 1000000));
  EXPECT_LE(abs(tiny.max), 1);
  EXPECT_LE(abs(tiny.min), 1);
}

TEST(LocalDiscExtrema, MatchesFrozenOracle) {
  for (const auto& l : frozen::local_extrema) {
    const auto spec = parse_spec(l.spec);
    const Rational t(l.t_num, l.t_den);
    const auto m = local_disc_extrema(spec, l.K, t);
    EXPECT_EQ(m.max, Rational(l.max)) << l.spec;
    EXPECT_EQ(m.min, Rational(l.min)) << l.spec;
    const auto f = schoissengeier_prediction(cf_data(spec, l.K + 1), l.K, t);
    EXPECT_EQ(f.max, Rational(l.formula_max)) << l.spec;
    EXPECT_EQ(f.min, Rational(l.formula_min)) << l.spec;
  }
}

TEST(SchoissengeierPrediction, Examples) {
  // integer t zeroes every factor
  const auto cf = cf_data(kPhi, 9);
  const auto z = schoissengeier_prediction(cf, 8, 3);
  EXPECT_EQ(z.max, 0);
  EXPECT_EQ(z.min, 0);
  // K = 1: the even-index sum is empty
  const auto one = schoissengeier_prediction(cf_data(kPhi, 2), 1, Rational(7, 10));
  EXPECT_EQ(one.max, 0);
  EXPECT_LE(abs(local_disc_extrema(kPhi, 1, Rational(7, 10)).max - one.max), 1);
  EXPECT_THROW(schoissengeier_prediction(cf_data(kPhi, 3), 3, Rational(1, 3)), std::invalid_argument);
}

TEST(CountMultidim, Examples) {
  const IrrationalSpec pair[] = {IrrationalSpec::integer_root(2, 3), IrrationalSpec::integer_root(4, 3)};
  EXPECT_EQ(count_multidim(pair, 3, Rational(1, 2)), 7u * 7u - 1);
  EXPECT_EQ(count_multidim(pair, 4, Rational(1, 8)), frozen::count_multidim_cbrt_4_eighth);
  const IrrationalSpec one[] = {IrrationalSpec::euler()};
  for (int k : {3, 10, 50}) EXPECT_EQ(count_multidim(one, 400, Rational(1, k)), 2 * count_dist_le(one[0], 400, Rational(1, k)));
  EXPECT_THROW(count_multidim(pair, 3, Rational(3, 4)), std::invalid_argument);
}

TEST(CountingProperties, MultidimHalfLatticeDoubled) {
  const IrrationalSpec pair[] = {IrrationalSpec::integer_root(2, 3), IrrationalSpec::integer_root(4, 3)};
  for (std::uint64_t N : {1ull, 5ull, 12ull})
    for (int k : {4, 9, 31}) EXPECT_EQ(count_multidim(pair, N, Rational(1, k), PrecisionPolicy::from_env(), true),
                                       count_multidim(pair, N, Rational(1, k), PrecisionPolicy::from_env(), false));
}
