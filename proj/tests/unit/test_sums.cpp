#include <gtest/gtest.h>
#include <omp.h>

#include <cmath>
#include <vector>

#include <diosum/continued_fraction.hpp>
#include <diosum/errors.hpp>
#include <diosum/irrational.hpp>
#include <diosum/real_engine.hpp>
#include <diosum/sums.hpp>

#include "frozen_values.hpp"
#include "quadratic.hpp"
#include "reference.hpp"

using namespace diosum;
using oracle::QuadraticNumber;

namespace {

const auto kPhi = IrrationalSpec::golden_ratio();

IrrationalSpec cbrt2() { return IrrationalSpec::integer_root(2, 3); }
IrrationalSpec cbrt4() { return IrrationalSpec::integer_root(4, 3); }

// 1/||n phi|| from the exact oracle
double inv_dist_phi(std::uint64_t n) { return 1.0 / QuadraticNumber::surd(1, 5, 2).times(n).dist_nearest().to_double(); }

}  // namespace

TEST(SumDist, Examples) {
  const auto a = sum_dist(kPhi, 3, Rational(3, 10));
  EXPECT_TRUE(oracle::matches(a.enclosure, frozen::dist_phi_3));
  EXPECT_EQ(a.terms, 3u);
  EXPECT_EQ(a.variant, "dist");
  EXPECT_EQ(*a.cutoff, Rational(3, 10));
  const auto empty = sum_dist(kPhi, 3, 3);
  EXPECT_EQ(empty.terms, 0u);
  EXPECT_EQ(empty.enclosure.mid_double(), 0.0);
  EXPECT_TRUE(oracle::matches(sum_dist(IrrationalSpec::sqrt2(), 2, Rational(1, 10)).enclosure, frozen::dist_sqrt2_2));
  EXPECT_TRUE(oracle::matches(sum_dist(IrrationalSpec::euler(), 1000, Rational(1, 2)).enclosure,
                              frozen::dist_e_1000_half));
}

TEST(SumDist, CutoffMatchesOracleCount) {
  // c/N = 1/2N keeps exactly the n whose ||n phi|| is >= 1/(2N)
  const std::uint64_t N = 5000;
  double want = 0;
  std::uint64_t kept = 0;
  const auto x = QuadraticNumber::surd(1, 5, 2);
  for (std::uint64_t n = 1; n <= N; ++n) {
    const auto d = x.times(n).dist_nearest();
    if (d.compare(Rational(1, 2 * N)) >= 0) {
      want += 1.0 / d.to_double();
      ++kept;
    }
  }
  const auto r = sum_dist(kPhi, N, Rational(1, 2));
  EXPECT_EQ(r.terms, kept);
  EXPECT_NEAR(r.enclosure.mid_double(), want, 1e-9 * want);
}

TEST(SumDist, RejectsBadArguments) {
  EXPECT_THROW(sum_dist(kPhi, 0, 1), std::invalid_argument);
  EXPECT_THROW(sum_dist(kPhi, 10, 0), std::invalid_argument);
  EXPECT_THROW(sum_dist(kPhi, 10, -1), std::invalid_argument);
}

TEST(SumHarmonic, Examples) {
  EXPECT_NEAR(sum_harmonic_dist(kPhi, 3).enclosure.mid_double(), inv_dist_phi(1) + inv_dist_phi(2) / 2 + inv_dist_phi(3) / 3,
              1e-12);
  EXPECT_NEAR(sum_harmonic_dist(kPhi, 1).enclosure.mid_double(), 2.618033988749895, 1e-14);
  EXPECT_TRUE(oracle::matches(sum_harmonic_dist(IrrationalSpec::euler(), 10).enclosure, frozen::harmonic_e_10));
  EXPECT_TRUE(oracle::matches(sum_harmonic_dist(IrrationalSpec::euler(), 1000).enclosure, frozen::harmonic_e_1000));
}

TEST(SumFrac, Examples) {
  EXPECT_NEAR(sum_frac(kPhi, 2, Rational(1, 5), FracVariant::frac, Weight::one).enclosure.mid_double(), 5.854101966249685,
              1e-13);
  // 1 - {phi} = 0.38 is below the cutoff 1/2, so nothing is kept
  const auto co = sum_frac(kPhi, 1, Rational(1, 2), FracVariant::complement, Weight::one);
  EXPECT_EQ(co.terms, 0u);
  EXPECT_EQ(co.enclosure.compare(0), 0);
  EXPECT_NEAR(sum_frac(kPhi, 1, Rational(1, 3), FracVariant::complement, Weight::one).enclosure.mid_double(),
              2.618033988749895, 1e-13);
  const auto w1 = sum_frac(kPhi, 1, Rational(1, 2), FracVariant::frac, Weight::one);
  const auto wn = sum_frac(kPhi, 1, Rational(1, 2), FracVariant::frac, Weight::inverse_n);
  EXPECT_EQ(w1.enclosure.to_string(30), wn.enclosure.to_string(30));
  EXPECT_EQ(wn.variant, "frac-harmonic");
  EXPECT_TRUE(oracle::matches(sum_frac(cbrt2(), 50, std::nullopt, FracVariant::frac, Weight::inverse_n).enclosure,
                              frozen::frac_cbrt2_50));
  EXPECT_TRUE(oracle::matches(
      sum_frac(cbrt2(), 50, std::nullopt, FracVariant::complement, Weight::inverse_n).enclosure,
      frozen::cofrac_cbrt2_50));
  EXPECT_THROW(sum_frac(kPhi, 5, std::nullopt, FracVariant::frac, Weight::one), std::invalid_argument);
}

TEST(FindMinIndex, Examples) {
  EXPECT_EQ(find_min_index(kPhi, 0, 5), 5u);
  EXPECT_EQ(find_min_index(kPhi, 0, 3), 3u);
  EXPECT_EQ(find_min_index(kPhi, Rational(2, 9), 1), 1u);
}

TEST(FindMinIndex, MatchesOracle) {
  const auto x = QuadraticNumber::surd(0, 2, 1);
  for (const Rational& beta : {Rational(0), Rational(1, 3), Rational(5, 11), Rational(-2, 7)}) {
    for (bool fractional : {false, true}) {
      for (std::uint64_t N : {1ull, 2ull, 10ull, 77ull, 500ull, 4000ull}) {
        std::uint64_t best = 1;
        QuadraticNumber best_v{};
        for (std::uint64_t n = 1; n <= N; ++n) {
          const auto y = x.times(n).plus(beta);
          const auto v = fractional ? y.frac() : y.dist_nearest();
          // v < best_v  <=>  v - best_v < 0, with both over the same D
          if (n == 1 || QuadraticNumber::sign_of(v.a * best_v.c - best_v.a * v.c, v.b * best_v.c - best_v.b * v.c,
                                                 x.D) < 0) {
            best = n;
            best_v = v;
          }
        }
        EXPECT_EQ(find_min_index(IrrationalSpec::sqrt2(), beta, N, fractional), best)
            << "beta=" << beta << " N=" << N << " frac=" << fractional;
      }
    }
  }
}

TEST(SumShifted, Examples) {
  const auto r = sum_shifted(kPhi, 0, 5, ShiftMode::exclude_min, Weight::one);
  EXPECT_EQ(*r.excluded, 5u);
  EXPECT_EQ(r.terms, 4u);
  EXPECT_NEAR(r.enclosure.mid_double(), inv_dist_phi(1) + inv_dist_phi(2) + inv_dist_phi(3) + inv_dist_phi(4), 1e-12);
  EXPECT_NEAR(sum_shifted(kPhi, Rational(1, 2), 1, ShiftMode::full, Weight::one).enclosure.mid_double(),
              8.472135954999580, 1e-12);
  EXPECT_TRUE(oracle::matches(
      sum_shifted(IrrationalSpec::sqrt2(), Rational(1, 3), 200, ShiftMode::full, Weight::one).enclosure,
      frozen::shifted_sqrt2_third_200));
}

TEST(SumShifted, ZeroShiftIsTheFullDistanceSum) {
  for (std::uint64_t N : {1ull, 17ull, 1000ull}) {
    const auto a = sum_shifted(kPhi, 0, N, ShiftMode::full, Weight::one);
    const auto b = sum_dist(kPhi, N, Rational(1, 1000000000));
    EXPECT_EQ(b.terms, N);
    EXPECT_TRUE(a.enclosure.overlaps(b.enclosure)) << N;
  }
}

TEST(SumShifted, HypothesisEvidence) {
  const double v = shifted_hypothesis_evidence(kPhi, Rational(1, 3), 10000);
  EXPECT_GT(v, 0);
  EXPECT_TRUE(std::isfinite(v));
  EXPECT_THROW(shifted_hypothesis_evidence(kPhi, 0, 2), std::invalid_argument);
}

TEST(SumMultidim, Examples) {
  const IrrationalSpec one[] = {kPhi};
  const auto full = sum_multidim(one, 3, Weight::one);
  const auto half = sum_dist(kPhi, 3, Rational(1, 1000000));
  EXPECT_NEAR(full.enclosure.mid_double(), 2 * half.enclosure.mid_double(), 1e-12);
  EXPECT_EQ(full.terms, 6u);

  const IrrationalSpec pair[] = {cbrt2(), cbrt4()};
  EXPECT_TRUE(oracle::matches(sum_multidim(pair, 1, Weight::one).enclosure, frozen::multidim_cbrt_1));
  EXPECT_TRUE(oracle::matches(sum_multidim(pair, 2, Weight::one).enclosure, frozen::multidim_cbrt_2));
  EXPECT_TRUE(oracle::matches(sum_multidim(pair, 2, Weight::linf).enclosure, frozen::multidim_cbrt_linf_2));
  EXPECT_EQ(sum_multidim(pair, 1, Weight::one).enclosure.to_string(30),
            sum_multidim(pair, 1, Weight::linf).enclosure.to_string(30));
  const IrrationalSpec single[] = {kPhi};
  EXPECT_EQ(sum_multidim(single, 1, Weight::one).enclosure.to_string(30),
            sum_multidim(single, 1, Weight::linf).enclosure.to_string(30));
}

TEST(SumMultidim, RationalDependenceIsReported) {
  const IrrationalSpec dependent[] = {IrrationalSpec::sqrt2(), IrrationalSpec::quadratic_surd(0, 8, 2)};
  PrecisionPolicy small{128, 512};
  SumOptions opts;
  opts.policy = small;
  EXPECT_THROW(sum_multidim(dependent, 2, Weight::one, opts), RationalDependence);
}

TEST(SmallDistIndices, Examples) {
  EXPECT_EQ(small_dist_indices(kPhi, 12), (std::vector<std::uint64_t>{1, 2, 3, 5, 8}));
  EXPECT_EQ(small_dist_indices(kPhi, 4), (std::vector<std::uint64_t>{1, 2, 3}));
  EXPECT_THROW(small_dist_indices(kPhi, 0), std::invalid_argument);
}

// Invariants.

TEST(SumsProperties, MonotoneInN) {
  for (const auto& spec : {kPhi, IrrationalSpec::euler(), IrrationalSpec::lazy_uniform(3)}) {
    double prev_h = 0, prev_f = 0, prev_c = 0;
    for (std::uint64_t N = 1; N <= 2000; N = N * 3 / 2 + 1) {
      const double h = sum_harmonic_dist(spec, N).enclosure.mid_double();
      const double f = sum_frac(spec, N, std::nullopt, FracVariant::frac, Weight::inverse_n).enclosure.mid_double();
      const double c =
          sum_frac(spec, N, std::nullopt, FracVariant::complement, Weight::inverse_n).enclosure.mid_double();
      EXPECT_GT(h, prev_h);
      EXPECT_GE(f, prev_f);
      EXPECT_GE(c, prev_c);
      prev_h = h;
      prev_f = f;
      prev_c = c;
    }
  }
}

TEST(SumsProperties, HalfLatticeEqualsFullLattice) {
  const IrrationalSpec one[] = {IrrationalSpec::euler()};
  const IrrationalSpec two[] = {cbrt2(), cbrt4()};
  for (std::uint64_t N = 1; N <= 8; ++N) {
    for (Weight w : {Weight::one, Weight::linf}) {
      for (std::span<const IrrationalSpec> specs : {std::span<const IrrationalSpec>(one), std::span<const IrrationalSpec>(two)}) {
        const auto half = sum_multidim(specs, N, w, {}, true);
        const auto full = sum_multidim(specs, N, w, {}, false);
        EXPECT_EQ(half.enclosure.to_string(40), full.enclosure.to_string(40)) << "N=" << N;
        EXPECT_EQ(half.terms, full.terms);
      }
    }
  }
}

TEST(SumsProperties, VariantCoherence) {
  // 1/||x|| = max(1/{x}, 1/(1 - {x})) <= 1/{x} + 1/(1 - {x}) on the same index set
  for (const auto& spec : {kPhi, IrrationalSpec::sqrt2(), IrrationalSpec::lazy_uniform(6)}) {
    for (std::uint64_t N : {10ull, 300ull, 5000ull}) {
      const Rational tiny(1, 1000000000);
      const auto d = sum_dist(spec, N, tiny);
      const auto f = sum_frac(spec, N, tiny, FracVariant::frac, Weight::one);
      const auto c = sum_frac(spec, N, tiny, FracVariant::complement, Weight::one);
      ASSERT_EQ(d.terms, N);
      ASSERT_EQ(f.terms, N);
      ASSERT_EQ(c.terms, N);
      EXPECT_LT(d.enclosure.mid_double(), f.enclosure.mid_double() + c.enclosure.mid_double());
    }
  }
}

TEST(SumsProperties, LegendreStructure) {
  for (const auto& spec : {kPhi, IrrationalSpec::sqrt2(), IrrationalSpec::euler(), IrrationalSpec::lazy_uniform(1),
                           IrrationalSpec::lazy_uniform(2)}) {
    const auto cf = cf_data(spec, 80);
    for (const auto n : small_dist_indices(spec, 100000)) {
      const auto K = locate_block(spec, n);
      EXPECT_EQ(BigInt(to_bigint(n) % cf.q[K]), 0) << spec.name() << " n=" << n;
    }
  }
}

TEST(SumsProperties, SmallDistIndicesMatchOracle) {
  const auto x = QuadraticNumber::surd(0, 2, 1);
  std::vector<std::uint64_t> want;
  for (std::uint64_t n = 1; n <= 20000; ++n)
    if (x.times(n).dist_nearest().compare(Rational(1, 2 * n)) < 0) want.push_back(n);
  EXPECT_EQ(small_dist_indices(IrrationalSpec::sqrt2(), 20000), want);
}

TEST(SumsProperties, EnclosureSoundnessUnderRecompute) {
  // a wider start and a tighter tolerance give nested or overlapping balls
  SumOptions loose;
  SumOptions tight;
  tight.rel_tolerance = 1e-14;
  tight.policy.start_bits = 256;
  for (const auto& spec : {kPhi, IrrationalSpec::euler(), IrrationalSpec::lazy_uniform(9)}) {
    const auto a = sum_harmonic_dist(spec, 20000, loose);
    const auto b = sum_harmonic_dist(spec, 20000, tight);
    EXPECT_TRUE(a.enclosure.overlaps(b.enclosure)) << spec.name();
    EXPECT_LE(a.enclosure.relative_radius(), 1e-9);
    EXPECT_LE(b.enclosure.relative_radius(), 1e-14);
  }
}

TEST(SumsProperties, ThreadCountIndependent) {
  const auto spec = IrrationalSpec::lazy_uniform(12);
  const int saved = omp_get_max_threads();
  omp_set_num_threads(1);
  const auto a = sum_dist(spec, 200000, Rational(1, 2));
  omp_set_num_threads(7);
  const auto b = sum_dist(spec, 200000, Rational(1, 2));
  omp_set_num_threads(saved);
  EXPECT_EQ(a.enclosure.to_string(50), b.enclosure.to_string(50));
  EXPECT_EQ(a.enclosure.rad_double(), b.enclosure.rad_double());
}

TEST(SumsProperties, TermCountBounds) {
  const IrrationalSpec two[] = {cbrt2(), cbrt4()};
  EXPECT_EQ(sum_multidim(two, 5, Weight::one).terms, 11u * 11u - 1);
  EXPECT_LE(sum_dist(kPhi, 777, Rational(1, 2)).terms, 777u);
}
