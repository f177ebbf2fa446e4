#include "term_kernel.hpp"

#include <algorithm>
#include <bit>
#include <exception>
#include <limits>
#include <stdexcept>

#include "diosum/errors.hpp"
#include "diosum/fixed_orbit.hpp"
#include "diosum/real_engine.hpp"

namespace diosum::detail {

// --- Acc256 -----------------------------------------------------------------

void Acc256::add_shifted(std::uint64_t m, int shift, bool round_up) noexcept {
  std::uint64_t parts[4] = {0, 0, 0, 0};
  if (shift >= 0) {
    const int word = shift / 64, off = shift % 64;
    parts[word] = m << off;
    if (off != 0 && word + 1 < 4) parts[word + 1] = m >> (64 - off);
  } else {
    const int k = -shift;
    std::uint64_t q = k >= 64 ? 0 : m >> k;
    const bool lost = k >= 64 ? m != 0 : (m & ((std::uint64_t{1} << k) - 1)) != 0;
    if (round_up && lost) ++q;
    parts[0] = q;
  }
  u128 carry = 0;
  for (int i = 0; i < 4; ++i) {
    carry += static_cast<u128>(w_[i]) + parts[i];
    w_[i] = static_cast<std::uint64_t>(carry);
    carry >>= 64;
  }
}

void Acc256::add(double x, bool round_up) noexcept {
  if (x == 0.0) return;
  const auto bits = std::bit_cast<std::uint64_t>(x);
  const int biased = static_cast<int>((bits >> 52) & 0x7ff);
  std::uint64_t m = bits & ((std::uint64_t{1} << 52) - 1);
  int e;
  if (biased == 0) {
    e = -1074;
  } else {
    m |= std::uint64_t{1} << 52;
    e = biased - 1075;
  }
  add_shifted(m, e + static_cast<int>(kFracBits), round_up);
}

void Acc256::add(const Acc256& other) noexcept {
  u128 carry = 0;
  for (int i = 0; i < 4; ++i) {
    carry += static_cast<u128>(w_[i]) + other.w_[i];
    w_[i] = static_cast<std::uint64_t>(carry);
    carry >>= 64;
  }
}

BigInt Acc256::value() const {
  BigInt z;
  mpz_import(z.get_mpz_t(), 4, -1, sizeof(std::uint64_t), 0, 0, w_);
  return z;
}

namespace {

constexpr u128 kHalf = static_cast<u128>(1) << 127;

std::optional<FixedInterval> fixed_value(ValueKind kind, const FixedEnclosure& e) noexcept {
  switch (kind) {
    case ValueKind::dist: return fixed_dist(e);
    case ValueKind::frac: return fixed_frac(e);
    case ValueKind::complement: return fixed_complement(e);
  }
  return std::nullopt;
}

// Certified bounds on weight / value, or nullopt when the double bounds are
// wider than the relative tolerance.
struct DoubleBounds {
  double lo, hi;
};

inline DoubleBounds reciprocal(const FixedInterval& v, double divisor) noexcept {
  const double vlo = fixed::scaled_down(v.lo);
  const double vhi = fixed::scaled_up(v.hi);
  double lo = fixed::next_down(1.0 / vhi);
  double hi = fixed::next_up(1.0 / vlo);
  if (divisor != 1.0) {
    lo = fixed::next_down(lo / divisor);
    hi = fixed::next_up(hi / divisor);
  }
  return {lo, hi};
}

std::optional<BallReal> value_ball(const IrrationalSpec& spec, std::uint64_t n, ValueKind kind, const Rational& beta,
                                   unsigned prec, const PrecisionPolicy& policy) {
  if (kind == ValueKind::dist) return dist_nearest_at(n, spec, beta, prec, policy);
  auto f = try_frac_part_at(n, spec, beta, prec, policy);
  if (!f) return std::nullopt;
  return kind == ValueKind::frac ? std::move(f->frac) : std::move(f->complement);
}

bool tight_enough(const Mpfr& lo, const Mpfr& hi, double tol) {
  Mpfr w(64);
  mpfr_sub(w.get(), hi.get(), lo.get(), MPFR_RNDU);
  mpfr_div(w.get(), w.get(), lo.get(), MPFR_RNDU);
  return mpfr_get_d(w.get(), MPFR_RNDU) <= tol;
}

unsigned slow_start(const PrecisionPolicy& policy) { return std::min(std::max(256u, policy.start_bits), policy.max_bits); }

unsigned next_precision(unsigned prec, const PrecisionPolicy& policy) {
  return std::min(prec * 2, policy.max_bits);
}

struct SlowTerm {
  bool kept = false;
  BigInt lo, hi;
};

SlowTerm slow_term(const IrrationalSpec& spec, std::uint64_t n, const TermRule& rule, double tol,
                   const PrecisionPolicy& policy, unsigned& used) {
  const Rational weight = rule.inverse_n ? Rational(BigInt(1), to_bigint(n)) : Rational(1);
  for (unsigned prec = slow_start(policy);; prec = next_precision(prec, policy)) {
    used = std::max(used, prec);
    auto v = value_ball(spec, n, rule.value, rule.beta, prec, policy);
    if (v) {
      int side = rule.threshold ? v->compare(*rule.threshold) : 1;
      if (side < 0) return {};
      if (side > 0) {
        auto rb = v->reciprocal_bounds(weight);
        if (rb && tight_enough(rb->first, rb->second, tol))
          return {true, floor_scaled(rb->first, kFracBits), ceil_scaled(rb->second, kFracBits)};
      }
    }
    if (prec >= policy.max_bits) throw PrecisionExhausted("term not certified within the precision cap", prec, n);
  }
}

Side slow_side(const IrrationalSpec& spec, std::uint64_t n, ValueKind kind, const Rational& beta, const Rational& t,
               const PrecisionPolicy& policy) {
  for (unsigned prec = slow_start(policy);; prec = next_precision(prec, policy)) {
    auto v = value_ball(spec, n, kind, beta, prec, policy);
    if (v) {
      const int c = v->compare(t);
      if (c < 0) return Side::below;
      if (c > 0) return Side::above;
    }
    if (prec >= policy.max_bits)
      throw PrecisionExhausted("membership not certified within the precision cap", prec, n);
  }
}

std::uint64_t chunk_count(std::uint64_t N) { return (N + kChunk - 1) / kChunk; }

template <class Out>
void rethrow_first(const std::vector<Out>& out) {
  for (const auto& o : out)
    if (o.error) std::rethrow_exception(o.error);
}

// Pairwise combination over chunk order.
template <class T, class F>
T reduce_tree(const std::vector<T>& items, std::size_t begin, std::size_t end, F combine) {
  if (end - begin == 1) return items[begin];
  const std::size_t mid = begin + (end - begin) / 2;
  return combine(reduce_tree(items, begin, mid, combine), reduce_tree(items, mid, end, combine));
}

FixedOrbit make_orbit(const IrrationalSpec& spec, const Rational& beta, const PrecisionPolicy& policy) {
  return FixedOrbit(fixed_alpha(spec, policy), fixed_from_rational(frac(beta)));
}

struct SumChunk {
  Acc256 lo, hi;
  BigInt slow_lo, slow_hi;
  std::uint64_t terms = 0;
  unsigned precision = 128;
  std::exception_ptr error;
};

}  // namespace

KernelTotals sum_terms(const IrrationalSpec& spec, std::uint64_t N, const TermRule& rule, double rel_tolerance,
                       const PrecisionPolicy& policy) {
  if (N < 1) throw std::invalid_argument("N must be >= 1");
  if (N >= (std::uint64_t{1} << 53)) throw std::invalid_argument("N must be below 2^53");
  const FixedOrbit orbit = make_orbit(spec, rule.beta, policy);
  std::optional<FixedThreshold> th;
  if (rule.threshold) th = FixedThreshold::from(*rule.threshold);
  const std::uint64_t exclude = rule.exclude.value_or(0);

  const auto chunks = static_cast<std::int64_t>(chunk_count(N));
  std::vector<SumChunk> out(static_cast<std::size_t>(chunks));

#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t c = 0; c < chunks; ++c) {
    SumChunk& r = out[static_cast<std::size_t>(c)];
    try {
      const std::uint64_t first = static_cast<std::uint64_t>(c) * kChunk + 1;
      const std::uint64_t last = std::min(N, first + kChunk - 1);
      for (std::uint64_t n = first; n <= last; ++n) {
        if (n == exclude) continue;
        const auto v = fixed_value(rule.value, orbit.at(n));
        bool slow = !v;
        if (!slow && th) {
          const Side side = classify(*v, *th);
          if (side == Side::below) continue;
          slow = side == Side::unknown;
        }
        if (!slow) {
          const auto b = reciprocal(*v, rule.inverse_n ? static_cast<double>(n) : 1.0);
          if (b.hi - b.lo <= rel_tolerance * b.lo) {
            r.lo.add(b.lo, false);
            r.hi.add(b.hi, true);
            ++r.terms;
            continue;
          }
        }
        SlowTerm s = slow_term(spec, n, rule, rel_tolerance, policy, r.precision);
        if (s.kept) {
          r.slow_lo += s.lo;
          r.slow_hi += s.hi;
          ++r.terms;
        }
      }
    } catch (...) {
      r.error = std::current_exception();
    }
  }
  rethrow_first(out);

  std::vector<KernelTotals> parts;
  parts.reserve(out.size());
  for (auto& r : out) parts.push_back({r.lo.value() + r.slow_lo, r.hi.value() + r.slow_hi, r.terms, r.precision});
  return reduce_tree(parts, 0, parts.size(), [](const KernelTotals& a, const KernelTotals& b) {
    return KernelTotals{a.lo + b.lo, a.hi + b.hi, a.terms + b.terms, std::max(a.precision, b.precision)};
  });
}

namespace {

struct CountChunk {
  std::uint64_t count = 0;
  std::exception_ptr error;
};

}  // namespace

std::uint64_t count_below(const IrrationalSpec& spec, std::uint64_t N, ValueKind value, const Rational& beta,
                          const Rational& t, const PrecisionPolicy& policy) {
  if (N < 1) throw std::invalid_argument("N must be >= 1");
  if (sgn(t) <= 0) throw std::invalid_argument("threshold must be positive");
  const FixedOrbit orbit = make_orbit(spec, beta, policy);
  const FixedThreshold th = FixedThreshold::from(t);
  const auto chunks = static_cast<std::int64_t>(chunk_count(N));
  std::vector<CountChunk> out(static_cast<std::size_t>(chunks));

#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t c = 0; c < chunks; ++c) {
    CountChunk& r = out[static_cast<std::size_t>(c)];
    try {
      const std::uint64_t first = static_cast<std::uint64_t>(c) * kChunk + 1;
      const std::uint64_t last = std::min(N, first + kChunk - 1);
      for (std::uint64_t n = first; n <= last; ++n) {
        const auto v = fixed_value(value, orbit.at(n));
        Side side = v ? classify(*v, th) : Side::unknown;
        if (side == Side::unknown) side = slow_side(spec, n, value, beta, t, policy);
        if (side == Side::below) ++r.count;
      }
    } catch (...) {
      r.error = std::current_exception();
    }
  }
  rethrow_first(out);
  std::uint64_t total = 0;
  for (const auto& r : out) total += r.count;
  return total;
}

namespace {

// Conservative [lo, hi] * 2^-128 for the value, never failing.
FixedInterval loose_value(ValueKind kind, const FixedEnclosure& e) noexcept {
  if (auto v = fixed_value(kind, e)) return *v;
  if (kind == ValueKind::dist) {
    if (e.wraps()) return {0, kHalf};
    // lower bound touched zero
    auto hi = e.hi();
    const u128 d_hi = hi <= kHalf ? hi : kHalf;
    return {0, d_hi};
  }
  return {0, ~static_cast<u128>(0)};
}

struct MinChunk {
  u128 best_hi = ~static_cast<u128>(0);
  std::vector<std::uint64_t> candidates;
  std::exception_ptr error;
};

}  // namespace

std::uint64_t argmin_value(const IrrationalSpec& spec, std::uint64_t N, ValueKind value, const Rational& beta,
                           const PrecisionPolicy& policy) {
  if (N < 1) throw std::invalid_argument("N must be >= 1");
  if (N == 1) return 1;
  const FixedOrbit orbit = make_orbit(spec, beta, policy);
  const auto chunks = static_cast<std::int64_t>(chunk_count(N));
  std::vector<MinChunk> out(static_cast<std::size_t>(chunks));

#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t c = 0; c < chunks; ++c) {
    MinChunk& r = out[static_cast<std::size_t>(c)];
    const std::uint64_t first = static_cast<std::uint64_t>(c) * kChunk + 1;
    const std::uint64_t last = std::min(N, first + kChunk - 1);
    for (std::uint64_t n = first; n <= last; ++n) r.best_hi = std::min(r.best_hi, loose_value(value, orbit.at(n)).hi);
  }
  u128 best_hi = ~static_cast<u128>(0);
  for (const auto& r : out) best_hi = std::min(best_hi, r.best_hi);

#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t c = 0; c < chunks; ++c) {
    MinChunk& r = out[static_cast<std::size_t>(c)];
    const std::uint64_t first = static_cast<std::uint64_t>(c) * kChunk + 1;
    const std::uint64_t last = std::min(N, first + kChunk - 1);
    for (std::uint64_t n = first; n <= last; ++n)
      if (loose_value(value, orbit.at(n)).lo <= best_hi) r.candidates.push_back(n);
  }
  std::vector<std::uint64_t> candidates;
  for (const auto& r : out) candidates.insert(candidates.end(), r.candidates.begin(), r.candidates.end());
  if (candidates.size() == 1) return candidates.front();

  for (unsigned prec = slow_start(policy);; prec = next_precision(prec, policy)) {
    std::vector<std::optional<BallReal>> balls;
    balls.reserve(candidates.size());
    for (auto n : candidates) balls.push_back(value_ball(spec, n, value, beta, prec, policy));
    // the winner's upper bound must sit below every other lower bound
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (!balls[i]) continue;
      const Mpfr up = balls[i]->upper();
      bool wins = true;
      for (std::size_t j = 0; j < candidates.size() && wins; ++j) {
        if (j == i) continue;
        if (!balls[j] || mpfr_cmp(balls[j]->lower().get(), up.get()) <= 0) wins = false;
      }
      if (wins) return candidates[i];
    }
    if (prec >= policy.max_bits)
      throw PrecisionExhausted("minimizer not certified within the precision cap", prec, candidates.front());
  }
}

// --- lattice ----------------------------------------------------------------

namespace {

struct LatticeChunk {
  Acc256 lo, hi;
  BigInt slow_lo, slow_hi;
  std::uint64_t count = 0;
  std::uint64_t terms = 0;
  unsigned precision = 128;
  std::exception_ptr error;
};

std::optional<BallReal> linear_form_ball(std::span<const IrrationalSpec> specs, std::span<const std::int64_t> n,
                                         unsigned prec, const PrecisionPolicy& policy) {
  BallReal total(prec);
  for (std::size_t i = 0; i < n.size(); ++i) {
    if (n[i] == 0) continue;
    const auto mag = static_cast<std::uint64_t>(n[i] < 0 ? -n[i] : n[i]);
    const unsigned extra = static_cast<unsigned>(64 - std::countl_zero(mag)) + 4;
    total = total + eval_alpha(specs[i], prec + extra, policy).times(n[i]);
  }
  return total.dist_nearest();
}

[[noreturn]] void lattice_failure(const BallReal& v, unsigned prec) {
  if (!v.is_positive())
    throw RationalDependence("a nonzero integer vector makes n . alpha an integer up to " + std::to_string(prec) +
                             " bits");
  throw PrecisionExhausted("lattice term not certified within the precision cap", prec);
}

}  // namespace

LatticeTotals lattice_terms(std::span<const IrrationalSpec> specs, std::uint64_t N, const LatticeRule& rule,
                            double rel_tolerance, const PrecisionPolicy& policy) {
  const std::size_t d = specs.size();
  if (d == 0) throw std::invalid_argument("need at least one irrational");
  if (N < 1) throw std::invalid_argument("N must be >= 1");
  if (rule.count_at && (sgn(*rule.count_at) <= 0 || *rule.count_at > Rational(1, 2)))
    throw std::invalid_argument("count threshold must lie in (0, 1/2]");
  // (2N+1)^d must fit comfortably
  const std::uint64_t side = 2 * N + 1;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < d; ++i) {
    if (total > (std::uint64_t{1} << 52) / side) throw std::invalid_argument("lattice too large");
    total *= side;
  }
  std::vector<FixedReal> alphas;
  alphas.reserve(d);
  for (const auto& s : specs) alphas.push_back(fixed_alpha(s, policy));
  std::optional<FixedThreshold> th;
  if (rule.count_at) th = FixedThreshold::from(*rule.count_at);

  const std::uint64_t center = (total - 1) / 2;
  const std::uint64_t begin = rule.half_lattice ? center + 1 : 0;
  const std::uint64_t span_len = total - begin;
  const auto chunks = static_cast<std::int64_t>(chunk_count(span_len));
  std::vector<LatticeChunk> out(static_cast<std::size_t>(chunks));

#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t c = 0; c < chunks; ++c) {
    LatticeChunk& r = out[static_cast<std::size_t>(c)];
    std::vector<std::int64_t> n(d);
    try {
      const std::uint64_t first = begin + static_cast<std::uint64_t>(c) * kChunk;
      const std::uint64_t last = std::min(total - 1, first + kChunk - 1);
      for (std::uint64_t j = first; j <= last; ++j) {
        if (j == center) continue;
        std::uint64_t rest = j;
        std::int64_t linf = 0;
        for (std::size_t i = d; i-- > 0;) {
          n[i] = static_cast<std::int64_t>(rest % side) - static_cast<std::int64_t>(N);
          rest /= side;
          linf = std::max(linf, n[i] < 0 ? -n[i] : n[i]);
        }
        const auto v = fixed_dist(fixed_linear_form(alphas, n));

        if (th) {
          Side s = v ? classify(*v, *th) : Side::unknown;
          for (unsigned prec = slow_start(policy); s == Side::unknown; prec = next_precision(prec, policy)) {
            r.precision = std::max(r.precision, prec);
            auto b = linear_form_ball(specs, n, prec, policy);
            const int cmp = b->compare(*rule.count_at);
            if (cmp < 0) s = Side::below;
            else if (cmp > 0) s = Side::above;
            else if (prec >= policy.max_bits) lattice_failure(*b, prec);
          }
          // below means ||n.alpha|| < t, which is the same as <= t here
          if (s == Side::below) ++r.count;
          ++r.terms;
          continue;
        }

        double divisor = 1.0;
        if (rule.linf_weight)
          for (std::size_t i = 0; i < d; ++i) divisor *= static_cast<double>(linf);
        if (v) {
          const auto b = reciprocal(*v, divisor);
          if (b.hi - b.lo <= rel_tolerance * b.lo) {
            r.lo.add(b.lo, false);
            r.hi.add(b.hi, true);
            ++r.terms;
            continue;
          }
        }
        Rational weight(1);
        if (rule.linf_weight) {
          BigInt den;
          mpz_ui_pow_ui(den.get_mpz_t(), static_cast<unsigned long>(linf), static_cast<unsigned long>(d));
          weight = Rational(BigInt(1), den);
        }
        for (unsigned prec = slow_start(policy);; prec = next_precision(prec, policy)) {
          r.precision = std::max(r.precision, prec);
          auto b = linear_form_ball(specs, n, prec, policy);
          auto rb = b->reciprocal_bounds(weight);
          if (rb && tight_enough(rb->first, rb->second, rel_tolerance)) {
            r.slow_lo += floor_scaled(rb->first, kFracBits);
            r.slow_hi += ceil_scaled(rb->second, kFracBits);
            ++r.terms;
            break;
          }
          if (prec >= policy.max_bits) lattice_failure(*b, prec);
        }
      }
    } catch (...) {
      r.error = std::current_exception();
    }
  }
  rethrow_first(out);

  std::vector<LatticeTotals> parts;
  parts.reserve(out.size());
  for (auto& r : out)
    parts.push_back({r.lo.value() + r.slow_lo, r.hi.value() + r.slow_hi, r.count, r.terms, r.precision});
  LatticeTotals sum = reduce_tree(parts, 0, parts.size(), [](const LatticeTotals& a, const LatticeTotals& b) {
    return LatticeTotals{a.lo + b.lo, a.hi + b.hi, a.count + b.count, a.terms + b.terms,
                         std::max(a.precision, b.precision)};
  });
  if (rule.half_lattice) {
    sum.lo *= 2;
    sum.hi *= 2;
    sum.count *= 2;
    sum.terms *= 2;
  }
  return sum;
}

}  // namespace diosum::detail
