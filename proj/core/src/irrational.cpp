#include "diosum/irrational.hpp"

#include <charconv>
#include <stdexcept>
#include <string>

#include "spec_state.hpp"

namespace diosum {

namespace detail {

BigInt UniformBits::prefix(unsigned bits) {
  if (bits == 0 || bits % 64 != 0) throw std::invalid_argument("UniformBits: bits must be a positive multiple of 64");
  std::lock_guard lock(mutex_);
  const std::size_t need = bits / 64;
  while (words_.size() < need) words_.push_back(engine_());
  BigInt z;
  mpz_import(z.get_mpz_t(), need, 1, sizeof(std::uint64_t), 0, 0, words_.data());
  return z;
}

SpecState::SpecState(IrrationalSpec::Kind k, std::string n) : kind(std::move(k)), name(std::move(n)) {
  if (const auto* u = std::get_if<LazyUniform>(&kind)) bits = std::make_unique<UniformBits>(u->seed);
  if (const auto* s = std::get_if<QuadraticSurd>(&kind)) {
    // canonical form: Q | D - P^2, reached by scaling numerator and denominator by |Q|
    surd_P = s->P;
    surd_D = s->D;
    surd_Q = s->Q;
    BigInt r = surd_D - surd_P * surd_P;
    if (r % surd_Q != 0) {
      BigInt absq = abs(surd_Q);
      surd_P *= absq;
      surd_D *= surd_Q * surd_Q;
      surd_Q *= absq;
    }
    mpz_sqrt(surd_isqrt.get_mpz_t(), surd_D.get_mpz_t());
  }
}

}  // namespace detail

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

template <class Int>
Int parse_int(std::string_view s, const char* what) {
  Int v{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw std::invalid_argument(std::string("bad ") + what + ": '" + std::string(s) + "'");
  return v;
}

BigInt parse_big(std::string_view s) {
  std::string str(s);
  if (!str.empty() && str.front() == '+') str.erase(0, 1);
  BigInt z;
  if (str.empty() || z.set_str(str, 10) != 0) throw std::invalid_argument("bad integer: '" + std::string(s) + "'");
  return z;
}

std::vector<std::int64_t> parse_digit_list(std::string_view s) {
  std::vector<std::int64_t> out;
  if (s.empty()) return out;
  for (auto part : split(s, ',')) out.push_back(parse_int<std::int64_t>(part, "digit"));
  return out;
}

std::string join(const std::vector<std::int64_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace

IrrationalSpec::IrrationalSpec(Kind kind, std::string name)
    : state_(std::make_shared<detail::SpecState>(std::move(kind), std::move(name))) {}

const IrrationalSpec::Kind& IrrationalSpec::kind() const { return state_->kind; }
const std::string& IrrationalSpec::name() const { return state_->name; }

IrrationalSpec IrrationalSpec::quadratic_surd(BigInt P, BigInt D, BigInt Q) {
  if (Q == 0) throw std::invalid_argument("quadratic surd: Q must be nonzero");
  if (D <= 0) throw std::invalid_argument("quadratic surd: D must be positive");
  if (mpz_perfect_square_p(D.get_mpz_t())) throw std::invalid_argument("quadratic surd: D must not be a perfect square");
  std::string name = "surd:" + P.get_str() + "," + D.get_str() + "," + Q.get_str();
  return IrrationalSpec(QuadraticSurd{std::move(P), std::move(D), std::move(Q)}, std::move(name));
}

IrrationalSpec IrrationalSpec::golden_ratio() {
  IrrationalSpec s(QuadraticSurd{1, 5, 2}, "phi");
  return s;
}

IrrationalSpec IrrationalSpec::sqrt2() { return IrrationalSpec(QuadraticSurd{0, 2, 1}, "sqrt2"); }

IrrationalSpec IrrationalSpec::euler() { return IrrationalSpec(EulerNumber{}, "e"); }

IrrationalSpec IrrationalSpec::explicit_digits(std::int64_t a0, std::vector<std::int64_t> prefix,
                                               std::vector<std::int64_t> period) {
  for (auto a : prefix)
    if (a < 1) throw std::invalid_argument("explicit digits: partial quotients must be >= 1");
  if (period.empty()) throw std::invalid_argument("explicit digits: period must be nonempty");
  for (auto a : period)
    if (a < 1) throw std::invalid_argument("explicit digits: period entries must be >= 1");
  std::string name = "digits:" + std::to_string(a0) + ";" + join(prefix);
  if (period != std::vector<std::int64_t>{1}) name += ";" + join(period);
  return IrrationalSpec(ExplicitDigits{a0, std::move(prefix), std::move(period)}, std::move(name));
}

IrrationalSpec IrrationalSpec::lazy_uniform(std::uint64_t seed) {
  return IrrationalSpec(LazyUniform{seed}, "uniform:" + std::to_string(seed));
}

IrrationalSpec IrrationalSpec::integer_root(std::uint64_t radicand, unsigned degree) {
  if (degree < 2) throw std::invalid_argument("integer root: degree must be >= 2");
  if (radicand < 2) throw std::invalid_argument("integer root: radicand must be >= 2");
  BigInt r;
  if (mpz_root(r.get_mpz_t(), to_bigint(radicand).get_mpz_t(), degree) != 0)
    throw std::invalid_argument("integer root: radicand is a perfect power, root is rational");
  std::string name;
  if (degree == 3 && radicand == 2) name = "cbrt2";
  else if (degree == 3 && radicand == 4) name = "cbrt4";
  else name = "root:" + std::to_string(radicand) + "," + std::to_string(degree);
  return IrrationalSpec(IntegerRoot{radicand, degree}, std::move(name));
}

IrrationalSpec parse_spec(std::string_view text) {
  if (text == "phi") return IrrationalSpec::golden_ratio();
  if (text == "sqrt2") return IrrationalSpec::sqrt2();
  if (text == "e") return IrrationalSpec::euler();
  if (text == "cbrt2") return IrrationalSpec::integer_root(2, 3);
  if (text == "cbrt4") return IrrationalSpec::integer_root(4, 3);

  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw std::invalid_argument("unknown irrational spec: '" + std::string(text) + "'");
  const std::string_view head = text.substr(0, colon);
  const std::string_view body = text.substr(colon + 1);

  if (head == "surd") {
    auto parts = split(body, ',');
    if (parts.size() != 3) throw std::invalid_argument("surd spec needs P,D,Q");
    return IrrationalSpec::quadratic_surd(parse_big(parts[0]), parse_big(parts[1]), parse_big(parts[2]));
  }
  if (head == "root") {
    auto parts = split(body, ',');
    if (parts.size() != 2) throw std::invalid_argument("root spec needs M,k");
    return IrrationalSpec::integer_root(parse_int<std::uint64_t>(parts[0], "radicand"),
                                        parse_int<unsigned>(parts[1], "degree"));
  }
  if (head == "uniform") return IrrationalSpec::lazy_uniform(parse_int<std::uint64_t>(body, "seed"));
  if (head == "digits") {
    auto parts = split(body, ';');
    if (parts.size() < 1 || parts.size() > 3) throw std::invalid_argument("digits spec: A0;A1,...[;P1,...]");
    const auto a0 = parse_int<std::int64_t>(parts[0], "a0");
    auto prefix = parts.size() > 1 ? parse_digit_list(parts[1]) : std::vector<std::int64_t>{};
    auto period = parts.size() > 2 ? parse_digit_list(parts[2]) : std::vector<std::int64_t>{1};
    return IrrationalSpec::explicit_digits(a0, std::move(prefix), std::move(period));
  }
  throw std::invalid_argument("unknown irrational spec: '" + std::string(text) + "'");
}

}  // namespace diosum
