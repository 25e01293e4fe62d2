#include "lacunary/laurent_poly.hpp"

#include <array>
#include <cmath>
#include <cstdio>

namespace lacunary {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid_argument";
    case ErrorCode::kVariantMismatch: return "variant_mismatch";
    case ErrorCode::kResourceLimit: return "resource_limit";
    case ErrorCode::kNumericalFailure: return "numerical_failure";
  }
  return "unknown";
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 p) {
  return static_cast<u64>(static_cast<u128>(a) * b % p);
}

u64 pow_mod(u64 base, u64 exp, u64 p) {
  u64 result = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1U) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    exp >>= 1U;
  }
  return result;
}

// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime(u64 n) {
  if (n < 2) return false;
  static constexpr std::array<u64, 12> kBases = {2,  3,  5,  7,  11, 13,
                                                 17, 19, 23, 29, 31, 37};
  for (u64 b : kBases) {
    if (n % b == 0) return n == b;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (u64 a : kBases) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

constexpr int kMaxLog2 = 32;
constexpr std::size_t kPrimeCount = 512;

struct NttPrime {
  u64 p;
  u64 root;  // element of multiplicative order exactly 2^kMaxLog2
};

// Primes p = c * 2^32 + 1 below 2^62, largest first.
const std::vector<NttPrime>& ntt_primes() {
  static const std::vector<NttPrime> primes = [] {
    std::vector<NttPrime> out;
    out.reserve(kPrimeCount);
    for (u64 c = (u64{1} << 30) - 1; out.size() < kPrimeCount; --c) {
      const u64 p = (c << kMaxLog2) + 1;
      if (!is_prime(p)) continue;
      for (u64 x = 2;; ++x) {
        const u64 w = pow_mod(x, c, p);
        if (pow_mod(w, u64{1} << (kMaxLog2 - 1), p) != 1) {
          out.push_back({p, w});
          break;
        }
      }
    }
    return out;
  }();
  return primes;
}

void ntt(std::vector<u64>& a, const NttPrime& prime, bool inverse) {
  const std::size_t n = a.size();
  const u64 p = prime.p;
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1U;
    for (; j & bit; bit >>= 1U) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  int log_n = 0;
  while ((std::size_t{1} << log_n) < n) ++log_n;
  std::vector<u64> tw;
  for (int s = 1; s <= log_n; ++s) {
    const std::size_t len = std::size_t{1} << s;
    const std::size_t half = len >> 1U;
    u64 w = pow_mod(prime.root, u64{1} << (kMaxLog2 - s), p);
    if (inverse) w = pow_mod(w, p - 2, p);
    tw.resize(half);
    tw[0] = 1;
    for (std::size_t t = 1; t < half; ++t) tw[t] = mul_mod(tw[t - 1], w, p);
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t t = 0; t < half; ++t) {
        const u64 u = a[i + t];
        const u64 v = mul_mod(a[i + t + half], tw[t], p);
        a[i + t] = u + v >= p ? u + v - p : u + v;
        a[i + t + half] = u >= v ? u - v : u + p - v;
      }
    }
  }
  if (inverse) {
    const u64 inv_n = pow_mod(n % p, p - 2, p);
    for (auto& x : a) x = mul_mod(x, inv_n, p);
  }
}

std::size_t max_bits(const std::vector<BigInt>& v) {
  std::size_t bits = 0;
  for (const auto& x : v)
    if (x != 0) bits = std::max(bits, mpz_sizeinbase(x.get_mpz_t(), 2));
  return bits;
}

std::vector<BigInt> schoolbook(const std::vector<BigInt>& a,
                               const std::vector<BigInt>& b) {
  std::vector<BigInt> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  return out;
}

}  // namespace

namespace detail {

std::vector<BigInt> convolve_multimodular(const std::vector<BigInt>& a,
                                          const std::vector<BigInt>& b) {
  if (a.empty() || b.empty()) return {};
  const std::size_t out_len = a.size() + b.size() - 1;
  std::size_t n = 1;
  while (n < out_len) n <<= 1U;
  if (n > (std::size_t{1} << kMaxLog2)) return schoolbook(a, b);

  // |c_j| < min(len) * 2^bits_a * 2^bits_b; the modulus must exceed twice that.
  std::size_t min_len = std::min(a.size(), b.size());
  std::size_t len_bits = 0;
  while ((std::size_t{1} << len_bits) < min_len) ++len_bits;
  const std::size_t bound_bits = max_bits(a) + max_bits(b) + len_bits + 2;
  const auto& primes = ntt_primes();
  // Each prime exceeds 2^61.
  const std::size_t count = (bound_bits + 60) / 61;
  if (count > primes.size()) return schoolbook(a, b);

  std::vector<std::vector<u64>> residues(count);
  for (std::size_t t = 0; t < count; ++t) {
    const u64 p = primes[t].p;
    std::vector<u64> fa(n, 0), fb(n, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
      fa[i] = mpz_fdiv_ui(a[i].get_mpz_t(), p);
    for (std::size_t i = 0; i < b.size(); ++i)
      fb[i] = mpz_fdiv_ui(b[i].get_mpz_t(), p);
    ntt(fa, primes[t], false);
    ntt(fb, primes[t], false);
    for (std::size_t i = 0; i < n; ++i) fa[i] = mul_mod(fa[i], fb[i], p);
    ntt(fa, primes[t], true);
    fa.resize(out_len);
    residues[t] = std::move(fa);
  }

  // Garner: x = v0 + v1 p0 + v2 p0 p1 + ...; inv[t][s] = p_s^{-1} mod p_t.
  std::vector<std::vector<u64>> inv(count, std::vector<u64>(count, 0));
  for (std::size_t t = 0; t < count; ++t)
    for (std::size_t s = 0; s < t; ++s)
      inv[t][s] = pow_mod(primes[s].p % primes[t].p, primes[t].p - 2,
                          primes[t].p);
  BigInt modulus = 1;
  for (std::size_t t = 0; t < count; ++t) {
    BigInt pt;
    mpz_set_ui(pt.get_mpz_t(), primes[t].p);
    modulus *= pt;
  }
  const BigInt half_modulus = modulus / 2;

  std::vector<BigInt> out(out_len);
  std::vector<u64> v(count);
  for (std::size_t j = 0; j < out_len; ++j) {
    for (std::size_t t = 0; t < count; ++t) {
      const u64 p = primes[t].p;
      u64 x = residues[t][j];
      for (std::size_t s = 0; s < t; ++s) {
        const u64 vs = v[s] % p;
        x = x >= vs ? x - vs : x + p - vs;
        x = mul_mod(x, inv[t][s], p);
      }
      v[t] = x;
    }
    BigInt& acc = out[j];
    mpz_set_ui(acc.get_mpz_t(), v[count - 1]);
    for (std::size_t t = count - 1; t-- > 0;) {
      mpz_mul_ui(acc.get_mpz_t(), acc.get_mpz_t(), primes[t].p);
      mpz_add_ui(acc.get_mpz_t(), acc.get_mpz_t(), v[t]);
    }
    if (acc > half_modulus) acc -= modulus;
  }
  return out;
}

std::vector<Rational> convolve_rational(const std::vector<Rational>& a,
                                        const std::vector<Rational>& b) {
  auto common_denominator = [](const std::vector<Rational>& v) {
    BigInt d = 1;
    for (const auto& x : v)
      mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), x.get_den_mpz_t());
    return d;
  };
  auto scale = [](const std::vector<Rational>& v, const BigInt& d) {
    std::vector<BigInt> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
      out[i] = v[i].get_num() * (d / v[i].get_den());
    return out;
  };
  const BigInt da = common_denominator(a);
  const BigInt db = common_denominator(b);
  const std::vector<BigInt> prod =
      convolve_multimodular(scale(a, da), scale(b, db));
  const BigInt den = da * db;
  std::vector<Rational> out(prod.size());
  for (std::size_t i = 0; i < prod.size(); ++i) {
    out[i] = Rational(prod[i], den);
    out[i].canonicalize();
  }
  return out;
}

}  // namespace detail

std::string to_string(const BigInt& c) { return c.get_str(); }
std::string to_string(const Rational& c) { return c.get_str(); }
std::string to_string(const Complex& c) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g%+.17gi", c.real(), c.imag());
  return buf;
}

CoeffKind kind_of(const AnyPoly& p) { return static_cast<CoeffKind>(p.index()); }

const char* coeff_kind_name(CoeffKind kind) {
  switch (kind) {
    case CoeffKind::kBigInt: return "bigint";
    case CoeffKind::kRational: return "rational";
    case CoeffKind::kComplex: return "complex";
  }
  return "unknown";
}

AnyPoly multiply(const AnyPoly& a, const AnyPoly& b,
                 const MultiplyOptions& options) {
  if (a.index() != b.index())
    throw VariantMismatch(std::string("multiply: cannot mix ") +
                          coeff_kind_name(kind_of(a)) + " and " +
                          coeff_kind_name(kind_of(b)) + " coefficients");
  return std::visit(
      [&](const auto& pa) -> AnyPoly {
        using P = std::decay_t<decltype(pa)>;
        return multiply(pa, std::get<P>(b), options);
      },
      a);
}

AnyPoly reverse(const AnyPoly& a) {
  return std::visit([](const auto& p) -> AnyPoly { return reverse(p); }, a);
}

AnyPoly substitute_power(const AnyPoly& a, std::int64_t s) {
  return std::visit(
      [s](const auto& p) -> AnyPoly { return substitute_power(p, s); }, a);
}

AnyPoly halve(const AnyPoly& a) {
  return std::visit([](const auto& p) -> AnyPoly { return halve(p); }, a);
}

}  // namespace lacunary
