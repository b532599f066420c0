#include "kpath/gf2.hpp"

#include <array>
#include <ostream>
#include <stdexcept>

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#define KPATH_X86 1
#endif

namespace kpath::gf {

namespace {

constexpr std::array<FieldConfig, 4> kShipped = {{
    {8, 0x1B},
    {16, 0x2B},
    {32, 0x8D},
    {64, 0x1B},
}};

constexpr std::uint64_t width_mask(unsigned w) {
  return w == 64 ? ~0ull : (1ull << w) - 1;
}

struct State {
  FieldConfig cfg{64, 0x1B};
  std::uint64_t mask = ~0ull;
  bool use_hw = false;
};

bool detect_hw() {
#if defined(KPATH_X86)
  return __builtin_cpu_supports("pclmul") && __builtin_cpu_supports("sse2");
#else
  return false;
#endif
}

State& state() {
  static State s{FieldConfig{64, 0x1B}, ~0ull, detect_hw()};
  return s;
}

}  // namespace

FieldConfig config_for_width(unsigned width) {
  for (const auto& cfg : kShipped) {
    if (cfg.width == width) return cfg;
  }
  throw std::invalid_argument("gf: no shipped field of width " + std::to_string(width));
}

void set_field(const FieldConfig& cfg) {
  for (const auto& shipped : kShipped) {
    if (shipped == cfg) {
      state().cfg = cfg;
      state().mask = width_mask(cfg.width);
      return;
    }
  }
  throw std::invalid_argument("gf: field config not on the shipped list");
}

const FieldConfig& field() { return state().cfg; }

bool hw_mul_available() { return detect_hw(); }

std::uint64_t clmul_reduce_portable(std::uint64_t a, std::uint64_t b,
                                    unsigned width, std::uint64_t reduction) {
  const std::uint64_t mask = width_mask(width);
  const std::uint64_t top = 1ull << (width - 1);
  a &= mask;
  b &= mask;
  std::uint64_t acc = 0;
  while (b != 0) {
    if (b & 1) acc ^= a;
    b >>= 1;
    const bool carry = (a & top) != 0;
    a = (a << 1) & mask;
    if (carry) a ^= reduction;
  }
  return acc;
}

#if defined(KPATH_X86)

__attribute__((target("pclmul,sse2"))) static std::uint64_t high64(__m128i v) {
  return static_cast<std::uint64_t>(_mm_cvtsi128_si64(_mm_srli_si128(v, 8)));
}

__attribute__((target("pclmul,sse2"))) std::uint64_t clmul_reduce_hw(
    std::uint64_t a, std::uint64_t b, unsigned width, std::uint64_t reduction) {
  const std::uint64_t mask = width_mask(width);
  a &= mask;
  b &= mask;
  const __m128i prod = _mm_clmulepi64_si128(_mm_set_epi64x(0, static_cast<long long>(a)),
                                            _mm_set_epi64x(0, static_cast<long long>(b)), 0x00);
  std::uint64_t lo = static_cast<std::uint64_t>(_mm_cvtsi128_si64(prod));
  std::uint64_t hi = high64(prod);
  if (width == 64) {
    // Fold the high word through the reduction polynomial twice. The first
    // fold leaves at most deg(reduction) bits above position 63; the second
    // fits entirely below.
    const __m128i r = _mm_set_epi64x(0, static_cast<long long>(reduction));
    const __m128i f1 = _mm_clmulepi64_si128(_mm_set_epi64x(0, static_cast<long long>(hi)), r, 0x00);
    const std::uint64_t f1lo = static_cast<std::uint64_t>(_mm_cvtsi128_si64(f1));
    const std::uint64_t f1hi = high64(f1);
    const __m128i f2 = _mm_clmulepi64_si128(_mm_set_epi64x(0, static_cast<long long>(f1hi)), r, 0x00);
    return lo ^ f1lo ^ static_cast<std::uint64_t>(_mm_cvtsi128_si64(f2));
  }
  unsigned __int128 p = (static_cast<unsigned __int128>(hi) << 64) | lo;
  for (int bit = 2 * static_cast<int>(width) - 2; bit >= static_cast<int>(width); --bit) {
    if ((p >> bit) & 1) {
      p ^= static_cast<unsigned __int128>(1) << bit;
      p ^= static_cast<unsigned __int128>(reduction) << (bit - static_cast<int>(width));
    }
  }
  return static_cast<std::uint64_t>(p) & mask;
}

#else

std::uint64_t clmul_reduce_hw(std::uint64_t, std::uint64_t, unsigned, std::uint64_t) {
  throw std::runtime_error("gf: hardware carryless multiply not available on this target");
}

#endif

Elem mul_portable(Elem a, Elem b) {
  const auto& s = state();
  return Elem{clmul_reduce_portable(a.v, b.v, s.cfg.width, s.cfg.reduction)};
}

Elem mul_hw(Elem a, Elem b) {
  const auto& s = state();
  return Elem{clmul_reduce_hw(a.v, b.v, s.cfg.width, s.cfg.reduction)};
}

Elem mul(Elem a, Elem b) {
  const auto& s = state();
  if (s.use_hw) return Elem{clmul_reduce_hw(a.v, b.v, s.cfg.width, s.cfg.reduction)};
  return Elem{clmul_reduce_portable(a.v, b.v, s.cfg.width, s.cfg.reduction)};
}

Elem random_elem(SplitMix64& rng) { return Elem{rng.next() & state().mask}; }

namespace {

Elem pow_elem(Elem base, std::uint64_t exponent) {
  Elem result = one;
  while (exponent != 0) {
    if (exponent & 1) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

// a^(2^w - 2) = a^-1 for a != 0. Internal to the determinant; division is
// not part of the public surface.
Elem inverse(Elem a) {
  const unsigned w = state().cfg.width;
  const std::uint64_t exponent = w == 64 ? ~1ull : (1ull << w) - 2;
  return pow_elem(a, exponent);
}

}  // namespace

Elem determinant(FieldMatrix m) {
  const int n = m.order;
  Elem det = one;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int row = col; row < n; ++row) {
      if (m.at(row, col) != zero) {
        pivot = row;
        break;
      }
    }
    if (pivot < 0) return zero;
    if (pivot != col) {
      // Row swap; in characteristic 2 the sign change is invisible.
      for (int c = col; c < n; ++c) std::swap(m.at(pivot, c), m.at(col, c));
    }
    const Elem p = m.at(col, col);
    det *= p;
    const Elem pinv = inverse(p);
    for (int row = col + 1; row < n; ++row) {
      const Elem factor = m.at(row, col) * pinv;
      if (factor == zero) continue;
      for (int c = col; c < n; ++c) m.at(row, c) += factor * m.at(col, c);
    }
  }
  return det;
}

std::ostream& operator<<(std::ostream& os, Elem e) {
  return os << "0x" << std::hex << e.v << std::dec;
}

}  // namespace kpath::gf
