#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "kpath/rng.hpp"

namespace kpath::gf {

// Description of GF(2^width). `reduction` holds the low-order terms of the
// irreducible reduction polynomial; the leading x^width term is implicit.
struct FieldConfig {
  unsigned width = 64;
  std::uint64_t reduction = 0x1B;

  friend bool operator==(const FieldConfig&, const FieldConfig&) = default;
};

// Shipped fields (irreducibility of each polynomial checked offline):
//   w =  8 : x^8  + x^4 + x^3 + x   + 1   (0x1B)
//   w = 16 : x^16 + x^5 + x^3 + x   + 1   (0x2B)
//   w = 32 : x^32 + x^7 + x^3 + x^2 + 1   (0x8D)
//   w = 64 : x^64 + x^4 + x^3 + x   + 1   (0x1B)
FieldConfig config_for_width(unsigned width);

// Installs the ambient field for the process. Configs not on the shipped
// list are rejected: arbitrary reduction polynomials are not validated here.
void set_field(const FieldConfig& cfg);
const FieldConfig& field();

// Element of the ambient field, stored in the low `width` bits.
struct Elem {
  std::uint64_t v = 0;

  friend constexpr bool operator==(Elem, Elem) = default;
};

inline constexpr Elem zero{0};
inline constexpr Elem one{1};

constexpr Elem add(Elem a, Elem b) { return Elem{a.v ^ b.v}; }

Elem mul(Elem a, Elem b);

// The two multiplication paths behind mul(). Both reduce modulo the ambient
// reduction polynomial and must agree bit-exactly; mul() dispatches once per
// process based on CPU support.
Elem mul_portable(Elem a, Elem b);
Elem mul_hw(Elem a, Elem b);
bool hw_mul_available();

// Carryless product of a and b reduced mod x^width + reduction, for any
// width in [1, 64]. Does not consult the ambient config; tests drive it with
// fields outside the shipped list.
std::uint64_t clmul_reduce_portable(std::uint64_t a, std::uint64_t b,
                                    unsigned width, std::uint64_t reduction);
std::uint64_t clmul_reduce_hw(std::uint64_t a, std::uint64_t b, unsigned width,
                              std::uint64_t reduction);

constexpr Elem operator+(Elem a, Elem b) { return add(a, b); }
constexpr Elem& operator+=(Elem& a, Elem b) { return a = add(a, b); }
inline Elem operator*(Elem a, Elem b) { return mul(a, b); }
inline Elem& operator*=(Elem& a, Elem b) { return a = mul(a, b); }

// Uniform draw over all 2^width elements.
Elem random_elem(SplitMix64& rng);

struct FieldMatrix {
  int order = 0;
  std::vector<Elem> entries;  // row-major, order*order

  explicit FieldMatrix(int order_ = 0)
      : order(order_),
        entries(static_cast<std::size_t>(order_) * static_cast<std::size_t>(order_)) {}

  Elem& at(int r, int c) { return entries[static_cast<std::size_t>(r) * order + c]; }
  Elem at(int r, int c) const { return entries[static_cast<std::size_t>(r) * order + c]; }
};

// Determinant by Gaussian elimination over the ambient field. Pivot inverses
// are computed internally as a^(2^width - 2); the field exposes no public
// division.
Elem determinant(FieldMatrix m);

std::ostream& operator<<(std::ostream& os, Elem e);

}  // namespace kpath::gf
