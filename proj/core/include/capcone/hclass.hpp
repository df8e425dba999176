#pragma once

// Homology classes of the n-fold blow-up of the projective plane, with the
// intersection pairing of signature (1, n), root reflections, and the affine
// E8 simple-root data used by the rest of the library.
//
// Coefficient convention, fixed project-wide: a stored vector
// (a0; a1,...,an) denotes the class a0*L - sum_i ai*Ei, where L is the line
// class and the Ei are the exceptional classes.  Hence E1 itself is stored
// as (0; -1,0,...,0), and the pairing of the dual form class (1; d1,...,dn)
// with Ei equals di.  Serialization uses the same convention.

#include "capcone/errors.hpp"
#include "capcone/rational.hpp"

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace capcone {

inline constexpr int kMinBalls = 1;
inline constexpr int kMaxBalls = 12;

// Integer class a0*L - sum ai*Ei in H_2 of the n-fold blow-up.
struct HClass {
  int n = 9;
  long long a0 = 0;
  std::vector<long long> a;  // length n

  HClass() : a(9, 0) {}
  HClass(long long a0_, std::vector<long long> coeffs);

  auto operator<=>(const HClass&) const = default;
};

HClass operator+(const HClass& x, const HClass& y);
HClass operator-(const HClass& x, const HClass& y);
HClass operator-(const HClass& x);
HClass operator*(long long s, const HClass& x);

// Rational class c0*L - sum ci*Ei; typically the dual of a (possibly
// unnormalized) symplectic form.
struct PDClass {
  int n = 9;
  Rat c0;
  std::vector<Rat> c;  // length n

  PDClass() : c(9) {}
  PDClass(Rat c0_, std::vector<Rat> coeffs);

  bool operator==(const PDClass&) const = default;
};

PDClass pd_of(const HClass& cls);
PDClass operator+(const PDClass& x, const PDClass& y);
PDClass operator*(const Rat& s, const PDClass& x);

// A candidate assignment of ball capacities.  Entries are exact rationals
// and strictly positive; everything weaker (admissibility, chamber
// membership) is checked separately.
struct CapacityVector {
  std::vector<Rat> delta;

  explicit CapacityVector(std::vector<Rat> entries);

  int n() const { return static_cast<int>(delta.size()); }
  // The dual class (1; delta_1,...,delta_n).
  PDClass pd() const;

  bool operator==(const CapacityVector&) const = default;
};

// ---------------------------------------------------------------------------
// Basic classes

HClass line_class(int n = 9);
HClass e_class(int i, int n = 9);  // 1-based index
// 3L - (E1 + ... + E9), the anticanonical dual; also the null root of the
// affine E8 system.
const HClass& d9_class();
// 3L - sum_{i not in I} Ei in the rank-(n+1) lattice, |I| = n - 9.
HClass d9_generalized(int n, const std::vector<int>& excluded);

HClass rijk_class(int i, int j, int k);  // L - Ei - Ej - Ek
HClass rij_class(int i, int j);          // Ei - Ej

// ---------------------------------------------------------------------------
// Pairings

// a0*b0 - sum ai*bi.  Symmetric bilinear of signature (1, n).
long long intersect(const HClass& x, const HClass& y);
Rat pairing(const PDClass& form, const HClass& cls);

// Symplectic area a0 - sum delta_i * a_i of a class against capacities.
// With the stored-coefficient convention, area(delta, Ei) = delta_i.
Rat area(const CapacityVector& delta, const HClass& cls);
Rat area(const PDClass& form, const HClass& cls);

// ---------------------------------------------------------------------------
// Invariants of a class

struct ClassInvariants {
  long long self_int = 0;
  // The remaining invariants are specific to n == 9.
  std::optional<long long> c1;            // 3 a0 - sum ai
  std::optional<Rat> k;                   // (A.A + c1)/2
  bool k_integral = false;
  std::optional<long long> genus_defect;  // 1 + (A.A - c1)/2, adjunction bound
  std::optional<long long> codim;         // 2 - 2 c1
};

ClassInvariants class_invariants(const HClass& cls);

// ---------------------------------------------------------------------------
// Reflections and the simple roots

// B + (A.B) A, the reflection of B in the wall of the (-2)-class A.
// An involution preserving the intersection form; rejects A.A != -2.
HClass reflect(const HClass& root, const HClass& cls);

struct SimpleRoots {
  // r0 = L-E1-E2-E3, r_i = E_i - E_{i+1} for i = 1..8.
  std::array<HClass, 9> r;
  HClass d9;
};

// The ordered simple roots of the affine E8 diagram together with the null
// root D9 = 3 r0 + 2 r1 + 4 r2 + 6 r3 + 5 r4 + 4 r5 + 3 r6 + 2 r7 + r8.
const SimpleRoots& simple_roots();

// ---------------------------------------------------------------------------
// Reduced classes

// a0 >= a1+a2+a3 and a1 >= a2 >= ... >= a9 > 0; the fundamental domain of
// the Cremona action.
bool is_reduced(const HClass& cls);
bool is_reduced(const PDClass& cls);

// ---------------------------------------------------------------------------
// Serialization: "(a0;a1,...,an)" with integer or "p/q" entries.

std::string format_class(const HClass& cls);
std::string format_class(const PDClass& cls);
std::string format_capacities(const CapacityVector& delta);

PDClass parse_pd_class(const std::string& text);
HClass parse_h_class(const std::string& text);  // rejects non-integer entries
// Comma-separated rational list "d1,d2,...,dn".
CapacityVector parse_capacities(const std::string& text);

}  // namespace capcone
