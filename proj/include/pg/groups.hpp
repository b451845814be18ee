#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "pg/arith.hpp"

namespace pg::groups {

using arith::i64;

// The four group families this project knows how to analyze.
struct Cyclic {
  i64 n = 0;  // Z_n, n >= 1
  bool operator==(const Cyclic&) const = default;
};

struct AbelianP {
  i64 p = 0;                   // prime
  std::vector<int> exponents;  // ascending, each >= 1; group is the direct
                               // product of Z_{p^e} over the exponents
  bool operator==(const AbelianP&) const = default;
};

struct Dihedral {
  i64 n = 0;  // D_n of order 2n, n >= 3: a^n = b^2 = e, ab = b a^-1
  bool operator==(const Dihedral&) const = default;
};

struct Dicyclic {
  i64 n = 0;  // Q_n of order 4n, n >= 2: a^2n = e, b^2 = a^n, ab = b a^-1
  bool operator==(const Dicyclic&) const = default;
};

using GroupSpec = std::variant<Cyclic, AbelianP, Dihedral, Dicyclic>;

// Throws std::invalid_argument when the parameters violate the family
// constraints listed above.
void validate(const GroupSpec& spec);

i64 order(const GroupSpec& spec);

// Number of cyclic factors of an abelian p-group.
int sigma(const AbelianP& a);

// Order of the smallest cyclic factor, p^min(exponents).
i64 tau(const AbelianP& a);

// Text grammar used by the CLI and by reports:
//   cyclic:<n> | abelianp:<p>:<e1>,<e2>,... | dihedral:<n> | dicyclic:<n>
// parse_spec normalizes abelianp exponents to ascending order, so
// parse_spec(format_spec(s)) == s for every valid spec.
GroupSpec parse_spec(const std::string& text);
std::string format_spec(const GroupSpec& spec);

// One group element. Encodings per family:
//   Cyclic    {a}       residue, 0 <= a < n
//   AbelianP  {a1..ar}  component residues, 0 <= ai < p^ei
//   Dihedral  {i, f}    a^i b^f with 0 <= i < n, f in {0,1}
//   Dicyclic  {i, f}    a^i b^f with 0 <= i < 2n, f in {0,1}
struct Element {
  std::vector<i64> coords;
  bool operator==(const Element&) const = default;
  auto operator<=>(const Element&) const = default;
};

Element identity(const GroupSpec& spec);
bool is_valid_element(const GroupSpec& spec, const Element& x);
Element multiply(const GroupSpec& spec, const Element& x, const Element& y);

// Least k >= 1 with x^k = identity. Uses the arithmetic shortcut per family;
// element_order_brute walks powers and exists so tests can confirm the two
// agree.
i64 element_order(const GroupSpec& spec, const Element& x);
i64 element_order_brute(const GroupSpec& spec, const Element& x);

// <x> = {x^k}, sorted. Always contains the identity.
std::vector<Element> cyclic_subgroup(const GroupSpec& spec, const Element& x);

// [x] = set of y with <y> = <x>, sorted. Its size is phi(order(x)).
std::vector<Element> gen_class(const GroupSpec& spec, const Element& x);

// Natural enumeration of elements: Cyclic by residue; AbelianP row-major on
// the coordinate tuple; Dihedral/Dicyclic rotations a^i first, then a^i b.
// This fixes the vertex numbering of every power graph.
Element element_at(const GroupSpec& spec, i64 index);
i64 index_of(const GroupSpec& spec, const Element& x);
std::vector<Element> all_elements(const GroupSpec& spec);

// Display form: "7" (cyclic), "(1,2)" (abelianp), "e", "a^3", "a^3*b", ...
std::string label(const GroupSpec& spec, const Element& x);

// Every abelian p-group spec with order <= max_order, deterministic order
// (by prime, then by exponent partition). Used by sweeps.
std::vector<AbelianP> abelian_p_specs_up_to(i64 max_order);

}  // namespace pg::groups
