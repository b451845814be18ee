#include "pg/groups.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace pg::groups {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

i64 parse_int(const std::string& s, const std::string& what) {
  if (s.empty()) throw std::invalid_argument("group spec: missing " + what);
  std::size_t pos = 0;
  i64 v = 0;
  try {
    v = std::stoll(s, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("group spec: bad " + what + " '" + s + "'");
  }
  if (pos != s.size()) throw std::invalid_argument("group spec: bad " + what + " '" + s + "'");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t at = s.find(sep, start);
    if (at == std::string::npos) {
      parts.push_back(s.substr(start));
      return parts;
    }
    parts.push_back(s.substr(start, at - start));
    start = at + 1;
  }
}

std::vector<i64> abelian_moduli(const AbelianP& a) {
  std::vector<i64> m;
  m.reserve(a.exponents.size());
  for (int e : a.exponents) m.push_back(arith::checked_pow(a.p, e));
  return m;
}

i64 mod_add(i64 x, i64 y, i64 m) {
  i64 r = x + y;
  if (r >= m) r -= m;
  return r;
}

i64 mod_sub(i64 x, i64 y, i64 m) {
  i64 r = x - y;
  if (r < 0) r += m;
  return r;
}

void check_element(const GroupSpec& spec, const Element& x, const char* who) {
  if (!is_valid_element(spec, x))
    throw std::invalid_argument(std::string(who) + ": element not in group " + format_spec(spec));
}

void ascending_partitions_into(int remaining, int min_part, std::vector<int>& current,
                               const i64 p, const i64 max_order, std::vector<AbelianP>& out) {
  if (remaining == 0) {
    if (!current.empty()) out.push_back({p, current});
    return;
  }
  for (int part = min_part; part <= remaining; ++part) {
    current.push_back(part);
    ascending_partitions_into(remaining - part, part, current, p, max_order, out);
    current.pop_back();
  }
}

}  // namespace

void validate(const GroupSpec& spec) {
  std::visit(overloaded{
                 [](const Cyclic& c) {
                   if (c.n < 1) throw std::invalid_argument("cyclic: n must be >= 1");
                 },
                 [](const AbelianP& a) {
                   if (!arith::is_prime(a.p))
                     throw std::invalid_argument("abelianp: p must be prime");
                   if (a.exponents.empty())
                     throw std::invalid_argument("abelianp: need at least one exponent");
                   for (int e : a.exponents)
                     if (e < 1) throw std::invalid_argument("abelianp: exponents must be >= 1");
                   if (!std::is_sorted(a.exponents.begin(), a.exponents.end()))
                     throw std::invalid_argument("abelianp: exponents must be ascending");
                   int total = 0;
                   for (int e : a.exponents) total += e;
                   (void)arith::checked_pow(a.p, total);  // order must fit in 64 bits
                 },
                 [](const Dihedral& d) {
                   if (d.n < 3) throw std::invalid_argument("dihedral: n must be >= 3");
                 },
                 [](const Dicyclic& q) {
                   if (q.n < 2) throw std::invalid_argument("dicyclic: n must be >= 2");
                 },
             },
             spec);
}

i64 order(const GroupSpec& spec) {
  return std::visit(overloaded{
                        [](const Cyclic& c) { return c.n; },
                        [](const AbelianP& a) {
                          int total = 0;
                          for (int e : a.exponents) total += e;
                          return arith::checked_pow(a.p, total);
                        },
                        [](const Dihedral& d) { return arith::checked_mul(2, d.n); },
                        [](const Dicyclic& q) { return arith::checked_mul(4, q.n); },
                    },
                    spec);
}

int sigma(const AbelianP& a) { return static_cast<int>(a.exponents.size()); }

i64 tau(const AbelianP& a) {
  if (a.exponents.empty()) throw std::invalid_argument("tau: empty exponent list");
  return arith::checked_pow(a.p, *std::min_element(a.exponents.begin(), a.exponents.end()));
}

GroupSpec parse_spec(const std::string& text) {
  const auto parts = split(text, ':');
  GroupSpec spec;
  if (parts[0] == "cyclic" && parts.size() == 2) {
    spec = Cyclic{parse_int(parts[1], "n")};
  } else if (parts[0] == "abelianp" && parts.size() == 3) {
    AbelianP a;
    a.p = parse_int(parts[1], "p");
    for (const auto& tok : split(parts[2], ','))
      a.exponents.push_back(static_cast<int>(parse_int(tok, "exponent")));
    std::sort(a.exponents.begin(), a.exponents.end());
    spec = a;
  } else if (parts[0] == "dihedral" && parts.size() == 2) {
    spec = Dihedral{parse_int(parts[1], "n")};
  } else if (parts[0] == "dicyclic" && parts.size() == 2) {
    spec = Dicyclic{parse_int(parts[1], "n")};
  } else {
    throw std::invalid_argument(
        "group spec: expected cyclic:<n> | abelianp:<p>:<e1>,<e2>,... | dihedral:<n> | "
        "dicyclic:<n>, got '" +
        text + "'");
  }
  validate(spec);
  return spec;
}

std::string format_spec(const GroupSpec& spec) {
  return std::visit(
      overloaded{
          [](const Cyclic& c) { return "cyclic:" + std::to_string(c.n); },
          [](const AbelianP& a) {
            std::string s = "abelianp:" + std::to_string(a.p) + ":";
            for (std::size_t i = 0; i < a.exponents.size(); ++i) {
              if (i) s += ',';
              s += std::to_string(a.exponents[i]);
            }
            return s;
          },
          [](const Dihedral& d) { return "dihedral:" + std::to_string(d.n); },
          [](const Dicyclic& q) { return "dicyclic:" + std::to_string(q.n); },
      },
      spec);
}

Element identity(const GroupSpec& spec) {
  return std::visit(
      overloaded{
          [](const Cyclic&) { return Element{{0}}; },
          [](const AbelianP& a) { return Element{std::vector<i64>(a.exponents.size(), 0)}; },
          [](const Dihedral&) { return Element{{0, 0}}; },
          [](const Dicyclic&) { return Element{{0, 0}}; },
      },
      spec);
}

bool is_valid_element(const GroupSpec& spec, const Element& x) {
  return std::visit(
      overloaded{
          [&](const Cyclic& c) {
            return x.coords.size() == 1 && x.coords[0] >= 0 && x.coords[0] < c.n;
          },
          [&](const AbelianP& a) {
            if (x.coords.size() != a.exponents.size()) return false;
            const auto m = abelian_moduli(a);
            for (std::size_t i = 0; i < m.size(); ++i)
              if (x.coords[i] < 0 || x.coords[i] >= m[i]) return false;
            return true;
          },
          [&](const Dihedral& d) {
            return x.coords.size() == 2 && x.coords[0] >= 0 && x.coords[0] < d.n &&
                   (x.coords[1] == 0 || x.coords[1] == 1);
          },
          [&](const Dicyclic& q) {
            return x.coords.size() == 2 && x.coords[0] >= 0 && x.coords[0] < 2 * q.n &&
                   (x.coords[1] == 0 || x.coords[1] == 1);
          },
      },
      spec);
}

Element multiply(const GroupSpec& spec, const Element& x, const Element& y) {
  check_element(spec, x, "multiply");
  check_element(spec, y, "multiply");
  return std::visit(
      overloaded{
          [&](const Cyclic& c) { return Element{{mod_add(x.coords[0], y.coords[0], c.n)}}; },
          [&](const AbelianP& a) {
            const auto m = abelian_moduli(a);
            Element r{std::vector<i64>(m.size())};
            for (std::size_t i = 0; i < m.size(); ++i)
              r.coords[i] = mod_add(x.coords[i], y.coords[i], m[i]);
            return r;
          },
          [&](const Dihedral& d) {
            // b a^i = a^-i b, so (a^i1 b^f1)(a^i2 b^f2) folds the middle power
            const i64 i1 = x.coords[0], f1 = x.coords[1];
            const i64 i2 = y.coords[0], f2 = y.coords[1];
            const i64 i = f1 ? mod_sub(i1, i2, d.n) : mod_add(i1, i2, d.n);
            return Element{{i, f1 ^ f2}};
          },
          [&](const Dicyclic& q) {
            const i64 m = 2 * q.n;
            const i64 i1 = x.coords[0], f1 = x.coords[1];
            const i64 i2 = y.coords[0], f2 = y.coords[1];
            if (f1 == 0) return Element{{mod_add(i1, i2, m), f2}};
            if (f2 == 0) return Element{{mod_sub(i1, i2, m), 1}};
            // b^2 = a^n picks up an extra a^n when both factors flip
            return Element{{mod_add(mod_sub(i1, i2, m), q.n, m), 0}};
          },
      },
      spec);
}

i64 element_order(const GroupSpec& spec, const Element& x) {
  check_element(spec, x, "element_order");
  return std::visit(overloaded{
                        [&](const Cyclic& c) { return c.n / std::gcd(x.coords[0], c.n); },
                        [&](const AbelianP& a) {
                          const auto m = abelian_moduli(a);
                          i64 ord = 1;
                          for (std::size_t i = 0; i < m.size(); ++i)
                            ord = std::lcm(ord, m[i] / std::gcd(x.coords[i], m[i]));
                          return ord;
                        },
                        [&](const Dihedral& d) {
                          if (x.coords[1]) return i64{2};
                          return d.n / std::gcd(x.coords[0], d.n);
                        },
                        [&](const Dicyclic& q) {
                          if (x.coords[1]) return i64{4};  // (a^i b)^2 = a^n != e
                          const i64 m = 2 * q.n;
                          return m / std::gcd(x.coords[0], m);
                        },
                    },
                    spec);
}

i64 element_order_brute(const GroupSpec& spec, const Element& x) {
  check_element(spec, x, "element_order_brute");
  const Element id = identity(spec);
  Element y = x;
  i64 k = 1;
  while (!(y == id)) {
    y = multiply(spec, y, x);
    ++k;
  }
  return k;
}

std::vector<Element> cyclic_subgroup(const GroupSpec& spec, const Element& x) {
  check_element(spec, x, "cyclic_subgroup");
  std::vector<Element> out;
  Element y = x;
  do {
    out.push_back(y);
    y = multiply(spec, y, x);
  } while (!(y == x));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Element> gen_class(const GroupSpec& spec, const Element& x) {
  auto sub = cyclic_subgroup(spec, x);
  const i64 k = static_cast<i64>(sub.size());
  std::vector<Element> out;
  for (auto& y : sub)
    if (element_order(spec, y) == k) out.push_back(std::move(y));
  return out;
}

Element element_at(const GroupSpec& spec, i64 index) {
  if (index < 0 || index >= order(spec))
    throw std::invalid_argument("element_at: index out of range");
  return std::visit(overloaded{
                        [&](const Cyclic&) { return Element{{index}}; },
                        [&](const AbelianP& a) {
                          const auto m = abelian_moduli(a);
                          Element r{std::vector<i64>(m.size())};
                          i64 rest = index;
                          for (std::size_t i = m.size(); i-- > 0;) {
                            r.coords[i] = rest % m[i];
                            rest /= m[i];
                          }
                          return r;
                        },
                        [&](const Dihedral& d) {
                          return index < d.n ? Element{{index, 0}} : Element{{index - d.n, 1}};
                        },
                        [&](const Dicyclic& q) {
                          const i64 m = 2 * q.n;
                          return index < m ? Element{{index, 0}} : Element{{index - m, 1}};
                        },
                    },
                    spec);
}

i64 index_of(const GroupSpec& spec, const Element& x) {
  check_element(spec, x, "index_of");
  return std::visit(overloaded{
                        [&](const Cyclic&) { return x.coords[0]; },
                        [&](const AbelianP& a) {
                          const auto m = abelian_moduli(a);
                          i64 idx = 0;
                          for (std::size_t i = 0; i < m.size(); ++i) idx = idx * m[i] + x.coords[i];
                          return idx;
                        },
                        [&](const Dihedral& d) { return x.coords[0] + x.coords[1] * d.n; },
                        [&](const Dicyclic& q) { return x.coords[0] + x.coords[1] * 2 * q.n; },
                    },
                    spec);
}

std::vector<Element> all_elements(const GroupSpec& spec) {
  const i64 n = order(spec);
  std::vector<Element> out;
  out.reserve(static_cast<std::size_t>(n));
  for (i64 i = 0; i < n; ++i) out.push_back(element_at(spec, i));
  return out;
}

std::string label(const GroupSpec& spec, const Element& x) {
  check_element(spec, x, "label");
  return std::visit(overloaded{
                        [&](const Cyclic&) { return std::to_string(x.coords[0]); },
                        [&](const AbelianP&) {
                          std::string s = "(";
                          for (std::size_t i = 0; i < x.coords.size(); ++i) {
                            if (i) s += ',';
                            s += std::to_string(x.coords[i]);
                          }
                          return s + ")";
                        },
                        [&](const Dihedral&) -> std::string {
                          const i64 i = x.coords[0];
                          if (x.coords[1] == 0) {
                            if (i == 0) return "e";
                            if (i == 1) return "a";
                            return "a^" + std::to_string(i);
                          }
                          if (i == 0) return "b";
                          if (i == 1) return "a*b";
                          return "a^" + std::to_string(i) + "*b";
                        },
                        [&](const Dicyclic&) -> std::string {
                          const i64 i = x.coords[0];
                          if (x.coords[1] == 0) {
                            if (i == 0) return "e";
                            if (i == 1) return "a";
                            return "a^" + std::to_string(i);
                          }
                          if (i == 0) return "b";
                          if (i == 1) return "a*b";
                          return "a^" + std::to_string(i) + "*b";
                        },
                    },
                    spec);
}

std::vector<AbelianP> abelian_p_specs_up_to(i64 max_order) {
  std::vector<AbelianP> out;
  if (max_order < 2) return out;
  for (i64 p : arith::primes_up_to(max_order)) {
    int max_total = 0;
    i64 pk = 1;
    while (pk <= max_order / p) {
      pk *= p;
      ++max_total;
    }
    std::vector<int> current;
    for (int total = 1; total <= max_total; ++total)
      ascending_partitions_into(total, 1, current, p, max_order, out);
  }
  return out;
}

}  // namespace pg::groups
