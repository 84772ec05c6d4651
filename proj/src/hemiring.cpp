#include "hemiring/hemiring.hpp"

#include <set>

namespace hemiring {

namespace {

void validate_shape(const TableData& t) {
  const int n = t.order();
  if (n == 0) throw input_error("empty element list");
  if (n > 32) throw input_error("orders above 32 are not supported");
  std::set<std::string> seen;
  for (const auto& e : t.elements) {
    if (e.empty()) throw input_error("empty element name");
    if (!seen.insert(e).second) throw input_error("duplicate element name: " + e);
  }
  const auto expected = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  if (t.add.size() != expected) throw input_error("add table is not " + std::to_string(n) + "x" + std::to_string(n));
  if (t.mul.size() != expected) throw input_error("mul table is not " + std::to_string(n) + "x" + std::to_string(n));
  for (int v : t.add)
    if (v < 0 || v >= n) throw input_error("add table entry out of range");
  for (int v : t.mul)
    if (v < 0 || v >= n) throw input_error("mul table entry out of range");
}

std::string nm(const TableData& t, int i) { return t.elements[static_cast<std::size_t>(i)]; }

} // namespace

AxiomReport verify_axioms(const TableData& t, bool exhaustive) {
  validate_shape(t);
  const int n = t.order();
  AxiomReport rep;

  bool add_assoc_hit = false, add_comm_hit = false, zero_add_hit = false;
  bool mul_assoc_hit = false, zero_mul_hit = false;
  bool ldist_hit = false, rdist_hit = false;
  auto push = [&](bool& hit, const std::string& axiom, std::vector<int> where, std::string detail) {
    if (hit && !exhaustive) return;
    hit = true;
    rep.violations.push_back({axiom, std::move(where), std::move(detail)});
  };

  for (int a = 0; a < n; ++a) {
    if (t.add_at(a, 0) != a || t.add_at(0, a) != a)
      push(zero_add_hit, "zero_additive_identity", {a},
           nm(t, a) + "+0=" + nm(t, t.add_at(a, 0)) + ", 0+" + nm(t, a) + "=" + nm(t, t.add_at(0, a)));
    if (t.mul_at(a, 0) != 0 || t.mul_at(0, a) != 0)
      push(zero_mul_hit, "zero_absorbing", {a},
           nm(t, a) + "*0=" + nm(t, t.mul_at(a, 0)) + ", 0*" + nm(t, a) + "=" + nm(t, t.mul_at(0, a)));
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (t.add_at(a, b) != t.add_at(b, a))
        push(add_comm_hit, "add_commutativity", {a, b},
             nm(t, a) + "+" + nm(t, b) + "=" + nm(t, t.add_at(a, b)) + " but " +
             nm(t, b) + "+" + nm(t, a) + "=" + nm(t, t.add_at(b, a)));
      for (int c = 0; c < n; ++c) {
        if (t.add_at(t.add_at(a, b), c) != t.add_at(a, t.add_at(b, c)))
          push(add_assoc_hit, "add_associativity", {a, b, c},
               "(" + nm(t, a) + "+" + nm(t, b) + ")+" + nm(t, c) + " != " +
               nm(t, a) + "+(" + nm(t, b) + "+" + nm(t, c) + ")");
        if (t.mul_at(t.mul_at(a, b), c) != t.mul_at(a, t.mul_at(b, c)))
          push(mul_assoc_hit, "mul_associativity", {a, b, c},
               "(" + nm(t, a) + "*" + nm(t, b) + ")*" + nm(t, c) + " != " +
               nm(t, a) + "*(" + nm(t, b) + "*" + nm(t, c) + ")");
        {
          const int lhs = t.mul_at(a, t.add_at(b, c));
          const int rhs = t.add_at(t.mul_at(a, b), t.mul_at(a, c));
          if (lhs != rhs)
            push(ldist_hit, "left_distributivity", {a, b, c},
                 nm(t, a) + "*(" + nm(t, b) + "+" + nm(t, c) + ")=" + nm(t, lhs) + " but " +
                 nm(t, a) + "*" + nm(t, b) + "+" + nm(t, a) + "*" + nm(t, c) + "=" + nm(t, rhs));
        }
        {
          const int lhs = t.mul_at(t.add_at(b, c), a);
          const int rhs = t.add_at(t.mul_at(b, a), t.mul_at(c, a));
          if (lhs != rhs)
            push(rdist_hit, "right_distributivity", {a, b, c},
                 "(" + nm(t, b) + "+" + nm(t, c) + ")*" + nm(t, a) + "=" + nm(t, lhs) + " but " +
                 nm(t, b) + "*" + nm(t, a) + "+" + nm(t, c) + "*" + nm(t, a) + "=" + nm(t, rhs));
        }
      }
    }

  rep.valid = rep.violations.empty();

  rep.commutative_mul = true;
  for (int a = 0; a < n && rep.commutative_mul; ++a)
    for (int b = 0; b < n; ++b)
      if (t.mul_at(a, b) != t.mul_at(b, a)) {
        rep.commutative_mul = false;
        break;
      }

  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int a = 0; a < n; ++a)
      if (t.mul_at(e, a) != a || t.mul_at(a, e) != a) {
        ok = false;
        break;
      }
    if (ok) {
      rep.identity = e;
      break;
    }
  }

  return rep;
}

Hemiring Hemiring::from_tables(const TableData& t, bool quarantine) {
  AxiomReport rep = verify_axioms(t);
  if (!rep.valid && !quarantine) throw axiom_error(std::move(rep));

  Hemiring h;
  h.name_ = t.name;
  h.names_ = t.elements;
  h.n_ = t.order();
  h.add_.assign(t.add.begin(), t.add.end());
  h.mul_.assign(t.mul.begin(), t.mul.end());
  h.identity_ = rep.identity;
  h.commutative_ = rep.commutative_mul;
  h.quarantined_ = !rep.valid;
  return h;
}

std::optional<int> Hemiring::element_index(const std::string& name) const {
  for (int i = 0; i < n_; ++i)
    if (names_[static_cast<std::size_t>(i)] == name) return i;
  return std::nullopt;
}

TableData Hemiring::table_data() const {
  TableData t;
  t.name = name_;
  t.elements = names_;
  t.add.assign(add_.begin(), add_.end());
  t.mul.assign(mul_.begin(), mul_.end());
  return t;
}

} // namespace hemiring
