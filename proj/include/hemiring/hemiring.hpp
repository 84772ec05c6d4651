#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hemiring/errors.hpp"

namespace hemiring {

// Raw Cayley-table data before any axiom has been checked. Tables are flat
// row-major n*n arrays of element indices; index 0 is the zero by file
// convention.
struct TableData {
  std::string name;
  std::vector<std::string> elements;
  std::vector<int> add;
  std::vector<int> mul;

  int order() const { return static_cast<int>(elements.size()); }
  int add_at(int i, int j) const { return add[static_cast<std::size_t>(i) * elements.size() + j]; }
  int mul_at(int i, int j) const { return mul[static_cast<std::size_t>(i) * elements.size() + j]; }
};

struct AxiomViolation {
  std::string axiom;        // e.g. "left_distributivity"
  std::vector<int> where;   // witness element indices
  std::string detail;       // evaluated values, in element names
};

struct AxiomReport {
  bool valid = false;
  std::vector<AxiomViolation> violations;
  bool commutative_mul = false;
  std::optional<int> identity;
};

// Shape problems (non-square tables, out-of-range entries, duplicate names)
// throw input_error; axiom failures land in the report instead.
AxiomReport verify_axioms(const TableData& tables, bool exhaustive = false);

// Construction refused because the tables fail an axiom and no quarantine
// flag was given. Carries the full report.
struct axiom_error : input_error {
  AxiomReport report;
  explicit axiom_error(AxiomReport r)
      : input_error("tables violate the hemiring axioms: " +
                    (r.violations.empty() ? std::string("unknown")
                                          : r.violations.front().axiom)),
        report(std::move(r)) {}
};

// Immutable finite hemiring. The zero is the element at index 0; the
// multiplicative identity, when one exists, is detected, never declared.
class Hemiring {
 public:
  // Validates unless `quarantine`; quarantined values keep their tables but
  // carry a marker that propagates into every report downstream.
  static Hemiring from_tables(const TableData& tables, bool quarantine = false);

  int order() const { return n_; }
  const std::string& name() const { return name_; }
  const std::string& element_name(int i) const { return names_[static_cast<std::size_t>(i)]; }
  const std::vector<std::string>& element_names() const { return names_; }
  std::optional<int> element_index(const std::string& name) const;

  int add(int i, int j) const { return add_[static_cast<std::size_t>(i) * n_ + j]; }
  int mul(int i, int j) const { return mul_[static_cast<std::size_t>(i) * n_ + j]; }

  std::optional<int> identity() const { return identity_; }
  bool commutative_mul() const { return commutative_; }
  bool quarantined() const { return quarantined_; }

  std::uint32_t full_mask() const { return n_ >= 32 ? ~std::uint32_t{0} : ((std::uint32_t{1} << n_) - 1); }

  TableData table_data() const;

  friend bool operator==(const Hemiring& x, const Hemiring& y) {
    return x.names_ == y.names_ && x.add_ == y.add_ && x.mul_ == y.mul_;
  }

 private:
  Hemiring() = default;

  std::string name_;
  std::vector<std::string> names_;
  int n_ = 0;
  std::vector<std::uint8_t> add_;
  std::vector<std::uint8_t> mul_;
  std::optional<int> identity_;
  bool commutative_ = false;
  bool quarantined_ = false;
};

} // namespace hemiring
