#include "hemiring/subsets.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace hemiring {

const char* kind_name(IdealKind k) {
  switch (k) {
    case IdealKind::left: return "left";
    case IdealKind::right: return "right";
    case IdealKind::two_sided: return "two-sided";
    case IdealKind::k: return "k";
    case IdealKind::h: return "h";
    case IdealKind::left_k: return "left-k";
    case IdealKind::right_k: return "right-k";
    case IdealKind::left_h: return "left-h";
    case IdealKind::right_h: return "right-h";
  }
  return "?";
}

std::optional<IdealKind> parse_kind(const std::string& s) {
  if (s == "left") return IdealKind::left;
  if (s == "right") return IdealKind::right;
  if (s == "two-sided" || s == "two_sided" || s == "ideal") return IdealKind::two_sided;
  if (s == "k") return IdealKind::k;
  if (s == "h") return IdealKind::h;
  if (s == "left-k" || s == "left_k") return IdealKind::left_k;
  if (s == "right-k" || s == "right_k") return IdealKind::right_k;
  if (s == "left-h" || s == "left_h") return IdealKind::left_h;
  if (s == "right-h" || s == "right_h") return IdealKind::right_h;
  return std::nullopt;
}

namespace {

struct KindParts {
  bool left_mult;   // require r*a inside
  bool right_mult;  // require a*r inside
  bool k_cond;
  bool h_cond;
};

KindParts kind_parts(IdealKind k) {
  switch (k) {
    case IdealKind::left: return {true, false, false, false};
    case IdealKind::right: return {false, true, false, false};
    case IdealKind::two_sided: return {true, true, false, false};
    case IdealKind::k: return {true, true, true, false};
    case IdealKind::h: return {true, true, false, true};
    case IdealKind::left_k: return {true, false, true, false};
    case IdealKind::right_k: return {false, true, true, false};
    case IdealKind::left_h: return {true, false, false, true};
    case IdealKind::right_h: return {false, true, false, true};
  }
  return {true, true, false, true};
}

void require_nonempty(Mask m, const char* what) {
  if (m == 0) throw domain_error(std::string(what) + " requires a non-empty subset");
}

} // namespace

Mask h_closure(const Hemiring& H, Mask subset) {
  require_nonempty(subset, "h_closure");
  const int n = H.order();
  Mask out = 0;
  for (int x = 0; x < n; ++x) {
    bool found = false;
    for (Mask sa = subset; sa && !found; sa &= sa - 1) {
      const int a = std::countr_zero(sa);
      const int xa = H.add(x, a);
      for (Mask sb = subset; sb && !found; sb &= sb - 1) {
        const int b = std::countr_zero(sb);
        for (int y = 0; y < n; ++y)
          if (H.add(xa, y) == H.add(b, y)) {
            found = true;
            break;
          }
      }
    }
    if (found) out |= mask_of(x);
  }
  return out;
}

Mask additive_closure(const Hemiring& H, Mask subset) {
  require_nonempty(subset, "additive_closure");
  Mask s = subset;
  for (;;) {
    Mask next = s;
    for (Mask i = s; i; i &= i - 1) {
      const int a = std::countr_zero(i);
      for (Mask j = subset; j; j &= j - 1)
        next |= mask_of(H.add(a, std::countr_zero(j)));
    }
    if (next == s) return s;
    s = next;
  }
}

Mask sum_set(const Hemiring& H, Mask a, Mask b) {
  Mask out = 0;
  for (Mask i = a; i; i &= i - 1)
    for (Mask j = b; j; j &= j - 1)
      out |= mask_of(H.add(std::countr_zero(i), std::countr_zero(j)));
  return out;
}

Mask product_set(const Hemiring& H, Mask a, Mask b) {
  require_nonempty(a, "product_set");
  require_nonempty(b, "product_set");
  Mask prods = 0;
  for (Mask i = a; i; i &= i - 1)
    for (Mask j = b; j; j &= j - 1)
      prods |= mask_of(H.mul(std::countr_zero(i), std::countr_zero(j)));
  return additive_closure(H, prods);
}

IdealCheck is_ideal_of_kind(const Hemiring& H, Mask subset, IdealKind kind) {
  require_nonempty(subset, "is_ideal_of_kind");
  const int n = H.order();
  const KindParts parts = kind_parts(kind);

  for (Mask i = subset; i; i &= i - 1) {
    const int a = std::countr_zero(i);
    for (Mask j = subset; j; j &= j - 1) {
      const int b = std::countr_zero(j);
      if (!mask_contains(subset, H.add(a, b)))
        return {false, "add_closed", {a, b}};
    }
  }
  for (int r = 0; r < n; ++r)
    for (Mask i = subset; i; i &= i - 1) {
      const int a = std::countr_zero(i);
      if (parts.left_mult && !mask_contains(subset, H.mul(r, a)))
        return {false, "left_absorption", {r, a}};
      if (parts.right_mult && !mask_contains(subset, H.mul(a, r)))
        return {false, "right_absorption", {a, r}};
    }
  if (parts.k_cond) {
    for (int x = 0; x < n; ++x) {
      if (mask_contains(subset, x)) continue;
      for (Mask i = subset; i; i &= i - 1) {
        const int a = std::countr_zero(i);
        const int xa = H.add(x, a);
        if (mask_contains(subset, xa))
          return {false, "k_condition", {x, a, xa}};
      }
    }
  }
  if (parts.h_cond) {
    for (int x = 0; x < n; ++x) {
      if (mask_contains(subset, x)) continue;
      for (Mask i = subset; i; i &= i - 1) {
        const int a = std::countr_zero(i);
        const int xa = H.add(x, a);
        for (Mask j = subset; j; j &= j - 1) {
          const int b = std::countr_zero(j);
          for (int y = 0; y < n; ++y)
            if (H.add(xa, y) == H.add(b, y))
              return {false, "h_condition", {x, a, b, y}};
        }
      }
    }
  }
  return {true, "", {}};
}

Mask generated_h_ideal(const Hemiring& H, Mask subset) {
  const int n = H.order();
  Mask s = subset | mask_of(0);
  for (;;) {
    Mask next = s;
    for (Mask i = s; i; i &= i - 1) {
      const int a = std::countr_zero(i);
      for (Mask j = s; j; j &= j - 1)
        next |= mask_of(H.add(a, std::countr_zero(j)));
      for (int r = 0; r < n; ++r)
        next |= mask_of(H.mul(r, a)) | mask_of(H.mul(a, r));
    }
    next |= h_closure(H, next);
    if (next == s) return s;
    s = next;
  }
}

namespace {

IdealFamily enumerate_by_scan(const Hemiring& H, IdealKind kind) {
  IdealFamily fam;
  fam.parent = &H;
  fam.complete = true;
  const Mask full = H.full_mask();
  // Every ideal contains 0, so only masks with bit 0 set can qualify.
  for (Mask m = 1; m <= full; m += 2)
    if (is_ideal_of_kind(H, m, kind).ok) fam.members.push_back(m);
  return fam;
}

IdealFamily enumerate_h_by_closure_system(const Hemiring& H, const Config& cfg) {
  std::set<Mask> members;
  members.insert(generated_h_ideal(H, 0));
  for (int x = 0; x < H.order(); ++x)
    members.insert(generated_h_ideal(H, mask_of(x)));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Mask> snapshot(members.begin(), members.end());
    for (std::size_t i = 0; i < snapshot.size(); ++i)
      for (std::size_t j = i; j < snapshot.size(); ++j) {
        const Mask meet = snapshot[i] & snapshot[j];
        const Mask join = h_closure(H, sum_set(H, snapshot[i], snapshot[j]));
        grew |= members.insert(meet).second;
        grew |= members.insert(join).second;
        if (static_cast<std::int64_t>(members.size()) > cfg.fuzzy_family_budget)
          throw capacity_error("h-ideal family exceeds the configured budget");
      }
  }
  IdealFamily fam;
  fam.parent = &H;
  fam.complete = true;
  fam.members.assign(members.begin(), members.end());
  return fam;
}

} // namespace

IdealFamily enumerate_ideals(const Hemiring& H, IdealKind kind, const Config& cfg) {
  if (H.order() <= cfg.subset_bruteforce_cap) return enumerate_by_scan(H, kind);
  if (kind == IdealKind::h && H.order() <= 32) return enumerate_h_by_closure_system(H, cfg);
  throw capacity_error("order " + std::to_string(H.order()) +
                       " exceeds the enumeration caps for kind " + kind_name(kind));
}

IdealFamily enumerate_h_ideals(const Hemiring& H, const Config& cfg) {
  return enumerate_ideals(H, IdealKind::h, cfg);
}

HemiregularityReport is_h_hemiregular(const Hemiring& H) {
  const int n = H.order();
  HemiregularityReport rep;
  rep.ok = true;
  rep.witnesses.resize(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    bool found = false;
    for (int x = 0; x < n && !found; ++x) {
      const int axa = H.mul(H.mul(a, x), a);
      const int a_axa = H.add(a, axa);
      for (int y = 0; y < n && !found; ++y) {
        const int aya = H.mul(H.mul(a, y), a);
        for (int z = 0; z < n; ++z)
          if (H.add(a_axa, z) == H.add(aya, z)) {
            rep.witnesses[static_cast<std::size_t>(a)] = HemiregularityReport::Triple{x, y, z};
            found = true;
            break;
          }
      }
    }
    if (!found) {
      rep.ok = false;
      if (!rep.failing_element) rep.failing_element = a;
    }
  }
  return rep;
}

Mask family_join(const Hemiring& H, Mask a, Mask b) {
  return h_closure(H, sum_set(H, a, b));
}

Mask family_meet(Mask a, Mask b) { return a & b; }

std::optional<Mask> family_residual(const Hemiring& H, const IdealFamily& F,
                                    Mask a, Mask b) {
  (void)H;
  Mask all = 0;
  std::vector<Mask> candidates;
  for (Mask i : F.members)
    if (mask_subset(a & i, b)) {
      candidates.push_back(i);
      all |= i;
    }
  for (Mask c : candidates)
    if (c == all) return c;  // greatest: contains every candidate
  return std::nullopt;
}

bool family_is_distributive(const Hemiring& H, const IdealFamily& F) {
  const auto& m = F.members;
  std::vector<std::vector<Mask>> join(m.size(), std::vector<Mask>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i; j < m.size(); ++j)
      join[i][j] = join[j][i] = family_join(H, m[i], m[j]);
  auto join_of = [&](Mask x, Mask y) {
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] == x)
        for (std::size_t j = 0; j < m.size(); ++j)
          if (m[j] == y) return join[i][j];
    return family_join(H, x, y);
  };
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      for (std::size_t k = 0; k < m.size(); ++k)
        if ((m[i] & join[j][k]) != join_of(m[i] & m[j], m[i] & m[k]))
          return false;
  return true;
}

bool family_is_brouwerian(const Hemiring& H, const IdealFamily& F) {
  for (Mask a : F.members)
    for (Mask b : F.members)
      if (!family_residual(H, F, a, b)) return false;
  return true;
}

Mask sandwich_set(const Hemiring& H, int a, int b) {
  Mask out = 0;
  for (int x = 0; x < H.order(); ++x)
    out |= mask_of(H.mul(H.mul(a, x), b));
  return out;
}

Classification classify_h_ideal(const Hemiring& H, Mask subset, const IdealFamily& F) {
  const auto check = is_ideal_of_kind(H, subset, IdealKind::h);
  if (!check.ok)
    throw domain_error("classify_h_ideal requires an h-ideal (failed: " + check.condition + ")");

  Classification c;
  const Mask full = H.full_mask();
  c.is_proper = subset != full;
  c.is_h_idempotent = h_closure(H, product_set(H, subset, subset)) == subset;

  if (!c.is_proper) {
    c.not_proper_reason = "not proper";
    return c;
  }

  c.prime_pairwise = true;
  c.semiprime_pairwise = true;
  c.is_irreducible = true;
  for (Mask a : F.members) {
    if (mask_subset(product_set(H, a, a), subset) && !mask_subset(a, subset)) {
      c.semiprime_pairwise = false;
      if (!c.semiprime_witness) c.semiprime_witness = a;
    }
    for (Mask b : F.members) {
      if (mask_subset(product_set(H, a, b), subset) &&
          !mask_subset(a, subset) && !mask_subset(b, subset)) {
        c.prime_pairwise = false;
        if (!c.prime_witness) c.prime_witness = {a, b};
      }
      if ((a & b) == subset && a != subset && b != subset) {
        c.is_irreducible = false;
        if (!c.irreducible_witness) c.irreducible_witness = {a, b};
      }
    }
  }

  c.prime_elementwise = true;
  c.semiprime_elementwise = true;
  for (int a = 0; a < H.order(); ++a) {
    if (!mask_contains(subset, a) && mask_subset(sandwich_set(H, a, a), subset)) {
      c.semiprime_elementwise = false;
      if (!c.semiprime_element_witness) c.semiprime_element_witness = a;
    }
    for (int b = 0; b < H.order(); ++b)
      if (!mask_contains(subset, a) && !mask_contains(subset, b) &&
          mask_subset(sandwich_set(H, a, b), subset)) {
        c.prime_elementwise = false;
        if (!c.prime_element_witness) c.prime_element_witness = {a, b};
      }
  }

  c.prime_tests_agree = c.prime_pairwise == c.prime_elementwise;
  c.semiprime_tests_agree = c.semiprime_pairwise == c.semiprime_elementwise;
  c.is_prime = c.prime_pairwise;
  c.is_semiprime = c.semiprime_pairwise;
  return c;
}

std::vector<Mask> semiprime_not_prime_witnesses(const Hemiring& H, const IdealFamily& F) {
  std::vector<Mask> out;
  for (Mask p : F.members) {
    if (p == H.full_mask()) continue;
    const Classification c = classify_h_ideal(H, p, F);
    if (c.is_semiprime && !c.is_prime) out.push_back(p);
  }
  return out;
}

std::string mask_to_names(const Hemiring& H, Mask m) {
  std::string out;
  for (Mask i = m; i; i &= i - 1) {
    if (!out.empty()) out += ",";
    out += H.element_name(std::countr_zero(i));
  }
  return out;
}

} // namespace hemiring
