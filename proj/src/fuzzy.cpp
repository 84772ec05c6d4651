#include "hemiring/fuzzy.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace hemiring {

namespace {

void require_same_parent(const FuzzySubset& a, const FuzzySubset& b) {
  if (a.parent != b.parent)
    throw domain_error("fuzzy operands have different parent hemirings");
}

const Hemiring& parent_of(const FuzzySubset& f) {
  if (!f.parent) throw domain_error("fuzzy subset has no parent hemiring");
  return *f.parent;
}

} // namespace

FuzzySubset constant_fuzzy(const Hemiring& H, const Rat& value) {
  return {&H, std::vector<Rat>(static_cast<std::size_t>(H.order()), value)};
}

std::vector<Rat> image(const FuzzySubset& f) {
  std::set<Rat> s(f.values.begin(), f.values.end());
  return {s.begin(), s.end()};
}

bool is_constant(const FuzzySubset& f) {
  for (const Rat& v : f.values)
    if (v != f.values.front()) return false;
  return true;
}

Mask level_set(const FuzzySubset& f, const Rat& t) {
  Mask out = 0;
  for (int e = 0; e < f.order(); ++e)
    if (f.at(e) >= t) out |= mask_of(e);
  return out;
}

FuzzySubset two_valued_indicator(const Hemiring& H, Mask subset,
                                 const Rat& t, const Rat& s) {
  if (!(s < t)) throw domain_error("two_valued_indicator needs s < t");
  if (s < Rat::zero() || t > Rat::one())
    throw domain_error("two_valued_indicator needs 0 <= s < t <= 1");
  FuzzySubset f{&H, {}};
  f.values.reserve(static_cast<std::size_t>(H.order()));
  for (int e = 0; e < H.order(); ++e)
    f.values.push_back(mask_contains(subset, e) ? t : s);
  return f;
}

FuzzySubset characteristic(const Hemiring& H, Mask subset) {
  return two_valued_indicator(H, subset, Rat::one(), Rat::zero());
}

FuzzySubset pointwise_meet(const FuzzySubset& a, const FuzzySubset& b) {
  require_same_parent(a, b);
  FuzzySubset out{a.parent, {}};
  out.values.reserve(a.values.size());
  for (std::size_t i = 0; i < a.values.size(); ++i)
    out.values.push_back(rat_min(a.values[i], b.values[i]));
  return out;
}

FuzzySubset pointwise_join(const FuzzySubset& a, const FuzzySubset& b) {
  require_same_parent(a, b);
  FuzzySubset out{a.parent, {}};
  out.values.reserve(a.values.size());
  for (std::size_t i = 0; i < a.values.size(); ++i)
    out.values.push_back(rat_max(a.values[i], b.values[i]));
  return out;
}

bool pointwise_leq(const FuzzySubset& a, const FuzzySubset& b) {
  require_same_parent(a, b);
  for (std::size_t i = 0; i < a.values.size(); ++i)
    if (!(a.values[i] <= b.values[i])) return false;
  return true;
}

namespace {

FuzzyCheck direct_check(const FuzzySubset& f, IdealKind kind) {
  const Hemiring& H = parent_of(f);
  const int n = H.order();
  bool left = false, right = false, kcond = false, hcond = false;
  switch (kind) {
    case IdealKind::left: left = true; break;
    case IdealKind::right: right = true; break;
    case IdealKind::two_sided: left = right = true; break;
    case IdealKind::k: left = right = kcond = true; break;
    case IdealKind::h: left = right = hcond = true; break;
    case IdealKind::left_k: left = kcond = true; break;
    case IdealKind::right_k: right = kcond = true; break;
    case IdealKind::left_h: left = hcond = true; break;
    case IdealKind::right_h: right = hcond = true; break;
  }

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (f.at(H.add(a, b)) < rat_min(f.at(a), f.at(b)))
        return {false, "add", {a, b}, {}};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (left && f.at(H.mul(a, b)) < f.at(b))
        return {false, "mul_left", {a, b}, {}};
      if (right && f.at(H.mul(a, b)) < f.at(a))
        return {false, "mul_right", {a, b}, {}};
    }
  if (kcond)
    for (int x = 0; x < n; ++x)
      for (int a = 0; a < n; ++a) {
        const int b = H.add(x, a);
        if (f.at(x) < rat_min(f.at(a), f.at(b)))
          return {false, "k_condition", {x, a, b}, {}};
      }
  if (hcond)
    for (int x = 0; x < n; ++x)
      for (int a = 0; a < n; ++a) {
        const int xa = H.add(x, a);
        for (int b = 0; b < n; ++b) {
          const Rat bound = rat_min(f.at(a), f.at(b));
          if (!(f.at(x) < bound)) continue;
          for (int y = 0; y < n; ++y)
            if (H.add(xa, y) == H.add(b, y))
              return {false, "h_condition", {x, a, b, y}, {}};
        }
      }
  return {true, "", {}, {}};
}

FuzzyCheck levels_check(const FuzzySubset& f, IdealKind kind) {
  for (const Rat& t : image(f)) {
    const Mask u = level_set(f, t);
    if (u == 0) continue;
    const IdealCheck c = is_ideal_of_kind(parent_of(f), u, kind);
    if (!c.ok) {
      FuzzyCheck out{false, "level", c.witness, t};
      out.axiom = "level:" + c.condition;
      return out;
    }
  }
  return {true, "", {}, {}};
}

} // namespace

LevelChain level_chain(const FuzzySubset& f) {
  LevelChain chain{f.parent, {}};
  const auto im = image(f);
  for (auto it = im.rbegin(); it != im.rend(); ++it) {
    if (it->is_zero()) continue;  // the zero level carries no information
    chain.levels.emplace_back(*it, level_set(f, *it));
  }
  return chain;
}

FuzzySubset from_level_chain(const LevelChain& chain) {
  if (!chain.parent) throw domain_error("level chain has no parent hemiring");
  FuzzySubset f = constant_fuzzy(*chain.parent, Rat::zero());
  for (const auto& [t, u] : chain.levels)
    for (Mask m = u; m; m &= m - 1) {
      auto& slot = f.values[static_cast<std::size_t>(std::countr_zero(m))];
      if (slot < t) slot = t;
    }
  return f;
}

FuzzyCheck is_fuzzy_ideal_of_kind(const FuzzySubset& f, IdealKind kind, FuzzyMethod method) {
  return method == FuzzyMethod::direct ? direct_check(f, kind) : levels_check(f, kind);
}

namespace {

// Shared level-cut driver: thresholds descend over Im(lhs) ∪ Im(rhs); the
// per-threshold representable set is monotone, so the first threshold whose
// set contains x is the value at x.
FuzzySubset level_cut(const FuzzySubset& lhs, const FuzzySubset& rhs, FuzzyOp op) {
  require_same_parent(lhs, rhs);
  const Hemiring& H = parent_of(lhs);
  std::set<Rat> thresholds(lhs.values.begin(), lhs.values.end());
  thresholds.insert(rhs.values.begin(), rhs.values.end());

  FuzzySubset out = constant_fuzzy(H, Rat::zero());
  Mask assigned = 0;
  for (auto it = thresholds.rbegin(); it != thresholds.rend(); ++it) {
    const Rat& t = *it;
    if (t.is_zero()) break;  // value 0 is the default
    const Mask ul = level_set(lhs, t);
    const Mask ur = level_set(rhs, t);
    Mask base = 0;
    if (ul && ur) {
      if (op == FuzzyOp::h_sum) {
        base = sum_set(H, ul, ur);
      } else {
        for (Mask i = ul; i; i &= i - 1)
          for (Mask j = ur; j; j &= j - 1)
            base |= mask_of(H.mul(std::countr_zero(i), std::countr_zero(j)));
        if (op == FuzzyOp::h_intrinsic && base) base = additive_closure(H, base);
      }
    }
    const Mask reach = base ? h_closure(H, base) : 0;
    for (Mask m = reach & ~assigned; m; m &= m - 1)
      out.values[static_cast<std::size_t>(std::countr_zero(m))] = t;
    assigned |= reach;
  }
  return out;
}

} // namespace

FuzzySubset h_product(const FuzzySubset& lhs, const FuzzySubset& rhs) {
  return level_cut(lhs, rhs, FuzzyOp::h_product);
}

FuzzySubset h_intrinsic_product(const FuzzySubset& lhs, const FuzzySubset& rhs) {
  return level_cut(lhs, rhs, FuzzyOp::h_intrinsic);
}

FuzzySubset h_sum(const FuzzySubset& lhs, const FuzzySubset& rhs) {
  return level_cut(lhs, rhs, FuzzyOp::h_sum);
}

FuzzySubset apply_fuzzy_op(const FuzzySubset& lhs, const FuzzySubset& rhs, FuzzyOp op) {
  return level_cut(lhs, rhs, op);
}

std::vector<FuzzySubset> enumerate_grid_fuzzy_ideals(const Hemiring& H,
                                                     int grid_denominator,
                                                     IdealKind kind,
                                                     const Config& cfg) {
  if (grid_denominator < 1) throw domain_error("grid denominator must be >= 1");
  const IdealFamily fam = enumerate_ideals(H, kind, cfg);
  const int d = grid_denominator;
  if (static_cast<std::int64_t>(d) * static_cast<std::int64_t>(fam.members.size()) >
      cfg.fuzzy_family_budget)
    throw capacity_error("grid level count exceeds the fuzzy family budget");

  // A grid fuzzy ideal is exactly an antitone chain c[d] ⊆ ... ⊆ c[1] of
  // family members or the empty set; its value at x is the largest level
  // whose set contains x.
  std::vector<FuzzySubset> out;
  std::vector<Mask> chain(static_cast<std::size_t>(d), 0);

  auto emit = [&]() {
    if (static_cast<std::int64_t>(out.size()) >= cfg.fuzzy_family_budget)
      throw capacity_error("grid fuzzy ideal family exceeds the configured budget");
    FuzzySubset f = constant_fuzzy(H, Rat::zero());
    for (int level = d; level >= 1; --level)
      for (Mask m = chain[static_cast<std::size_t>(level - 1)]; m; m &= m - 1) {
        const int e = std::countr_zero(m);
        if (f.values[static_cast<std::size_t>(e)].is_zero())
          f.values[static_cast<std::size_t>(e)] = Rat(level, d);
      }
    out.push_back(std::move(f));
  };

  // chain index i holds the level-(i+1) set; recursion fills from the top
  // level (smallest set) down, `prev` being the set one level up.
  auto rec = [&](auto&& self, int level, Mask prev) -> void {
    if (level == 0) {
      emit();
      return;
    }
    if (prev == 0) {
      chain[static_cast<std::size_t>(level - 1)] = 0;
      self(self, level - 1, 0);
    }
    for (Mask m : fam.members)
      if (mask_subset(prev, m)) {
        chain[static_cast<std::size_t>(level - 1)] = m;
        self(self, level - 1, m);
      }
  };
  rec(rec, d, 0);
  return out;
}

bool h_prime_condition(const FuzzySubset& d, const std::vector<FuzzySubset>& family) {
  for (const FuzzySubset& a : family)
    for (const FuzzySubset& b : family)
      if (pointwise_leq(h_intrinsic_product(a, b), d) &&
          !pointwise_leq(a, d) && !pointwise_leq(b, d))
        return false;
  return true;
}

bool h_semiprime_condition(const FuzzySubset& d, const std::vector<FuzzySubset>& family) {
  for (const FuzzySubset& a : family)
    if (pointwise_leq(h_intrinsic_product(a, a), d) && !pointwise_leq(a, d))
      return false;
  return true;
}

bool irreducible_condition(const FuzzySubset& d, const std::vector<FuzzySubset>& family) {
  for (const FuzzySubset& a : family)
    for (const FuzzySubset& b : family)
      if (pointwise_meet(a, b) == d && !(a == d) && !(b == d))
        return false;
  return true;
}

FuzzyClassification classify_fuzzy(const FuzzySubset& d,
                                   const std::vector<FuzzySubset>& family,
                                   const Config& cfg) {
  const Hemiring& H = parent_of(d);
  const FuzzyCheck hcheck = is_fuzzy_ideal_of_kind(d, IdealKind::h);
  if (!hcheck.ok)
    throw domain_error("classify_fuzzy requires a fuzzy h-ideal (failed: " + hcheck.axiom + ")");

  for (const Rat& v : d.values)
    if (cfg.grid_denominator % v.den != 0)
      throw domain_error("classification grid does not cover the membership value " + v.str());

  FuzzyClassification c;
  c.is_constant = is_constant(d);
  c.idempotent = h_intrinsic_product(d, d) == d;
  if (c.is_constant) {
    c.precondition_note = "non-constant required";
    return c;
  }

  const int n = H.order();

  // Second sense, direct: for each pair the strongest threshold that the
  // hypothesis can reach is min over x of d(a·x·b).
  bool p2 = true;
  for (int a = 0; a < n && p2; ++a)
    for (int b = 0; b < n; ++b) {
      Rat t = Rat::one();
      for (int x = 0; x < n; ++x) t = rat_min(t, d.at(H.mul(H.mul(a, x), b)));
      if (rat_max(d.at(a), d.at(b)) < t) {
        p2 = false;
        c.prime2_witness = {a, b};
        break;
      }
    }
  c.prime2 = p2;

  bool sp2 = true;
  for (int a = 0; a < n; ++a) {
    Rat t = Rat::one();
    for (int x = 0; x < n; ++x) t = rat_min(t, d.at(H.mul(H.mul(a, x), a)));
    if (d.at(a) < t) {
      sp2 = false;
      c.semiprime2_witness = a;
      break;
    }
  }
  c.semiprime2 = sp2;

  // Second sense via proper level sets, element-wise per classification.
  const IdealFamily F = enumerate_h_ideals(H, cfg);
  bool p2l = true, sp2l = true;
  for (const Rat& t : image(d)) {
    const Mask u = level_set(d, t);
    if (u == 0 || u == H.full_mask()) continue;
    const Classification cl = classify_h_ideal(H, u, F);
    p2l = p2l && cl.prime_elementwise;
    sp2l = sp2l && cl.semiprime_elementwise;
  }
  c.prime2_levels = p2l;
  c.semiprime2_levels = sp2l;
  c.prime2_agree = (*c.prime2 == p2l);
  c.semiprime2_agree = (*c.semiprime2 == sp2l);

  // First sense over the supplied grid family.
  c.h_prime = h_prime_condition(d, family);
  c.h_semiprime = h_semiprime_condition(d, family);
  c.irreducible = irreducible_condition(d, family);

  if (H.commutative_mul() && H.identity()) {
    bool pid = true;
    for (int a = 0; a < n && pid; ++a)
      for (int b = 0; b < n; ++b)
        if (d.at(H.mul(a, b)) != rat_max(d.at(a), d.at(b))) {
          pid = false;
          break;
        }
    bool sid = true;
    for (int a = 0; a < n; ++a)
      if (d.at(H.mul(a, a)) != d.at(a)) {
        sid = false;
        break;
      }
    c.product_identity_prime = pid;
    c.square_identity_semiprime = sid;
    c.identity_shortcuts_agree = (pid == *c.prime2) && (sid == *c.semiprime2);
  }

  return c;
}

} // namespace hemiring
