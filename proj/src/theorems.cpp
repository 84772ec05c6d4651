#include "hemiring/theorems.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <random>

#include "hemiring/fuzzy.hpp"
#include "hemiring/fuzzy_oracle.hpp"
#include "hemiring/subsets.hpp"

namespace hemiring {

using json = nlohmann::ordered_json;

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::holds: return "holds";
    case CheckStatus::fails: return "fails";
    case CheckStatus::vacuous: return "vacuous";
    case CheckStatus::error: return "error";
  }
  return "?";
}

namespace {

struct Outcome {
  CheckStatus status = CheckStatus::holds;
  json witness = nullptr;
  json scope = json::object();
};

struct Ctx {
  const Hemiring& H;
  const Config& cfg;

  Ctx(const Hemiring& h, const Config& c) : H(h), cfg(c) {}

  std::map<IdealKind, IdealFamily> crisp_;
  std::map<IdealKind, std::vector<FuzzySubset>> fuzzy_;
  std::vector<std::vector<FuzzySubset>> odot_;  // over fuzzy(h) pairs
  bool odot_ready = false;

  const IdealFamily& crisp(IdealKind k) {
    auto it = crisp_.find(k);
    if (it == crisp_.end())
      it = crisp_.emplace(k, enumerate_ideals(H, k, cfg)).first;
    return it->second;
  }

  const std::vector<FuzzySubset>& fuzzy(IdealKind k) {
    auto it = fuzzy_.find(k);
    if (it == fuzzy_.end())
      it = fuzzy_.emplace(k, enumerate_grid_fuzzy_ideals(H, cfg.grid_denominator, k, cfg)).first;
    return it->second;
  }

  // Pairwise h-intrinsic products over the two-sided grid fuzzy h-ideal
  // family; several statements quantify over exactly these.
  const std::vector<std::vector<FuzzySubset>>& odot() {
    if (!odot_ready) {
      const auto& fam = fuzzy(IdealKind::h);
      odot_.assign(fam.size(), {});
      for (std::size_t i = 0; i < fam.size(); ++i) {
        odot_[i].reserve(fam.size());
        for (std::size_t j = 0; j < fam.size(); ++j)
          odot_[i].push_back(h_intrinsic_product(fam[i], fam[j]));
      }
      odot_ready = true;
    }
    return odot_;
  }

  Mask full() const { return H.full_mask(); }
  json j_elem(int e) const { return H.element_name(e); }
  json j_mask(Mask m) const { return mask_to_names(H, m); }
  json j_fuzzy(const FuzzySubset& f) const {
    json v;
    for (int e = 0; e < f.order(); ++e) v[H.element_name(e)] = f.at(e).str();
    return v;
  }

  std::mt19937_64 rng(const std::string& id) const {
    std::uint64_t seed = 0xabcdef1234567ULL;
    for (char c : id) seed = seed * 131 + static_cast<unsigned char>(c);
    for (char c : H.name()) seed = seed * 131 + static_cast<unsigned char>(c);
    return std::mt19937_64(seed);
  }

  FuzzySubset random_fuzzy(std::mt19937_64& rng) const {
    FuzzySubset f = constant_fuzzy(H, Rat::zero());
    for (auto& v : f.values)
      v = Rat(static_cast<std::int64_t>(rng() % (cfg.grid_denominator + 1)),
              cfg.grid_denominator);
    return f;
  }
};

// ---- shared predicates -----------------------------------------------------

bool crisp_all_h_idempotent(Ctx& c, Mask* witness = nullptr) {
  for (Mask a : c.crisp(IdealKind::h).members)
    if (h_closure(c.H, product_set(c.H, a, a)) != a) {
      if (witness) *witness = a;
      return false;
    }
  return true;
}

bool fuzzy_all_idempotent(Ctx& c, std::size_t* witness = nullptr) {
  const auto& fam = c.fuzzy(IdealKind::h);
  const auto& prod = c.odot();
  for (std::size_t i = 0; i < fam.size(); ++i)
    if (!(prod[i][i] == fam[i])) {
      if (witness) *witness = i;
      return false;
    }
  return true;
}

bool fuzzy_product_is_meet(Ctx& c, std::pair<std::size_t, std::size_t>* witness = nullptr) {
  const auto& fam = c.fuzzy(IdealKind::h);
  const auto& prod = c.odot();
  for (std::size_t i = 0; i < fam.size(); ++i)
    for (std::size_t j = 0; j < fam.size(); ++j)
      if (!(prod[i][j] == pointwise_meet(fam[i], fam[j]))) {
        if (witness) *witness = {i, j};
        return false;
      }
  return true;
}

bool prime_pairwise(Ctx& c, const IdealFamily& F, Mask p) {
  for (Mask a : F.members)
    for (Mask b : F.members)
      if (mask_subset(product_set(c.H, a, b), p) &&
          !mask_subset(a, p) && !mask_subset(b, p))
        return false;
  return true;
}

bool semiprime_pairwise(Ctx& c, const IdealFamily& F, Mask p) {
  for (Mask b : F.members)
    if (mask_subset(product_set(c.H, b, b), p) && !mask_subset(b, p)) return false;
  return true;
}

bool prime_elementwise(Ctx& c, Mask p) {
  for (int a = 0; a < c.H.order(); ++a)
    for (int b = 0; b < c.H.order(); ++b)
      if (!mask_contains(p, a) && !mask_contains(p, b) &&
          mask_subset(sandwich_set(c.H, a, b), p))
        return false;
  return true;
}

bool semiprime_elementwise(Ctx& c, Mask p) {
  for (int a = 0; a < c.H.order(); ++a)
    if (!mask_contains(p, a) && mask_subset(sandwich_set(c.H, a, a), p)) return false;
  return true;
}

bool irreducible_crisp(const IdealFamily& F, Mask p) {
  for (Mask a : F.members)
    for (Mask b : F.members)
      if ((a & b) == p && a != p && b != p) return false;
  return true;
}

bool prime2_direct(const Hemiring& H, const FuzzySubset& d,
                   std::pair<int, int>* witness = nullptr) {
  for (int a = 0; a < H.order(); ++a)
    for (int b = 0; b < H.order(); ++b) {
      Rat t = Rat::one();
      for (int x = 0; x < H.order(); ++x) t = rat_min(t, d.at(H.mul(H.mul(a, x), b)));
      if (rat_max(d.at(a), d.at(b)) < t) {
        if (witness) *witness = {a, b};
        return false;
      }
    }
  return true;
}

bool semiprime2_direct(const Hemiring& H, const FuzzySubset& d, int* witness = nullptr) {
  for (int a = 0; a < H.order(); ++a) {
    Rat t = Rat::one();
    for (int x = 0; x < H.order(); ++x) t = rat_min(t, d.at(H.mul(H.mul(a, x), a)));
    if (d.at(a) < t) {
      if (witness) *witness = a;
      return false;
    }
  }
  return true;
}

json scope_fuzzy(Ctx& c, std::initializer_list<IdealKind> kinds) {
  json s;
  s["grid_D"] = c.cfg.grid_denominator;
  for (IdealKind k : kinds)
    s[std::string("fuzzy_") + kind_name(k)] = c.fuzzy(k).size();
  return s;
}

json scope_crisp(Ctx& c, std::initializer_list<IdealKind> kinds) {
  json s;
  for (IdealKind k : kinds)
    s[std::string("crisp_") + kind_name(k)] = c.crisp(k).members.size();
  return s;
}

// ---- statement checks ------------------------------------------------------

Outcome check_L2_1(Ctx& c) {
  Outcome o;
  o.scope = scope_crisp(c, {IdealKind::left_h, IdealKind::right_h});
  for (IdealKind k : {IdealKind::left_h, IdealKind::right_h}) {
    const auto& fam = c.crisp(k).members;
    for (std::size_t i = 0; i < fam.size(); ++i)
      for (std::size_t j = i + 1; j < fam.size(); ++j) {
        const Mask m = fam[i] & fam[j];
        const auto chk = is_ideal_of_kind(c.H, m, k);
        if (!chk.ok) {
          o.status = CheckStatus::fails;
          o.witness = {{"kind", kind_name(k)},
                       {"A", c.j_mask(fam[i])},
                       {"B", c.j_mask(fam[j])},
                       {"intersection", c.j_mask(m)},
                       {"failed_condition", chk.condition}};
          return o;
        }
      }
  }
  return o;
}

Outcome check_L2_2(Ctx& c) {
  Outcome o;
  o.scope = scope_crisp(c, {IdealKind::left, IdealKind::right, IdealKind::two_sided});
  o.scope["note"] = "quantified over pairs of ideals of matching sidedness";
  for (IdealKind k : {IdealKind::left, IdealKind::right, IdealKind::two_sided}) {
    const auto& fam = c.crisp(k).members;
    for (Mask a : fam)
      for (Mask b : fam) {
        const Mask lhs = h_closure(c.H, product_set(c.H, a, b));
        const Mask rhs = h_closure(
            c.H, product_set(c.H, h_closure(c.H, a), h_closure(c.H, b)));
        if (lhs != rhs) {
          o.status = CheckStatus::fails;
          o.witness = {{"kind", kind_name(k)},
                       {"A", c.j_mask(a)},
                       {"B", c.j_mask(b)},
                       {"closure_of_product", c.j_mask(lhs)},
                       {"closure_of_closure_product", c.j_mask(rhs)}};
          return o;
        }
      }
  }
  return o;
}

Outcome check_L2_3(Ctx& c) {
  Outcome o;
  o.scope = scope_crisp(c, {IdealKind::right_h, IdealKind::left_h});
  for (Mask a : c.crisp(IdealKind::right_h).members)
    for (Mask b : c.crisp(IdealKind::left_h).members) {
      const Mask prod = h_closure(c.H, product_set(c.H, a, b));
      if (!mask_subset(prod, a & b)) {
        o.status = CheckStatus::fails;
        o.witness = {{"A", c.j_mask(a)},
                     {"B", c.j_mask(b)},
                     {"closure_of_product", c.j_mask(prod)},
                     {"intersection", c.j_mask(a & b)}};
        return o;
      }
    }
  return o;
}

Outcome check_L2_5(Ctx& c) {
  Outcome o;
  o.scope = scope_crisp(c, {IdealKind::right_h, IdealKind::left_h});
  const bool regular = is_h_hemiregular(c.H).ok;
  bool products_meet = true;
  json pair_witness = nullptr;
  for (Mask a : c.crisp(IdealKind::right_h).members) {
    for (Mask b : c.crisp(IdealKind::left_h).members) {
      const Mask prod = h_closure(c.H, product_set(c.H, a, b));
      if (prod != (a & b)) {
        products_meet = false;
        pair_witness = {{"A", c.j_mask(a)}, {"B", c.j_mask(b)},
                        {"closure_of_product", c.j_mask(prod)},
                        {"intersection", c.j_mask(a & b)}};
        break;
      }
    }
    if (!products_meet) break;
  }
  if (regular != products_meet) {
    o.status = CheckStatus::fails;
    o.witness = {{"h_hemiregular", regular}, {"all_products_equal_meets", products_meet}};
    if (!pair_witness.is_null()) o.witness["pair"] = pair_witness;
    if (!regular)
      o.witness["failing_element"] = c.j_elem(*is_h_hemiregular(c.H).failing_element);
  }
  return o;
}

Outcome check_Transfer(Ctx& c) {
  Outcome o;
  const int d = c.cfg.grid_denominator;
  const int n = c.H.order();
  double total = 1;
  for (int i = 0; i < n; ++i) total *= d + 1;
  const bool exhaustive = total <= 20000;
  const long count = exhaustive ? static_cast<long>(total) : 4000;
  o.scope = {{"grid_D", d}, {"exhaustive", exhaustive}, {"fuzzy_subsets_checked", count}};

  auto check_one = [&](const FuzzySubset& f) -> json {
    for (IdealKind k : {IdealKind::left, IdealKind::right, IdealKind::two_sided,
                        IdealKind::k, IdealKind::h}) {
      const bool direct = is_fuzzy_ideal_of_kind(f, k, FuzzyMethod::direct).ok;
      const bool levels = is_fuzzy_ideal_of_kind(f, k, FuzzyMethod::levels).ok;
      if (direct != levels)
        return {{"fuzzy_subset", c.j_fuzzy(f)}, {"kind", kind_name(k)},
                {"direct", direct}, {"levels", levels}};
    }
    return nullptr;
  };

  if (exhaustive) {
    std::vector<int> digits(static_cast<std::size_t>(n), 0);
    for (;;) {
      FuzzySubset f = constant_fuzzy(c.H, Rat::zero());
      for (int i = 0; i < n; ++i) f.values[static_cast<std::size_t>(i)] = Rat(digits[static_cast<std::size_t>(i)], d);
      if (json w = check_one(f); !w.is_null()) {
        o.status = CheckStatus::fails;
        o.witness = std::move(w);
        return o;
      }
      int i = 0;
      while (i < n && ++digits[static_cast<std::size_t>(i)] > d) digits[static_cast<std::size_t>(i++)] = 0;
      if (i == n) break;
    }
  } else {
    auto rng = c.rng("Transfer");
    for (long s = 0; s < count; ++s) {
      const FuzzySubset f = c.random_fuzzy(rng);
      if (json w = check_one(f); !w.is_null()) {
        o.status = CheckStatus::fails;
        o.witness = std::move(w);
        return o;
      }
    }
  }
  return o;
}

Outcome check_P2_8(Ctx& c) {
  Outcome o;
  const int d = c.cfg.grid_denominator;
  o.scope = {{"grid_D", d}, {"subsets", (1u << c.H.order()) - 1}};
  for (Mask a = 1; a <= c.full(); ++a)
    for (int s = 0; s < d; ++s)
      for (int t = s + 1; t <= d; ++t) {
        const FuzzySubset f = two_valued_indicator(c.H, a, Rat(t, d), Rat(s, d));
        for (IdealKind k : {IdealKind::left, IdealKind::right, IdealKind::two_sided,
                            IdealKind::k, IdealKind::h}) {
          const bool fuzzy_side = is_fuzzy_ideal_of_kind(f, k).ok;
          const bool crisp_side = is_ideal_of_kind(c.H, a, k).ok;
          if (fuzzy_side != crisp_side) {
            o.status = CheckStatus::fails;
            o.witness = {{"A", c.j_mask(a)}, {"t", Rat(t, d).str()}, {"s", Rat(s, d).str()},
                         {"kind", kind_name(k)}, {"fuzzy", fuzzy_side}, {"crisp", crisp_side}};
            return o;
          }
        }
      }
  return o;
}

Outcome check_P2_9(Ctx& c) {
  Outcome o;
  const int d = c.cfg.grid_denominator;
  o.scope = {{"grid_D", d}};
  for (Mask a = 1; a <= c.full(); ++a)
    for (Mask b = 1; b <= c.full(); ++b)
      for (int s = 0; s < d; ++s)
        for (int t = s + 1; t <= d; ++t) {
          const Rat rt(t, d), rs(s, d);
          const FuzzySubset fa = two_valued_indicator(c.H, a, rt, rs);
          const FuzzySubset fb = two_valued_indicator(c.H, b, rt, rs);
          const bool incl = mask_subset(a, b);
          if (incl != pointwise_leq(fa, fb)) {
            o.status = CheckStatus::fails;
            o.witness = {{"part", 1}, {"A", c.j_mask(a)}, {"B", c.j_mask(b)},
                         {"t", rt.str()}, {"s", rs.str()}};
            return o;
          }
          const FuzzySubset meet = pointwise_meet(fa, fb);
          const FuzzySubset fab = two_valued_indicator(c.H, a & b, rt, rs);
          if (!(meet == fab)) {
            o.status = CheckStatus::fails;
            o.witness = {{"part", 2}, {"A", c.j_mask(a)}, {"B", c.j_mask(b)},
                         {"t", rt.str()}, {"s", rs.str()}};
            return o;
          }
        }
  return o;
}

Outcome biconditional_regular_vs_products(Ctx& c, FuzzyOp op, const char* op_name) {
  Outcome o;
  o.scope = scope_fuzzy(c, {IdealKind::right_h, IdealKind::left_h});
  o.scope["note"] = "one-sided grid families enumerated from level chains";
  const bool regular = is_h_hemiregular(c.H).ok;
  bool all_meet = true;
  json pair_witness = nullptr;
  for (const FuzzySubset& l : c.fuzzy(IdealKind::right_h)) {
    for (const FuzzySubset& r : c.fuzzy(IdealKind::left_h)) {
      const FuzzySubset prod = apply_fuzzy_op(l, r, op);
      if (!(prod == pointwise_meet(l, r))) {
        all_meet = false;
        pair_witness = {{"lambda", c.j_fuzzy(l)}, {"mu", c.j_fuzzy(r)},
                        {op_name, c.j_fuzzy(prod)},
                        {"meet", c.j_fuzzy(pointwise_meet(l, r))}};
        break;
      }
    }
    if (!all_meet) break;
  }
  if (regular != all_meet) {
    o.status = CheckStatus::fails;
    o.witness = {{"h_hemiregular", regular}, {"all_products_equal_meets", all_meet}};
    if (!pair_witness.is_null()) o.witness["pair"] = pair_witness;
  }
  return o;
}

Outcome check_T2_11(Ctx& c) {
  return biconditional_regular_vs_products(c, FuzzyOp::h_product, "h_product");
}

Outcome check_T3_4(Ctx& c) {
  return biconditional_regular_vs_products(c, FuzzyOp::h_intrinsic, "h_intrinsic_product");
}

Outcome check_P3_2(Ctx& c) {
  Outcome o;
  auto rng = c.rng("P3.2");
  const int samples = c.cfg.sample_pairs;
  o.scope = {{"grid_D", c.cfg.grid_denominator},
             {"sampled_pairs", samples},
             {"indicator_pairs", "all non-empty subset pairs"}};

  // (3) characteristic functions turn the product into the crisp one.
  for (Mask a = 1; a <= c.full(); ++a)
    for (Mask b = 1; b <= c.full(); ++b) {
      const FuzzySubset ca = characteristic(c.H, a);
      const FuzzySubset cb = characteristic(c.H, b);
      const FuzzySubset prod = h_intrinsic_product(ca, cb);
      const FuzzySubset expect = characteristic(c.H, h_closure(c.H, product_set(c.H, a, b)));
      if (!(prod == expect)) {
        o.status = CheckStatus::fails;
        o.witness = {{"part", 3}, {"A", c.j_mask(a)}, {"B", c.j_mask(b)},
                     {"product", c.j_fuzzy(prod)}, {"expected", c.j_fuzzy(expect)}};
        return o;
      }
      if (!pointwise_leq(h_product(ca, cb), prod)) {
        o.status = CheckStatus::fails;
        o.witness = {{"part", 1}, {"A", c.j_mask(a)}, {"B", c.j_mask(b)}};
        return o;
      }
    }

  // (1) and (2) over sampled grid fuzzy subsets.
  for (int s = 0; s < samples; ++s) {
    const FuzzySubset mu = c.random_fuzzy(rng);
    const FuzzySubset nu = c.random_fuzzy(rng);
    if (!pointwise_leq(h_product(mu, nu), h_intrinsic_product(mu, nu))) {
      o.status = CheckStatus::fails;
      o.witness = {{"part", 1}, {"mu", c.j_fuzzy(mu)}, {"nu", c.j_fuzzy(nu)}};
      return o;
    }
    const FuzzySubset omega = pointwise_join(mu, c.random_fuzzy(rng));
    const FuzzySubset lambda = pointwise_join(nu, c.random_fuzzy(rng));
    if (!pointwise_leq(h_intrinsic_product(mu, nu), h_intrinsic_product(omega, lambda))) {
      o.status = CheckStatus::fails;
      o.witness = {{"part", 2}, {"mu", c.j_fuzzy(mu)}, {"nu", c.j_fuzzy(nu)},
                   {"omega", c.j_fuzzy(omega)}, {"lambda", c.j_fuzzy(lambda)}};
      return o;
    }
  }
  return o;
}

Outcome check_T3_3(Ctx& c) {
  Outcome o;
  o.scope = scope_fuzzy(c, {IdealKind::h});
  const auto& fam = c.fuzzy(IdealKind::h);
  const auto& prod = c.odot();
  for (std::size_t i = 0; i < fam.size(); ++i)
    for (std::size_t j = 0; j < fam.size(); ++j) {
      const auto chk = is_fuzzy_ideal_of_kind(prod[i][j], IdealKind::h);
      if (!chk.ok || !pointwise_leq(prod[i][j], pointwise_meet(fam[i], fam[j]))) {
        o.status = CheckStatus::fails;
        o.witness = {{"lambda", c.j_fuzzy(fam[i])}, {"mu", c.j_fuzzy(fam[j])},
                     {"product", c.j_fuzzy(prod[i][j])},
                     {"is_fuzzy_h_ideal", chk.ok}};
        return o;
      }
    }
  return o;
}

Outcome check_C3_5(Ctx& c) {
  Outcome o;
  o.scope = scope_fuzzy(c, {IdealKind::h});
  if (!is_h_hemiregular(c.H).ok) {
    o.status = CheckStatus::vacuous;
    o.scope["hypothesis"] = "not h-hemiregular";
    return o;
  }
  const auto& fam = c.fuzzy(IdealKind::h);
  const auto& prod = c.odot();
  for (std::size_t i = 0; i < fam.size(); ++i)
    for (std::size_t j = 0; j < fam.size(); ++j)
      if (!(h_product(fam[i], fam[j]) == prod[i][j])) {
        o.status = CheckStatus::fails;
        o.witness = {{"lambda", c.j_fuzzy(fam[i])}, {"mu", c.j_fuzzy(fam[j])}};
        return o;
      }
  return o;
}

Outcome check_P4_1(Ctx& c) {
  Outcome o;
  const auto& F = c.crisp(IdealKind::h);
  o.scope = scope_crisp(c, {IdealKind::h});

  const bool s1 = crisp_all_h_idempotent(c);
  bool s2 = true;
  for (Mask a : F.members)
    for (Mask b : F.members)
      s2 = s2 && ((a & b) == h_closure(c.H, product_set(c.H, a, b)));

  auto rxrxr = [&](Mask x) {
    const Mask full = c.full();
    Mask m = product_set(c.H, full, x);
    m = product_set(c.H, m, full);
    m = product_set(c.H, m, x);
    m = product_set(c.H, m, full);
    return h_closure(c.H, m);
  };
  bool s3 = true;
  for (int x = 0; x < c.H.order(); ++x)
    s3 = s3 && mask_contains(rxrxr(mask_of(x)), x);
  bool s4 = true;
  for (Mask a = 1; a <= c.full(); ++a) s4 = s4 && mask_subset(a, rxrxr(a));
  bool s5 = true;
  for (Mask a : F.members) s5 = s5 && (rxrxr(a) == a);

  const bool all = s1 && s2 && s3 && s4 && s5;
  const bool none = !s1 && !s2 && !s3 && !s4 && !s5;
  if (!all && !none) {
    o.status = CheckStatus::fails;
    o.witness = {{"all_h_ideals_idempotent", s1},
                 {"meets_equal_products", s2},
                 {"x_in_RxRxR", s3},
                 {"A_subset_RARAR", s4},
                 {"h_ideals_equal_RARAR", s5}};
  }
  return o;
}

Outcome check_C4_2(Ctx& c) {
  Outcome o;
  o.scope = scope_crisp(c, {IdealKind::h});
  if (!c.H.commutative_mul()) {
    o.status = CheckStatus::vacuous;
    o.scope["hypothesis"] = "not commutative";
    return o;
  }
  const bool regular = is_h_hemiregular(c.H).ok;
  const bool idem = crisp_all_h_idempotent(c);
  if (regular != idem) {
    o.status = CheckStatus::fails;
    o.witness = {{"h_hemiregular", regular}, {"all_h_ideals_idempotent", idem}};
  }
  return o;
}

Outcome check_P4_3(Ctx& c) {
  Outcome o;
  o.scope = scope_fuzzy(c, {IdealKind::h});
  std::size_t wi = 0;
  std::pair<std::size_t, std::size_t> wp{0, 0};
  const bool idem = fuzzy_all_idempotent(c, &wi);
  const bool meets = fuzzy_product_is_meet(c, &wp);
  if (idem != meets) {
    o.status = CheckStatus::fails;
    const auto& fam = c.fuzzy(IdealKind::h);
    o.witness = {{"all_fuzzy_h_ideals_idempotent", idem},
                 {"products_equal_meets", meets}};
    if (!idem) o.witness["non_idempotent"] = c.j_fuzzy(fam[wi]);
    if (!meets) {
      o.witness["lambda"] = c.j_fuzzy(fam[wp.first]);
      o.witness["mu"] = c.j_fuzzy(fam[wp.second]);
    }
  }
  return o;
}

Outcome check_C4_4(Ctx& c) {
  Outcome o;
  o.scope = scope_fuzzy(c, {IdealKind::h});
  if (!c.H.commutative_mul()) {
    o.status = CheckStatus::vacuous;
    o.scope["hypothesis"] = "not commutative";
    return o;
  }
  const bool regular = is_h_hemiregular(c.H).ok;
  const bool idem = fuzzy_all_idempotent(c);
  const bool meets = fuzzy_product_is_meet(c);
  if (regular != idem || idem != meets) {
    o.status = CheckStatus::fails;
    o.witness = {{"h_hemiregular", regular},
                 {"all_fuzzy_h_ideals_idempotent", idem},
                 {"products_equal_meets", meets}};
  }
  return o;
}

Outcome check_T4_5(Ctx& c) {
  Outcome o;
  o.scope = scope_fuzzy(c, {IdealKind::h});
  if (!c.H.identity()) {
    o.status = CheckStatus::vacuous;
    o.scope["hypothesis"] = "no identity";
    return o;
  }
  const bool s1 = crisp_all_h_idempotent(c);
  bool s2 = true;
  const auto& F = c.crisp(IdealKind::h);
  for (Mask a : F.members)
    for (Mask b : F.members)
      s2 = s2 && ((a & b) == h_closure(c.H, product_set(c.H, a, b)));
  const bool s3 = fuzzy_all_idempotent(c);
  const bool s4 = fuzzy_product_is_meet(c);
  if (!(s1 == s2 && s2 == s3 && s3 == s4)) {
    o.status = CheckStatus::fails;
    o.witness = {{"all_h_ideals_idempotent", s1},
                 {"meets_equal_products", s2},
                 {"all_fuzzy_h_ideals_idempotent", s3},
                 {"fuzzy_products_equal_meets", s4}};
  }
  return o;
}

Outcome check_T4_7(Ctx& c) {
  Outcome o;
  o.scope = scope_fuzzy(c, {IdealKind::h});
  const auto& fam = c.fuzzy(IdealKind::h);
  for (const FuzzySubset& l : fam)
    for (const FuzzySubset& r : fam) {
      const FuzzySubset s = h_sum(l, r);
      const auto chk = is_fuzzy_ideal_of_kind(s, IdealKind::h);
      if (!chk.ok) {
        o.status = CheckStatus::fails;
        o.witness = {{"lambda", c.j_fuzzy(l)}, {"mu", c.j_fuzzy(r)},
                     {"h_sum", c.j_fuzzy(s)}, {"failed_axiom", chk.axiom}};
        return o;
      }
    }
  return o;
}

Outcome check_T4_8(Ctx& c) {
  Outcome o;
  const auto& F = c.crisp(IdealKind::h);
  o.scope = scope_crisp(c, {IdealKind::h});
  if (!crisp_all_h_idempotent(c)) {
    o.status = CheckStatus::vacuous;
    o.scope["hypothesis"] = "not all h-ideals h-idempotent";
    return o;
  }
  for (Mask a : F.members)
    for (Mask b : F.members) {
      const Mask join = family_join(c.H, a, b);
      const Mask meet = family_meet(a, b);
      const bool join_in = std::find(F.members.begin(), F.members.end(), join) != F.members.end();
      const bool meet_in = std::find(F.members.begin(), F.members.end(), meet) != F.members.end();
      if (!join_in || !meet_in) {
        o.status = CheckStatus::fails;
        o.witness = {{"A", c.j_mask(a)}, {"B", c.j_mask(b)},
                     {"join_in_family", join_in}, {"meet_in_family", meet_in}};
        return o;
      }
    }
  if (!family_is_brouwerian(c.H, F)) {
    o.status = CheckStatus::fails;
    o.witness = {{"brouwerian", false}};
  }
  return o;
}

Outcome check_C4_9(Ctx& c) {
  Outcome o;
  o.scope = scope_crisp(c, {IdealKind::h});
  if (!crisp_all_h_idempotent(c)) {
    o.status = CheckStatus::vacuous;
    o.scope["hypothesis"] = "not all h-ideals h-idempotent";
    return o;
  }
  if (!family_is_distributive(c.H, c.crisp(IdealKind::h))) {
    o.status = CheckStatus::fails;
    o.witness = {{"distributive", false}};
  }
  return o;
}

Outcome check_T4_10(Ctx& c) {
  Outcome o;
  o.scope = scope_fuzzy(c, {IdealKind::h});
  o.scope["note"] =
      "lattice side checked as: products are meets, and h-sum distributes "
      "over meet";
  const auto& fam = c.fuzzy(IdealKind::h);
  const bool lhs = fuzzy_all_idempotent(c);
  const bool meets = fuzzy_product_is_meet(c);

  bool distributes = meets;
  json dist_witness = nullptr;
  if (meets) {
    // With products equal to meets, cache the pairwise sums and look meets up
    // in the family.
    std::map<std::vector<Rat>, std::size_t> index;
    for (std::size_t i = 0; i < fam.size(); ++i) index[fam[i].values] = i;
    std::vector<std::vector<FuzzySubset>> sums(fam.size());
    for (std::size_t i = 0; i < fam.size(); ++i) {
      sums[i].reserve(fam.size());
      for (std::size_t j = 0; j < fam.size(); ++j) sums[i].push_back(h_sum(fam[i], fam[j]));
    }
    for (std::size_t i = 0; i < fam.size() && distributes; ++i)
      for (std::size_t j = 0; j < fam.size() && distributes; ++j) {
        const FuzzySubset meet_ij = pointwise_meet(fam[i], fam[j]);
        const auto it = index.find(meet_ij.values);
        for (std::size_t m = 0; m < fam.size(); ++m) {
          const FuzzySubset lhs_sum =
              it != index.end() ? sums[it->second][m] : h_sum(meet_ij, fam[m]);
          const FuzzySubset rhs_meet = pointwise_meet(sums[i][m], sums[j][m]);
          if (!(lhs_sum == rhs_meet)) {
            distributes = false;
            dist_witness = {{"lambda", c.j_fuzzy(fam[i])}, {"delta", c.j_fuzzy(fam[j])},
                            {"mu", c.j_fuzzy(fam[m])}};
            break;
          }
        }
      }
  }
  const bool rhs = meets && distributes;
  if (lhs != rhs) {
    o.status = CheckStatus::fails;
    o.witness = {{"all_fuzzy_h_ideals_idempotent", lhs},
                 {"products_equal_meets", meets},
                 {"h_sum_distributes_over_meet", distributes}};
    if (!dist_witness.is_null()) o.witness["distributivity_pair"] = dist_witness;
  }
  return o;
}

Outcome elementwise_prime_equiv(Ctx& c, std::initializer_list<IdealKind> kinds, bool semi) {
  Outcome o;
  o.scope = scope_crisp(c, kinds);
  for (IdealKind k : kinds) {
    const auto& F = c.crisp(k);
    for (Mask p : F.members) {
      if (p == c.full()) continue;
      const bool pairwise = semi ? semiprime_pairwise(c, F, p) : prime_pairwise(c, F, p);
      const bool element = semi ? semiprime_elementwise(c, p) : prime_elementwise(c, p);
      if (pairwise != element) {
        o.status = CheckStatus::fails;
        o.witness = {{"kind", kind_name(k)}, {"P", c.j_mask(p)},
                     {"pairwise", pairwise}, {"elementwise", element}};
        return o;
      }
    }
  }
  return o;
}

Outcome check_T5_1(Ctx& c) {
  return elementwise_prime_equiv(c, {IdealKind::left_h, IdealKind::right_h}, false);
}

Outcome check_C5_2(Ctx& c) {
  return elementwise_prime_equiv(c, {IdealKind::h}, false);
}

Outcome check_T6_2(Ctx& c) {
  return elementwise_prime_equiv(c, {IdealKind::left_h, IdealKind::right_h, IdealKind::h}, true);
}

Outcome check_C5_3(Ctx& c) {
  Outcome o;
  o.scope = scope_crisp(c, {IdealKind::h});
  if (!c.H.commutative_mul() || !c.H.identity()) {
    o.status = CheckStatus::vacuous;
    o.scope["hypothesis"] = "not commutative with identity";
    return o;
  }
  const auto& F = c.crisp(IdealKind::h);
  for (Mask p : F.members) {
    if (p == c.full()) continue;
    const bool pairwise = prime_pairwise(c, F, p);
    bool products = true;
    for (int a = 0; a < c.H.order() && products; ++a)
      for (int b = 0; b < c.H.order(); ++b)
        if (mask_contains(p, c.H.mul(a, b)) && !mask_contains(p, a) && !mask_contains(p, b)) {
          products = false;
          break;
        }
    if (pairwise != products) {
      o.status = CheckStatus::fails;
      o.witness = {{"P", c.j_mask(p)}, {"pairwise", pairwise}, {"ab_test", products}};
      return o;
    }
  }
  return o;
}

Outcome check_C6_3(Ctx& c) {
  Outcome o;
  o.scope = scope_crisp(c, {IdealKind::h});
  if (!c.H.commutative_mul() || !c.H.identity()) {
    o.status = CheckStatus::vacuous;
    o.scope["hypothesis"] = "not commutative with identity";
    return o;
  }
  const auto& F = c.crisp(IdealKind::h);
  for (Mask p : F.members) {
    if (p == c.full()) continue;
    const bool pairwise = semiprime_pairwise(c, F, p);
    bool squares = true;
    for (int a = 0; a < c.H.order(); ++a)
      if (mask_contains(p, c.H.mul(a, a)) && !mask_contains(p, a)) {
        squares = false;
        break;
      }
    if (pairwise != squares) {
      o.status = CheckStatus::fails;
      o.witness = {{"P", c.j_mask(p)}, {"pairwise", pairwise}, {"square_test", squares}};
      return o;
    }
  }
  return o;
}

Outcome level_set_prime_equiv(Ctx& c, bool semi) {
  Outcome o;
  o.scope = scope_fuzzy(c, {IdealKind::h});
  const auto& F = c.crisp(IdealKind::h);
  bool any = false;
  for (const FuzzySubset& d : c.fuzzy(IdealKind::h)) {
    if (is_constant(d)) continue;
    any = true;
    const bool direct = semi ? semiprime2_direct(c.H, d) : prime2_direct(c.H, d);
    bool levels = true;
    for (const Rat& t : image(d)) {
      const Mask u = level_set(d, t);
      if (u == 0 || u == c.full()) continue;
      levels = levels && (semi ? semiprime_pairwise(c, F, u) : prime_pairwise(c, F, u));
    }
    if (direct != levels) {
      o.status = CheckStatus::fails;
      o.witness = {{"delta", c.j_fuzzy(d)}, {"second_sense", direct},
                   {"all_proper_levels", levels}};
      return o;
    }
  }
  if (!any) o.status = CheckStatus::vacuous;
  return o;
}

Outcome check_T5_5(Ctx& c) { return level_set_prime_equiv(c, false); }
Outcome check_T6_9(Ctx& c) { return level_set_prime_equiv(c, true); }

Outcome indicator_prime_equiv(Ctx& c, bool semi) {
  Outcome o;
  const int d = c.cfg.grid_denominator;
  o.scope = scope_crisp(c, {IdealKind::h});
  o.scope["grid_D"] = d;
  const auto& F = c.crisp(IdealKind::h);
  for (Mask a : F.members)
    for (int s = 0; s < d; ++s)
      for (int t = s + 1; t <= d; ++t) {
        const FuzzySubset f = two_valued_indicator(c.H, a, Rat(t, d), Rat(s, d));
        const bool fuzzy_prime =
            !is_constant(f) && (semi ? semiprime2_direct(c.H, f) : prime2_direct(c.H, f));
        const bool crisp_prime =
            a != c.full() && (semi ? semiprime_pairwise(c, F, a) : prime_pairwise(c, F, a));
        if (fuzzy_prime != crisp_prime) {
          o.status = CheckStatus::fails;
          o.witness = {{"A", c.j_mask(a)}, {"t", Rat(t, d).str()}, {"s", Rat(s, d).str()},
                       {"fuzzy", fuzzy_prime}, {"crisp", crisp_prime}};
          return o;
        }
      }
  return o;
}

Outcome check_C5_7(Ctx& c) { return indicator_prime_equiv(c, false); }
Outcome check_C6_10(Ctx& c) { return indicator_prime_equiv(c, true); }

Outcome check_P5_8(Ctx& c) {
  Outcome o;
  o.scope = scope_fuzzy(c, {IdealKind::h});
  if (!c.H.commutative_mul() || !c.H.identity()) {
    o.status = CheckStatus::vacuous;
    o.scope["hypothesis"] = "not commutative with identity";
    return o;
  }
  bool any = false;
  for (const FuzzySubset& d : c.fuzzy(IdealKind::h)) {
    if (is_constant(d)) continue;
    any = true;
    const bool prime = prime2_direct(c.H, d);
    bool identity = true;
    for (int a = 0; a < c.H.order() && identity; ++a)
      for (int b = 0; b < c.H.order(); ++b)
        if (d.at(c.H.mul(a, b)) != rat_max(d.at(a), d.at(b))) {
          identity = false;
          break;
        }
    if (prime != identity) {
      o.status = CheckStatus::fails;
      o.witness = {{"delta", c.j_fuzzy(d)}, {"prime_second_sense", prime},
                   {"product_identity", identity}};
      return o;
    }
  }
  if (!any) o.status = CheckStatus::vacuous;
  return o;
}

Outcome check_P6_11(Ctx& c) {
  Outcome o;
  o.scope = scope_fuzzy(c, {IdealKind::h});
  if (!c.H.commutative_mul() || !c.H.identity()) {
    o.status = CheckStatus::vacuous;
    o.scope["hypothesis"] = "not commutative with identity";
    return o;
  }
  bool any = false;
  for (const FuzzySubset& d : c.fuzzy(IdealKind::h)) {
    if (is_constant(d)) continue;
    any = true;
    const bool semiprime = semiprime2_direct(c.H, d);
    bool identity = true;
    for (int a = 0; a < c.H.order(); ++a)
      if (d.at(c.H.mul(a, a)) != d.at(a)) {
        identity = false;
        break;
      }
    if (semiprime != identity) {
      o.status = CheckStatus::fails;
      o.witness = {{"delta", c.j_fuzzy(d)}, {"semiprime_second_sense", semiprime},
                   {"square_identity", identity}};
      return o;
    }
  }
  if (!any) o.status = CheckStatus::vacuous;
  return o;
}

Outcome check_T5_9(Ctx& c) {
  Outcome o;
  const auto& F = c.crisp(IdealKind::h);
  o.scope = scope_crisp(c, {IdealKind::h});
  bool any = false;
  for (Mask p : F.members) {
    if (p == c.full()) continue;
    any = true;
    bool found = false;
    for (Mask m : F.members)
      if (m != c.full() && mask_subset(p, m) && irreducible_crisp(F, m)) {
        found = true;
        break;
      }
    if (!found) {
      o.status = CheckStatus::fails;
      o.witness = {{"P", c.j_mask(p)},
                   {"searched_family_size", F.members.size()}};
      return o;
    }
  }
  if (!any) o.status = CheckStatus::vacuous;
  return o;
}

Outcome check_T5_10(Ctx& c) {
  Outcome o;
  const auto& F = c.crisp(IdealKind::h);
  o.scope = scope_crisp(c, {IdealKind::h});
  if (!crisp_all_h_idempotent(c)) {
    o.status = CheckStatus::vacuous;
    o.scope["hypothesis"] = "not all h-ideals h-idempotent";
    return o;
  }
  bool any = false;
  for (Mask p : F.members) {
    if (p == c.full()) continue;
    any = true;
    const bool irred = irreducible_crisp(F, p);
    const bool prime = prime_pairwise(c, F, p);
    if (irred != prime) {
      o.status = CheckStatus::fails;
      o.witness = {{"P", c.j_mask(p)}, {"irreducible", irred}, {"prime", prime}};
      return o;
    }
  }
  if (!any) o.status = CheckStatus::vacuous;
  return o;
}

Outcome check_C5_11(Ctx& c) {
  Outcome o;
  const auto& F = c.crisp(IdealKind::h);
  o.scope = scope_crisp(c, {IdealKind::h});
  if (!crisp_all_h_idempotent(c)) {
    o.status = CheckStatus::vacuous;
    o.scope["hypothesis"] = "not all h-ideals h-idempotent";
    return o;
  }
  bool any = false;
  for (Mask p : F.members) {
    if (p == c.full()) continue;
    any = true;
    bool found = false;
    for (Mask q : F.members)
      if (q != c.full() && mask_subset(p, q) && prime_pairwise(c, F, q)) {
        found = true;
        break;
      }
    if (!found) {
      o.status = CheckStatus::fails;
      o.witness = {{"P", c.j_mask(p)}, {"searched_family_size", F.members.size()}};
      return o;
    }
  }
  if (!any) o.status = CheckStatus::vacuous;
  return o;
}

Outcome check_T5_12(Ctx& c) {
  Outcome o;
  o.scope = scope_fuzzy(c, {IdealKind::h});
  if (!fuzzy_all_idempotent(c)) {
    o.status = CheckStatus::vacuous;
    o.scope["hypothesis"] = "not all fuzzy h-ideals idempotent";
    return o;
  }
  const auto& fam = c.fuzzy(IdealKind::h);
  const auto& prod = c.odot();
  bool any = false;
  for (std::size_t di = 0; di < fam.size(); ++di) {
    const FuzzySubset& d = fam[di];
    if (is_constant(d)) continue;
    any = true;
    bool irred = true;
    for (std::size_t i = 0; i < fam.size() && irred; ++i)
      for (std::size_t j = 0; j < fam.size(); ++j)
        if (pointwise_meet(fam[i], fam[j]) == d && !(fam[i] == d) && !(fam[j] == d)) {
          irred = false;
          break;
        }
    bool hprime = true;
    for (std::size_t i = 0; i < fam.size() && hprime; ++i)
      for (std::size_t j = 0; j < fam.size(); ++j)
        if (pointwise_leq(prod[i][j], d) && !pointwise_leq(fam[i], d) &&
            !pointwise_leq(fam[j], d)) {
          hprime = false;
          break;
        }
    if (irred != hprime) {
      o.status = CheckStatus::fails;
      o.witness = {{"delta", c.j_fuzzy(d)}, {"irreducible", irred}, {"h_prime", hprime}};
      return o;
    }
  }
  if (!any) o.status = CheckStatus::vacuous;
  return o;
}

Outcome check_T5_13(Ctx& c) {
  Outcome o;
  const auto& F = c.crisp(IdealKind::h);
  o.scope = scope_crisp(c, {IdealKind::h});
  const bool idem = crisp_all_h_idempotent(c);

  bool intersections = true;
  json witness_p = nullptr;
  for (Mask p : F.members) {
    if (p == c.full()) continue;
    Mask inter = c.full();  // empty intersection convention
    for (Mask q : F.members)
      if (q != c.full() && mask_subset(p, q) && prime_pairwise(c, F, q)) inter &= q;
    if (inter != p) {
      intersections = false;
      witness_p = {{"P", c.j_mask(p)}, {"intersection_of_primes", c.j_mask(inter)}};
      break;
    }
  }
  if (idem != intersections) {
    o.status = CheckStatus::fails;
    o.witness = {{"all_h_ideals_idempotent", idem},
                 {"proper_ideals_are_prime_intersections", intersections}};
    if (!witness_p.is_null()) o.witness["pair"] = witness_p;
  }
  return o;
}

Outcome check_L5_14(Ctx& c) {
  Outcome o;
  o.scope = scope_fuzzy(c, {IdealKind::h});
  o.scope["note"] =
      "first-sense conditions evaluated without the non-constant qualifier";
  if (!fuzzy_all_idempotent(c)) {
    o.status = CheckStatus::vacuous;
    o.scope["hypothesis"] = "not all fuzzy h-ideals idempotent";
    return o;
  }
  const auto& fam = c.fuzzy(IdealKind::h);
  const auto& prod = c.odot();

  std::vector<bool> irred(fam.size(), true), hprime(fam.size(), true);
  for (std::size_t di = 0; di < fam.size(); ++di) {
    for (std::size_t i = 0; i < fam.size() && (irred[di] || hprime[di]); ++i)
      for (std::size_t j = 0; j < fam.size(); ++j) {
        if (irred[di] && pointwise_meet(fam[i], fam[j]) == fam[di] &&
            !(fam[i] == fam[di]) && !(fam[j] == fam[di]))
          irred[di] = false;
        if (hprime[di] && pointwise_leq(prod[i][j], fam[di]) &&
            !pointwise_leq(fam[i], fam[di]) && !pointwise_leq(fam[j], fam[di]))
          hprime[di] = false;
      }
  }

  for (const FuzzySubset& l : fam)
    for (int a = 0; a < c.H.order(); ++a) {
      bool found = false;
      for (std::size_t di = 0; di < fam.size(); ++di)
        if (irred[di] && hprime[di] && pointwise_leq(l, fam[di]) &&
            fam[di].at(a) == l.at(a)) {
          found = true;
          break;
        }
      if (!found) {
        o.status = CheckStatus::fails;
        o.witness = {{"lambda", c.j_fuzzy(l)}, {"a", c.j_elem(a)},
                     {"alpha", l.at(a).str()},
                     {"searched_family_size", fam.size()}};
        return o;
      }
    }
  return o;
}

Outcome check_T5_15(Ctx& c) {
  Outcome o;
  o.scope = scope_fuzzy(c, {IdealKind::h});
  o.scope["note"] =
      "first-sense conditions evaluated without the non-constant qualifier";
  const auto& fam = c.fuzzy(IdealKind::h);
  const auto& prod = c.odot();
  const bool idem = fuzzy_all_idempotent(c);

  std::vector<bool> hprime(fam.size(), true);
  for (std::size_t di = 0; di < fam.size(); ++di)
    for (std::size_t i = 0; i < fam.size() && hprime[di]; ++i)
      for (std::size_t j = 0; j < fam.size(); ++j)
        if (pointwise_leq(prod[i][j], fam[di]) && !pointwise_leq(fam[i], fam[di]) &&
            !pointwise_leq(fam[j], fam[di])) {
          hprime[di] = false;
          break;
        }

  bool intersections = true;
  json witness_l = nullptr;
  for (const FuzzySubset& l : fam) {
    FuzzySubset inter = constant_fuzzy(c.H, Rat::one());
    for (std::size_t di = 0; di < fam.size(); ++di)
      if (hprime[di] && pointwise_leq(l, fam[di])) inter = pointwise_meet(inter, fam[di]);
    if (!(inter == l)) {
      intersections = false;
      witness_l = {{"lambda", c.j_fuzzy(l)}, {"intersection", c.j_fuzzy(inter)}};
      break;
    }
  }
  if (idem != intersections) {
    o.status = CheckStatus::fails;
    o.witness = {{"all_fuzzy_h_ideals_idempotent", idem},
                 {"ideals_are_h_prime_intersections", intersections}};
    if (!witness_l.is_null()) o.witness["pair"] = witness_l;
  }
  return o;
}

Outcome check_T6_4(Ctx& c) {
  Outcome o;
  const auto& F = c.crisp(IdealKind::h);
  o.scope = scope_crisp(c, {IdealKind::h});
  const bool idem = crisp_all_h_idempotent(c);
  bool all_semiprime = true;
  json witness_p = nullptr;
  for (Mask p : F.members) {
    if (p == c.full()) continue;
    if (!semiprime_pairwise(c, F, p)) {
      all_semiprime = false;
      witness_p = c.j_mask(p);
      break;
    }
  }
  if (idem != all_semiprime) {
    o.status = CheckStatus::fails;
    o.witness = {{"all_h_ideals_idempotent", idem},
                 {"all_proper_h_ideals_semiprime", all_semiprime}};
    if (!witness_p.is_null()) o.witness["P"] = witness_p;
  }
  return o;
}

Outcome check_T6_5(Ctx& c) {
  Outcome o;
  o.scope = scope_fuzzy(c, {IdealKind::h});
  const auto& fam = c.fuzzy(IdealKind::h);
  const auto& prod = c.odot();
  const bool idem = fuzzy_all_idempotent(c);

  bool all_semiprime = true;
  json witness_l = nullptr;
  for (std::size_t li = 0; li < fam.size() && all_semiprime; ++li) {
    if (is_constant(fam[li])) continue;
    for (std::size_t di = 0; di < fam.size(); ++di)
      if (pointwise_leq(prod[di][di], fam[li]) && !pointwise_leq(fam[di], fam[li])) {
        all_semiprime = false;
        witness_l = {{"lambda", c.j_fuzzy(fam[li])}, {"delta", c.j_fuzzy(fam[di])}};
        break;
      }
  }
  if (idem != all_semiprime) {
    o.status = CheckStatus::fails;
    o.witness = {{"all_fuzzy_h_ideals_idempotent", idem},
                 {"all_non_constant_semiprime", all_semiprime}};
    if (!witness_l.is_null()) o.witness["pair"] = witness_l;
  }
  return o;
}

// ---- registry ----------------------------------------------------------

struct Entry {
  const char* id;
  const char* summary;
  Outcome (*fn)(Ctx&);
};

const Entry kEntries[] = {
    {"L2.1", "intersections of one-sided h-ideals are h-ideals of the same kind", check_L2_1},
    {"L2.2", "closure of a product equals closure of the product of closures", check_L2_2},
    {"L2.3", "closure of (right h-ideal)(left h-ideal) lies inside the intersection", check_L2_3},
    {"L2.5", "h-hemiregular iff closures of products equal intersections", check_L2_5},
    {"Transfer", "direct and level-set fuzzy ideal tests agree for every kind", check_Transfer},
    {"P2.8", "two-valued indicators are fuzzy ideals exactly when the set is an ideal", check_P2_8},
    {"P2.9", "indicator order and meets mirror subset order and intersections", check_P2_9},
    {"T2.11", "h-hemiregular iff h-products of one-sided fuzzy h-ideals are meets", check_T2_11},
    {"P3.2", "h-product below intrinsic product; monotone; characteristic case", check_P3_2},
    {"T3.3", "intrinsic products of fuzzy h-ideals are fuzzy h-ideals below the meet", check_T3_3},
    {"T3.4", "h-hemiregular iff intrinsic products of one-sided fuzzy h-ideals are meets", check_T3_4},
    {"C3.5", "on h-hemiregular structures the two fuzzy products coincide", check_C3_5},
    {"P4.1", "five idempotency statements are equivalent", check_P4_1},
    {"C4.2", "commutative: h-hemiregular iff all h-ideals h-idempotent", check_C4_2},
    {"P4.3", "all fuzzy h-ideals idempotent iff products are meets", check_P4_3},
    {"C4.4", "commutative: h-hemiregular iff all fuzzy h-ideals idempotent", check_C4_4},
    {"T4.5", "with identity: crisp and fuzzy idempotency statements agree", check_T4_5},
    {"T4.7", "h-sums of fuzzy h-ideals are fuzzy h-ideals", check_T4_7},
    {"T4.8", "if all h-ideals idempotent, the family is a complete Brouwerian lattice", check_T4_8},
    {"C4.9", "if all h-ideals idempotent, the h-ideal lattice is distributive", check_C4_9},
    {"T4.10", "all fuzzy h-ideals idempotent iff sums/products give a distributive lattice", check_T4_10},
    {"T5.1", "one-sided prime h-ideals are characterized by the aRb element test", check_T5_1},
    {"C5.2", "prime h-ideals are characterized by the aRb element test", check_C5_2},
    {"C5.3", "commutative with identity: prime iff ab-membership forces a factor", check_C5_3},
    {"T5.5", "prime in the second sense iff every proper level set is prime", check_T5_5},
    {"C5.7", "indicator of A is a prime fuzzy h-ideal iff A is a prime h-ideal", check_C5_7},
    {"P5.8", "commutative with identity: prime iff membership is multiplicative max", check_P5_8},
    {"T5.9", "every proper h-ideal sits inside a proper irreducible one", check_T5_9},
    {"T5.10", "under idempotency: irreducible iff prime", check_T5_10},
    {"C5.11", "under idempotency: every proper h-ideal sits inside a proper prime", check_C5_11},
    {"T5.12", "under fuzzy idempotency: irreducible iff h-prime", check_T5_12},
    {"T5.13", "all h-ideals idempotent iff proper ones are intersections of primes", check_T5_13},
    {"L5.14", "under fuzzy idempotency: dominating irreducible h-prime ideal with matching value", check_L5_14},
    {"T5.15", "all fuzzy h-ideals idempotent iff each is an intersection of h-primes", check_T5_15},
    {"T6.2", "semiprime h-ideals are characterized by the aRa element test", check_T6_2},
    {"C6.3", "commutative with identity: semiprime iff squares force membership", check_C6_3},
    {"T6.4", "all h-ideals idempotent iff all proper h-ideals semiprime", check_T6_4},
    {"T6.5", "all fuzzy h-ideals idempotent iff all non-constant ones semiprime", check_T6_5},
    {"T6.9", "semiprime in the second sense iff every proper level set is semiprime", check_T6_9},
    {"C6.10", "indicator of A is a semiprime fuzzy h-ideal iff A is semiprime", check_C6_10},
    {"P6.11", "commutative with identity: semiprime iff squares keep their membership", check_P6_11},
};

const Entry* find_entry(const std::string& id) {
  for (const Entry& e : kEntries)
    if (id == e.id) return &e;
  return nullptr;
}

} // namespace

const std::vector<StatementInfo>& statement_catalog() {
  static const std::vector<StatementInfo> catalog = [] {
    std::vector<StatementInfo> v;
    for (const Entry& e : kEntries) v.push_back({e.id, e.summary});
    return v;
  }();
  return catalog;
}

bool statement_known(const std::string& id) { return find_entry(id) != nullptr; }

TheoremReport run_statement(const Hemiring& H, const std::string& id, const Config& cfg) {
  const Entry* e = find_entry(id);
  if (!e) throw input_error("unknown statement id: " + id);
  Ctx ctx(H, cfg);
  TheoremReport r;
  r.statement = id;
  r.structure = H.name();
  r.quarantined = H.quarantined();
  Outcome out = e->fn(ctx);
  r.status = out.status;
  r.witness = std::move(out.witness);
  r.scope = std::move(out.scope);
  return r;
}

std::pair<std::vector<TheoremReport>, SuiteSummary> run_suite(
    const std::vector<Hemiring>& corpus, const std::vector<std::string>& ids,
    const Config& cfg) {
  for (const auto& id : ids)
    if (!statement_known(id)) throw input_error("unknown statement id: " + id);

  std::vector<TheoremReport> reports;
  SuiteSummary summary;
  summary.structures = static_cast<int>(corpus.size());

  std::vector<std::unique_ptr<Ctx>> ctxs;
  ctxs.reserve(corpus.size());
  for (const Hemiring& H : corpus) ctxs.push_back(std::make_unique<Ctx>(H, cfg));

  for (const Entry& e : kEntries) {
    if (std::find(ids.begin(), ids.end(), e.id) == ids.end()) continue;
    for (std::size_t s = 0; s < corpus.size(); ++s) {
      TheoremReport r;
      r.statement = e.id;
      r.structure = corpus[s].name();
      r.quarantined = corpus[s].quarantined();
      try {
        Outcome out = e.fn(*ctxs[s]);
        r.status = out.status;
        r.witness = std::move(out.witness);
        r.scope = std::move(out.scope);
      } catch (const std::exception& ex) {
        r.status = CheckStatus::error;
        r.witness = {{"error", ex.what()}};
      }
      if (r.quarantined) {
        ++summary.quarantined_reports;
      } else {
        switch (r.status) {
          case CheckStatus::holds: ++summary.holds; break;
          case CheckStatus::fails: ++summary.fails; break;
          case CheckStatus::vacuous: ++summary.vacuous; break;
          case CheckStatus::error: ++summary.errors; break;
        }
      }
      reports.push_back(std::move(r));
    }
  }
  return {std::move(reports), summary};
}

json report_to_json(const TheoremReport& r) {
  json j;
  j["statement"] = r.statement;
  j["structure"] = r.structure;
  j["status"] = status_name(r.status);
  j["witness"] = r.witness;
  j["scope"] = r.scope;
  if (r.quarantined) j["quarantined"] = true;
  return j;
}

json summary_to_json(const SuiteSummary& s) {
  json j;
  j["summary"] = {{"structures", s.structures}, {"holds", s.holds},
                  {"fails", s.fails},           {"vacuous", s.vacuous},
                  {"errors", s.errors},         {"quarantined_reports", s.quarantined_reports}};
  return j;
}

} // namespace hemiring
