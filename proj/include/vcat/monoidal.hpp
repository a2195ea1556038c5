#pragma once

#include <array>
#include <map>
#include <memory>
#include <random>
#include <tuple>
#include <utility>

#include "vcat/fincat.hpp"

namespace vcat {

/// Budget policy shared by all diagram scanners. A suite whose instance count
/// stays within `exhaustive_budget` is enumerated fully; larger suites draw
/// `sample` index tuples from a generator seeded with `seed` and report
/// sampled-pass instead of pass.
struct CheckOptions {
  std::uint64_t exhaustive_budget = 1'000'000;
  std::uint64_t sample = 10'000;
  std::uint64_t seed = 0;
};

namespace detail {

/// Runs `body` on every object tuple of the given arity, or on a seeded
/// sample when the full enumeration would exceed the budget.
template <typename Body>
void scan_tuples(CheckBuilder& check, int arity, int n_objects, const CheckOptions& options,
                 Body&& body) {
  if (n_objects == 0) return;
  std::uint64_t total = 1;
  bool overflow = false;
  for (int i = 0; i < arity; ++i) {
    total *= static_cast<std::uint64_t>(n_objects);
    if (total > options.exhaustive_budget) overflow = true;
  }
  std::vector<Obj> tuple(static_cast<size_t>(arity), 0);
  if (!overflow) {
    do {
      body(std::span<const Obj>(tuple));
    } while (next_tuple(std::span<Obj>(tuple), n_objects));
    return;
  }
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<int> pick(0, n_objects - 1);
  for (std::uint64_t s = 0; s < options.sample; ++s) {
    for (auto& a : tuple) a = pick(rng);
    body(std::span<const Obj>(tuple));
  }
  check.mark_sampled(options.sample, options.seed);
}

}  // namespace detail

/// A category with k tensor products sharing one strict unit, a coherent
/// associator per tensor and an interchange transformation per index pair.
/// Tensors are functors out of the squared base; associator components are
/// indexed by object triples and interchangers by quadruples.
///
/// Non-copyable: the tensor functors point at the internally built product
/// category. Always handled through shared_ptr<const KFoldStructure>.
class KFoldStructure {
 public:
  std::string name;
  FinCategory base;
  FinCategory base_sq;
  int k = 0;
  Obj unit = 0;
  std::vector<FinFunctor> tensors;       // 1-based index i stored at i-1
  std::vector<NatFamily> associators;    // alpha^i, arity 3
  std::map<std::pair<int, int>, NatFamily> interchangers;  // eta^{ij}, i<j, arity 4

  KFoldStructure(const KFoldStructure&) = delete;
  KFoldStructure& operator=(const KFoldStructure&) = delete;

  struct RawTensor {
    std::vector<Obj> object_table;  // (a,b) at a*n+b
    std::vector<Mor> morphism_table;
  };

  static std::shared_ptr<const KFoldStructure> make(
      std::string name, FinCategory base, int k, Obj unit, std::vector<RawTensor> tensor_tables,
      std::vector<std::vector<Mor>> alpha_tables,
      std::map<std::pair<int, int>, std::vector<Mor>> eta_tables) {
    auto v = std::shared_ptr<KFoldStructure>(new KFoldStructure());
    v->name = std::move(name);
    v->base = std::move(base);
    v->base_sq = product_category(v->base, v->base);
    v->k = k;
    v->unit = unit;
    const int n = v->base.n_objects();
    const int nm = v->base.n_morphisms();
    if (k < 1) raise(Errc::IndexOutOfRange, "k must be positive");
    if (!v->base.valid_obj(unit)) raise(Errc::UnknownObject, "unit outside " + v->base.name);
    if (static_cast<int>(tensor_tables.size()) != k ||
        static_cast<int>(alpha_tables.size()) != k)
      raise(Errc::MalformedTable, "expected k tensor and associator tables");
    for (int i = 1; i <= k; ++i) {
      auto& raw = tensor_tables[static_cast<size_t>(i - 1)];
      if (static_cast<int>(raw.object_table.size()) != n * n ||
          static_cast<int>(raw.morphism_table.size()) != nm * nm)
        raise(Errc::MalformedTable, "tensor table sizes for index " + std::to_string(i));
      for (Obj a : raw.object_table)
        if (!v->base.valid_obj(a)) raise(Errc::UnknownObject, "tensor object entry");
      for (Mor m : raw.morphism_table)
        if (!v->base.valid_mor(m)) raise(Errc::UnknownMorphism, "tensor morphism entry");
      FinFunctor t;
      t.name = "tensor" + std::to_string(i);
      t.source = &v->base_sq;
      t.target = &v->base;
      t.object_map = std::move(raw.object_table);
      t.morphism_map = std::move(raw.morphism_table);
      v->tensors.push_back(std::move(t));
    }
    for (int i = 1; i <= k; ++i) {
      NatFamily alpha = make_nat_family("alpha" + std::to_string(i), 3, n);
      if (alpha_tables[static_cast<size_t>(i - 1)].size() != alpha.components.size())
        raise(Errc::MalformedTable, "associator table size for index " + std::to_string(i));
      alpha.components = std::move(alpha_tables[static_cast<size_t>(i - 1)]);
      for (Mor m : alpha.components)
        if (!v->base.valid_mor(m)) raise(Errc::UnknownMorphism, "associator entry");
      const KFoldStructure* raw = v.get();
      alpha.source_formula = [raw, i](std::span<const Obj> t) {
        return raw->tensor_obj(i, raw->tensor_obj(i, t[0], t[1]), t[2]);
      };
      alpha.target_formula = [raw, i](std::span<const Obj> t) {
        return raw->tensor_obj(i, t[0], raw->tensor_obj(i, t[1], t[2]));
      };
      v->associators.push_back(std::move(alpha));
    }
    for (int i = 1; i <= k; ++i)
      for (int j = i + 1; j <= k; ++j) {
        auto it = eta_tables.find({i, j});
        if (it == eta_tables.end())
          raise(Errc::MalformedTable,
                "missing interchanger (" + std::to_string(i) + "," + std::to_string(j) + ")");
        NatFamily eta =
            make_nat_family("eta" + std::to_string(i) + "," + std::to_string(j), 4, n);
        if (it->second.size() != eta.components.size())
          raise(Errc::MalformedTable, "interchanger table size");
        eta.components = std::move(it->second);
        for (Mor m : eta.components)
          if (!v->base.valid_mor(m)) raise(Errc::UnknownMorphism, "interchanger entry");
        const KFoldStructure* raw = v.get();
        eta.source_formula = [raw, i, j](std::span<const Obj> t) {
          return raw->tensor_obj(i, raw->tensor_obj(j, t[0], t[1]), raw->tensor_obj(j, t[2], t[3]));
        };
        eta.target_formula = [raw, i, j](std::span<const Obj> t) {
          return raw->tensor_obj(j, raw->tensor_obj(i, t[0], t[2]), raw->tensor_obj(i, t[1], t[3]));
        };
        v->interchangers.emplace(std::pair{i, j}, std::move(eta));
      }
    return v;
  }

  int require_index(int i) const {
    if (i < 1 || i > k)
      raise(Errc::IndexOutOfRange, "tensor index " + std::to_string(i) + " with k=" + std::to_string(k));
    return i;
  }
  void require_pair(int i, int j) const {
    require_index(i);
    require_index(j);
    if (i >= j) raise(Errc::IndexOutOfRange, "interchanger wants i < j");
  }

  Obj pair_obj(Obj a, Obj b) const { return a * base.n_objects() + b; }
  Mor pair_mor(Mor f, Mor g) const { return f * base.n_morphisms() + g; }

  Obj tensor_obj(int i, Obj a, Obj b) const {
    return tensors[static_cast<size_t>(require_index(i) - 1)].on_obj(pair_obj(a, b));
  }
  Mor tensor_mor(int i, Mor f, Mor g) const {
    return tensors[static_cast<size_t>(require_index(i) - 1)].on_mor(pair_mor(f, g));
  }
  Mor alpha_at(int i, Obj a, Obj b, Obj c) const {
    return associators[static_cast<size_t>(require_index(i) - 1)].at({a, b, c});
  }
  const NatFamily& eta(int i, int j) const {
    require_pair(i, j);
    return interchangers.at({i, j});
  }
  Mor eta_at(int i, int j, Obj a, Obj b, Obj c, Obj d) const { return eta(i, j).at({a, b, c, d}); }

  /// Copy-with-edit helpers for mutation testing.
  std::shared_ptr<const KFoldStructure> with_eta_entry(int i, int j, std::array<Obj, 4> at,
                                                       Mor value) const {
    auto [tensors2, alphas2, etas2] = clone_tables();
    etas2[{i, j}][eta(i, j).flat_index(std::span<const Obj>(at.data(), 4))] = value;
    return make(name, base, k, unit, std::move(tensors2), std::move(alphas2), std::move(etas2));
  }
  std::shared_ptr<const KFoldStructure> with_alpha_entry(int i, std::array<Obj, 3> at,
                                                         Mor value) const {
    auto [tensors2, alphas2, etas2] = clone_tables();
    alphas2[static_cast<size_t>(require_index(i) - 1)]
           [associators[static_cast<size_t>(i - 1)].flat_index(std::span<const Obj>(at.data(), 3))] =
               value;
    return make(name, base, k, unit, std::move(tensors2), std::move(alphas2), std::move(etas2));
  }
  std::shared_ptr<const KFoldStructure> with_tensor_obj_entry(int i, Obj a, Obj b,
                                                              Obj value) const {
    auto [tensors2, alphas2, etas2] = clone_tables();
    tensors2[static_cast<size_t>(require_index(i) - 1)]
        .object_table[static_cast<size_t>(pair_obj(a, b))] = value;
    return make(name, base, k, unit, std::move(tensors2), std::move(alphas2), std::move(etas2));
  }
  std::shared_ptr<const KFoldStructure> with_base(FinCategory new_base) const {
    auto [tensors2, alphas2, etas2] = clone_tables();
    return make(name, std::move(new_base), k, unit, std::move(tensors2), std::move(alphas2),
                std::move(etas2));
  }

  std::tuple<std::vector<RawTensor>, std::vector<std::vector<Mor>>,
             std::map<std::pair<int, int>, std::vector<Mor>>>
  clone_tables() const {
    std::vector<RawTensor> ts;
    for (const auto& t : tensors) ts.push_back(RawTensor{t.object_map, t.morphism_map});
    std::vector<std::vector<Mor>> as;
    for (const auto& a : associators) as.push_back(a.components);
    std::map<std::pair<int, int>, std::vector<Mor>> es;
    for (const auto& [key, e] : interchangers) es[key] = e.components;
    return {std::move(ts), std::move(as), std::move(es)};
  }

 private:
  KFoldStructure() = default;
};

using KFoldPtr = std::shared_ptr<const KFoldStructure>;

namespace detail {

inline std::vector<std::string> obj_tuple_names(const FinCategory& c, std::span<const Obj> t) {
  std::vector<std::string> names;
  names.reserve(t.size());
  for (Obj a : t) names.push_back(c.obj_name(a));
  return names;
}

}  // namespace detail

/// alpha^i components have the declared endpoints and a two-sided inverse.
inline DiagramReport check_alpha_wellformed(const KFoldStructure& v, int i) {
  v.require_index(i);
  DiagramReport report;
  report.suite = "alpha " + std::to_string(i) + " " + v.name;
  const auto& alpha = v.associators[static_cast<size_t>(i - 1)];
  const FinCategory& c = v.base;

  CheckBuilder typing("kfold.alpha-typing[" + std::to_string(i) + "]");
  CheckBuilder iso("kfold.alpha-iso[" + std::to_string(i) + "]");
  std::array<Obj, 3> t{0, 0, 0};
  if (c.n_objects() > 0) do {
      std::span<const Obj> ts(t.data(), 3);
      Mor comp = alpha.at(ts);
      Obj src = alpha.source_formula(ts);
      Obj tgt = alpha.target_formula(ts);
      typing.count();
      if (!c.valid_mor(comp) || c.dom(comp) != src || c.cod(comp) != tgt) {
        typing.fail("alpha-typing", detail::obj_tuple_names(c, ts), detail::mor_label(c, comp),
                    c.obj_name(src) + "->" + c.obj_name(tgt));
        continue;
      }
      iso.count();
      bool invertible = false;
      for (Mor m = 0; m < c.n_morphisms(); ++m) {
        if (c.dom(m) != tgt || c.cod(m) != src) continue;
        if (c.try_compose(m, comp) == c.id_of(src) && c.try_compose(comp, m) == c.id_of(tgt)) {
          invertible = true;
          break;
        }
      }
      if (!invertible)
        iso.fail("alpha-iso", detail::obj_tuple_names(c, ts), c.mor_name(comp), "<invertible>");
    } while (next_tuple(std::span<Obj>(t.data(), 3), c.n_objects()));
  report.add(typing.done());
  report.add(iso.done());
  return report;
}

/// Naturality of alpha^i over all morphism triples.
inline DiagramReport check_alpha_natural(const KFoldStructure& v, int i) {
  v.require_index(i);
  DiagramReport report;
  report.suite = "alpha-natural " + std::to_string(i) + " " + v.name;
  const FinCategory& c = v.base;
  CheckBuilder squares("kfold.alpha-natural[" + std::to_string(i) + "]");
  for (Mor f = 0; f < c.n_morphisms(); ++f)
    for (Mor g = 0; g < c.n_morphisms(); ++g)
      for (Mor h = 0; h < c.n_morphisms(); ++h) {
        Mor lhs_nat = v.alpha_at(i, c.cod(f), c.cod(g), c.cod(h));
        Mor rhs_nat = v.alpha_at(i, c.dom(f), c.dom(g), c.dom(h));
        detail::expect_equal(
            c, squares, "alpha-naturality",
            {c.mor_name(f), c.mor_name(g), c.mor_name(h)},
            chain(c, {v.tensor_mor(i, v.tensor_mor(i, f, g), h), lhs_nat}),
            chain(c, {rhs_nat, v.tensor_mor(i, f, v.tensor_mor(i, g, h))}));
      }
  report.add(squares.done());
  return report;
}

/// The associativity pentagon for tensor i over all object quadruples.
inline DiagramReport check_pentagon(const KFoldStructure& v, int i,
                                    const CheckOptions& options = {}) {
  v.require_index(i);
  DiagramReport report;
  report.suite = "pentagon " + std::to_string(i) + " " + v.name;
  const FinCategory& c = v.base;
  CheckBuilder pentagon("kfold.pentagon[" + std::to_string(i) + "]");
  detail::scan_tuples(pentagon, 4, c.n_objects(), options, [&](std::span<const Obj> t) {
    Obj u = t[0], w = t[1], x = t[2], y = t[3];
    // top: alpha_{UWX} (x)1_Y ; alpha_{U,W(x)X,Y} ; 1_U (x) alpha_{WXY}
    auto top = chain(c, {v.tensor_mor(i, v.alpha_at(i, u, w, x), c.id_of(y)),
                         v.alpha_at(i, u, v.tensor_obj(i, w, x), y),
                         v.tensor_mor(i, c.id_of(u), v.alpha_at(i, w, x, y))});
    // left: alpha_{U(x)W,X,Y} ; alpha_{U,W,X(x)Y}
    auto left = chain(c, {v.alpha_at(i, v.tensor_obj(i, u, w), x, y),
                          v.alpha_at(i, u, w, v.tensor_obj(i, x, y))});
    detail::expect_equal(c, pentagon, "pentagon", detail::obj_tuple_names(c, t), top, left);
  });
  report.add(pentagon.done());
  return report;
}

/// I is a strict two-sided unit for every tensor, on objects and morphisms.
inline DiagramReport check_strict_units(const KFoldStructure& v) {
  DiagramReport report;
  report.suite = "strict-units " + v.name;
  const FinCategory& c = v.base;
  CheckBuilder units("kfold.strict-unit");
  for (int i = 1; i <= v.k; ++i) {
    for (Obj a = 0; a < c.n_objects(); ++a) {
      units.count();
      if (v.tensor_obj(i, v.unit, a) != a)
        units.fail("unit-left-object", {std::to_string(i), c.obj_name(a)},
                   c.obj_name(v.tensor_obj(i, v.unit, a)), c.obj_name(a));
      units.count();
      if (v.tensor_obj(i, a, v.unit) != a)
        units.fail("unit-right-object", {std::to_string(i), c.obj_name(a)},
                   c.obj_name(v.tensor_obj(i, a, v.unit)), c.obj_name(a));
    }
    Mor unit_id = c.id_of(v.unit);
    for (Mor f = 0; f < c.n_morphisms(); ++f) {
      units.count();
      if (v.tensor_mor(i, unit_id, f) != f)
        units.fail("unit-left-morphism", {std::to_string(i), c.mor_name(f)},
                   c.mor_name(v.tensor_mor(i, unit_id, f)), c.mor_name(f));
      units.count();
      if (v.tensor_mor(i, f, unit_id) != f)
        units.fail("unit-right-morphism", {std::to_string(i), c.mor_name(f)},
                   c.mor_name(v.tensor_mor(i, f, unit_id)), c.mor_name(f));
    }
  }
  report.add(units.done());
  return report;
}

inline DiagramReport check_eta_typing(const KFoldStructure& v, int i, int j) {
  v.require_pair(i, j);
  DiagramReport report;
  report.suite = "eta-typing " + std::to_string(i) + "," + std::to_string(j) + " " + v.name;
  const FinCategory& c = v.base;
  const NatFamily& eta = v.eta(i, j);
  CheckBuilder typing("kfold.eta-typing[" + std::to_string(i) + "," + std::to_string(j) + "]");
  std::array<Obj, 4> t{0, 0, 0, 0};
  if (c.n_objects() > 0) do {
      std::span<const Obj> ts(t.data(), 4);
      Mor comp = eta.at(ts);
      Obj src = eta.source_formula(ts);
      Obj tgt = eta.target_formula(ts);
      typing.count();
      if (!c.valid_mor(comp) || c.dom(comp) != src || c.cod(comp) != tgt)
        typing.fail("eta-typing", detail::obj_tuple_names(c, ts), detail::mor_label(c, comp),
                    c.obj_name(src) + "->" + c.obj_name(tgt));
    } while (next_tuple(std::span<Obj>(t.data(), 4), c.n_objects()));
  report.add(typing.done());
  return report;
}

/// Naturality of eta^{ij} in all four variables, over all morphism quadruples.
inline DiagramReport check_eta_natural(const KFoldStructure& v, int i, int j,
                                       const CheckOptions& options = {}) {
  v.require_pair(i, j);
  DiagramReport report;
  report.suite = "eta-natural " + std::to_string(i) + "," + std::to_string(j) + " " + v.name;
  const FinCategory& c = v.base;
  CheckBuilder squares("kfold.eta-natural[" + std::to_string(i) + "," + std::to_string(j) + "]");
  detail::scan_tuples(squares, 4, c.n_morphisms(), options, [&](std::span<const Obj> t) {
    Mor f = t[0], g = t[1], h = t[2], l = t[3];
    Mor src = v.eta_at(i, j, c.dom(f), c.dom(g), c.dom(h), c.dom(l));
    Mor tgt = v.eta_at(i, j, c.cod(f), c.cod(g), c.cod(h), c.cod(l));
    detail::expect_equal(
        c, squares, "eta-naturality",
        {c.mor_name(f), c.mor_name(g), c.mor_name(h), c.mor_name(l)},
        chain(c, {v.tensor_mor(i, v.tensor_mor(j, f, g), v.tensor_mor(j, h, l)), tgt}),
        chain(c, {src, v.tensor_mor(j, v.tensor_mor(i, f, h), v.tensor_mor(i, g, l))}));
  });
  report.add(squares.done());
  return report;
}

/// Internal unit condition eta_{ABII} = eta_{IIAB} = 1_{A (x)_j B} and the
/// external one eta_{AIBI} = eta_{IAIB} = 1_{A (x)_i B}, over all pairs.
inline DiagramReport check_interchange_units(const KFoldStructure& v, int i, int j) {
  v.require_pair(i, j);
  DiagramReport report;
  report.suite =
      "interchange-units " + std::to_string(i) + "," + std::to_string(j) + " " + v.name;
  const FinCategory& c = v.base;
  const Obj unit = v.unit;
  std::string suffix = "[" + std::to_string(i) + "," + std::to_string(j) + "]";
  CheckBuilder internal("kfold.internal-unit" + suffix);
  CheckBuilder external("kfold.external-unit" + suffix);
  for (Obj a = 0; a < c.n_objects(); ++a)
    for (Obj b = 0; b < c.n_objects(); ++b) {
      Mor idj = c.id_of(v.tensor_obj(j, a, b));
      detail::expect_equal(c, internal, "internal-unit-right", {c.obj_name(a), c.obj_name(b)},
                           v.eta_at(i, j, a, b, unit, unit), idj);
      detail::expect_equal(c, internal, "internal-unit-left", {c.obj_name(a), c.obj_name(b)},
                           v.eta_at(i, j, unit, unit, a, b), idj);
      Mor idi = c.id_of(v.tensor_obj(i, a, b));
      detail::expect_equal(c, external, "external-unit-right", {c.obj_name(a), c.obj_name(b)},
                           v.eta_at(i, j, a, unit, b, unit), idi);
      detail::expect_equal(c, external, "external-unit-left", {c.obj_name(a), c.obj_name(b)},
                           v.eta_at(i, j, unit, a, unit, b), idi);
    }
  report.add(internal.done());
  report.add(external.done());
  return report;
}

enum class InterchangeMode { Internal, External };

/// The two hexagonal associativity conditions tying eta^{ij} to alpha^i
/// (internal) and alpha^j (external), over all object sextuples.
inline DiagramReport check_interchange_assoc(const KFoldStructure& v, int i, int j,
                                             InterchangeMode mode,
                                             const CheckOptions& options = {}) {
  v.require_pair(i, j);
  DiagramReport report;
  const bool internal = mode == InterchangeMode::Internal;
  report.suite = std::string(internal ? "internal" : "external") + "-assoc " + std::to_string(i) +
                 "," + std::to_string(j) + " " + v.name;
  const FinCategory& c = v.base;
  std::string check_name = std::string("kfold.") + (internal ? "internal" : "external") +
                           "-assoc[" + std::to_string(i) + "," + std::to_string(j) + "]";
  CheckBuilder hexagon(check_name);
  detail::scan_tuples(hexagon, 6, c.n_objects(), options, [&](std::span<const Obj> t) {
    Obj u = t[0], w = t[1], x = t[2], y = t[3], z = t[4], q = t[5];
    std::optional<Mor> right, left;
    if (internal) {
      // ((U(x)jV)(x)i(W(x)jX))(x)i(Y(x)jZ) -> (U(x)i(W(x)iY))(x)j(V(x)i(X(x)iZ))
      Obj V = w, W = x, X = y, Y = z, Z = q;
      right = chain(
          c, {v.tensor_mor(i, v.eta_at(i, j, u, V, W, X), c.id_of(v.tensor_obj(j, Y, Z))),
              v.eta_at(i, j, v.tensor_obj(i, u, W), v.tensor_obj(i, V, X), Y, Z),
              v.tensor_mor(j, v.alpha_at(i, u, W, Y), v.alpha_at(i, V, X, Z))});
      left = chain(
          c, {v.alpha_at(i, v.tensor_obj(j, u, V), v.tensor_obj(j, W, X), v.tensor_obj(j, Y, Z)),
              v.tensor_mor(i, c.id_of(v.tensor_obj(j, u, V)), v.eta_at(i, j, W, X, Y, Z)),
              v.eta_at(i, j, u, V, v.tensor_obj(i, W, Y), v.tensor_obj(i, X, Z))});
    } else {
      // ((U(x)jV)(x)jW)(x)i((X(x)jY)(x)jZ) -> (U(x)iX)(x)j((V(x)iY)(x)j(W(x)iZ))
      Obj V = w, W = x, X = y, Y = z, Z = q;
      right = chain(
          c, {v.eta_at(i, j, v.tensor_obj(j, u, V), W, v.tensor_obj(j, X, Y), Z),
              v.tensor_mor(j, v.eta_at(i, j, u, V, X, Y), c.id_of(v.tensor_obj(i, W, Z))),
              v.alpha_at(j, v.tensor_obj(i, u, X), v.tensor_obj(i, V, Y), v.tensor_obj(i, W, Z))});
      left = chain(
          c, {v.tensor_mor(i, v.alpha_at(j, u, V, W), v.alpha_at(j, X, Y, Z)),
              v.eta_at(i, j, u, v.tensor_obj(j, V, W), X, v.tensor_obj(j, Y, Z)),
              v.tensor_mor(j, c.id_of(v.tensor_obj(i, u, X)), v.eta_at(i, j, V, W, Y, Z))});
    }
    detail::expect_equal(c, hexagon, internal ? "internal-assoc" : "external-assoc",
                         detail::obj_tuple_names(c, t), right, left);
  });
  report.add(hexagon.done());
  return report;
}

/// The giant hexagonal interchange for a triple i<j<l, over object 8-tuples
/// (A,A',B,B',C,C',D,D'). Exhaustive within the budget, sampled beyond it.
inline DiagramReport check_giant_hexagon(const KFoldStructure& v, int i, int j, int l,
                                         const CheckOptions& options = {}) {
  v.require_pair(i, j);
  v.require_pair(j, l);
  if (v.k < 3) raise(Errc::IndexOutOfRange, "giant hexagon needs k >= 3");
  DiagramReport report;
  report.suite = "giant-hexagon " + std::to_string(i) + "," + std::to_string(j) + "," +
                 std::to_string(l) + " " + v.name;
  const FinCategory& c = v.base;
  CheckBuilder hexagon("kfold.giant-hexagon[" + std::to_string(i) + "," + std::to_string(j) +
                       "," + std::to_string(l) + "]");
  detail::scan_tuples(hexagon, 8, c.n_objects(), options, [&](std::span<const Obj> t) {
    Obj a = t[0], a2 = t[1], b = t[2], b2 = t[3], cc = t[4], c2 = t[5], d = t[6], d2 = t[7];
    auto leftleg = chain(
        c, {v.tensor_mor(i, v.eta_at(j, l, a, a2, b, b2), v.eta_at(j, l, cc, c2, d, d2)),
            v.eta_at(i, l, v.tensor_obj(j, a, b), v.tensor_obj(j, a2, b2), v.tensor_obj(j, cc, d),
                     v.tensor_obj(j, c2, d2)),
            v.tensor_mor(l, v.eta_at(i, j, a, b, cc, d), v.eta_at(i, j, a2, b2, c2, d2))});
    auto rightleg = chain(
        c, {v.eta_at(i, j, v.tensor_obj(l, a, a2), v.tensor_obj(l, b, b2),
                     v.tensor_obj(l, cc, c2), v.tensor_obj(l, d, d2)),
            v.tensor_mor(j, v.eta_at(i, l, a, a2, cc, c2), v.eta_at(i, l, b, b2, d, d2)),
            v.eta_at(j, l, v.tensor_obj(i, a, cc), v.tensor_obj(i, a2, c2), v.tensor_obj(i, b, d),
                     v.tensor_obj(i, b2, d2))});
    detail::expect_equal(c, hexagon, "giant-hexagon", detail::obj_tuple_names(c, t), leftleg,
                         rightleg);
  });
  report.add(hexagon.done());
  return report;
}

/// Diagnostic for the degenerate situation where some eta^{ij} is the
/// identity everywhere: that forces the two tensors to coincide (and to agree
/// up to a twist). Reported per pair; not part of the axiom suite.
inline DiagramReport check_eta_collapse(const KFoldStructure& v) {
  DiagramReport report;
  report.suite = "eta-collapse " + v.name;
  const FinCategory& c = v.base;
  for (int i = 1; i <= v.k; ++i)
    for (int j = i + 1; j <= v.k; ++j) {
      CheckBuilder diag("kfold.eta-collapse[" + std::to_string(i) + "," + std::to_string(j) + "]");
      const NatFamily& eta = v.eta(i, j);
      bool all_identity = true;
      for (size_t ix = 0; ix < eta.components.size() && all_identity; ++ix) {
        Mor m = eta.components[ix];
        if (!c.valid_mor(m) || c.dom(m) != c.cod(m) || m != c.id_of(c.dom(m)))
          all_identity = false;
      }
      if (!all_identity) {
        diag.mark_not_applicable("eta not the identity family");
        report.add(diag.done());
        continue;
      }
      diag.note("collapse condition triggered: identity interchanger");
      for (Obj a = 0; a < c.n_objects(); ++a)
        for (Obj b = 0; b < c.n_objects(); ++b) {
          detail::expect_equal(c, diag, "collapse-objects", {c.obj_name(a), c.obj_name(b)},
                               c.id_of(v.tensor_obj(i, a, b)), c.id_of(v.tensor_obj(j, a, b)));
          detail::expect_equal(c, diag, "collapse-twist", {c.obj_name(a), c.obj_name(b)},
                               c.id_of(v.tensor_obj(i, a, b)), c.id_of(v.tensor_obj(j, b, a)));
        }
      for (Mor f = 0; f < c.n_morphisms(); ++f)
        for (Mor g = 0; g < c.n_morphisms(); ++g)
          detail::expect_equal(c, diag, "collapse-morphisms", {c.mor_name(f), c.mor_name(g)},
                               v.tensor_mor(i, f, g), v.tensor_mor(j, f, g));
      report.add(diag.done());
    }
  return report;
}

/// The whole axiom suite: base laws, tensor functoriality, strict units,
/// associator coherence per index, and the interchange conditions per index
/// pair and triple.
inline DiagramReport check_kfold(const KFoldStructure& v, const CheckOptions& options = {}) {
  DiagramReport report;
  report.suite = "kfold " + v.name;
  report.merge(check_category_laws(v.base));
  for (int i = 1; i <= v.k; ++i) {
    auto functor_report = check_functor_laws(v.tensors[static_cast<size_t>(i - 1)]);
    for (auto& chk : functor_report.checks) chk.name = "kfold.tensor-" + chk.name + "[" + std::to_string(i) + "]";
    report.merge(functor_report);
  }
  report.merge(check_strict_units(v));
  for (int i = 1; i <= v.k; ++i) {
    report.merge(check_alpha_wellformed(v, i));
    report.merge(check_alpha_natural(v, i));
    report.merge(check_pentagon(v, i, options));
  }
  for (int i = 1; i <= v.k; ++i)
    for (int j = i + 1; j <= v.k; ++j) {
      report.merge(check_eta_typing(v, i, j));
      report.merge(check_eta_natural(v, i, j, options));
      report.merge(check_interchange_units(v, i, j));
      report.merge(check_interchange_assoc(v, i, j, InterchangeMode::Internal, options));
      report.merge(check_interchange_assoc(v, i, j, InterchangeMode::External, options));
      for (int l = j + 1; l <= v.k; ++l)
        report.merge(check_giant_hexagon(v, i, j, l, options));
    }
  return report;
}

/// One tensor, one associator, one braiding. Used as input to from_symmetric.
class SymmetricStructure {
 public:
  std::string name;
  FinCategory base;
  FinCategory base_sq;
  Obj unit = 0;
  FinFunctor tensor;
  NatFamily assoc;  // arity 3
  NatFamily braid;  // arity 2

  SymmetricStructure(const SymmetricStructure&) = delete;
  SymmetricStructure& operator=(const SymmetricStructure&) = delete;

  static std::shared_ptr<const SymmetricStructure> make(std::string name, FinCategory base,
                                                        Obj unit,
                                                        KFoldStructure::RawTensor tensor_table,
                                                        std::vector<Mor> alpha_table,
                                                        std::vector<Mor> braid_table) {
    auto s = std::shared_ptr<SymmetricStructure>(new SymmetricStructure());
    s->name = std::move(name);
    s->base = std::move(base);
    s->base_sq = product_category(s->base, s->base);
    s->unit = unit;
    const int n = s->base.n_objects();
    s->tensor.name = "tensor";
    s->tensor.source = &s->base_sq;
    s->tensor.target = &s->base;
    s->tensor.object_map = std::move(tensor_table.object_table);
    s->tensor.morphism_map = std::move(tensor_table.morphism_table);
    s->assoc = make_nat_family("alpha", 3, n);
    s->assoc.components = std::move(alpha_table);
    s->braid = make_nat_family("braid", 2, n);
    s->braid.components = std::move(braid_table);
    const SymmetricStructure* raw = s.get();
    s->assoc.source_formula = [raw](std::span<const Obj> t) {
      return raw->tensor_obj(raw->tensor_obj(t[0], t[1]), t[2]);
    };
    s->assoc.target_formula = [raw](std::span<const Obj> t) {
      return raw->tensor_obj(t[0], raw->tensor_obj(t[1], t[2]));
    };
    s->braid.source_formula = [raw](std::span<const Obj> t) {
      return raw->tensor_obj(t[0], t[1]);
    };
    s->braid.target_formula = [raw](std::span<const Obj> t) {
      return raw->tensor_obj(t[1], t[0]);
    };
    return s;
  }

  Obj tensor_obj(Obj a, Obj b) const { return tensor.on_obj(a * base.n_objects() + b); }
  Mor tensor_mor(Mor f, Mor g) const { return tensor.on_mor(f * base.n_morphisms() + g); }
  Mor alpha_at(Obj a, Obj b, Obj c) const { return assoc.at({a, b, c}); }
  Mor braid_at(Obj a, Obj b) const { return braid.at({a, b}); }

  std::optional<Mor> invert(Mor f) const {
    for (Mor m = 0; m < base.n_morphisms(); ++m)
      if (base.dom(m) == base.cod(f) && base.cod(m) == base.dom(f) &&
          base.try_compose(m, f) == base.id_of(base.dom(f)) &&
          base.try_compose(f, m) == base.id_of(base.cod(f)))
        return m;
    return std::nullopt;
  }

 private:
  SymmetricStructure() = default;
};

using SymmetricPtr = std::shared_ptr<const SymmetricStructure>;

/// Braiding naturality, both hexagon identities, the symmetry involution and
/// associator coherence for a symmetric structure.
inline DiagramReport check_symmetric(const SymmetricStructure& s,
                                     const CheckOptions& options = {}) {
  DiagramReport report;
  report.suite = "symmetric " + s.name;
  report.merge(check_category_laws(s.base));
  {
    auto fr = check_functor_laws(s.tensor);
    for (auto& chk : fr.checks) chk.name = "symmetric.tensor-" + chk.name;
    report.merge(fr);
  }
  const FinCategory& c = s.base;

  CheckBuilder units("symmetric.strict-unit");
  for (Obj a = 0; a < c.n_objects(); ++a) {
    units.count();
    if (s.tensor_obj(s.unit, a) != a || s.tensor_obj(a, s.unit) != a)
      units.fail("strict-unit", {c.obj_name(a)}, c.obj_name(s.tensor_obj(s.unit, a)),
                 c.obj_name(a));
  }
  for (Mor f = 0; f < c.n_morphisms(); ++f) {
    units.count();
    if (s.tensor_mor(c.id_of(s.unit), f) != f || s.tensor_mor(f, c.id_of(s.unit)) != f)
      units.fail("strict-unit-morphism", {c.mor_name(f)},
                 c.mor_name(s.tensor_mor(c.id_of(s.unit), f)), c.mor_name(f));
  }
  report.add(units.done());

  CheckBuilder alpha_ok("symmetric.alpha");
  std::array<Obj, 3> t3{0, 0, 0};
  if (c.n_objects() > 0) do {
      std::span<const Obj> ts(t3.data(), 3);
      Mor comp = s.assoc.at(ts);
      alpha_ok.count();
      if (!c.valid_mor(comp) || c.dom(comp) != s.assoc.source_formula(ts) ||
          c.cod(comp) != s.assoc.target_formula(ts) || !s.invert(comp))
        alpha_ok.fail("alpha-component", detail::obj_tuple_names(c, ts),
                      detail::mor_label(c, comp), "<invertible with declared endpoints>");
    } while (next_tuple(std::span<Obj>(t3.data(), 3), c.n_objects()));
  report.add(alpha_ok.done());

  CheckBuilder alpha_nat("symmetric.alpha-natural");
  for (Mor f = 0; f < c.n_morphisms(); ++f)
    for (Mor g = 0; g < c.n_morphisms(); ++g)
      for (Mor h = 0; h < c.n_morphisms(); ++h)
        detail::expect_equal(
            c, alpha_nat, "alpha-naturality", {c.mor_name(f), c.mor_name(g), c.mor_name(h)},
            chain(c, {s.tensor_mor(s.tensor_mor(f, g), h),
                      s.alpha_at(c.cod(f), c.cod(g), c.cod(h))}),
            chain(c, {s.alpha_at(c.dom(f), c.dom(g), c.dom(h)),
                      s.tensor_mor(f, s.tensor_mor(g, h))}));
  report.add(alpha_nat.done());

  CheckBuilder pentagon("symmetric.pentagon");
  detail::scan_tuples(pentagon, 4, c.n_objects(), options, [&](std::span<const Obj> t) {
    Obj u = t[0], w = t[1], x = t[2], y = t[3];
    auto top = chain(c, {s.tensor_mor(s.alpha_at(u, w, x), c.id_of(y)),
                         s.alpha_at(u, s.tensor_obj(w, x), y),
                         s.tensor_mor(c.id_of(u), s.alpha_at(w, x, y))});
    auto left = chain(c, {s.alpha_at(s.tensor_obj(u, w), x, y),
                          s.alpha_at(u, w, s.tensor_obj(x, y))});
    detail::expect_equal(c, pentagon, "pentagon", detail::obj_tuple_names(c, t), top, left);
  });
  report.add(pentagon.done());

  CheckBuilder braid_nat("symmetric.braid-natural");
  for (Mor f = 0; f < c.n_morphisms(); ++f)
    for (Mor g = 0; g < c.n_morphisms(); ++g)
      detail::expect_equal(c, braid_nat, "braid-naturality", {c.mor_name(f), c.mor_name(g)},
                           chain(c, {s.tensor_mor(f, g), s.braid_at(c.cod(f), c.cod(g))}),
                           chain(c, {s.braid_at(c.dom(f), c.dom(g)), s.tensor_mor(g, f)}));
  report.add(braid_nat.done());

  CheckBuilder symmetry("symmetric.involution");
  for (Obj a = 0; a < c.n_objects(); ++a)
    for (Obj b = 0; b < c.n_objects(); ++b)
      detail::expect_equal(c, symmetry, "symmetry", {c.obj_name(a), c.obj_name(b)},
                           chain(c, {s.braid_at(a, b), s.braid_at(b, a)}),
                           c.id_of(s.tensor_obj(a, b)));
  report.add(symmetry.done());

  // Hexagons. With the associator possibly nontrivial both directions are
  // checked: c_{A,B(x)C} and c_{A(x)B,C} factor through the one-step braids.
  CheckBuilder hexagon("symmetric.hexagon");
  std::array<Obj, 3> h3{0, 0, 0};
  if (c.n_objects() > 0) do {
      Obj a = h3[0], b = h3[1], d = h3[2];
      std::span<const Obj> ts(h3.data(), 3);
      // alpha ; c_{A,B(x)C} ; alpha  ==  (c_{AB} (x) 1) ; alpha ; (1 (x) c_{AC})
      auto lhs1 = chain(c, {s.alpha_at(a, b, d), s.braid_at(a, s.tensor_obj(b, d)),
                            s.alpha_at(b, d, a)});
      auto rhs1 = chain(c, {s.tensor_mor(s.braid_at(a, b), c.id_of(d)), s.alpha_at(b, a, d),
                            s.tensor_mor(c.id_of(b), s.braid_at(a, d))});
      detail::expect_equal(c, hexagon, "hexagon-1", detail::obj_tuple_names(c, ts), lhs1, rhs1);
      // alpha^-1 ; c_{A(x)B,C} ; alpha^-1 == (1 (x) c_{BC}) ; alpha^-1 ; (c_{AC} (x) 1)
      auto inv1 = s.invert(s.alpha_at(a, b, d));
      auto inv2 = s.invert(s.alpha_at(d, a, b));
      auto inv3 = s.invert(s.alpha_at(a, d, b));
      std::optional<Mor> lhs2, rhs2;
      if (inv1 && inv2)
        lhs2 = chain(c, {*inv1, s.braid_at(s.tensor_obj(a, b), d), *inv2});
      if (inv3)
        rhs2 = chain(c, {s.tensor_mor(c.id_of(a), s.braid_at(b, d)), *inv3,
                         s.tensor_mor(s.braid_at(a, d), c.id_of(b))});
      detail::expect_equal(c, hexagon, "hexagon-2", detail::obj_tuple_names(c, ts), lhs2, rhs2);
    } while (next_tuple(std::span<Obj>(h3.data(), 3), c.n_objects()));
  report.add(hexagon.done());
  return report;
}

/// Realizes a symmetric structure as a k-fold monoidal one: all k tensors are
/// the given tensor, every associator is alpha, and each interchanger is the
/// braid conjugated into place:
///
///   eta_{ABCD} = alpha^-1 ; (1_A (x) alpha) ; (1_A (x) (c_{BC} (x) 1_D))
///                ; (1_A (x) alpha^-1) ; alpha        (read right to left)
///
/// i.e. reassociate to A (x) ((B (x) C) (x) D), braid the middle pair, and
/// reassociate back. Bracketing is fixed by endpoint matching; with a strict
/// associator every alpha factor is an identity.
inline KFoldPtr from_symmetric(const SymmetricStructure& s, int k,
                               const CheckOptions& options = {}) {
  auto pre = check_symmetric(s, options);
  if (!pre.passed()) {
    for (const auto& chk : pre.checks)
      if (chk.failed())
        raise(Errc::NotSymmetric, chk.name + " failed at " +
                                      (chk.witnesses.empty() ? "?" : chk.witnesses[0].diagram));
  }
  const FinCategory& c = s.base;
  const int n = c.n_objects();
  NatFamily eta = make_nat_family("eta", 4, n);
  std::array<Obj, 4> t{0, 0, 0, 0};
  if (n > 0) do {
      Obj a = t[0], b = t[1], d = t[2], e = t[3];
      auto a1 = s.alpha_at(a, b, s.tensor_obj(d, e));
      auto a2inv = s.invert(s.alpha_at(b, d, e));
      auto a3 = s.alpha_at(d, b, e);
      auto a4inv = s.invert(s.alpha_at(a, d, s.tensor_obj(b, e)));
      if (!a2inv || !a4inv) raise(Errc::NotSymmetric, "associator not invertible");
      auto comp = chain(c, {a1, s.tensor_mor(c.id_of(a), *a2inv),
                            s.tensor_mor(c.id_of(a), s.tensor_mor(s.braid_at(b, d), c.id_of(e))),
                            s.tensor_mor(c.id_of(a), a3), *a4inv});
      if (!comp) raise(Errc::NotSymmetric, "interchanger composite did not typecheck");
      eta.components[eta.flat_index(std::span<const Obj>(t.data(), 4))] = *comp;
    } while (next_tuple(std::span<Obj>(t.data(), 4), n));

  std::vector<KFoldStructure::RawTensor> tensors(
      static_cast<size_t>(k),
      KFoldStructure::RawTensor{s.tensor.object_map, s.tensor.morphism_map});
  std::vector<std::vector<Mor>> alphas(static_cast<size_t>(k), s.assoc.components);
  std::map<std::pair<int, int>, std::vector<Mor>> etas;
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) etas[{i, j}] = eta.components;
  return KFoldStructure::make(s.name + "-k" + std::to_string(k), s.base, k, s.unit,
                              std::move(tensors), std::move(alphas), std::move(etas));
}

/// A functor between the bases of two k-fold structures together with the
/// comparison families lambda^i : F(A) (x)_i F(B) -> F(A (x)_i B).
struct MonoidalFunctorData {
  std::string name;
  KFoldPtr source;
  KFoldPtr target;
  std::vector<Obj> object_map;
  std::vector<Mor> morphism_map;
  std::vector<NatFamily> lambda;  // one per tensor index, arity 2 over source objects

  Obj on_obj(Obj a) const { return object_map[static_cast<size_t>(a)]; }
  Mor on_mor(Mor f) const { return morphism_map[static_cast<size_t>(f)]; }
  Mor lambda_at(int i, Obj a, Obj b) const {
    return lambda[static_cast<size_t>(i - 1)].at({a, b});
  }
};

inline MonoidalFunctorData identity_monoidal_functor(KFoldPtr v) {
  MonoidalFunctorData f;
  f.name = "1_" + v->name;
  f.source = v;
  f.target = v;
  const FinCategory& c = v->base;
  for (Obj a = 0; a < c.n_objects(); ++a) f.object_map.push_back(a);
  for (Mor m = 0; m < c.n_morphisms(); ++m) f.morphism_map.push_back(m);
  for (int i = 1; i <= v->k; ++i) {
    NatFamily l = make_nat_family("lambda" + std::to_string(i), 2, c.n_objects());
    for (Obj a = 0; a < c.n_objects(); ++a)
      for (Obj b = 0; b < c.n_objects(); ++b)
        l.components[l.flat_index(std::array<Obj, 2>{a, b})] = c.id_of(v->tensor_obj(i, a, b));
    f.lambda.push_back(std::move(l));
  }
  return f;
}

/// F(I)=I, each lambda^i natural with the internal associativity and unit
/// conditions, and the hexagonal interchange for every pair i<j.
inline DiagramReport check_monoidal_functor(const MonoidalFunctorData& f,
                                            const CheckOptions& options = {}) {
  if (!f.source || !f.target) raise(Errc::StructureMismatch, "monoidal functor without endpoints");
  const KFoldStructure& vs = *f.source;
  const KFoldStructure& vt = *f.target;
  if (vs.k != vt.k) raise(Errc::StructureMismatch, "monoidal functor across different k");
  if (static_cast<int>(f.lambda.size()) != vs.k)
    raise(Errc::MalformedMap, "expected one lambda family per tensor");
  const FinCategory& s = vs.base;
  const FinCategory& t = vt.base;

  DiagramReport report;
  report.suite = "monoidal-functor " + f.name;

  {
    FinFunctor underlying{f.name, &s, &t, f.object_map, f.morphism_map};
    auto fr = check_functor_laws(underlying);
    for (auto& chk : fr.checks) chk.name = "monoidal." + chk.name;
    report.merge(fr);
  }

  CheckBuilder unit_obj("monoidal.unit-object");
  unit_obj.count();
  if (f.on_obj(vs.unit) != vt.unit)
    unit_obj.fail("unit-preservation", {s.obj_name(vs.unit)}, t.obj_name(f.on_obj(vs.unit)),
                  t.obj_name(vt.unit));
  report.add(unit_obj.done());

  for (int i = 1; i <= vs.k; ++i) {
    std::string sfx = "[" + std::to_string(i) + "]";
    CheckBuilder typing("monoidal.lambda-typing" + sfx);
    for (Obj a = 0; a < s.n_objects(); ++a)
      for (Obj b = 0; b < s.n_objects(); ++b) {
        Mor l = f.lambda_at(i, a, b);
        typing.count();
        if (!t.valid_mor(l) || t.dom(l) != vt.tensor_obj(i, f.on_obj(a), f.on_obj(b)) ||
            t.cod(l) != f.on_obj(vs.tensor_obj(i, a, b)))
          typing.fail("lambda-typing", {s.obj_name(a), s.obj_name(b)}, detail::mor_label(t, l),
                      "F(A)(x)F(B)->F(A(x)B)");
      }
    report.add(typing.done());

    CheckBuilder natural("monoidal.lambda-natural" + sfx);
    for (Mor p = 0; p < s.n_morphisms(); ++p)
      for (Mor q = 0; q < s.n_morphisms(); ++q)
        detail::expect_equal(
            t, natural, "lambda-naturality", {s.mor_name(p), s.mor_name(q)},
            chain(t, {vt.tensor_mor(i, f.on_mor(p), f.on_mor(q)),
                      f.lambda_at(i, s.cod(p), s.cod(q))}),
            chain(t, {f.lambda_at(i, s.dom(p), s.dom(q)), f.on_mor(vs.tensor_mor(i, p, q))}));
    report.add(natural.done());

    CheckBuilder assoc("monoidal.internal-assoc" + sfx);
    detail::scan_tuples(assoc, 3, s.n_objects(), options, [&](std::span<const Obj> tr) {
      Obj a = tr[0], b = tr[1], d = tr[2];
      // right: (lambda_{AB} (x) 1) ; lambda_{A(x)B,C} ; F(alpha)
      auto right = chain(
          t, {vt.tensor_mor(i, f.lambda_at(i, a, b), t.id_of(f.on_obj(d))),
              f.lambda_at(i, vs.tensor_obj(i, a, b), d), f.on_mor(vs.alpha_at(i, a, b, d))});
      // left: alpha_target ; (1 (x) lambda_{BC}) ; lambda_{A,B(x)C}
      auto left = chain(
          t, {vt.alpha_at(i, f.on_obj(a), f.on_obj(b), f.on_obj(d)),
              vt.tensor_mor(i, t.id_of(f.on_obj(a)), f.lambda_at(i, b, d)),
              f.lambda_at(i, a, vs.tensor_obj(i, b, d))});
      detail::expect_equal(t, assoc, "internal-associativity", detail::obj_tuple_names(s, tr),
                           right, left);
    });
    report.add(assoc.done());

    CheckBuilder lunit("monoidal.lambda-unit" + sfx);
    for (Obj a = 0; a < s.n_objects(); ++a) {
      Mor expect = t.id_of(f.on_obj(a));
      detail::expect_equal(t, lunit, "lambda-unit-right", {s.obj_name(a)},
                           f.lambda_at(i, a, vs.unit), expect);
      detail::expect_equal(t, lunit, "lambda-unit-left", {s.obj_name(a)},
                           f.lambda_at(i, vs.unit, a), expect);
    }
    report.add(lunit.done());
  }

  for (int i = 1; i <= vs.k; ++i)
    for (int j = i + 1; j <= vs.k; ++j) {
      CheckBuilder hex("monoidal.interchange-hexagon[" + std::to_string(i) + "," +
                       std::to_string(j) + "]");
      detail::scan_tuples(hex, 4, s.n_objects(), options, [&](std::span<const Obj> q) {
        Obj a = q[0], b = q[1], cc = q[2], d = q[3];
        auto right = chain(
            t, {vt.eta_at(i, j, f.on_obj(a), f.on_obj(b), f.on_obj(cc), f.on_obj(d)),
                vt.tensor_mor(j, f.lambda_at(i, a, cc), f.lambda_at(i, b, d)),
                f.lambda_at(j, vs.tensor_obj(i, a, cc), vs.tensor_obj(i, b, d))});
        auto left = chain(
            t, {vt.tensor_mor(i, f.lambda_at(j, a, b), f.lambda_at(j, cc, d)),
                f.lambda_at(i, vs.tensor_obj(j, a, b), vs.tensor_obj(j, cc, d)),
                f.on_mor(vs.eta_at(i, j, a, b, cc, d))});
        detail::expect_equal(t, hex, "hexagonal-interchange", detail::obj_tuple_names(s, q),
                             right, left);
      });
      report.add(hex.done());
    }
  return report;
}

/// Composite of monoidal functors; the comparison of the composite is
/// G(lambda_F) after lambda_G at the image objects.
inline MonoidalFunctorData compose_monoidal_functors(const MonoidalFunctorData& g,
                                                     const MonoidalFunctorData& f) {
  if (f.target != g.source) raise(Errc::StructureMismatch, "monoidal composition endpoint mismatch");
  MonoidalFunctorData r;
  r.name = g.name + "." + f.name;
  r.source = f.source;
  r.target = g.target;
  for (Obj a : f.object_map) r.object_map.push_back(g.on_obj(a));
  for (Mor m : f.morphism_map) r.morphism_map.push_back(g.on_mor(m));
  const FinCategory& tc = g.target->base;
  const KFoldStructure& vs = *f.source;
  for (int i = 1; i <= vs.k; ++i) {
    NatFamily l = make_nat_family("xi" + std::to_string(i), 2, vs.base.n_objects());
    for (Obj a = 0; a < vs.base.n_objects(); ++a)
      for (Obj b = 0; b < vs.base.n_objects(); ++b) {
        auto comp = chain(tc, {g.lambda_at(i, f.on_obj(a), f.on_obj(b)),
                               g.on_mor(f.lambda_at(i, a, b))});
        if (!comp) raise(Errc::StructureMismatch, "composite comparison did not typecheck");
        l.components[l.flat_index(std::array<Obj, 2>{a, b})] = *comp;
      }
    r.lambda.push_back(std::move(l));
  }
  return r;
}

/// theta is natural between the underlying functors and commutes with the
/// comparison families of F and G for every tensor index.
inline DiagramReport check_monoidal_nat(const NatFamily& theta, const MonoidalFunctorData& f,
                                        const MonoidalFunctorData& g) {
  if (f.source != g.source || f.target != g.target)
    raise(Errc::StructureMismatch, "monoidal transformation requires parallel functors");
  if (theta.arity != 1) raise(Errc::ArityMismatch, "theta must be object-indexed");
  const FinCategory& s = f.source->base;
  const FinCategory& t = f.target->base;
  const KFoldStructure& vs = *f.source;
  const KFoldStructure& vt = *f.target;

  DiagramReport report;
  report.suite = "monoidal-nat " + theta.name;

  CheckBuilder typing("monoidal-nat.typing");
  for (Obj a = 0; a < s.n_objects(); ++a) {
    Mor th = theta.components[static_cast<size_t>(a)];
    typing.count();
    if (!t.valid_mor(th) || t.dom(th) != f.on_obj(a) || t.cod(th) != g.on_obj(a))
      typing.fail("component-typing", {s.obj_name(a)}, detail::mor_label(t, th),
                  t.obj_name(f.on_obj(a)) + "->" + t.obj_name(g.on_obj(a)));
  }
  report.add(typing.done());

  CheckBuilder natural("monoidal-nat.squares");
  for (Mor u = 0; u < s.n_morphisms(); ++u)
    detail::expect_equal(t, natural, "naturality-square", {s.mor_name(u)},
                         chain(t, {f.on_mor(u), theta.components[static_cast<size_t>(s.cod(u))]}),
                         chain(t, {theta.components[static_cast<size_t>(s.dom(u))], g.on_mor(u)}));
  report.add(natural.done());

  CheckBuilder compat("monoidal-nat.comparison");
  for (int i = 1; i <= vs.k; ++i)
    for (Obj a = 0; a < s.n_objects(); ++a)
      for (Obj b = 0; b < s.n_objects(); ++b)
        detail::expect_equal(
            t, compat, "comparison-square[" + std::to_string(i) + "]",
            {s.obj_name(a), s.obj_name(b)},
            chain(t, {f.lambda_at(i, a, b),
                      theta.components[static_cast<size_t>(vs.tensor_obj(i, a, b))]}),
            chain(t, {vt.tensor_mor(i, theta.components[static_cast<size_t>(a)],
                                    theta.components[static_cast<size_t>(b)]),
                      g.lambda_at(i, a, b)}));
  report.add(compat.done());
  return report;
}

}  // namespace vcat
