#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vcat/error.hpp"
#include "vcat/report.hpp"

namespace vcat {

using Obj = int;
using Mor = int;
inline constexpr Mor kNoMor = -1;

/// A finite category presented by explicit tables: ordered objects, ordered
/// morphisms, an identity per object and a composition table that is defined
/// exactly on the composable pairs. Morphism equality is equality of table
/// indices; checkers reduce every diagram to that.
///
/// Instances are immutable after construction. The `with_*` helpers produce
/// edited copies so that deliberately broken tables can be fed to checkers.
struct FinCategory {
  struct Morphism {
    std::string id;
    Obj dom = 0;
    Obj cod = 0;
  };

  std::string name;
  std::vector<std::string> objects;
  std::vector<Morphism> morphisms;
  std::vector<Mor> identity;  // per object
  std::vector<Mor> comp;      // comp[g * n_morphisms + f] = g after f, or kNoMor
  std::map<std::string, Obj, std::less<>> obj_index;
  std::map<std::string, Mor, std::less<>> mor_index;

  int n_objects() const { return static_cast<int>(objects.size()); }
  int n_morphisms() const { return static_cast<int>(morphisms.size()); }

  const std::string& obj_name(Obj a) const { return objects[static_cast<size_t>(a)]; }
  const std::string& mor_name(Mor f) const { return morphisms[static_cast<size_t>(f)].id; }

  Obj obj(std::string_view id) const {
    auto it = obj_index.find(id);
    if (it == obj_index.end()) raise(Errc::UnknownObject, std::string(id) + " in " + name);
    return it->second;
  }
  Mor mor(std::string_view id) const {
    auto it = mor_index.find(id);
    if (it == mor_index.end()) raise(Errc::UnknownMorphism, std::string(id) + " in " + name);
    return it->second;
  }

  bool valid_obj(Obj a) const { return a >= 0 && a < n_objects(); }
  bool valid_mor(Mor f) const { return f >= 0 && f < n_morphisms(); }

  Obj dom(Mor f) const { return morphisms[static_cast<size_t>(f)].dom; }
  Obj cod(Mor f) const { return morphisms[static_cast<size_t>(f)].cod; }
  Mor id_of(Obj a) const { return identity[static_cast<size_t>(a)]; }

  /// g after f. Throws NonComposable when cod(f) != dom(g) and
  /// UnknownMorphism for indices outside the tables.
  Mor compose(Mor g, Mor f) const {
    if (!valid_mor(g) || !valid_mor(f))
      raise(Errc::UnknownMorphism, "composition operand outside table in " + name);
    if (cod(f) != dom(g))
      raise(Errc::NonComposable,
            mor_name(g) + " after " + mor_name(f) + " in " + name);
    Mor r = comp[static_cast<size_t>(g) * static_cast<size_t>(n_morphisms()) + static_cast<size_t>(f)];
    if (r == kNoMor) raise(Errc::MalformedTable, "missing composite in " + name);
    return r;
  }

  std::optional<Mor> try_compose(Mor g, Mor f) const {
    if (!valid_mor(g) || !valid_mor(f) || cod(f) != dom(g)) return std::nullopt;
    Mor r = comp[static_cast<size_t>(g) * static_cast<size_t>(n_morphisms()) + static_cast<size_t>(f)];
    if (r == kNoMor) return std::nullopt;
    return r;
  }

  FinCategory with_composition_entry(Mor g, Mor f, Mor value) const {
    FinCategory c = *this;
    c.comp[static_cast<size_t>(g) * static_cast<size_t>(n_morphisms()) + static_cast<size_t>(f)] = value;
    return c;
  }
  FinCategory with_identity_entry(Obj a, Mor value) const {
    FinCategory c = *this;
    c.identity[static_cast<size_t>(a)] = value;
    return c;
  }
};

/// Evaluates a composite chain[n-1] ∘ ... ∘ chain[0] (first element applied
/// first). Returns nullopt as soon as a pair fails to compose, so checkers can
/// report ill-typed legs instead of throwing.
inline std::optional<Mor> chain(const FinCategory& c, std::span<const Mor> morphisms) {
  if (morphisms.empty()) return std::nullopt;
  Mor acc = morphisms.front();
  if (!c.valid_mor(acc)) return std::nullopt;
  for (size_t i = 1; i < morphisms.size(); ++i) {
    auto next = c.try_compose(morphisms[i], acc);
    if (!next) return std::nullopt;
    acc = *next;
  }
  return acc;
}

inline std::optional<Mor> chain(const FinCategory& c, std::initializer_list<Mor> morphisms) {
  return chain(c, std::span<const Mor>(morphisms.begin(), morphisms.size()));
}

namespace detail {

inline std::string mor_label(const FinCategory& c, std::optional<Mor> f) {
  if (!f || !c.valid_mor(*f)) return "<ill-typed>";
  return c.mor_name(*f);
}

/// Compares two legs of a diagram at one index tuple and records the outcome.
inline void expect_equal(const FinCategory& c, CheckBuilder& check, const std::string& diagram,
                         std::vector<std::string> at, std::optional<Mor> lhs,
                         std::optional<Mor> rhs) {
  check.count();
  if (lhs && rhs && *lhs == *rhs) return;
  check.fail(diagram, std::move(at), mor_label(c, lhs), mor_label(c, rhs));
}

}  // namespace detail

struct RawMorphism {
  std::string id;
  std::string dom;
  std::string cod;
};

struct RawComposite {
  std::string g;
  std::string f;
  std::string eq;
};

/// Builds a category from string tables. Objects and morphisms are sorted
/// lexicographically by id; that order is the canonical enumeration order for
/// every scan and report. Referential problems throw; law violations do not
/// (run check_category_laws for those).
inline FinCategory make_fin_category(std::string name, std::vector<std::string> objects,
                                     std::vector<RawMorphism> morphisms,
                                     const std::map<std::string, std::string>& identities,
                                     const std::vector<RawComposite>& composites) {
  FinCategory c;
  c.name = std::move(name);
  std::sort(objects.begin(), objects.end());
  for (const auto& o : objects) {
    if (!c.obj_index.emplace(o, static_cast<Obj>(c.objects.size())).second)
      raise(Errc::MalformedTable, "duplicate object " + o + " in " + c.name);
    c.objects.push_back(o);
  }
  std::sort(morphisms.begin(), morphisms.end(),
            [](const RawMorphism& a, const RawMorphism& b) { return a.id < b.id; });
  for (const auto& m : morphisms) {
    if (!c.mor_index.emplace(m.id, static_cast<Mor>(c.morphisms.size())).second)
      raise(Errc::MalformedTable, "duplicate morphism " + m.id + " in " + c.name);
    c.morphisms.push_back(FinCategory::Morphism{m.id, c.obj(m.dom), c.obj(m.cod)});
  }
  c.identity.assign(c.objects.size(), kNoMor);
  for (const auto& [o, m] : identities) c.identity[static_cast<size_t>(c.obj(o))] = c.mor(m);
  for (size_t i = 0; i < c.identity.size(); ++i)
    if (c.identity[i] == kNoMor)
      raise(Errc::MalformedTable, "missing identity for " + c.objects[i] + " in " + c.name);
  c.comp.assign(c.morphisms.size() * c.morphisms.size(), kNoMor);
  for (const auto& e : composites) {
    Mor g = c.mor(e.g), f = c.mor(e.f);
    c.comp[static_cast<size_t>(g) * c.morphisms.size() + static_cast<size_t>(f)] = c.mor(e.eq);
  }
  return c;
}

inline FinCategory empty_category(std::string name = "empty") {
  FinCategory c;
  c.name = std::move(name);
  return c;
}

inline FinCategory terminal_category(std::string name = "terminal") {
  return make_fin_category(std::move(name), {"*"}, {{"1*", "*", "*"}}, {{"*", "1*"}},
                           {{"1*", "1*", "1*"}});
}

/// Unit laws, associativity and table well-formedness, scanned exhaustively.
/// Unknown indices in a hand-rolled struct throw MalformedTable; everything
/// else is reported as witnesses.
inline DiagramReport check_category_laws(const FinCategory& c) {
  DiagramReport report;
  report.suite = "category-laws " + c.name;

  const int nm = c.n_morphisms();
  CheckBuilder wellformed("category.well-formed");
  if (static_cast<int>(c.identity.size()) != c.n_objects() ||
      static_cast<int>(c.comp.size()) != nm * nm)
    raise(Errc::MalformedTable, "table sizes inconsistent in " + c.name);
  for (const auto& m : c.morphisms)
    if (!c.valid_obj(m.dom) || !c.valid_obj(m.cod))
      raise(Errc::MalformedTable, "morphism endpoints outside table in " + c.name);
  for (Obj a = 0; a < c.n_objects(); ++a) {
    Mor i = c.id_of(a);
    if (!c.valid_mor(i)) raise(Errc::MalformedTable, "identity outside table in " + c.name);
    wellformed.count();
    if (c.dom(i) != a || c.cod(i) != a)
      wellformed.fail("identity-typing", {c.obj_name(a)}, c.mor_name(i), "endo of " + c.obj_name(a));
  }
  for (Mor g = 0; g < nm; ++g)
    for (Mor f = 0; f < nm; ++f) {
      Mor r = c.comp[static_cast<size_t>(g) * static_cast<size_t>(nm) + static_cast<size_t>(f)];
      bool composable = c.cod(f) == c.dom(g);
      wellformed.count();
      if (r == kNoMor) {
        if (composable)
          wellformed.fail("composition-total", {c.mor_name(g), c.mor_name(f)}, "<undefined>",
                          "some composite");
        continue;
      }
      if (!c.valid_mor(r)) raise(Errc::MalformedTable, "composite outside table in " + c.name);
      if (!composable)
        wellformed.fail("composition-partial", {c.mor_name(g), c.mor_name(f)}, c.mor_name(r),
                        "<undefined>");
      else if (c.dom(r) != c.dom(f) || c.cod(r) != c.cod(g))
        wellformed.fail("composition-typing", {c.mor_name(g), c.mor_name(f)}, c.mor_name(r),
                        c.obj_name(c.dom(f)) + "->" + c.obj_name(c.cod(g)));
    }
  report.add(wellformed.done());

  CheckBuilder units("category.unit-laws");
  for (Mor f = 0; f < nm; ++f) {
    detail::expect_equal(c, units, "left-unit", {c.mor_name(f)},
                         c.try_compose(c.id_of(c.cod(f)), f), f);
    detail::expect_equal(c, units, "right-unit", {c.mor_name(f)},
                         c.try_compose(f, c.id_of(c.dom(f))), f);
  }
  report.add(units.done());

  CheckBuilder assoc("category.associativity");
  for (Mor h = 0; h < nm; ++h)
    for (Mor g = 0; g < nm; ++g) {
      if (c.cod(g) != c.dom(h)) continue;
      for (Mor f = 0; f < nm; ++f) {
        if (c.cod(f) != c.dom(g)) continue;
        auto gf = c.try_compose(g, f);
        auto hg = c.try_compose(h, g);
        std::optional<Mor> l = gf ? c.try_compose(h, *gf) : std::nullopt;
        std::optional<Mor> r = hg ? c.try_compose(*hg, f) : std::nullopt;
        detail::expect_equal(c, assoc, "associativity",
                             {c.mor_name(h), c.mor_name(g), c.mor_name(f)}, l, r);
      }
    }
  report.add(assoc.done());
  return report;
}

/// Pairwise product: objects and morphisms are pairs, composition and
/// identities componentwise. Object (a,b) sits at index a*|Ob D|+b and the
/// analogous rule holds for morphisms, so tuple enumeration matches index
/// enumeration.
inline FinCategory product_category(const FinCategory& c, const FinCategory& d) {
  FinCategory p;
  p.name = "(" + c.name + "," + d.name + ")";
  p.objects.reserve(static_cast<size_t>(c.n_objects()) * static_cast<size_t>(d.n_objects()));
  for (Obj a = 0; a < c.n_objects(); ++a)
    for (Obj b = 0; b < d.n_objects(); ++b) {
      p.obj_index.emplace("(" + c.obj_name(a) + "," + d.obj_name(b) + ")",
                          static_cast<Obj>(p.objects.size()));
      p.objects.push_back("(" + c.obj_name(a) + "," + d.obj_name(b) + ")");
    }
  const int dn = d.n_objects();
  const int dm = d.n_morphisms();
  auto pobj = [dn](Obj a, Obj b) { return a * dn + b; };
  for (Mor f = 0; f < c.n_morphisms(); ++f)
    for (Mor g = 0; g < d.n_morphisms(); ++g) {
      std::string id = "(" + c.mor_name(f) + "," + d.mor_name(g) + ")";
      p.mor_index.emplace(id, static_cast<Mor>(p.morphisms.size()));
      p.morphisms.push_back(
          FinCategory::Morphism{id, pobj(c.dom(f), d.dom(g)), pobj(c.cod(f), d.cod(g))});
    }
  auto pmor = [dm](Mor f, Mor g) { return f * dm + g; };
  p.identity.resize(p.objects.size());
  for (Obj a = 0; a < c.n_objects(); ++a)
    for (Obj b = 0; b < dn; ++b)
      p.identity[static_cast<size_t>(pobj(a, b))] = pmor(c.id_of(a), d.id_of(b));
  const size_t nm = p.morphisms.size();
  p.comp.assign(nm * nm, kNoMor);
  for (Mor f1 = 0; f1 < c.n_morphisms(); ++f1)
    for (Mor g1 = 0; g1 < dm; ++g1)
      for (Mor f2 = 0; f2 < c.n_morphisms(); ++f2)
        for (Mor g2 = 0; g2 < dm; ++g2) {
          auto cf = c.try_compose(f1, f2);
          auto dg = d.try_compose(g1, g2);
          if (cf && dg)
            p.comp[static_cast<size_t>(pmor(f1, g1)) * nm + static_cast<size_t>(pmor(f2, g2))] =
                pmor(*cf, *dg);
        }
  return p;
}

/// A functor presented by total object and morphism tables. The category
/// references are non-owning; callers keep sources and targets alive.
struct FinFunctor {
  std::string name;
  const FinCategory* source = nullptr;
  const FinCategory* target = nullptr;
  std::vector<Obj> object_map;
  std::vector<Mor> morphism_map;

  Obj on_obj(Obj a) const { return object_map[static_cast<size_t>(a)]; }
  Mor on_mor(Mor f) const { return morphism_map[static_cast<size_t>(f)]; }
};

inline FinFunctor identity_fin_functor(const FinCategory& c) {
  FinFunctor f;
  f.name = "1_" + c.name;
  f.source = &c;
  f.target = &c;
  f.object_map.resize(static_cast<size_t>(c.n_objects()));
  f.morphism_map.resize(static_cast<size_t>(c.n_morphisms()));
  for (Obj a = 0; a < c.n_objects(); ++a) f.object_map[static_cast<size_t>(a)] = a;
  for (Mor m = 0; m < c.n_morphisms(); ++m) f.morphism_map[static_cast<size_t>(m)] = m;
  return f;
}

inline FinFunctor compose_fin_functors(const FinFunctor& g, const FinFunctor& f) {
  if (f.target != g.source)
    raise(Errc::NotComposable, "functor composition endpoint mismatch");
  FinFunctor r;
  r.name = g.name + "." + f.name;
  r.source = f.source;
  r.target = g.target;
  r.object_map.reserve(f.object_map.size());
  for (Obj a : f.object_map) r.object_map.push_back(g.on_obj(a));
  r.morphism_map.reserve(f.morphism_map.size());
  for (Mor m : f.morphism_map) r.morphism_map.push_back(g.on_mor(m));
  return r;
}

/// (F,G): src_prod -> tgt_prod acting componentwise. The product categories
/// must be the ones built by product_category over the endpoints of F and G.
inline FinFunctor pair_fin_functor(const FinFunctor& f, const FinFunctor& g,
                                   const FinCategory& src_prod, const FinCategory& tgt_prod) {
  FinFunctor r;
  r.name = "(" + f.name + "," + g.name + ")";
  r.source = &src_prod;
  r.target = &tgt_prod;
  const int sn2 = g.source->n_objects();
  const int sm2 = g.source->n_morphisms();
  const int tn2 = g.target->n_objects();
  const int tm2 = g.target->n_morphisms();
  r.object_map.resize(static_cast<size_t>(src_prod.n_objects()));
  for (Obj a = 0; a < f.source->n_objects(); ++a)
    for (Obj b = 0; b < sn2; ++b)
      r.object_map[static_cast<size_t>(a * sn2 + b)] = f.on_obj(a) * tn2 + g.on_obj(b);
  r.morphism_map.resize(static_cast<size_t>(src_prod.n_morphisms()));
  for (Mor m = 0; m < f.source->n_morphisms(); ++m)
    for (Mor n = 0; n < sm2; ++n)
      r.morphism_map[static_cast<size_t>(m * sm2 + n)] = f.on_mor(m) * tm2 + g.on_mor(n);
  return r;
}

inline FinFunctor projection_functor(const FinCategory& prod, const FinCategory& c,
                                     const FinCategory& d, int which) {
  FinFunctor r;
  r.name = which == 0 ? "proj1" : "proj2";
  r.source = &prod;
  r.target = which == 0 ? &c : &d;
  const int dn = d.n_objects();
  const int dm = d.n_morphisms();
  r.object_map.resize(static_cast<size_t>(prod.n_objects()));
  r.morphism_map.resize(static_cast<size_t>(prod.n_morphisms()));
  for (Obj a = 0; a < c.n_objects(); ++a)
    for (Obj b = 0; b < dn; ++b) r.object_map[static_cast<size_t>(a * dn + b)] = which == 0 ? a : b;
  for (Mor f = 0; f < c.n_morphisms(); ++f)
    for (Mor g = 0; g < dm; ++g) r.morphism_map[static_cast<size_t>(f * dm + g)] = which == 0 ? f : g;
  return r;
}

/// Identity and composition preservation plus endpoint typing, exhaustively
/// over objects and composable pairs.
inline DiagramReport check_functor_laws(const FinFunctor& fun) {
  if (!fun.source || !fun.target) raise(Errc::MalformedMap, "functor without endpoints");
  const FinCategory& s = *fun.source;
  const FinCategory& t = *fun.target;
  if (static_cast<int>(fun.object_map.size()) != s.n_objects() ||
      static_cast<int>(fun.morphism_map.size()) != s.n_morphisms())
    raise(Errc::MalformedMap, "functor maps not total on " + s.name);
  for (Obj a : fun.object_map)
    if (!t.valid_obj(a)) raise(Errc::MalformedMap, "object image outside " + t.name);
  for (Mor m : fun.morphism_map)
    if (!t.valid_mor(m)) raise(Errc::MalformedMap, "morphism image outside " + t.name);

  DiagramReport report;
  report.suite = "functor-laws " + fun.name;

  CheckBuilder typing("functor.typing");
  for (Mor m = 0; m < s.n_morphisms(); ++m) {
    typing.count();
    if (t.dom(fun.on_mor(m)) != fun.on_obj(s.dom(m)) ||
        t.cod(fun.on_mor(m)) != fun.on_obj(s.cod(m)))
      typing.fail("endpoint-preservation", {s.mor_name(m)}, t.mor_name(fun.on_mor(m)),
                  t.obj_name(fun.on_obj(s.dom(m))) + "->" + t.obj_name(fun.on_obj(s.cod(m))));
  }
  report.add(typing.done());

  CheckBuilder ids("functor.identities");
  for (Obj a = 0; a < s.n_objects(); ++a)
    detail::expect_equal(t, ids, "identity-preservation", {s.obj_name(a)},
                         fun.on_mor(s.id_of(a)), t.id_of(fun.on_obj(a)));
  report.add(ids.done());

  CheckBuilder comp("functor.composition");
  for (Mor g = 0; g < s.n_morphisms(); ++g)
    for (Mor f = 0; f < s.n_morphisms(); ++f) {
      auto gf = s.try_compose(g, f);
      if (!gf) continue;
      detail::expect_equal(t, comp, "composition-preservation", {s.mor_name(g), s.mor_name(f)},
                           fun.on_mor(*gf), t.try_compose(fun.on_mor(g), fun.on_mor(f)));
    }
  report.add(comp.done());
  return report;
}

/// A family of morphisms indexed by tuples of objects of some base category.
/// The optional formulas give the expected endpoints of each component; when
/// present, checkers verify them.
struct NatFamily {
  std::string name;
  int arity = 1;
  int n_objects = 0;  // of the indexing base
  std::vector<Mor> components;
  std::function<Obj(std::span<const Obj>)> source_formula;
  std::function<Obj(std::span<const Obj>)> target_formula;

  size_t flat_index(std::span<const Obj> tuple) const {
    size_t ix = 0;
    for (Obj a : tuple) ix = ix * static_cast<size_t>(n_objects) + static_cast<size_t>(a);
    return ix;
  }
  Mor at(std::span<const Obj> tuple) const {
    if (static_cast<int>(tuple.size()) != arity)
      raise(Errc::ArityMismatch, "component lookup in " + name);
    return components[flat_index(tuple)];
  }
  Mor at(std::initializer_list<Obj> tuple) const {
    return at(std::span<const Obj>(tuple.begin(), tuple.size()));
  }
  NatFamily with_component(std::span<const Obj> tuple, Mor value) const {
    NatFamily f = *this;
    f.components[flat_index(tuple)] = value;
    return f;
  }
};

inline NatFamily make_nat_family(std::string name, int arity, int n_objects, Mor fill = kNoMor) {
  NatFamily f;
  f.name = std::move(name);
  f.arity = arity;
  f.n_objects = n_objects;
  size_t total = 1;
  for (int i = 0; i < arity; ++i) total *= static_cast<size_t>(n_objects);
  f.components.assign(total, fill);
  return f;
}

/// Steps `tuple` (length `arity`, entries in [0, n)) to the next tuple in
/// lexicographic order; returns false after the last one.
inline bool next_tuple(std::span<Obj> tuple, int n) {
  for (int i = static_cast<int>(tuple.size()) - 1; i >= 0; --i) {
    if (++tuple[static_cast<size_t>(i)] < n) return true;
    tuple[static_cast<size_t>(i)] = 0;
  }
  return false;
}

/// Naturality of `family` between parallel functors: for every morphism u of
/// the common source, family[cod u] ∘ F(u) = G(u) ∘ family[dom u]. The family
/// is indexed by the source's objects. Sources built as iterated binary
/// products accept tuple-indexed families directly because product indices
/// coincide with the flat tuple order.
inline DiagramReport check_naturality(const FinFunctor& f, const FinFunctor& g,
                                      const NatFamily& family) {
  if (f.source != g.source || f.target != g.target)
    raise(Errc::StructureMismatch, "naturality requires parallel functors");
  const FinCategory& s = *f.source;
  const FinCategory& t = *f.target;
  size_t expected = 1;
  for (int i = 0; i < family.arity; ++i) expected *= static_cast<size_t>(family.n_objects);
  if (expected != static_cast<size_t>(s.n_objects()) || expected != family.components.size())
    raise(Errc::ArityMismatch, "family " + family.name + " does not index " + s.name);

  DiagramReport report;
  report.suite = "naturality " + family.name;

  CheckBuilder typing("natural.typing");
  for (Obj a = 0; a < s.n_objects(); ++a) {
    Mor comp = family.components[static_cast<size_t>(a)];
    typing.count();
    if (!t.valid_mor(comp) || t.dom(comp) != f.on_obj(a) || t.cod(comp) != g.on_obj(a))
      typing.fail("component-typing", {s.obj_name(a)}, detail::mor_label(t, comp),
                  t.obj_name(f.on_obj(a)) + "->" + t.obj_name(g.on_obj(a)));
  }
  report.add(typing.done());

  CheckBuilder squares("natural.squares");
  for (Mor u = 0; u < s.n_morphisms(); ++u) {
    Mor ca = family.components[static_cast<size_t>(s.dom(u))];
    Mor cb = family.components[static_cast<size_t>(s.cod(u))];
    if (!t.valid_mor(ca) || !t.valid_mor(cb)) continue;  // already a typing witness
    detail::expect_equal(t, squares, "naturality-square", {s.mor_name(u)},
                         chain(t, {f.on_mor(u), cb}), chain(t, {ca, g.on_mor(u)}));
  }
  report.add(squares.done());
  return report;
}

}  // namespace vcat
