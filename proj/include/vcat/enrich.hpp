#pragma once

#include <memory>

#include "vcat/monoidal.hpp"

namespace vcat {

/// A category enriched over (V, (x)_1, alpha^1, I): hom-objects in V,
/// composition morphisms M_{ABC} : hom(B,C) (x)_1 hom(A,B) -> hom(A,C) and
/// identity elements j_A : I -> hom(A,A). Stored as flat tables over the
/// object indices; immutable, with copy-with-edit helpers for mutation tests.
struct EnrichedCategory {
  KFoldPtr base;
  std::string name;
  std::vector<std::string> objects;
  std::vector<Obj> hom;    // n^2, (a,b) at a*n+b
  std::vector<Mor> comp;   // n^3, M_{ABC} at (a*n+b)*n+c
  std::vector<Mor> ident;  // n

  int n() const { return static_cast<int>(objects.size()); }
  const std::string& obj_name(int a) const { return objects[static_cast<size_t>(a)]; }
  int obj(std::string_view id) const {
    for (int a = 0; a < n(); ++a)
      if (objects[static_cast<size_t>(a)] == id) return a;
    raise(Errc::UnknownObject, std::string(id) + " in " + name);
  }

  Obj hom_at(int a, int b) const { return hom[static_cast<size_t>(a * n() + b)]; }
  Mor m_at(int a, int b, int c) const {
    return comp[static_cast<size_t>((a * n() + b) * n() + c)];
  }
  Mor j_at(int a) const { return ident[static_cast<size_t>(a)]; }

  EnrichedCategory with_m_entry(int a, int b, int c, Mor value) const {
    EnrichedCategory e = *this;
    e.comp[static_cast<size_t>((a * n() + b) * n() + c)] = value;
    return e;
  }
  EnrichedCategory with_j_entry(int a, Mor value) const {
    EnrichedCategory e = *this;
    e.ident[static_cast<size_t>(a)] = value;
    return e;
  }
  EnrichedCategory with_hom_entry(int a, int b, Obj value) const {
    EnrichedCategory e = *this;
    e.hom[static_cast<size_t>(a * n() + b)] = value;
    return e;
  }
};

using EnrichedPtr = std::shared_ptr<const EnrichedCategory>;

/// Validates sizes and id ranges (DanglingHom for hom entries outside V) and
/// freezes the result. Law violations are left to check_enriched_category.
inline EnrichedPtr make_enriched(KFoldPtr base, std::string name, std::vector<std::string> objects,
                                 std::vector<Obj> hom, std::vector<Mor> comp,
                                 std::vector<Mor> ident) {
  if (!base) raise(Errc::BaseMismatch, "enriched category without base");
  auto e = std::make_shared<EnrichedCategory>();
  e->base = std::move(base);
  e->name = std::move(name);
  e->objects = std::move(objects);
  e->hom = std::move(hom);
  e->comp = std::move(comp);
  e->ident = std::move(ident);
  const size_t n = e->objects.size();
  if (e->hom.size() != n * n || e->comp.size() != n * n * n || e->ident.size() != n)
    raise(Errc::MalformedTable, "enriched table sizes in " + e->name);
  for (Obj h : e->hom)
    if (!e->base->base.valid_obj(h)) raise(Errc::DanglingHom, "hom entry outside V in " + e->name);
  for (Mor m : e->comp)
    if (!e->base->base.valid_mor(m))
      raise(Errc::UnknownMorphism, "composition entry outside V in " + e->name);
  for (Mor m : e->ident)
    if (!e->base->base.valid_mor(m))
      raise(Errc::UnknownMorphism, "identity entry outside V in " + e->name);
  return e;
}

inline EnrichedPtr make_enriched(EnrichedCategory value) {
  auto e = std::make_shared<EnrichedCategory>(std::move(value));
  return e;
}

inline bool enriched_equal(const EnrichedCategory& a, const EnrichedCategory& b) {
  return a.base.get() == b.base.get() && a.n() == b.n() && a.hom == b.hom && a.comp == b.comp &&
         a.ident == b.ident;
}

/// Typing of M and j, the associativity pentagon over all object quadruples
/// and both unit triangles over all pairs. With the strict unit of V the
/// triangles are the two-leg equalities M(j (x) 1) = 1 and M(1 (x) j) = 1.
inline DiagramReport check_enriched_category(const EnrichedCategory& e,
                                             const CheckOptions& options = {}) {
  const KFoldStructure& v = *e.base;
  const FinCategory& c = v.base;
  DiagramReport report;
  report.suite = "enriched " + e.name;

  CheckBuilder typing("enriched.typing");
  for (int a = 0; a < e.n(); ++a) {
    Mor j = e.j_at(a);
    typing.count();
    if (!c.valid_mor(j) || c.dom(j) != v.unit || c.cod(j) != e.hom_at(a, a))
      typing.fail("identity-element-typing", {e.obj_name(a)}, detail::mor_label(c, j),
                  c.obj_name(v.unit) + "->" + c.obj_name(e.hom_at(a, a)));
  }
  for (int a = 0; a < e.n(); ++a)
    for (int b = 0; b < e.n(); ++b)
      for (int d = 0; d < e.n(); ++d) {
        Mor m = e.m_at(a, b, d);
        Obj src = v.tensor_obj(1, e.hom_at(b, d), e.hom_at(a, b));
        Obj tgt = e.hom_at(a, d);
        typing.count();
        if (!c.valid_mor(m) || c.dom(m) != src || c.cod(m) != tgt)
          typing.fail("composition-typing", {e.obj_name(a), e.obj_name(b), e.obj_name(d)},
                      detail::mor_label(c, m), c.obj_name(src) + "->" + c.obj_name(tgt));
      }
  report.add(typing.done());

  CheckBuilder pentagon("enriched.pentagon");
  detail::scan_tuples(pentagon, 4, e.n(), options, [&](std::span<const Obj> t) {
    int a = t[0], b = t[1], d = t[2], f = t[3];
    // left: (M_{BCD} (x) 1) ; M_{ABD}   right: alpha ; (1 (x) M_{ABC}) ; M_{ACD}
    auto left = chain(c, {v.tensor_mor(1, e.m_at(b, d, f), c.id_of(e.hom_at(a, b))),
                          e.m_at(a, b, f)});
    auto right = chain(c, {v.alpha_at(1, e.hom_at(d, f), e.hom_at(b, d), e.hom_at(a, b)),
                           v.tensor_mor(1, c.id_of(e.hom_at(d, f)), e.m_at(a, b, d)),
                           e.m_at(a, d, f)});
    std::vector<std::string> at{e.obj_name(a), e.obj_name(b), e.obj_name(d), e.obj_name(f)};
    detail::expect_equal(c, pentagon, "pentagon", std::move(at), left, right);
  });
  report.add(pentagon.done());

  CheckBuilder triangles("enriched.unit-triangles");
  for (int a = 0; a < e.n(); ++a)
    for (int b = 0; b < e.n(); ++b) {
      Mor one = c.id_of(e.hom_at(a, b));
      detail::expect_equal(c, triangles, "left-unit-triangle", {e.obj_name(a), e.obj_name(b)},
                           chain(c, {v.tensor_mor(1, e.j_at(b), one), e.m_at(a, b, b)}), one);
      detail::expect_equal(c, triangles, "right-unit-triangle", {e.obj_name(a), e.obj_name(b)},
                           chain(c, {v.tensor_mor(1, one, e.j_at(a)), e.m_at(a, a, b)}), one);
    }
  report.add(triangles.done());
  return report;
}

/// An enriched functor: an object map plus hom-components T_{AB} in V.
struct EnrichedFunctor {
  std::string name;
  EnrichedPtr source;
  EnrichedPtr target;
  std::vector<int> object_map;
  std::vector<Mor> components;  // n^2 over source objects

  int on_obj(int a) const { return object_map[static_cast<size_t>(a)]; }
  Mor comp_at(int a, int b) const {
    return components[static_cast<size_t>(a * source->n() + b)];
  }
  EnrichedFunctor with_component(int a, int b, Mor value) const {
    EnrichedFunctor f = *this;
    f.components[static_cast<size_t>(a * source->n() + b)] = value;
    return f;
  }
};

using EnrichedFunctorPtr = std::shared_ptr<const EnrichedFunctor>;

inline EnrichedFunctorPtr make_enriched_functor(std::string name, EnrichedPtr source,
                                                EnrichedPtr target, std::vector<int> object_map,
                                                std::vector<Mor> components) {
  if (!source || !target) raise(Errc::StructureMismatch, "functor without endpoints");
  if (source->base.get() != target->base.get())
    raise(Errc::BaseMismatch, "enriched functor across bases");
  auto f = std::make_shared<EnrichedFunctor>();
  f->name = std::move(name);
  f->source = std::move(source);
  f->target = std::move(target);
  f->object_map = std::move(object_map);
  f->components = std::move(components);
  const size_t n = static_cast<size_t>(f->source->n());
  if (f->object_map.size() != n || f->components.size() != n * n)
    raise(Errc::MalformedMap, "functor tables not total in " + f->name);
  for (int a : f->object_map)
    if (a < 0 || a >= f->target->n()) raise(Errc::MalformedMap, "object image outside target");
  return f;
}

inline EnrichedFunctorPtr identity_enriched_functor(EnrichedPtr a) {
  std::vector<int> object_map;
  std::vector<Mor> components;
  const FinCategory& c = a->base->base;
  for (int x = 0; x < a->n(); ++x) object_map.push_back(x);
  for (int x = 0; x < a->n(); ++x)
    for (int y = 0; y < a->n(); ++y) components.push_back(c.id_of(a->hom_at(x, y)));
  return make_enriched_functor("1_" + a->name, a, a, std::move(object_map),
                               std::move(components));
}

/// The two functor diagrams: compatibility with composition over all triples
/// and with the identity elements over all objects, plus component typing.
inline DiagramReport check_enriched_functor(const EnrichedFunctor& f,
                                            const CheckOptions& options = {}) {
  const EnrichedCategory& s = *f.source;
  const EnrichedCategory& t = *f.target;
  const KFoldStructure& v = *s.base;
  const FinCategory& c = v.base;
  DiagramReport report;
  report.suite = "enriched-functor " + f.name;

  CheckBuilder typing("enriched-functor.typing");
  for (int a = 0; a < s.n(); ++a)
    for (int b = 0; b < s.n(); ++b) {
      Mor comp = f.comp_at(a, b);
      typing.count();
      if (!c.valid_mor(comp) || c.dom(comp) != s.hom_at(a, b) ||
          c.cod(comp) != t.hom_at(f.on_obj(a), f.on_obj(b)))
        typing.fail("component-typing", {s.obj_name(a), s.obj_name(b)},
                    detail::mor_label(c, comp),
                    c.obj_name(s.hom_at(a, b)) + "->" +
                        c.obj_name(t.hom_at(f.on_obj(a), f.on_obj(b))));
    }
  report.add(typing.done());

  CheckBuilder square("enriched-functor.composition");
  detail::scan_tuples(square, 3, s.n(), options, [&](std::span<const Obj> tr) {
    int a = tr[0], b = tr[1], d = tr[2];
    auto left = chain(c, {s.m_at(a, b, d), f.comp_at(a, d)});
    auto right = chain(c, {v.tensor_mor(1, f.comp_at(b, d), f.comp_at(a, b)),
                           t.m_at(f.on_obj(a), f.on_obj(b), f.on_obj(d))});
    detail::expect_equal(c, square, "composition-square",
                         {s.obj_name(a), s.obj_name(b), s.obj_name(d)}, left, right);
  });
  report.add(square.done());

  CheckBuilder units("enriched-functor.units");
  for (int a = 0; a < s.n(); ++a)
    detail::expect_equal(c, units, "unit-triangle", {s.obj_name(a)},
                         chain(c, {s.j_at(a), f.comp_at(a, a)}), t.j_at(f.on_obj(a)));
  report.add(units.done());
  return report;
}

/// Equality of enriched functors: same object maps and the same hom-object
/// morphisms everywhere.
inline DiagramReport compare_functors(const EnrichedFunctor& f, const EnrichedFunctor& g) {
  DiagramReport report;
  report.suite = "functors-equal " + f.name + " vs " + g.name;
  CheckBuilder eq("functors.equal");
  if (!enriched_equal(*f.source, *g.source) || !enriched_equal(*f.target, *g.target)) {
    eq.fail("parallel", {}, f.name, g.name);
    report.add(eq.done());
    return report;
  }
  const FinCategory& c = f.source->base->base;
  for (int a = 0; a < f.source->n(); ++a) {
    eq.count();
    if (f.on_obj(a) != g.on_obj(a))
      eq.fail("object-map", {f.source->obj_name(a)}, f.target->obj_name(f.on_obj(a)),
              g.target->obj_name(g.on_obj(a)));
  }
  for (int a = 0; a < f.source->n(); ++a)
    for (int b = 0; b < f.source->n(); ++b)
      detail::expect_equal(c, eq, "hom-component", {f.source->obj_name(a), f.source->obj_name(b)},
                           f.comp_at(a, b), g.comp_at(a, b));
  report.add(eq.done());
  return report;
}

inline bool functors_equal(const EnrichedFunctor& f, const EnrichedFunctor& g) {
  return compare_functors(f, g).passed();
}

inline EnrichedFunctorPtr compose_enriched_functors(const EnrichedFunctor& g,
                                                    const EnrichedFunctor& f) {
  if (!enriched_equal(*f.target, *g.source))
    raise(Errc::NotComposable, "enriched functor composition endpoint mismatch");
  const FinCategory& c = f.source->base->base;
  std::vector<int> object_map;
  std::vector<Mor> components;
  for (int a = 0; a < f.source->n(); ++a) object_map.push_back(g.on_obj(f.on_obj(a)));
  for (int a = 0; a < f.source->n(); ++a)
    for (int b = 0; b < f.source->n(); ++b) {
      auto comp = chain(c, {f.comp_at(a, b), g.comp_at(f.on_obj(a), f.on_obj(b))});
      if (!comp) raise(Errc::NotComposable, "components do not compose");
      components.push_back(*comp);
    }
  return make_enriched_functor(g.name + "." + f.name, f.source, g.target, std::move(object_map),
                               std::move(components));
}

inline EnrichedFunctorPtr compose_enriched_functors(const EnrichedFunctorPtr& g,
                                                    const EnrichedFunctorPtr& f) {
  return compose_enriched_functors(*g, *f);
}

/// A 2-cell: components alpha_A : I -> target(TA, SA) between parallel
/// enriched functors T and S.
struct EnrichedNatTransf {
  std::string name;
  EnrichedFunctorPtr from;  // T
  EnrichedFunctorPtr to;    // S
  std::vector<Mor> components;

  Mor at(int a) const { return components[static_cast<size_t>(a)]; }
  EnrichedNatTransf with_component(int a, Mor value) const {
    EnrichedNatTransf t = *this;
    t.components[static_cast<size_t>(a)] = value;
    return t;
  }
};

inline EnrichedNatTransf make_transformation(std::string name, EnrichedFunctorPtr from,
                                             EnrichedFunctorPtr to, std::vector<Mor> components) {
  if (!from || !to) raise(Errc::StructureMismatch, "transformation without endpoints");
  if (!enriched_equal(*from->source, *to->source) || !enriched_equal(*from->target, *to->target))
    raise(Errc::StructureMismatch, "transformation between non-parallel functors");
  if (components.size() != static_cast<size_t>(from->source->n()))
    raise(Errc::MalformedMap, "component table not total in " + name);
  return EnrichedNatTransf{std::move(name), std::move(from), std::move(to),
                           std::move(components)};
}

inline bool transformations_equal(const EnrichedNatTransf& a, const EnrichedNatTransf& b) {
  return a.components == b.components && functors_equal(*a.from, *b.from) &&
         functors_equal(*a.to, *b.to);
}

/// V-naturality: with a strict unit both outer legs of the hexagon are
/// identities, leaving M(alpha_B (x) T_{AB}) = M(S_{AB} (x) alpha_A) per pair.
inline DiagramReport check_v_natural(const EnrichedNatTransf& tr) {
  const EnrichedFunctor& tf = *tr.from;
  const EnrichedFunctor& sf = *tr.to;
  const EnrichedCategory& a_cat = *tf.source;
  const EnrichedCategory& b_cat = *tf.target;
  const KFoldStructure& v = *a_cat.base;
  const FinCategory& c = v.base;
  DiagramReport report;
  report.suite = "v-natural " + tr.name;

  CheckBuilder typing("v-natural.typing");
  for (int a = 0; a < a_cat.n(); ++a) {
    Mor comp = tr.at(a);
    typing.count();
    if (!c.valid_mor(comp) || c.dom(comp) != v.unit ||
        c.cod(comp) != b_cat.hom_at(tf.on_obj(a), sf.on_obj(a)))
      typing.fail("component-typing", {a_cat.obj_name(a)}, detail::mor_label(c, comp),
                  c.obj_name(v.unit) + "->" +
                      c.obj_name(b_cat.hom_at(tf.on_obj(a), sf.on_obj(a))));
  }
  report.add(typing.done());

  CheckBuilder hexagon("v-natural.hexagon");
  for (int a = 0; a < a_cat.n(); ++a)
    for (int b = 0; b < a_cat.n(); ++b) {
      auto upper = chain(c, {v.tensor_mor(1, tr.at(b), tf.comp_at(a, b)),
                             b_cat.m_at(tf.on_obj(a), tf.on_obj(b), sf.on_obj(b))});
      auto lower = chain(c, {v.tensor_mor(1, sf.comp_at(a, b), tr.at(a)),
                             b_cat.m_at(tf.on_obj(a), sf.on_obj(a), sf.on_obj(b))});
      detail::expect_equal(c, hexagon, "naturality-hexagon", {a_cat.obj_name(a), a_cat.obj_name(b)},
                           upper, lower);
    }
  report.add(hexagon.done());
  return report;
}

inline EnrichedNatTransf identity_transformation(const EnrichedFunctorPtr& q) {
  std::vector<Mor> components;
  for (int a = 0; a < q->source->n(); ++a)
    components.push_back(q->target->j_at(q->on_obj(a)));
  return make_transformation("1_" + q->name, q, q, std::move(components));
}

/// Vertical composite: (beta . alpha)_A = M(beta_A (x)_1 alpha_A), using
/// I = I (x)_1 I strictly.
inline EnrichedNatTransf vertical_compose(const EnrichedNatTransf& beta,
                                          const EnrichedNatTransf& alpha) {
  if (!functors_equal(*alpha.to, *beta.from))
    raise(Errc::NotComposable, "vertical composition endpoint mismatch");
  const EnrichedCategory& b_cat = *alpha.from->target;
  const KFoldStructure& v = *b_cat.base;
  const FinCategory& c = v.base;
  std::vector<Mor> components;
  for (int a = 0; a < alpha.from->source->n(); ++a) {
    int ta = alpha.from->on_obj(a);
    int sa = alpha.to->on_obj(a);
    int ra = beta.to->on_obj(a);
    auto comp = chain(c, {v.tensor_mor(1, beta.at(a), alpha.at(a)), b_cat.m_at(ta, sa, ra)});
    if (!comp) raise(Errc::NotComposable, "vertical composite did not typecheck");
    components.push_back(*comp);
  }
  return make_transformation(beta.name + "." + alpha.name, alpha.from, beta.to,
                             std::move(components));
}

/// Left whisker (functor after 2-cell): (Q alpha)_A = Q_{TA,SA} . alpha_A.
inline EnrichedNatTransf whisker_left(const EnrichedFunctorPtr& q,
                                      const EnrichedNatTransf& alpha) {
  if (!enriched_equal(*q->source, *alpha.from->target))
    raise(Errc::NotComposable, "whisker endpoint mismatch");
  const FinCategory& c = q->target->base->base;
  std::vector<Mor> components;
  for (int a = 0; a < alpha.from->source->n(); ++a) {
    auto comp =
        chain(c, {alpha.at(a), q->comp_at(alpha.from->on_obj(a), alpha.to->on_obj(a))});
    if (!comp) raise(Errc::NotComposable, "whiskered component did not typecheck");
    components.push_back(*comp);
  }
  return make_transformation(q->name + "*" + alpha.name, compose_enriched_functors(q, alpha.from),
                             compose_enriched_functors(q, alpha.to), std::move(components));
}

/// Right whisker (2-cell after functor): (alpha P)_D = alpha_{PD}.
inline EnrichedNatTransf whisker_right(const EnrichedNatTransf& alpha,
                                       const EnrichedFunctorPtr& p) {
  if (!enriched_equal(*p->target, *alpha.from->source))
    raise(Errc::NotComposable, "whisker endpoint mismatch");
  std::vector<Mor> components;
  for (int d = 0; d < p->source->n(); ++d) components.push_back(alpha.at(p->on_obj(d)));
  return make_transformation(alpha.name + "*" + p->name, compose_enriched_functors(alpha.from, p),
                             compose_enriched_functors(alpha.to, p), std::move(components));
}

}  // namespace vcat
