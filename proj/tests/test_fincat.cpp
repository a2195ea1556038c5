#include <catch2/catch_amalgamated.hpp>

#include "vcat/fixtures.hpp"

using namespace vcat;

namespace {

Mor m(const FinCategory& c, const char* id) { return c.mor(id); }

}  // namespace

TEST_CASE("composition follows the tables") {
  FinCategory b = fixtures::boolean_poset();
  SECTION("identity law instance") {
    REQUIRE(b.compose(m(b, "id1"), m(b, "m")) == m(b, "m"));
  }
  SECTION("sign category follows the group table of Z/2") {
    FinCategory s = fixtures::sign_base();
    // independent oracle: signs add mod 2
    for (int x = 0; x < 2; ++x)
      for (int y = 0; y < 2; ++y)
        REQUIRE(s.compose(fixtures::sign_mor(0, x), fixtures::sign_mor(0, y)) ==
                fixtures::sign_mor(0, x ^ y));
    REQUIRE(s.compose(m(s, "g0"), m(s, "g0")) == m(s, "e0"));
  }
  SECTION("non-composable pair throws") {
    REQUIRE_THROWS_MATCHES(b.compose(m(b, "m"), m(b, "id1")), Error,
                           Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.code() == Errc::NonComposable;
                           }));
  }
  SECTION("unknown ids throw") {
    REQUIRE_THROWS_MATCHES(b.compose(42, 0), Error,
                           Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.code() == Errc::UnknownMorphism;
                           }));
  }
}

TEST_CASE("category laws") {
  SECTION("boolean poset passes") {
    REQUIRE(check_category_laws(fixtures::boolean_poset()).passed());
  }
  SECTION("sign category passes exhaustively") {
    auto report = check_category_laws(fixtures::sign_base());
    REQUIRE(report.passed());
    REQUIRE(report.find("category.associativity")->instances > 0);
  }
  SECTION("empty and terminal categories pass vacuously") {
    REQUIRE(check_category_laws(empty_category()).passed());
    REQUIRE(check_category_laws(terminal_category()).passed());
  }
  SECTION("redefining g1.g1 = g1 still satisfies the bare category laws") {
    // {e1, g1} with idempotent g1 is the two-element monoid {1, a | a a = a},
    // so the unit/associativity scan accepts it; the defect only surfaces
    // once the tensor functor is checked (below).
    FinCategory s = fixtures::sign_base();
    FinCategory mutant = s.with_composition_entry(m(s, "g1"), m(s, "g1"), m(s, "g1"));
    REQUIRE(check_category_laws(mutant).passed());
  }
  SECTION("redefining e1.e1 = g1 breaks the unit law with a witness") {
    FinCategory s = fixtures::sign_base();
    FinCategory mutant = s.with_composition_entry(m(s, "e1"), m(s, "e1"), m(s, "g1"));
    auto report = check_category_laws(mutant);
    REQUIRE_FALSE(report.passed());
    REQUIRE_FALSE(report.find("category.unit-laws")->witnesses.empty());
  }
}

TEST_CASE("product categories") {
  FinCategory b = fixtures::boolean_poset();
  SECTION("bool x bool has 4 objects and 9 morphisms") {
    FinCategory p = product_category(b, b);
    REQUIRE(p.n_objects() == 4);
    REQUIRE(p.n_morphisms() == 9);
    REQUIRE(check_category_laws(p).passed());
  }
  SECTION("terminal x C is isomorphic to C") {
    FinCategory t = terminal_category();
    FinCategory p = product_category(t, b);
    REQUIRE(p.n_objects() == b.n_objects());
    REQUIRE(p.n_morphisms() == b.n_morphisms());
    REQUIRE(check_category_laws(p).passed());
    // the projection onto C is a bijective law-passing functor
    auto proj = projection_functor(p, t, b, 1);
    REQUIRE(check_functor_laws(proj).passed());
  }
  SECTION("sign x sign has empty cross-homs") {
    FinCategory s = fixtures::sign_base();
    FinCategory p = product_category(s, s);
    Obj ii = p.obj("(I,I)");
    Obj xx = p.obj("(X,X)");
    for (Mor f = 0; f < p.n_morphisms(); ++f)
      REQUIRE_FALSE((p.dom(f) == ii && p.cod(f) == xx));
  }
  SECTION("both projections pass the functor laws") {
    FinCategory s = fixtures::sign_base();
    FinCategory p = product_category(s, b);
    REQUIRE(check_functor_laws(projection_functor(p, s, b, 0)).passed());
    REQUIRE(check_functor_laws(projection_functor(p, s, b, 1)).passed());
  }
}

TEST_CASE("functor laws") {
  auto sign_k = fixtures::sign_kfold();
  SECTION("identity functor passes") {
    FinCategory s = fixtures::sign_base();
    REQUIRE(check_functor_laws(identity_fin_functor(s)).passed());
  }
  SECTION("the tensor of the sign structure is a functor on sign x sign") {
    REQUIRE(check_functor_laws(sign_k->tensors[0]).passed());
  }
  SECTION("corrupting one tensor entry breaks a composition square") {
    const FinCategory& s = sign_k->base;
    // (x)(g0, e1) was g1; forcing it to e1 survives some squares but not all
    FinFunctor broken = sign_k->tensors[0];
    std::vector<Mor> table = broken.morphism_map;
    table[static_cast<size_t>(sign_k->pair_mor(s.mor("g0"), s.mor("e1")))] = s.mor("e1");
    broken.morphism_map = table;
    auto report = check_functor_laws(broken);
    REQUIRE_FALSE(report.passed());
    REQUIRE_FALSE(report.find("functor.composition")->witnesses.empty());
  }
}

TEST_CASE("naturality checking") {
  auto sign_k = fixtures::sign_kfold();
  const FinCategory& s = sign_k->base;

  SECTION("identity family between identical functors passes") {
    auto id = identity_fin_functor(s);
    NatFamily family = make_nat_family("id-family", 1, s.n_objects());
    for (Obj a = 0; a < s.n_objects(); ++a)
      family.components[static_cast<size_t>(a)] = s.id_of(a);
    REQUIRE(check_naturality(id, id, family).passed());
  }

  // The interchanger as a transformation between the two four-variable
  // composite functors (x)(( x) x ( x)) and its rearrangement.
  const FinCategory& s2 = sign_k->base_sq;
  FinCategory s4 = product_category(s2, s2);
  const FinFunctor& tensor = sign_k->tensors[0];
  FinFunctor tt = pair_fin_functor(tensor, tensor, s4, s2);
  FinFunctor outer = compose_fin_functors(tensor, tt);  // ((A(x)B),(C(x)D)) -> (A(x)B)(x)(C(x)D)
  // the rearranged side: swap the middle factors first
  FinFunctor swap_mid;
  swap_mid.name = "swap-middle";
  swap_mid.source = &s4;
  swap_mid.target = &s4;
  swap_mid.object_map.resize(static_cast<size_t>(s4.n_objects()));
  swap_mid.morphism_map.resize(static_cast<size_t>(s4.n_morphisms()));
  const int n = s.n_objects(), nm = s.n_morphisms();
  for (Obj a = 0; a < n; ++a)
    for (Obj b = 0; b < n; ++b)
      for (Obj c = 0; c < n; ++c)
        for (Obj d = 0; d < n; ++d)
          swap_mid.object_map[static_cast<size_t>(((a * n + b) * n + c) * n + d)] =
              ((a * n + c) * n + b) * n + d;
  for (Mor f = 0; f < nm; ++f)
    for (Mor g = 0; g < nm; ++g)
      for (Mor h = 0; h < nm; ++h)
        for (Mor l = 0; l < nm; ++l)
          swap_mid.morphism_map[static_cast<size_t>(((f * nm + g) * nm + h) * nm + l)] =
              ((f * nm + h) * nm + g) * nm + l;
  FinFunctor inner = compose_fin_functors(compose_fin_functors(tensor, tt), swap_mid);

  NatFamily eta = make_nat_family("eta", 4, n);
  for (Obj a = 0; a < n; ++a)
    for (Obj b = 0; b < n; ++b)
      for (Obj c = 0; c < n; ++c)
        for (Obj d = 0; d < n; ++d)
          eta.components[eta.flat_index(std::array<Obj, 4>{a, b, c, d})] =
              sign_k->eta_at(1, 2, a, b, c, d);

  SECTION("the interchanger is natural between the two composites") {
    auto report = check_naturality(outer, inner, eta);
    REQUIRE(report.passed());
    REQUIRE(report.find("natural.squares")->instances ==
            static_cast<std::uint64_t>(s4.n_morphisms()));
  }

  SECTION("a component of the wrong parity fails typing with a witness") {
    NatFamily broken =
        eta.with_component(std::array<Obj, 4>{1, 1, 1, 1}, s.mor("g1"));  // X-endo, expected I-endo
    auto report = check_naturality(outer, inner, broken);
    REQUIRE_FALSE(report.passed());
    REQUIRE_FALSE(report.find("natural.typing")->witnesses.empty());
  }

  SECTION("arity mismatch is rejected") {
    NatFamily short_family = make_nat_family("short", 2, n);
    REQUIRE_THROWS_MATCHES(check_naturality(outer, inner, short_family), Error,
                           Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.code() == Errc::ArityMismatch;
                           }));
  }
}

// Every single-entry corruption of a composition or identity table must be
// rejected by the category-law, functor-law or naturality checkers.
TEST_CASE("checker soundness under table mutations") {
  auto rejected = [](const KFoldPtr& v, const FinCategory& mutant_base) {
    auto mutant = v->with_base(mutant_base);
    if (!check_category_laws(mutant->base).passed()) return true;
    for (int i = 1; i <= mutant->k; ++i)
      if (!check_functor_laws(mutant->tensors[static_cast<size_t>(i - 1)]).passed()) return true;
    for (int i = 1; i <= mutant->k; ++i)
      if (!check_alpha_natural(*mutant, i).passed()) return true;
    for (int i = 1; i <= mutant->k; ++i)
      for (int j = i + 1; j <= mutant->k; ++j)
        if (!check_eta_natural(*mutant, i, j).passed()) return true;
    return false;
  };

  for (const auto& v : {fixtures::sign_kfold(), fixtures::boolean_kfold(), fixtures::z2_kfold()}) {
    const FinCategory& base = v->base;
    int mutants = 0;
    for (Mor g = 0; g < base.n_morphisms(); ++g)
      for (Mor f = 0; f < base.n_morphisms(); ++f) {
        if (!base.try_compose(g, f)) continue;
        for (Mor alt = 0; alt < base.n_morphisms(); ++alt) {
          if (alt == *base.try_compose(g, f)) continue;
          ++mutants;
          INFO(base.name << ": compose(" << base.mor_name(g) << "," << base.mor_name(f)
                         << ") := " << base.mor_name(alt));
          REQUIRE(rejected(v, base.with_composition_entry(g, f, alt)));
        }
      }
    for (Obj a = 0; a < base.n_objects(); ++a)
      for (Mor alt = 0; alt < base.n_morphisms(); ++alt) {
        if (alt == base.id_of(a)) continue;
        ++mutants;
        INFO(base.name << ": id(" << base.obj_name(a) << ") := " << base.mor_name(alt));
        REQUIRE(rejected(v, base.with_identity_entry(a, alt)));
      }
    REQUIRE(mutants > 0);
  }
}
