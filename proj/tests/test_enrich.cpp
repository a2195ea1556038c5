#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "vcat/fixtures.hpp"

using namespace vcat;

namespace {

Mor e0(const KFoldPtr& v) { return v->base.mor("e0"); }
Mor g0(const KFoldPtr& v) { return v->base.mor("g0"); }

/// All component families between two parallel functors that the hexagon
/// accepts, found by enumeration over the candidate morphisms I -> hom.
std::vector<EnrichedNatTransf> transformations_between(const EnrichedFunctorPtr& f,
                                                       const EnrichedFunctorPtr& g) {
  const EnrichedCategory& src = *f->source;
  const EnrichedCategory& tgt = *f->target;
  const KFoldStructure& v = *src.base;
  const FinCategory& c = v.base;
  std::vector<std::vector<Mor>> candidates(static_cast<size_t>(src.n()));
  for (int a = 0; a < src.n(); ++a) {
    for (Mor m = 0; m < c.n_morphisms(); ++m)
      if (c.dom(m) == v.unit && c.cod(m) == tgt.hom_at(f->on_obj(a), g->on_obj(a)))
        candidates[static_cast<size_t>(a)].push_back(m);
    if (candidates[static_cast<size_t>(a)].empty()) return {};
  }
  std::vector<EnrichedNatTransf> found;
  std::vector<size_t> pick(static_cast<size_t>(src.n()), 0);
  for (;;) {
    std::vector<Mor> components;
    for (int a = 0; a < src.n(); ++a)
      components.push_back(candidates[static_cast<size_t>(a)][pick[static_cast<size_t>(a)]]);
    auto tr = make_transformation("cand", f, g, components);
    if (check_v_natural(tr).passed()) found.push_back(tr);
    int at = src.n() - 1;
    while (at >= 0 && ++pick[static_cast<size_t>(at)] == candidates[static_cast<size_t>(at)].size())
      pick[static_cast<size_t>(at--)] = 0;
    if (at < 0) break;
  }
  return found;
}

}  // namespace

TEST_CASE("enriched category checks") {
  auto bool_k = fixtures::boolean_kfold();
  auto sign_k = fixtures::sign_kfold();

  SECTION("preorders over the boolean base pass") {
    REQUIRE(check_enriched_category(*fixtures::preorder_chain(bool_k)).passed());
    REQUIRE(check_enriched_category(*fixtures::preorder_discrete(bool_k)).passed());
  }
  SECTION("constant, twisted and graded sign fixtures pass") {
    REQUIRE(check_enriched_category(*fixtures::constant_sign(sign_k)).passed());
    REQUIRE(check_enriched_category(*fixtures::twisted_sign(sign_k)).passed());
    REQUIRE(check_enriched_category(*fixtures::graded_sign(sign_k)).passed());
  }
  SECTION("M_{ppp} = g0 fails the unit triangle at (p,p)") {
    auto broken = fixtures::constant_sign(sign_k)->with_m_entry(0, 0, 0, g0(sign_k));
    auto report = check_enriched_category(broken);
    REQUIRE_FALSE(report.passed());
    const auto& witnesses = report.find("enriched.unit-triangles")->witnesses;
    REQUIRE_FALSE(witnesses.empty());
    REQUIRE(witnesses.at(0).at == std::vector<std::string>{"p", "p"});
  }
  SECTION("the empty enriched category passes vacuously") {
    REQUIRE(check_enriched_category(*make_enriched(sign_k, "empty", {}, {}, {}, {})).passed());
  }
  SECTION("hom entries outside V are rejected at construction") {
    REQUIRE_THROWS_MATCHES(
        make_enriched(sign_k, "bad", {"p"}, {Obj{7}}, {e0(sign_k)}, {e0(sign_k)}), Error,
        Catch::Matchers::Predicate<Error>(
            [](const Error& e) { return e.code() == Errc::DanglingHom; }));
  }
}

TEST_CASE("exhaustive search over composition assignments finds exactly the cocycles") {
  auto sign_k = fixtures::sign_kfold();
  // two objects, every hom I, identities e0: the eight M entries each carry a
  // sign bit; scan all 256 assignments
  std::vector<std::vector<Mor>> passing;
  for (int mask = 0; mask < 256; ++mask) {
    std::vector<Mor> comp(8);
    for (int bit = 0; bit < 8; ++bit)
      comp[static_cast<size_t>(bit)] = fixtures::sign_mor(0, (mask >> bit) & 1);
    auto cat = make_enriched(sign_k, "scan", {"p", "q"}, std::vector<Obj>(4, 0), comp,
                             std::vector<Mor>(2, e0(sign_k)));
    if (check_enriched_category(*cat).passed()) passing.push_back(comp);
  }
  REQUIRE(passing.size() == 2);
  REQUIRE(passing.at(0) == fixtures::constant_sign(sign_k)->comp);
  REQUIRE(passing.at(1) == fixtures::twisted_sign(sign_k)->comp);
}

TEST_CASE("enriched functor checks") {
  auto sign_k = fixtures::sign_kfold();
  auto constant = fixtures::constant_sign(sign_k);
  auto twisted = fixtures::twisted_sign(sign_k);
  auto graded = fixtures::graded_sign(sign_k);

  SECTION("identity functors pass") {
    for (const auto& cat : {constant, twisted, graded})
      REQUIRE(check_enriched_functor(*identity_enriched_functor(cat)).passed());
  }
  SECTION("the 16 component assignments on the constant category admit exactly two functors") {
    std::vector<int> identity_map{0, 1};
    std::vector<std::vector<Mor>> passing;
    for (int mask = 0; mask < 16; ++mask) {
      std::vector<Mor> comps(4);
      for (int bit = 0; bit < 4; ++bit)
        comps[static_cast<size_t>(bit)] = fixtures::sign_mor(0, (mask >> bit) & 1);
      auto f = make_enriched_functor("scan", constant, constant, identity_map, comps);
      if (check_enriched_functor(*f).passed()) passing.push_back(comps);
    }
    // all identities, or g0 exactly on the two off-diagonal components
    REQUIRE(passing == std::vector<std::vector<Mor>>{
                           {e0(sign_k), e0(sign_k), e0(sign_k), e0(sign_k)},
                           {e0(sign_k), g0(sign_k), g0(sign_k), e0(sign_k)}});
  }
  SECTION("swap functor passes on the symmetric fixtures") {
    REQUIRE(check_enriched_functor(*fixtures::swap_functor(constant)).passed());
    REQUIRE(check_enriched_functor(*fixtures::swap_functor(twisted)).passed());
    REQUIRE(check_enriched_functor(*fixtures::swap_functor(graded)).passed());
  }
  SECTION("the collapse functor untwists the twisted category") {
    REQUIRE(check_enriched_functor(*fixtures::collapse_functor(twisted, constant)).passed());
  }
}

TEST_CASE("functor equality") {
  auto sign_k = fixtures::sign_kfold();
  auto constant = fixtures::constant_sign(sign_k);
  auto id = identity_enriched_functor(constant);
  auto swap = fixtures::swap_functor(constant);

  SECTION("reflexive") { REQUIRE(functors_equal(*id, *id)); }
  SECTION("identity and swap differ on objects") { REQUIRE_FALSE(functors_equal(*id, *swap)); }
  SECTION("a single differing component is found and witnessed") {
    auto tweaked = std::make_shared<EnrichedFunctor>(id->with_component(0, 1, g0(sign_k)));
    REQUIRE_FALSE(functors_equal(*id, *tweaked));
    auto report = compare_functors(*id, *tweaked);
    bool found = false;
    for (const auto& w : report.checks.at(0).witnesses)
      if (w.diagram == "hom-component" && w.at == std::vector<std::string>{"p", "q"}) found = true;
    REQUIRE(found);
  }
}

TEST_CASE("functor composition") {
  auto sign_k = fixtures::sign_kfold();
  auto constant = fixtures::constant_sign(sign_k);
  auto twisted = fixtures::twisted_sign(sign_k);
  auto id = identity_enriched_functor(constant);
  auto swap = fixtures::swap_functor(constant);

  SECTION("identity is neutral") {
    REQUIRE(functors_equal(*compose_enriched_functors(*id, *swap), *swap));
    REQUIRE(functors_equal(*compose_enriched_functors(*swap, *id), *swap));
  }
  SECTION("swap is an involution") {
    REQUIRE(functors_equal(*compose_enriched_functors(*swap, *swap), *id));
  }
  SECTION("composites of passing functors pass") {
    auto swap_tw = fixtures::swap_functor(twisted);
    auto collapse = fixtures::collapse_functor(twisted, constant);
    auto composite = compose_enriched_functors(*collapse, *swap_tw);
    REQUIRE(check_enriched_functor(*composite).passed());
  }
  SECTION("endpoint mismatch throws") {
    auto collapse = fixtures::collapse_functor(twisted, constant);
    REQUIRE_THROWS_MATCHES(compose_enriched_functors(*collapse, *collapse), Error,
                           Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.code() == Errc::NotComposable;
                           }));
  }
}

TEST_CASE("v-naturality") {
  auto sign_k = fixtures::sign_kfold();
  auto constant = fixtures::constant_sign(sign_k);
  auto graded = fixtures::graded_sign(sign_k);
  auto id_const = identity_enriched_functor(constant);
  auto id_graded = identity_enriched_functor(graded);

  SECTION("identity transformations pass on every bundled functor") {
    for (const auto& f : {id_const, fixtures::swap_functor(constant),
                          fixtures::collapse_functor(fixtures::twisted_sign(sign_k), constant)})
      REQUIRE(check_v_natural(identity_transformation(f)).passed());
  }
  SECTION("the g0,g0 family between identity functors passes on the constant category") {
    auto tr = make_transformation("gg", id_const, id_const, {g0(sign_k), g0(sign_k)});
    REQUIRE(check_v_natural(tr).passed());
  }
  SECTION("mixed parity components fail on the graded category at (p,q)") {
    auto tr = make_transformation("mixed", id_graded, id_graded, {g0(sign_k), e0(sign_k)});
    auto report = check_v_natural(tr);
    REQUIRE_FALSE(report.passed());
    const auto& w = report.find("v-natural.hexagon")->witnesses.at(0);
    REQUIRE(w.at == std::vector<std::string>{"p", "q"});
  }
}

TEST_CASE("vertical composition") {
  auto sign_k = fixtures::sign_kfold();
  auto constant = fixtures::constant_sign(sign_k);
  auto id_const = identity_enriched_functor(constant);
  auto gg = make_transformation("gg", id_const, id_const, {g0(sign_k), g0(sign_k)});

  SECTION("identity transformation is neutral") {
    auto one = identity_transformation(id_const);
    REQUIRE(vertical_compose(one, gg).components == gg.components);
    REQUIRE(vertical_compose(gg, one).components == gg.components);
  }
  SECTION("signs add: gg . gg has identity components") {
    REQUIRE(vertical_compose(gg, gg).components == std::vector<Mor>{e0(sign_k), e0(sign_k)});
  }
  SECTION("associativity over all constructible transformations") {
    auto all = transformations_between(id_const, id_const);
    REQUIRE(all.size() == 2);
    for (const auto& a : all)
      for (const auto& b : all)
        for (const auto& c : all)
          REQUIRE(vertical_compose(c, vertical_compose(b, a)).components ==
                  vertical_compose(vertical_compose(c, b), a).components);
  }
  SECTION("composites of valid transformations stay valid") {
    REQUIRE(check_v_natural(vertical_compose(gg, gg)).passed());
  }
}

TEST_CASE("whiskering") {
  auto sign_k = fixtures::sign_kfold();
  auto bool_k = fixtures::boolean_kfold();
  auto constant = fixtures::constant_sign(sign_k);
  auto id_const = identity_enriched_functor(constant);
  auto swap = fixtures::swap_functor(constant);
  auto gg = make_transformation("gg", id_const, id_const, {g0(sign_k), g0(sign_k)});

  SECTION("whiskering with the identity functor changes nothing") {
    REQUIRE(whisker_left(id_const, gg).components == gg.components);
    REQUIRE(whisker_right(gg, id_const).components == gg.components);
  }
  SECTION("over a thin base any whisker has forced components") {
    auto chain_cat = fixtures::preorder_chain(bool_k);
    auto id_chain = identity_enriched_functor(chain_cat);
    auto one = identity_transformation(id_chain);
    // constant endofunctor onto the bottom object a; the only nontrivial
    // component is hom(b,a) = 0 -> hom(a,a) = 1
    auto to_a = make_enriched_functor("to-a", chain_cat, chain_cat, {0, 0},
                                      {bool_k->base.mor("id1"), bool_k->base.mor("id1"),
                                       bool_k->base.mor("m"), bool_k->base.mor("id1")});
    REQUIRE(check_enriched_functor(*to_a).passed());
    auto whiskered = whisker_left(to_a, one);
    REQUIRE(whiskered.components == std::vector<Mor>(2, chain_cat->j_at(0)));
  }
  SECTION("the off-diagonal g0 endofunctor flips identity components on the swap cell") {
    // Q has components g0 exactly off the diagonal; alpha: id => swap with
    // e0 components; (Q alpha)_A = Q_{A,swap A} . alpha_A = g0.
    auto cross = make_enriched_functor("cross", constant, constant, {0, 1},
                                       {e0(sign_k), g0(sign_k), g0(sign_k), e0(sign_k)});
    REQUIRE(check_enriched_functor(*cross).passed());
    auto id_to_swap = make_transformation("s", id_const, swap, {e0(sign_k), e0(sign_k)});
    REQUIRE(check_v_natural(id_to_swap).passed());
    auto whiskered = whisker_left(cross, id_to_swap);
    REQUIRE(whiskered.components == std::vector<Mor>{g0(sign_k), g0(sign_k)});
  }
  SECTION("precomposition with swap exchanges components") {
    auto id_to_swap = make_transformation("s", id_const, swap, {e0(sign_k), g0(sign_k)});
    auto whiskered = whisker_right(id_to_swap, swap);
    REQUIRE(whiskered.components == std::vector<Mor>{g0(sign_k), e0(sign_k)});
  }
  SECTION("whiskered transformations stay v-natural on the bundled fixtures") {
    auto id_to_swap = make_transformation("s", id_const, swap, {e0(sign_k), e0(sign_k)});
    REQUIRE(check_v_natural(id_to_swap).passed());
    REQUIRE(check_v_natural(whisker_left(swap, id_to_swap)).passed());
    REQUIRE(check_v_natural(whisker_right(id_to_swap, swap)).passed());
  }
  SECTION("whiskering distributes over vertical composition") {
    auto all = transformations_between(id_const, id_const);
    for (const auto& q : {id_const, swap}) {
      for (const auto& a : all)
        for (const auto& b : all) {
          auto lhs = whisker_left(q, vertical_compose(b, a));
          auto rhs = vertical_compose(whisker_left(q, b), whisker_left(q, a));
          REQUIRE(lhs.components == rhs.components);
        }
    }
  }
}

TEST_CASE("random thin-enriched structures always pass") {
  auto bool_k = fixtures::boolean_kfold();
  std::mt19937_64 rng(20240811);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 3);
    // random relation, closed under reflexivity and transitivity
    std::vector<int> reach(static_cast<size_t>(n) * static_cast<size_t>(n), 0);
    for (int a = 0; a < n; ++a) reach[static_cast<size_t>(a * n + a)] = 1;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (rng() % 3 == 0) reach[static_cast<size_t>(a * n + b)] = 1;
    for (int m = 0; m < n; ++m)
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          if (reach[static_cast<size_t>(a * n + m)] && reach[static_cast<size_t>(m * n + b)])
            reach[static_cast<size_t>(a * n + b)] = 1;
    std::vector<std::string> objects;
    for (int a = 0; a < n; ++a) objects.push_back("o" + std::to_string(a));
    auto cat = fixtures::preorder(bool_k, "random", objects, reach);
    INFO("trial " << trial << " with " << n << " objects");
    REQUIRE(check_enriched_category(*cat).passed());
  }
}
