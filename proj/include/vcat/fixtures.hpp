#pragma once

#include "vcat/deloop.hpp"

/// The bundled example corpus. Everything here is built programmatically so
/// tests can cross-check the shipped fixture files against these builders.
namespace vcat::fixtures {

// ---------------------------------------------------------------------------
// Sign category: two objects I, X with endomorphism groups Z/2 and empty
// cross-homs. Morphisms are determined by (object parity, sign); the tensor
// adds parities and signs, the braid is -1 exactly on (X,X).
// ---------------------------------------------------------------------------

inline Mor sign_mor(int parity, int sign) { return sign * 2 + parity; }  // e0,e1,g0,g1

inline FinCategory sign_base() {
  return make_fin_category(
      "sign", {"I", "X"},
      {{"e0", "I", "I"}, {"g0", "I", "I"}, {"e1", "X", "X"}, {"g1", "X", "X"}},
      {{"I", "e0"}, {"X", "e1"}},
      {{"e0", "e0", "e0"},
       {"e0", "g0", "g0"},
       {"g0", "e0", "g0"},
       {"g0", "g0", "e0"},
       {"e1", "e1", "e1"},
       {"e1", "g1", "g1"},
       {"g1", "e1", "g1"},
       {"g1", "g1", "e1"}});
}

inline KFoldStructure::RawTensor sign_tensor_table() {
  KFoldStructure::RawTensor t;
  t.object_table = {0, 1, 1, 0};  // parity addition
  t.morphism_table.resize(16);
  for (Mor f = 0; f < 4; ++f)
    for (Mor g = 0; g < 4; ++g) {
      int parity = (f % 2) ^ (g % 2);
      int sign = (f / 2) ^ (g / 2);
      t.morphism_table[static_cast<size_t>(f * 4 + g)] = sign_mor(parity, sign);
    }
  return t;
}

inline std::vector<Mor> sign_identity_alpha() {
  std::vector<Mor> alpha(8);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        alpha[static_cast<size_t>((a * 2 + b) * 2 + c)] = sign_mor(a ^ b ^ c, 0);
  return alpha;
}

inline SymmetricPtr sign_symmetric() {
  std::vector<Mor> braid(4);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      braid[static_cast<size_t>(a * 2 + b)] = sign_mor(a ^ b, a & b);
  return SymmetricStructure::make("sign", sign_base(), 0, sign_tensor_table(),
                                  sign_identity_alpha(), std::move(braid));
}

inline KFoldPtr sign_kfold(int k = 3) { return from_symmetric(*sign_symmetric(), k); }

/// Interchanger table from a 16-bit sign mask; bit ((a*2+b)*2+c)*2+d gives the
/// sign of the component at objects of parities (a,b,c,d).
inline std::vector<Mor> sign_eta_from_mask(std::uint32_t mask) {
  std::vector<Mor> eta(16);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d) {
          int p = ((a * 2 + b) * 2 + c) * 2 + d;
          eta[static_cast<size_t>(p)] =
              sign_mor(a ^ b ^ c ^ d, static_cast<int>((mask >> p) & 1u));
        }
  return eta;
}

inline KFoldPtr sign_kfold_masked(std::string name, std::uint32_t m12, std::uint32_t m13,
                                  std::uint32_t m23) {
  std::vector<KFoldStructure::RawTensor> tensors(3, sign_tensor_table());
  std::vector<std::vector<Mor>> alphas(3, sign_identity_alpha());
  std::map<std::pair<int, int>, std::vector<Mor>> etas;
  etas[{1, 2}] = sign_eta_from_mask(m12);
  etas[{1, 3}] = sign_eta_from_mask(m13);
  etas[{2, 3}] = sign_eta_from_mask(m23);
  return KFoldStructure::make(std::move(name), sign_base(), 3, 0, std::move(tensors),
                              std::move(alphas), std::move(etas));
}

/// Sign mask of the braid-derived interchanger: -1 exactly when the middle
/// pair is (X,X).
inline constexpr std::uint32_t kSignEtaMask = 0xc0c0;

// ---------------------------------------------------------------------------
// Boolean poset 0 <= 1 under min, a thin symmetric category.
// ---------------------------------------------------------------------------

inline FinCategory boolean_poset() {
  return make_fin_category("bool", {"0", "1"},
                           {{"id0", "0", "0"}, {"id1", "1", "1"}, {"m", "0", "1"}},
                           {{"0", "id0"}, {"1", "id1"}},
                           {{"id0", "id0", "id0"},
                            {"id1", "id1", "id1"},
                            {"m", "id0", "m"},
                            {"id1", "m", "m"}});
}

inline Mor bool_mor(int dom, int cod) {
  if (dom == 0 && cod == 0) return 0;  // id0
  if (dom == 1 && cod == 1) return 1;  // id1
  if (dom == 0 && cod == 1) return 2;  // m
  raise(Errc::NonComposable, "no morphism 1 -> 0 in bool");
}

inline SymmetricPtr boolean_symmetric() {
  FinCategory base = boolean_poset();
  KFoldStructure::RawTensor t;
  t.object_table = {0, 0, 0, 1};  // min
  t.morphism_table.resize(9);
  auto dom_of = [](Mor m) { return m == 1 ? 1 : 0; };
  auto cod_of = [](Mor m) { return m == 0 ? 0 : 1; };
  for (Mor f = 0; f < 3; ++f)
    for (Mor g = 0; g < 3; ++g)
      t.morphism_table[static_cast<size_t>(f * 3 + g)] =
          bool_mor(std::min(dom_of(f), dom_of(g)), std::min(cod_of(f), cod_of(g)));
  std::vector<Mor> alpha(8);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c) {
        int v = std::min(std::min(a, b), c);
        alpha[static_cast<size_t>((a * 2 + b) * 2 + c)] = bool_mor(v, v);
      }
  std::vector<Mor> braid(4);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      int v = std::min(a, b);
      braid[static_cast<size_t>(a * 2 + b)] = bool_mor(v, v);
    }
  return SymmetricStructure::make("bool", std::move(base), 1, std::move(t), std::move(alpha),
                                  std::move(braid));
}

inline KFoldPtr boolean_kfold(int k = 3) { return from_symmetric(*boolean_symmetric(), k); }

// ---------------------------------------------------------------------------
// One-object group Z/2, the full subcategory of the sign category on I.
// The hexagon forces the trivial braiding.
// ---------------------------------------------------------------------------

inline FinCategory z2_base() {
  return make_fin_category("z2", {"*"}, {{"e", "*", "*"}, {"g", "*", "*"}}, {{"*", "e"}},
                           {{"e", "e", "e"}, {"e", "g", "g"}, {"g", "e", "g"}, {"g", "g", "e"}});
}

inline SymmetricPtr z2_symmetric() {
  KFoldStructure::RawTensor t;
  t.object_table = {0};
  t.morphism_table = {0, 1, 1, 0};  // sign addition
  return SymmetricStructure::make("z2", z2_base(), 0, std::move(t), {0}, {0});
}

inline KFoldPtr z2_kfold(int k = 3) { return from_symmetric(*z2_symmetric(), k); }

// ---------------------------------------------------------------------------
// Enriched fixtures over the boolean base: preorders.
// ---------------------------------------------------------------------------

inline EnrichedPtr preorder(KFoldPtr bool_k, std::string name, std::vector<std::string> objects,
                            const std::vector<int>& reach) {
  const int n = static_cast<int>(objects.size());
  std::vector<Obj> hom(static_cast<size_t>(n) * static_cast<size_t>(n));
  std::vector<Mor> comp(static_cast<size_t>(n) * static_cast<size_t>(n) * static_cast<size_t>(n));
  std::vector<Mor> ident(static_cast<size_t>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) hom[static_cast<size_t>(a * n + b)] = reach[static_cast<size_t>(a * n + b)];
  for (int a = 0; a < n; ++a) ident[static_cast<size_t>(a)] = bool_mor(1, 1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        int src = std::min(reach[static_cast<size_t>(b * n + c)], reach[static_cast<size_t>(a * n + b)]);
        comp[static_cast<size_t>((a * n + b) * n + c)] =
            bool_mor(src, reach[static_cast<size_t>(a * n + c)]);
      }
  return make_enriched(std::move(bool_k), std::move(name), std::move(objects), std::move(hom),
                       std::move(comp), std::move(ident));
}

/// The chain a <= b.
inline EnrichedPtr preorder_chain(KFoldPtr bool_k) {
  return preorder(std::move(bool_k), "chain", {"a", "b"}, {1, 1, 0, 1});
}

/// Two incomparable elements.
inline EnrichedPtr preorder_discrete(KFoldPtr bool_k) {
  return preorder(std::move(bool_k), "discrete", {"u", "v"}, {1, 0, 0, 1});
}

// ---------------------------------------------------------------------------
// Enriched fixtures over the sign base.
// ---------------------------------------------------------------------------

/// Two objects, every hom-object I, composition and identities all 1_I.
inline EnrichedPtr constant_sign(KFoldPtr sign_k) {
  std::vector<Obj> hom(4, 0);
  std::vector<Mor> comp(8, sign_mor(0, 0));
  std::vector<Mor> ident(2, sign_mor(0, 0));
  return make_enriched(std::move(sign_k), "const", {"p", "q"}, std::move(hom), std::move(comp),
                       std::move(ident));
}

/// Same shape as `const` but with composition twisted by the coboundary of
/// u(p,q)=1: M carries sign u(A,B)+u(B,C)+u(A,C). Normalized (unit triangles
/// hold) and a cocycle (pentagon holds), with M_{pqp} = M_{qpq} = g0.
inline EnrichedPtr twisted_sign(KFoldPtr sign_k) {
  auto u = [](int a, int b) { return a == 0 && b == 1 ? 1 : 0; };
  std::vector<Obj> hom(4, 0);
  std::vector<Mor> comp(8);
  std::vector<Mor> ident(2, sign_mor(0, 0));
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        comp[static_cast<size_t>((a * 2 + b) * 2 + c)] =
            sign_mor(0, u(a, b) ^ u(b, c) ^ u(a, c));
  return make_enriched(std::move(sign_k), "twisted", {"p", "q"}, std::move(hom), std::move(comp),
                       std::move(ident));
}

/// Hom-objects graded by the parity of the endpoint pair: hom(A,B) = I when
/// A = B and X otherwise, with sign-free composition.
inline EnrichedPtr graded_sign(KFoldPtr sign_k) {
  std::vector<Obj> hom(4);
  std::vector<Mor> comp(8);
  std::vector<Mor> ident(2, sign_mor(0, 0));
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) hom[static_cast<size_t>(a * 2 + b)] = a ^ b;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        comp[static_cast<size_t>((a * 2 + b) * 2 + c)] = sign_mor(a ^ c, 0);
  return make_enriched(std::move(sign_k), "graded", {"p", "q"}, std::move(hom), std::move(comp),
                       std::move(ident));
}

/// Swap p and q on a two-object fixture whose hom table is symmetric under
/// the swap; components are identities.
inline EnrichedFunctorPtr swap_functor(const EnrichedPtr& cat) {
  const FinCategory& c = cat->base->base;
  std::vector<int> object_map{1, 0};
  std::vector<Mor> components;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) components.push_back(c.id_of(cat->hom_at(a, b)));
  return make_enriched_functor("swap", cat, cat, std::move(object_map), std::move(components));
}

/// Collapse the twisted category onto the constant one: everything to p, with
/// components carrying the untwisting sign u(A,B).
inline EnrichedFunctorPtr collapse_functor(const EnrichedPtr& twisted,
                                           const EnrichedPtr& constant) {
  auto u = [](int a, int b) { return a == 0 && b == 1 ? 1 : 0; };
  std::vector<int> object_map{0, 0};
  std::vector<Mor> components;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) components.push_back(sign_mor(0, u(a, b)));
  return make_enriched_functor("collapse", twisted, constant, std::move(object_map),
                               std::move(components));
}

// ---------------------------------------------------------------------------
// Broken k-fold fixtures, one per axiom family. Each interchanger mask was
// found by exhaustive search over all 2^16 sign tables (see the test-side
// oracle): it violates the named family at pair (1,2) -- or triple (1,2,3)
// for the giant hexagon -- while keeping every family intact that can be kept
// intact at all. The unit conditions are boundary instances of the
// associativity hexagons, so a unit violation always drags one associativity
// family along; the search minimizes that collateral and the tests pin the
// exact failure pattern.
// ---------------------------------------------------------------------------

inline constexpr std::uint32_t kBrokenInternalUnitMask = 0x30c0;   // ext. unit + ext. assoc survive
inline constexpr std::uint32_t kBrokenExternalUnitMask = 0x0cc0;   // int. unit + int. assoc survive
inline constexpr std::uint32_t kBrokenInternalAssocMask = 0x40c0;  // both units survive
inline constexpr std::uint32_t kBrokenExternalAssocMask = 0xc040;  // both units survive
inline constexpr std::uint32_t kTrivialEtaMask = 0x0000;  // lawful per pair, breaks the giant hexagon

inline KFoldPtr broken_kfold(Axiom family) {
  switch (family) {
    case Axiom::InternalUnit:
      return sign_kfold_masked("sign-broken-internal-unit", kBrokenInternalUnitMask, kSignEtaMask,
                               kSignEtaMask);
    case Axiom::ExternalUnit:
      return sign_kfold_masked("sign-broken-external-unit", kBrokenExternalUnitMask, kSignEtaMask,
                               kSignEtaMask);
    case Axiom::InternalAssoc:
      return sign_kfold_masked("sign-broken-internal-assoc", kBrokenInternalAssocMask,
                               kSignEtaMask, kSignEtaMask);
    case Axiom::ExternalAssoc:
      return sign_kfold_masked("sign-broken-external-assoc", kBrokenExternalAssocMask,
                               kSignEtaMask, kSignEtaMask);
    case Axiom::GiantHexagon:
      return sign_kfold_masked("sign-broken-giant-hexagon", kSignEtaMask, kSignEtaMask,
                               kTrivialEtaMask);
    default:
      raise(Errc::IndexOutOfRange, "no broken fixture for this family");
  }
}

// ---------------------------------------------------------------------------
// One-object enriched 2-categories over the sign base. The object monoid of
// the composition functor is Z/2 on {p,q}.
// ---------------------------------------------------------------------------

inline V2Category v2_one_object(KFoldPtr sign_k, const EnrichedPtr& hom_cat,
                                std::vector<Mor> m2_components, std::string name) {
  auto source = tensor_enriched(hom_cat, hom_cat, 1);
  std::vector<int> object_map;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) object_map.push_back(a ^ b);
  auto m2 = make_enriched_functor("m2-" + name, source, hom_cat, std::move(object_map),
                                  std::move(m2_components));
  auto unit = unit_category(sign_k);
  auto j2 = make_enriched_functor("j2-" + name, unit, hom_cat, {0}, {hom_cat->j_at(0)});
  V2Category u;
  u.base = std::move(sign_k);
  u.name = name;
  u.objects = {"U"};
  u.hom = {hom_cat};
  u.comp = {std::move(m2)};
  u.ident = {std::move(j2)};
  return u;
}

inline V2Category v2_constant(KFoldPtr sign_k) {
  auto hom_cat = constant_sign(sign_k);
  return v2_one_object(std::move(sign_k), hom_cat, std::vector<Mor>(16, sign_mor(0, 0)),
                       "v2-const");
}

inline V2Category v2_twisted(KFoldPtr sign_k) {
  auto hom_cat = twisted_sign(sign_k);
  auto u = [](int a, int b) { return a == 0 && b == 1 ? 1 : 0; };
  // Component at ((a,b),(a2,b2)) untwists the product against the target.
  std::vector<Mor> comps(16);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int a2 = 0; a2 < 2; ++a2)
        for (int b2 = 0; b2 < 2; ++b2)
          comps[static_cast<size_t>((a * 2 + b) * 4 + (a2 * 2 + b2))] =
              sign_mor(0, u(a, a2) ^ u(b, b2) ^ u(a ^ b, a2 ^ b2));
  return v2_one_object(std::move(sign_k), hom_cat, std::move(comps), "v2-twisted");
}

}  // namespace vcat::fixtures
