#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "vcat/deloop.hpp"

namespace vcat {

using nlohmann::json;

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kFormatTag = "vcat/1";

// --------------------------------------------------------------------------
// Documents. Keys serialize alphabetically and record arrays are emitted in
// lexicographic id order, so serialize(parse(doc)) is byte-identical for
// canonically ordered files.
// --------------------------------------------------------------------------

inline json category_tables_to_json(const FinCategory& c) {
  json j;
  j["objects"] = c.objects;
  json mors = json::array();
  for (const auto& m : c.morphisms)
    mors.push_back({{"id", m.id}, {"dom", c.obj_name(m.dom)}, {"cod", c.obj_name(m.cod)}});
  j["morphisms"] = mors;
  json ids = json::object();
  for (Obj a = 0; a < c.n_objects(); ++a) ids[c.obj_name(a)] = c.mor_name(c.id_of(a));
  j["identities"] = ids;
  json comps = json::array();
  for (Mor g = 0; g < c.n_morphisms(); ++g)
    for (Mor f = 0; f < c.n_morphisms(); ++f)
      if (auto r = c.try_compose(g, f))
        comps.push_back({{"g", c.mor_name(g)}, {"f", c.mor_name(f)}, {"eq", c.mor_name(*r)}});
  j["composition"] = comps;
  return j;
}

inline FinCategory category_from_json(const json& j, const std::string& name) {
  std::vector<std::string> objects = j.at("objects").get<std::vector<std::string>>();
  std::vector<RawMorphism> morphisms;
  for (const auto& m : j.at("morphisms"))
    morphisms.push_back({m.at("id").get<std::string>(), m.at("dom").get<std::string>(),
                         m.at("cod").get<std::string>()});
  std::map<std::string, std::string> identities;
  for (const auto& [k, v] : j.at("identities").items()) identities[k] = v.get<std::string>();
  std::vector<RawComposite> composition;
  for (const auto& e : j.at("composition"))
    composition.push_back({e.at("g").get<std::string>(), e.at("f").get<std::string>(),
                           e.at("eq").get<std::string>()});
  return make_fin_category(name, std::move(objects), std::move(morphisms), identities,
                           composition);
}

inline json kfold_to_json(const KFoldStructure& v) {
  json j;
  j["format"] = kFormatTag;
  j["kind"] = "kfold";
  j["name"] = v.name;
  j["k"] = v.k;
  j["unit"] = v.base.obj_name(v.unit);
  j["base"] = category_tables_to_json(v.base);
  const FinCategory& c = v.base;
  json tensors = json::array();
  for (int i = 1; i <= v.k; ++i) {
    json t;
    t["index"] = i;
    json objs = json::array();
    for (Obj a = 0; a < c.n_objects(); ++a)
      for (Obj b = 0; b < c.n_objects(); ++b)
        objs.push_back({{"a", c.obj_name(a)},
                        {"b", c.obj_name(b)},
                        {"eq", c.obj_name(v.tensor_obj(i, a, b))}});
    t["objects"] = objs;
    json mors = json::array();
    for (Mor f = 0; f < c.n_morphisms(); ++f)
      for (Mor g = 0; g < c.n_morphisms(); ++g)
        mors.push_back({{"f", c.mor_name(f)},
                        {"g", c.mor_name(g)},
                        {"eq", c.mor_name(v.tensor_mor(i, f, g))}});
    t["morphisms"] = mors;
    tensors.push_back(t);
  }
  j["tensors"] = tensors;
  json alphas = json::array();
  for (int i = 1; i <= v.k; ++i) {
    json a;
    a["index"] = i;
    json comps = json::array();
    for (Obj x = 0; x < c.n_objects(); ++x)
      for (Obj y = 0; y < c.n_objects(); ++y)
        for (Obj z = 0; z < c.n_objects(); ++z)
          comps.push_back({{"at", {c.obj_name(x), c.obj_name(y), c.obj_name(z)}},
                           {"eq", c.mor_name(v.alpha_at(i, x, y, z))}});
    a["components"] = comps;
    alphas.push_back(a);
  }
  j["associators"] = alphas;
  json etas = json::array();
  for (int i = 1; i <= v.k; ++i)
    for (int jj = i + 1; jj <= v.k; ++jj) {
      json e;
      e["i"] = i;
      e["j"] = jj;
      json comps = json::array();
      for (Obj x = 0; x < c.n_objects(); ++x)
        for (Obj y = 0; y < c.n_objects(); ++y)
          for (Obj z = 0; z < c.n_objects(); ++z)
            for (Obj w = 0; w < c.n_objects(); ++w)
              comps.push_back(
                  {{"at", {c.obj_name(x), c.obj_name(y), c.obj_name(z), c.obj_name(w)}},
                   {"eq", c.mor_name(v.eta_at(i, jj, x, y, z, w))}});
      e["components"] = comps;
      etas.push_back(e);
    }
  j["interchangers"] = etas;
  return j;
}

inline KFoldPtr kfold_from_json(const json& j) {
  std::string name = j.at("name").get<std::string>();
  FinCategory base = category_from_json(j.at("base"), name + "-base");
  int k = j.at("k").get<int>();
  Obj unit = base.obj(j.at("unit").get<std::string>());
  const size_t n = static_cast<size_t>(base.n_objects());
  const size_t nm = static_cast<size_t>(base.n_morphisms());
  std::vector<KFoldStructure::RawTensor> tensors(static_cast<size_t>(k));
  for (auto& t : tensors) {
    t.object_table.assign(n * n, -1);
    t.morphism_table.assign(nm * nm, kNoMor);
  }
  for (const auto& t : j.at("tensors")) {
    int i = t.at("index").get<int>();
    if (i < 1 || i > k) raise(Errc::ParseError, "tensor index out of range");
    auto& raw = tensors[static_cast<size_t>(i - 1)];
    for (const auto& e : t.at("objects"))
      raw.object_table[static_cast<size_t>(base.obj(e.at("a").get<std::string>())) * n +
                       static_cast<size_t>(base.obj(e.at("b").get<std::string>()))] =
          base.obj(e.at("eq").get<std::string>());
    for (const auto& e : t.at("morphisms"))
      raw.morphism_table[static_cast<size_t>(base.mor(e.at("f").get<std::string>())) * nm +
                         static_cast<size_t>(base.mor(e.at("g").get<std::string>()))] =
          base.mor(e.at("eq").get<std::string>());
  }
  for (const auto& t : tensors) {
    for (Obj a : t.object_table)
      if (a < 0) raise(Errc::ParseError, "incomplete tensor object table");
    for (Mor m : t.morphism_table)
      if (m == kNoMor) raise(Errc::ParseError, "incomplete tensor morphism table");
  }
  std::vector<std::vector<Mor>> alphas(static_cast<size_t>(k));
  for (auto& a : alphas) a.assign(n * n * n, kNoMor);
  for (const auto& a : j.at("associators")) {
    int i = a.at("index").get<int>();
    if (i < 1 || i > k) raise(Errc::ParseError, "associator index out of range");
    for (const auto& e : a.at("components")) {
      const auto& at = e.at("at");
      size_t ix = (static_cast<size_t>(base.obj(at.at(0).get<std::string>())) * n +
                   static_cast<size_t>(base.obj(at.at(1).get<std::string>()))) *
                      n +
                  static_cast<size_t>(base.obj(at.at(2).get<std::string>()));
      alphas[static_cast<size_t>(i - 1)][ix] = base.mor(e.at("eq").get<std::string>());
    }
  }
  std::map<std::pair<int, int>, std::vector<Mor>> etas;
  for (const auto& e : j.at("interchangers")) {
    int i = e.at("i").get<int>();
    int jj = e.at("j").get<int>();
    std::vector<Mor> table(n * n * n * n, kNoMor);
    for (const auto& comp : e.at("components")) {
      const auto& at = comp.at("at");
      size_t ix = ((static_cast<size_t>(base.obj(at.at(0).get<std::string>())) * n +
                    static_cast<size_t>(base.obj(at.at(1).get<std::string>()))) *
                       n +
                   static_cast<size_t>(base.obj(at.at(2).get<std::string>()))) *
                      n +
                  static_cast<size_t>(base.obj(at.at(3).get<std::string>()));
      table[ix] = base.mor(comp.at("eq").get<std::string>());
    }
    for (Mor m : table)
      if (m == kNoMor) raise(Errc::ParseError, "incomplete interchanger table");
    etas[{i, jj}] = std::move(table);
  }
  return KFoldStructure::make(name, std::move(base), k, unit, std::move(tensors),
                              std::move(alphas), std::move(etas));
}

inline json symmetric_to_json(const SymmetricStructure& s) {
  json j;
  j["format"] = kFormatTag;
  j["kind"] = "symmetric";
  j["name"] = s.name;
  j["unit"] = s.base.obj_name(s.unit);
  j["base"] = category_tables_to_json(s.base);
  const FinCategory& c = s.base;
  json t;
  json objs = json::array();
  for (Obj a = 0; a < c.n_objects(); ++a)
    for (Obj b = 0; b < c.n_objects(); ++b)
      objs.push_back(
          {{"a", c.obj_name(a)}, {"b", c.obj_name(b)}, {"eq", c.obj_name(s.tensor_obj(a, b))}});
  t["objects"] = objs;
  json mors = json::array();
  for (Mor f = 0; f < c.n_morphisms(); ++f)
    for (Mor g = 0; g < c.n_morphisms(); ++g)
      mors.push_back(
          {{"f", c.mor_name(f)}, {"g", c.mor_name(g)}, {"eq", c.mor_name(s.tensor_mor(f, g))}});
  t["morphisms"] = mors;
  j["tensor"] = t;
  json alpha = json::array();
  for (Obj x = 0; x < c.n_objects(); ++x)
    for (Obj y = 0; y < c.n_objects(); ++y)
      for (Obj z = 0; z < c.n_objects(); ++z)
        alpha.push_back({{"at", {c.obj_name(x), c.obj_name(y), c.obj_name(z)}},
                         {"eq", c.mor_name(s.alpha_at(x, y, z))}});
  j["associator"] = alpha;
  json braid = json::array();
  for (Obj x = 0; x < c.n_objects(); ++x)
    for (Obj y = 0; y < c.n_objects(); ++y)
      braid.push_back(
          {{"a", c.obj_name(x)}, {"b", c.obj_name(y)}, {"eq", c.mor_name(s.braid_at(x, y))}});
  j["braiding"] = braid;
  return j;
}

inline SymmetricPtr symmetric_from_json(const json& j) {
  std::string name = j.at("name").get<std::string>();
  FinCategory base = category_from_json(j.at("base"), name + "-base");
  Obj unit = base.obj(j.at("unit").get<std::string>());
  const size_t n = static_cast<size_t>(base.n_objects());
  const size_t nm = static_cast<size_t>(base.n_morphisms());
  KFoldStructure::RawTensor tensor;
  tensor.object_table.assign(n * n, -1);
  tensor.morphism_table.assign(nm * nm, kNoMor);
  for (const auto& e : j.at("tensor").at("objects"))
    tensor.object_table[static_cast<size_t>(base.obj(e.at("a").get<std::string>())) * n +
                        static_cast<size_t>(base.obj(e.at("b").get<std::string>()))] =
        base.obj(e.at("eq").get<std::string>());
  for (const auto& e : j.at("tensor").at("morphisms"))
    tensor.morphism_table[static_cast<size_t>(base.mor(e.at("f").get<std::string>())) * nm +
                          static_cast<size_t>(base.mor(e.at("g").get<std::string>()))] =
        base.mor(e.at("eq").get<std::string>());
  std::vector<Mor> alpha(n * n * n, kNoMor);
  for (const auto& e : j.at("associator")) {
    const auto& at = e.at("at");
    size_t ix = (static_cast<size_t>(base.obj(at.at(0).get<std::string>())) * n +
                 static_cast<size_t>(base.obj(at.at(1).get<std::string>()))) *
                    n +
                static_cast<size_t>(base.obj(at.at(2).get<std::string>()));
    alpha[ix] = base.mor(e.at("eq").get<std::string>());
  }
  std::vector<Mor> braid(n * n, kNoMor);
  for (const auto& e : j.at("braiding"))
    braid[static_cast<size_t>(base.obj(e.at("a").get<std::string>())) * n +
          static_cast<size_t>(base.obj(e.at("b").get<std::string>()))] =
        base.mor(e.at("eq").get<std::string>());
  for (Mor m : alpha)
    if (m == kNoMor) raise(Errc::ParseError, "incomplete associator table");
  for (Mor m : braid)
    if (m == kNoMor) raise(Errc::ParseError, "incomplete braiding table");
  return SymmetricStructure::make(name, std::move(base), unit, std::move(tensor),
                                  std::move(alpha), std::move(braid));
}

/// Enriched tables keyed by object names, emitted in lexicographic name
/// order regardless of internal index order.
inline json enriched_tables_to_json(const EnrichedCategory& e) {
  const FinCategory& c = e.base->base;
  std::vector<int> order(static_cast<size_t>(e.n()));
  for (int i = 0; i < e.n(); ++i) order[static_cast<size_t>(i)] = i;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return e.obj_name(a) < e.obj_name(b); });
  json j;
  json objs = json::array();
  for (int a : order) objs.push_back(e.obj_name(a));
  j["objects"] = objs;
  json hom = json::array();
  for (int a : order)
    for (int b : order)
      hom.push_back(
          {{"a", e.obj_name(a)}, {"b", e.obj_name(b)}, {"eq", c.obj_name(e.hom_at(a, b))}});
  j["hom"] = hom;
  json comp = json::array();
  for (int a : order)
    for (int b : order)
      for (int d : order)
        comp.push_back({{"a", e.obj_name(a)},
                        {"b", e.obj_name(b)},
                        {"c", e.obj_name(d)},
                        {"eq", c.mor_name(e.m_at(a, b, d))}});
  j["composition"] = comp;
  json ident = json::array();
  for (int a : order) ident.push_back({{"a", e.obj_name(a)}, {"eq", c.mor_name(e.j_at(a))}});
  j["identities"] = ident;
  return j;
}

inline json enriched_to_json(const EnrichedCategory& e, const std::string& base_ref) {
  json j = enriched_tables_to_json(e);
  j["format"] = kFormatTag;
  j["kind"] = "enriched";
  j["name"] = e.name;
  j["base"] = base_ref;
  return j;
}

inline EnrichedPtr enriched_tables_from_json(const json& j, KFoldPtr base,
                                             const std::string& name) {
  const FinCategory& c = base->base;
  std::vector<std::string> objects = j.at("objects").get<std::vector<std::string>>();
  std::map<std::string, int> index;
  for (size_t i = 0; i < objects.size(); ++i) index[objects[i]] = static_cast<int>(i);
  auto at = [&](const json& rec, const char* key) {
    auto it = index.find(rec.at(key).get<std::string>());
    if (it == index.end()) raise(Errc::ParseError, "unknown object in " + name);
    return it->second;
  };
  const size_t n = objects.size();
  std::vector<Obj> hom(n * n, -1);
  for (const auto& rec : j.at("hom"))
    hom[static_cast<size_t>(at(rec, "a")) * n + static_cast<size_t>(at(rec, "b"))] =
        c.obj(rec.at("eq").get<std::string>());
  std::vector<Mor> comp(n * n * n, kNoMor);
  for (const auto& rec : j.at("composition"))
    comp[(static_cast<size_t>(at(rec, "a")) * n + static_cast<size_t>(at(rec, "b"))) * n +
         static_cast<size_t>(at(rec, "c"))] = c.mor(rec.at("eq").get<std::string>());
  std::vector<Mor> ident(n, kNoMor);
  for (const auto& rec : j.at("identities"))
    ident[static_cast<size_t>(at(rec, "a"))] = c.mor(rec.at("eq").get<std::string>());
  for (Obj h : hom)
    if (h < 0) raise(Errc::ParseError, "incomplete hom table in " + name);
  for (Mor m : comp)
    if (m == kNoMor) raise(Errc::ParseError, "incomplete composition table in " + name);
  for (Mor m : ident)
    if (m == kNoMor) raise(Errc::ParseError, "incomplete identity table in " + name);
  return make_enriched(std::move(base), name, std::move(objects), std::move(hom), std::move(comp),
                       std::move(ident));
}

inline json functor_to_json(const EnrichedFunctor& f, const std::string& source_ref,
                            const std::string& target_ref) {
  json j;
  j["format"] = kFormatTag;
  j["kind"] = "enriched-functor";
  j["name"] = f.name;
  j["source"] = source_ref;
  j["target"] = target_ref;
  const FinCategory& c = f.source->base->base;
  json objs = json::array();
  for (int a = 0; a < f.source->n(); ++a)
    objs.push_back(
        {{"from", f.source->obj_name(a)}, {"to", f.target->obj_name(f.on_obj(a))}});
  j["objects"] = objs;
  json comps = json::array();
  for (int a = 0; a < f.source->n(); ++a)
    for (int b = 0; b < f.source->n(); ++b)
      comps.push_back({{"a", f.source->obj_name(a)},
                       {"b", f.source->obj_name(b)},
                       {"eq", c.mor_name(f.comp_at(a, b))}});
  j["components"] = comps;
  return j;
}

inline EnrichedFunctorPtr functor_from_json(const json& j, EnrichedPtr source,
                                            EnrichedPtr target) {
  const FinCategory& c = source->base->base;
  std::string name = j.at("name").get<std::string>();
  std::vector<int> object_map(static_cast<size_t>(source->n()), -1);
  for (const auto& rec : j.at("objects"))
    object_map[static_cast<size_t>(source->obj(rec.at("from").get<std::string>()))] =
        target->obj(rec.at("to").get<std::string>());
  for (int a : object_map)
    if (a < 0) raise(Errc::ParseError, "incomplete object map in " + name);
  std::vector<Mor> components(
      static_cast<size_t>(source->n()) * static_cast<size_t>(source->n()), kNoMor);
  for (const auto& rec : j.at("components"))
    components[static_cast<size_t>(source->obj(rec.at("a").get<std::string>())) *
                   static_cast<size_t>(source->n()) +
               static_cast<size_t>(source->obj(rec.at("b").get<std::string>()))] =
        c.mor(rec.at("eq").get<std::string>());
  for (Mor m : components)
    if (m == kNoMor) raise(Errc::ParseError, "incomplete component table in " + name);
  return make_enriched_functor(name, std::move(source), std::move(target), std::move(object_map),
                               std::move(components));
}

inline json v2_to_json(const V2Category& u, const std::string& base_ref) {
  json j;
  j["format"] = kFormatTag;
  j["kind"] = "v2category";
  j["name"] = u.name;
  j["base"] = base_ref;
  j["objects"] = u.objects;
  json hom = json::array();
  for (int a = 0; a < u.n(); ++a)
    for (int b = 0; b < u.n(); ++b) {
      json cat = enriched_tables_to_json(*u.hom_at(a, b));
      cat["name"] = u.hom_at(a, b)->name;
      hom.push_back({{"a", u.obj_name(a)}, {"b", u.obj_name(b)}, {"cat", cat}});
    }
  j["hom"] = hom;
  const FinCategory& c = u.base->base;
  auto functor_payload = [&](const EnrichedFunctor& f) {
    json p;
    p["name"] = f.name;
    json objs = json::array();
    for (int x = 0; x < f.source->n(); ++x)
      objs.push_back({{"from", f.source->obj_name(x)}, {"to", f.target->obj_name(f.on_obj(x))}});
    p["objects"] = objs;
    json comps = json::array();
    for (int x = 0; x < f.source->n(); ++x)
      for (int y = 0; y < f.source->n(); ++y)
        comps.push_back({{"a", f.source->obj_name(x)},
                         {"b", f.source->obj_name(y)},
                         {"eq", c.mor_name(f.comp_at(x, y))}});
    p["components"] = comps;
    return p;
  };
  json comp = json::array();
  for (int a = 0; a < u.n(); ++a)
    for (int b = 0; b < u.n(); ++b)
      for (int d = 0; d < u.n(); ++d)
        comp.push_back({{"a", u.obj_name(a)},
                        {"b", u.obj_name(b)},
                        {"c", u.obj_name(d)},
                        {"functor", functor_payload(*u.m_at(a, b, d))}});
  j["composition"] = comp;
  json ident = json::array();
  for (int a = 0; a < u.n(); ++a)
    ident.push_back({{"a", u.obj_name(a)}, {"functor", functor_payload(*u.j_at(a))}});
  j["identities"] = ident;
  return j;
}

inline V2Category v2_from_json(const json& j, KFoldPtr base) {
  V2Category u;
  u.base = base;
  u.name = j.at("name").get<std::string>();
  u.objects = j.at("objects").get<std::vector<std::string>>();
  const int n = u.n();
  u.hom.resize(static_cast<size_t>(n) * static_cast<size_t>(n));
  auto oix = [&](const json& rec, const char* key) {
    const std::string id = rec.at(key).get<std::string>();
    for (int a = 0; a < n; ++a)
      if (u.objects[static_cast<size_t>(a)] == id) return a;
    raise(Errc::ParseError, "unknown object in " + u.name);
  };
  for (const auto& rec : j.at("hom")) {
    const json& cat = rec.at("cat");
    u.hom[static_cast<size_t>(oix(rec, "a") * n + oix(rec, "b"))] = enriched_tables_from_json(
        cat, base, cat.contains("name") ? cat.at("name").get<std::string>() : "hom");
  }
  auto functor_from_payload = [&](const json& p, EnrichedPtr source, EnrichedPtr target) {
    return functor_from_json(p, std::move(source), std::move(target));
  };
  u.comp.resize(static_cast<size_t>(n) * static_cast<size_t>(n) * static_cast<size_t>(n));
  for (const auto& rec : j.at("composition")) {
    int a = oix(rec, "a"), b = oix(rec, "b"), d = oix(rec, "c");
    auto source = tensor_enriched(u.hom[static_cast<size_t>(b * n + d)],
                                  u.hom[static_cast<size_t>(a * n + b)], 1);
    u.comp[static_cast<size_t>((a * n + b) * n + d)] = functor_from_payload(
        rec.at("functor"), std::move(source), u.hom[static_cast<size_t>(a * n + d)]);
  }
  u.ident.resize(static_cast<size_t>(n));
  for (const auto& rec : j.at("identities")) {
    int a = oix(rec, "a");
    u.ident[static_cast<size_t>(a)] = functor_from_payload(rec.at("functor"), unit_category(base),
                                                           u.hom[static_cast<size_t>(a * n + a)]);
  }
  for (const auto& h : u.hom)
    if (!h) raise(Errc::ParseError, "incomplete hom table in " + u.name);
  for (const auto& m : u.comp)
    if (!m) raise(Errc::ParseError, "incomplete composition table in " + u.name);
  for (const auto& i : u.ident)
    if (!i) raise(Errc::ParseError, "incomplete identity table in " + u.name);
  return u;
}

inline std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

// --------------------------------------------------------------------------
// Document loading with cross-file references.
// --------------------------------------------------------------------------

struct LoadedDocument {
  std::string kind;
  std::string path;
  std::optional<FinCategory> category;
  KFoldPtr kfold;
  SymmetricPtr symmetric;
  EnrichedPtr enriched;
  EnrichedFunctorPtr functor;
  std::optional<V2Category> v2;
};

class DocumentLoader {
 public:
  LoadedDocument load(const std::filesystem::path& path) {
    json j = read_json(path);
    LoadedDocument doc;
    doc.path = path.string();
    if (!j.contains("kind")) raise(Errc::ParseError, path.string() + ": missing kind");
    doc.kind = j.at("kind").get<std::string>();
    if (doc.kind == "category") {
      doc.category = category_from_json(j, j.value("name", "category"));
    } else if (doc.kind == "kfold") {
      doc.kfold = kfold_at(path, j);
    } else if (doc.kind == "symmetric") {
      doc.symmetric = symmetric_from_json(j);
    } else if (doc.kind == "enriched") {
      doc.enriched = enriched_at(path, j);
    } else if (doc.kind == "enriched-functor") {
      auto source = enriched_ref(path, j.at("source").get<std::string>());
      auto target = enriched_ref(path, j.at("target").get<std::string>());
      if (source->base.get() != target->base.get())
        raise(Errc::BaseMismatch, "functor endpoints over different bases");
      doc.functor = functor_from_json(j, std::move(source), std::move(target));
    } else if (doc.kind == "v2category") {
      doc.v2 = v2_from_json(j, kfold_ref(path, j.at("base").get<std::string>()));
    } else {
      raise(Errc::ParseError, path.string() + ": unknown kind " + doc.kind);
    }
    return doc;
  }

  /// Loads an enriched document but binds it against an already loaded base.
  EnrichedPtr load_enriched_with_base(const std::filesystem::path& path, KFoldPtr base) {
    json j = read_json(path);
    if (j.value("kind", "") != "enriched")
      raise(Errc::BaseMismatch, path.string() + ": expected an enriched document");
    return enriched_tables_from_json(j, std::move(base), j.value("name", path.stem().string()));
  }

 private:
  static json read_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) raise(Errc::ParseError, "cannot open " + path.string());
    json j;
    try {
      in >> j;
    } catch (const json::exception& ex) {
      raise(Errc::ParseError, path.string() + ": " + ex.what());
    }
    return j;
  }

  KFoldPtr kfold_at(const std::filesystem::path& path, const json& j) {
    auto key = std::filesystem::weakly_canonical(path).string();
    if (auto it = kfolds_.find(key); it != kfolds_.end()) return it->second;
    auto v = kfold_from_json(j);
    kfolds_[key] = v;
    return v;
  }

  KFoldPtr kfold_ref(const std::filesystem::path& from, const std::string& ref) {
    auto path = from.parent_path() / ref;
    auto key = std::filesystem::weakly_canonical(path).string();
    if (auto it = kfolds_.find(key); it != kfolds_.end()) return it->second;
    json j = read_json(path);
    if (j.value("kind", "") != "kfold")
      raise(Errc::ParseError, path.string() + ": expected a kfold document");
    auto v = kfold_from_json(j);
    kfolds_[key] = v;
    return v;
  }

  EnrichedPtr enriched_at(const std::filesystem::path& path, const json& j) {
    auto base = kfold_ref(path, j.at("base").get<std::string>());
    return enriched_tables_from_json(j, std::move(base),
                                     j.value("name", path.stem().string()));
  }

  EnrichedPtr enriched_ref(const std::filesystem::path& from, const std::string& ref) {
    auto path = from.parent_path() / ref;
    auto key = std::filesystem::weakly_canonical(path).string();
    if (auto it = enriched_.find(key); it != enriched_.end()) return it->second;
    json j = read_json(path);
    if (j.value("kind", "") != "enriched")
      raise(Errc::ParseError, path.string() + ": expected an enriched document");
    auto e = enriched_at(path, j);
    enriched_[key] = e;
    return e;
  }

  std::map<std::string, KFoldPtr> kfolds_;
  std::map<std::string, EnrichedPtr> enriched_;
};

// --------------------------------------------------------------------------
// Reports.
// --------------------------------------------------------------------------

inline json report_to_json(const DiagramReport& report, const CheckOptions& options) {
  json j;
  j["version"] = kToolVersion;
  j["suite"] = report.suite;
  j["seed"] = options.seed;
  j["exhaustive_budget"] = options.exhaustive_budget;
  json checks = json::array();
  for (const auto& c : report.checks) {
    json chk;
    chk["name"] = c.name;
    chk["status"] = status_name(c.status);
    chk["instances"] = c.instances;
    chk["exhaustive"] = c.exhaustive;
    if (!c.exhaustive) {
      chk["sample_size"] = c.sample_size;
      chk["sample_seed"] = c.seed;
    }
    if (!c.note.empty()) chk["note"] = c.note;
    json witnesses = json::array();
    for (const auto& w : c.witnesses)
      witnesses.push_back({{"diagram", w.diagram}, {"at", w.at}, {"lhs", w.lhs}, {"rhs", w.rhs}});
    chk["witnesses"] = witnesses;
    checks.push_back(chk);
  }
  j["checks"] = checks;
  auto usage_json = [](const std::map<AxiomKey, std::uint64_t>& m) {
    json arr = json::array();
    for (const auto& [k, count] : m) {
      json indices = json::array();
      for (int ix : k.idx)
        if (ix) indices.push_back(ix);
      arr.push_back({{"axiom", axiom_name(k.axiom)}, {"indices", indices}, {"count", count}});
    }
    return arr;
  };
  j["coverage"] = {{"consumed", usage_json(report.usage.consumed)},
                   {"delooped", usage_json(report.usage.delooped)}};
  j["passed"] = report.passed();
  return j;
}

inline void print_text_report(std::ostream& out, const DiagramReport& report) {
  out << "suite " << report.suite << "\n";
  for (const auto& c : report.checks) {
    out << "  [" << (c.failed() ? "FAIL" : status_name(c.status)) << "] " << c.name
        << "  instances=" << c.instances;
    if (!c.exhaustive) out << " sampled=" << c.sample_size << " seed=" << c.seed;
    if (!c.note.empty()) out << "  (" << c.note << ")";
    out << "\n";
    size_t shown = 0;
    for (const auto& w : c.witnesses) {
      if (shown++ == 8) {
        out << "         ... " << (c.witnesses.size() - 8) << " more witnesses\n";
        break;
      }
      out << "         " << w.diagram << " at (";
      for (size_t i = 0; i < w.at.size(); ++i) out << (i ? "," : "") << w.at[i];
      out << "): " << w.lhs << " != " << w.rhs << "\n";
    }
  }
  if (!report.usage.empty()) {
    auto print_usage = [&](const char* label, const std::map<AxiomKey, std::uint64_t>& m) {
      if (m.empty()) return;
      out << "  coverage (" << label << "):";
      for (const auto& [k, count] : m) {
        out << " " << axiom_name(k.axiom) << "@(";
        bool first = true;
        for (int ix : k.idx)
          if (ix) {
            out << (first ? "" : ",") << ix;
            first = false;
          }
        out << ")x" << count;
      }
      out << "\n";
    };
    print_usage("consumed", report.usage.consumed);
    print_usage("delooped", report.usage.delooped);
  }
  out << "summary: " << (report.passed() ? "PASS" : "FAIL") << " (" << report.checks.size()
      << " checks, " << report.total_instances() << " diagram instances, "
      << report.wall_seconds << "s)\n";
}

}  // namespace vcat
