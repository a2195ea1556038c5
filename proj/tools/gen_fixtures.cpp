// Regenerates the bundled fixture corpus from the programmatic builders.
// Usage: gen_fixtures [output-dir]   (default: fixtures)

#include <filesystem>
#include <fstream>
#include <iostream>

#include "vcat/fixtures.hpp"
#include "vcat/serialize.hpp"

using namespace vcat;
namespace fs = std::filesystem;

namespace {

void write_file(const fs::path& path, const std::string& content) {
  fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  out << content;
  std::cout << "wrote " << path.string() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  fs::path dir = argc > 1 ? argv[1] : "fixtures";

  auto bool_k = fixtures::boolean_kfold();
  auto sign_k = fixtures::sign_kfold();
  auto z2_k = fixtures::z2_kfold();

  write_file(dir / "bool-k3.json", canonical_dump(kfold_to_json(*bool_k)));
  write_file(dir / "sign-k3.json", canonical_dump(kfold_to_json(*sign_k)));
  write_file(dir / "z2-k3.json", canonical_dump(kfold_to_json(*z2_k)));
  write_file(dir / "sign-symmetric.json",
             canonical_dump(symmetric_to_json(*fixtures::sign_symmetric())));

  write_file(dir / "chain.json",
             canonical_dump(enriched_to_json(*fixtures::preorder_chain(bool_k), "bool-k3.json")));
  write_file(dir / "discrete.json", canonical_dump(enriched_to_json(
                                        *fixtures::preorder_discrete(bool_k), "bool-k3.json")));

  auto constant = fixtures::constant_sign(sign_k);
  auto twisted = fixtures::twisted_sign(sign_k);
  auto graded = fixtures::graded_sign(sign_k);
  write_file(dir / "const.json", canonical_dump(enriched_to_json(*constant, "sign-k3.json")));
  write_file(dir / "twisted.json", canonical_dump(enriched_to_json(*twisted, "sign-k3.json")));
  write_file(dir / "graded.json", canonical_dump(enriched_to_json(*graded, "sign-k3.json")));

  write_file(dir / "swap-const.json",
             canonical_dump(functor_to_json(*fixtures::swap_functor(constant), "const.json",
                                            "const.json")));
  write_file(dir / "collapse.json",
             canonical_dump(functor_to_json(*fixtures::collapse_functor(twisted, constant),
                                            "twisted.json", "const.json")));

  write_file(dir / "v2-const.json",
             canonical_dump(v2_to_json(fixtures::v2_constant(sign_k), "sign-k3.json")));
  write_file(dir / "v2-twisted.json",
             canonical_dump(v2_to_json(fixtures::v2_twisted(sign_k), "sign-k3.json")));

  struct BrokenEntry {
    Axiom family;
    const char* file;
  };
  const BrokenEntry broken[] = {
      {Axiom::InternalUnit, "broken/broken-internal-unit.json"},
      {Axiom::ExternalUnit, "broken/broken-external-unit.json"},
      {Axiom::InternalAssoc, "broken/broken-internal-assoc.json"},
      {Axiom::ExternalAssoc, "broken/broken-external-assoc.json"},
      {Axiom::GiantHexagon, "broken/broken-giant-hexagon.json"},
  };
  for (const auto& b : broken)
    write_file(dir / b.file, canonical_dump(kfold_to_json(*fixtures::broken_kfold(b.family))));

  auto broken_enriched = constant->with_m_entry(0, 0, 0, fixtures::sign_mor(0, 1));
  broken_enriched.name = "broken-const";
  write_file(dir / "broken/broken-enriched.json",
             canonical_dump(enriched_to_json(broken_enriched, "../sign-k3.json")));
  return 0;
}
