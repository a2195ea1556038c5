// Batch harness: load structure documents, run the axiom suites or the
// delooping verification, and emit reports.
//
// Exit codes: 0 all checks pass, 1 check failure, 2 parse error,
// 3 base mismatch between documents.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "vcat/fixtures.hpp"
#include "vcat/serialize.hpp"

namespace {

using namespace vcat;

struct Flags {
  std::uint64_t exhaustive_budget = 1'000'000;
  std::uint64_t sample = 10'000;
  std::uint64_t seed = 0;
  std::string format = "text";
  std::string report_path;
  std::string emit_dir;
};

CheckOptions to_options(const Flags& flags) {
  CheckOptions o;
  o.exhaustive_budget = flags.exhaustive_budget;
  o.sample = flags.sample;
  o.seed = flags.seed;
  return o;
}

int finish(const DiagramReport& report, const Flags& flags) {
  if (flags.format == "machine")
    std::cout << canonical_dump(report_to_json(report, to_options(flags)));
  else
    print_text_report(std::cout, report);
  if (!flags.report_path.empty()) {
    std::ofstream out(flags.report_path);
    out << canonical_dump(report_to_json(report, to_options(flags)));
  }
  return report.passed() ? 0 : 1;
}

int run_check(const std::string& path, const Flags& flags) {
  DocumentLoader loader;
  LoadedDocument doc = loader.load(path);
  CheckOptions options = to_options(flags);
  auto start = std::chrono::steady_clock::now();
  DiagramReport report;
  if (doc.kind == "category") {
    report = check_category_laws(*doc.category);
  } else if (doc.kind == "kfold") {
    report = check_kfold(*doc.kfold, options);
    report.merge(check_eta_collapse(*doc.kfold));
  } else if (doc.kind == "symmetric") {
    report = check_symmetric(*doc.symmetric, options);
  } else if (doc.kind == "enriched") {
    report = check_enriched_category(*doc.enriched, options);
    report.suite += " (" + doc.enriched->name + ")";
  } else if (doc.kind == "enriched-functor") {
    report = check_enriched_functor(*doc.functor, options);
  } else {
    report = check_v2_category(*doc.v2, options);
  }
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return finish(report, flags);
}

int run_deloop(const std::string& v_path, const std::vector<std::string>& cat_paths,
               const Flags& flags) {
  DocumentLoader loader;
  LoadedDocument vdoc = loader.load(v_path);
  if (vdoc.kind != "kfold")
    raise(Errc::BaseMismatch, v_path + ": deloop needs a kfold document as base");
  KFoldPtr v = vdoc.kfold;
  std::vector<EnrichedPtr> cats;
  for (const auto& p : cat_paths) {
    try {
      cats.push_back(loader.load_enriched_with_base(p, v));
    } catch (const Error& err) {
      if (err.code() == Errc::ParseError) throw;
      raise(Errc::BaseMismatch, p + " does not fit the base: " + err.what());
    }
  }
  CheckOptions options = to_options(flags);
  auto start = std::chrono::steady_clock::now();
  DiagramReport report = check_kfold(*v, options);
  for (const auto& cat : cats) report.merge(check_enriched_category(*cat, options));
  report.merge(verify_delooping(*v, cats, options));
  report.suite = "deloop " + v->name;
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  if (!flags.emit_dir.empty()) {
    std::filesystem::create_directories(flags.emit_dir);
    for (int i = 1; i + 1 <= v->k; ++i)
      for (const auto& a : cats)
        for (const auto& b : cats) {
          auto p = tensor_enriched(a, b, i);
          EnrichedCategory named = *p;
          named.name = a->name + "_x" + std::to_string(i) + "_" + b->name;
          std::filesystem::path out_path =
              std::filesystem::path(flags.emit_dir) / (named.name + ".json");
          std::ofstream out(out_path);
          out << canonical_dump(enriched_to_json(named, v_path));
        }
  }
  return finish(report, flags);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite iterated-monoidal structures: axiom suites and delooping verification"};
  app.require_subcommand(1);
  Flags flags;

  std::string check_file;
  auto* check = app.add_subcommand("check", "run the axiom suite for one structure document");
  check->add_option("file", check_file, "structure document")->required();

  std::string v_file;
  std::vector<std::string> cat_files;
  auto* deloop = app.add_subcommand("deloop", "verify the delooping construction");
  deloop->add_option("base", v_file, "kfold document")->required();
  deloop->add_option("categories", cat_files, "enriched category documents")->required();
  deloop->add_option("--emit", flags.emit_dir, "emit constructed products into this directory");

  for (auto* sub : {check, deloop}) {
    sub->add_option("--exhaustive-budget", flags.exhaustive_budget,
                    "max diagram instances before sampling kicks in");
    sub->add_option("--sample", flags.sample, "sample size for over-budget suites");
    sub->add_option("--seed", flags.seed, "sampling seed");
    sub->add_option("--format", flags.format, "text or machine")
        ->check(CLI::IsMember({"text", "machine"}));
    sub->add_option("--report", flags.report_path, "also write the machine report here");
  }

  CLI11_PARSE(app, argc, argv);
  try {
    if (check->parsed()) return run_check(check_file, flags);
    return run_deloop(v_file, cat_files, flags);
  } catch (const vcat::Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return err.code() == vcat::Errc::BaseMismatch ? 3 : 2;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
}
