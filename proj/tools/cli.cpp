#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "tripsys/errors.hpp"
#include "tripsys/families.hpp"
#include "tripsys/io.hpp"
#include "tripsys/iso.hpp"
#include "tripsys/turan.hpp"

namespace tripsys::cli {
namespace fs = std::filesystem;

namespace {

fs::path resolve_output(const std::string& path) {
  fs::path p(path);
  const char* dir = std::getenv(kOutputDirEnv);
  if (dir && *dir && p.is_relative()) return fs::path(dir) / p;
  return p;
}

void emit(const RunConfig& config, const std::string& text, std::ostream& out) {
  if (config.output.empty()) {
    out << text;
    return;
  }
  fs::path p = resolve_output(config.output);
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  std::ofstream f(p, std::ios::binary);
  if (!f) throw InvalidArgument("cannot write " + p.string());
  f << text;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InvalidArgument("cannot read " + path);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

EnumerationOptions options_for(const RunConfig& c) {
  EnumerationOptions o;
  const bool m2_only = c.forbidden.size() == 1 && c.forbidden[0].name() == PatternName::kM2;
  o.engine = c.engine.value_or(m2_only ? Engine::kClique : Engine::kMis);
  o.threads = c.deterministic ? 1 : std::max(1, c.threads);
  o.allow_large = c.allow_large;
  return o;
}

Containment containment(const RunConfig& c) {
  return c.labeled_containment ? Containment::kLabeled : Containment::kIsomorphic;
}

std::string forbid_slug(const RunConfig& c) {
  std::string s = format_pattern_list(c.forbidden);
  for (char& ch : s)
    if (ch == ',') ch = '_';
  return s;
}

int run_family(const RunConfig& c, std::ostream& out) {
  FamilyName f = parse_family(c.family);
  emit(c, c.format == Format::kJson ? family_to_json(f, c.n_min) : to_text(build(f, c.n_min)), out);
  return kExitOk;
}

int run_enumerate(const RunConfig& c, std::ostream& out) {
  std::string text;
  for (int n = c.n_min; n <= c.n_max; ++n) {
    Catalog cat = enumerate(n, c.forbidden, options_for(c));
    text += c.format == Format::kJson ? catalog_to_json(cat) : catalog_to_text(cat, c.labeled_counts);
  }
  emit(c, text, out);
  return kExitOk;
}

int run_hierarchy(const RunConfig& c, std::ostream& out) {
  std::string text;
  for (int n = c.n_min; n <= c.n_max; ++n) {
    Catalog cat = enumerate(n, c.forbidden, options_for(c));
    Hierarchy h = hierarchy(cat, containment(c));
    switch (c.format) {
      case Format::kJson: text += hierarchy_to_json(h, cat); break;
      case Format::kCsv: text += hierarchy_to_csv(h, cat, n == c.n_min); break;
      case Format::kText: text += hierarchy_to_text(h, cat); break;
    }
  }
  emit(c, text, out);
  return kExitOk;
}

int run_verify(const RunConfig& c, std::ostream& out) {
  std::string text;
  bool ok = true;
  for (int n = c.n_min; n <= c.n_max; ++n) {
    VerifyReport r = verify(n, c.forbidden, options_for(c), containment(c));
    ok = ok && r.ok();
    text += c.format == Format::kJson ? report_to_json(r) : report_to_text(r);
  }
  emit(c, text, out);
  return ok ? kExitOk : kExitMismatch;
}

int run_iso(const RunConfig& c, std::ostream& out) {
  Hypergraph a = parse_hypergraph(read_file(c.files.at(0)));
  Hypergraph b = parse_hypergraph(read_file(c.files.at(1)));
  bool yes = c.embed ? embeds_into(a, b) : are_isomorphic(a, b);
  std::string text;
  if (c.embed) {
    text = yes ? "embeds\n" : "does not embed\n";
  } else {
    text = yes ? "isomorphic\n" : "not isomorphic\n";
    text += to_text(canonical_form(a));
    if (!yes) text += to_text(canonical_form(b));
  }
  emit(c, text, out);
  return yes ? kExitOk : kExitMismatch;
}

int run_export(const RunConfig& c, std::ostream& out) {
  const char* env = std::getenv(kOutputDirEnv);
  fs::path dir = c.output.empty() ? fs::path(env && *env ? env : "tripsys-out") : resolve_output(c.output);
  fs::create_directories(dir);
  auto write = [&](const fs::path& p, const std::string& text) {
    std::ofstream f(p, std::ios::binary);
    if (!f) throw InvalidArgument("cannot write " + p.string());
    f << text;
    out << p.string() << "\n";
  };
  const std::string slug = forbid_slug(c);
  std::string csv;
  for (int n = c.n_min; n <= c.n_max; ++n) {
    Catalog cat = enumerate(n, c.forbidden, options_for(c));
    Hierarchy h = hierarchy(cat, containment(c));
    const std::string stem = "n" + std::to_string(n) + "_" + slug;
    write(dir / ("catalog_" + stem + ".json"), catalog_to_json(cat));
    csv += hierarchy_to_csv(h, cat, csv.empty());
    fs::path classes = dir / ("classes_" + stem);
    fs::create_directories(classes);
    for (std::size_t i = 0; i < cat.entries.size(); ++i) {
      const auto& e = cat.entries[i];
      std::string name = std::to_string(i + 1) + "_" + (e.name ? to_string(*e.name) : "unnamed") + ".hg";
      write(classes / name, to_text(e.hypergraph()));
    }
  }
  write(dir / ("hierarchy_" + slug + ".csv"), csv);
  return kExitOk;
}

}  // namespace

std::pair<int, int> parse_n_range(const std::string& text) {
  auto to_int = [&](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      throw InvalidArgument("bad n value '" + text + "'");
    }
    if (used != s.size()) throw InvalidArgument("bad n value '" + text + "'");
    return v;
  };
  auto dots = text.find("..");
  if (dots == std::string::npos) {
    int v = to_int(text);
    return {v, v};
  }
  int lo = to_int(text.substr(0, dots));
  int hi = to_int(text.substr(dots + 2));
  if (lo > hi) throw InvalidArgument("empty n range '" + text + "'");
  return {lo, hi};
}

std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out,
                                    std::ostream& err, int& exit_code) {
  CLI::App app{"Maximal intersecting triple systems: constructions, enumeration, Turan hierarchies"};
  app.require_subcommand(1, 1);
  RunConfig c;
  std::string n_text = "7", forbid = "M2", engine, family;
  bool json = false, csv = false;

  auto common = [&](CLI::App* sub, bool range) {
    sub->add_option("--n", n_text, range ? "vertex count or range a..b" : "vertex count")->required();
    sub->add_option("-o,--output", c.output, "write to this path instead of stdout");
    sub->add_flag("--json", json, "JSON output");
  };
  auto search = [&](CLI::App* sub) {
    sub->add_option("--forbid", forbid, "forbidden patterns, comma separated (M2, C3)")->default_val("M2");
    sub->add_option("--engine", engine, "clique, mis or oracle");
    sub->add_option("--threads", c.threads, "worker threads (output does not depend on it)")->default_val(1);
    sub->add_flag("--deterministic", c.deterministic, "single worker");
    sub->add_flag("--allow-large", c.allow_large, "permit n above 9 (up to 12)");
  };

  auto* fam = app.add_subcommand("family", "emit a named construction");
  fam->add_option("tag", family, "Sn Kn K5pad H0..H11 F7 F10 C3 M2 P2")->required();
  common(fam, false);

  auto* en = app.add_subcommand("enumerate", "catalog all maximal free families up to isomorphism");
  common(en, true);
  search(en);
  en->add_flag("--labeled-counts", c.labeled_counts, "show labeled counts in text output");

  auto* hi = app.add_subcommand("hierarchy", "derive the ordered Turan hierarchy");
  common(hi, true);
  search(hi);
  hi->add_flag("--csv", csv, "CSV output: n,s,value,num_classes,class_names");
  hi->add_flag("--labeled-containment", c.labeled_containment, "literal edge-subset containment");

  auto* ve = app.add_subcommand("verify", "compare computed hierarchies with the reference tables");
  common(ve, true);
  search(ve);
  ve->add_flag("--labeled-containment", c.labeled_containment, "literal edge-subset containment");

  auto* is = app.add_subcommand("iso", "compare two hypergraph files");
  is->add_option("files", c.files, "two hypergraph text files")->required()->expected(2);
  is->add_flag("--embed", c.embed, "test whether the first embeds into the second");
  is->add_option("-o,--output", c.output, "write to this path instead of stdout");

  auto* ex = app.add_subcommand("export", "write catalogs, class files and hierarchy CSV to a directory");
  ex->add_option("--n", n_text, "vertex count or range a..b")->required();
  ex->add_option("--out", c.output, "output directory (default: $TRIPSYS_OUTPUT_DIR or ./tripsys-out)");
  search(ex);
  ex->add_flag("--labeled-containment", c.labeled_containment, "literal edge-subset containment");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    exit_code = code == 0 ? kExitOk : kExitUsage;
    return std::nullopt;
  }

  try {
    if (fam->parsed()) c.command = Command::kFamily;
    if (en->parsed()) c.command = Command::kEnumerate;
    if (hi->parsed()) c.command = Command::kHierarchy;
    if (ve->parsed()) c.command = Command::kVerify;
    if (is->parsed()) c.command = Command::kIso;
    if (ex->parsed()) c.command = Command::kExport;
    c.family = family;
    if (c.command != Command::kIso) {
      std::tie(c.n_min, c.n_max) = parse_n_range(n_text);
      if (c.command == Command::kFamily && c.n_min != c.n_max)
        throw InvalidArgument("family takes a single --n");
    }
    c.forbidden = parse_pattern_list(forbid);
    if (!engine.empty()) c.engine = parse_engine(engine);
    if (json && csv) throw InvalidArgument("--json and --csv are exclusive");
    c.format = json ? Format::kJson : csv ? Format::kCsv : Format::kText;
    if (c.threads < 1) throw InvalidArgument("--threads must be positive");
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    exit_code = kExitUsage;
    return std::nullopt;
  }
  exit_code = kExitOk;
  return c;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.command) {
      case Command::kFamily: return run_family(config, out);
      case Command::kEnumerate: return run_enumerate(config, out);
      case Command::kHierarchy: return run_hierarchy(config, out);
      case Command::kVerify: return run_verify(config, out);
      case Command::kIso: return run_iso(config, out);
      case Command::kExport: return run_export(config, out);
    }
  } catch (const UnsupportedSize& e) {
    err << "unsupported size: " << e.what() << "\n";
    return kExitUnsupported;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInternal;
}

}  // namespace tripsys::cli
