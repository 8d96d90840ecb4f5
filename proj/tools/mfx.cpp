// mfx: batch front end for the factorization / module / class-group toolkit.
//
// Exit codes: 0 every check passed, 1 a mathematical check failed,
// 2 usage, parse or I/O error.

#include "mfx/acceptance.hpp"
#include "mfx/catalog.hpp"
#include "mfx/catalog_files.hpp"
#include "mfx/kgroup.hpp"
#include "mfx/matfac.hpp"
#include "mfx/mfx_io.hpp"
#include "mfx/modres.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using mfx::CK;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Check {
  std::string name;
  bool ok;
  std::string detail;
};

struct RunReport {
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;  // path, digest
  std::vector<std::string> output;
  std::vector<Check> checks;
  std::vector<std::string> details;  // per-test lines, printed with --verbose
  std::optional<std::string> raw;     // printed verbatim instead of a report

  void add(std::string name, const mfx::Report& r, const std::string& pass_detail = "") {
    checks.push_back({std::move(name), r.ok, r.ok ? pass_detail : r.failure});
    for (const auto& l : r.lines) details.push_back(checks.back().name + ": " + l);
  }
  bool ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.ok; });
  }
};

struct Options {
  int cutoff = 12;
  int steps = 6;
  unsigned seed = 1;
  bool machine = false;
  bool verbose = false;
};

std::string load(RunReport& rep, const std::string& path) {
  std::string text;
  try {
    text = mfx::read_file(path);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  rep.inputs.push_back({path, mfx::hex64(mfx::fnv1a(text))});
  return text;
}

template <class F>
auto parsed(const std::string& path, F&& f) {
  try {
    return f();
  } catch (const mfx::ParseError& e) {
    throw UsageError(path + ": " + e.what());
  } catch (const mfx::MalformedError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

mfx::MatrixFactorization<CK> load_mf(RunReport& rep, const std::string& path) {
  auto text = load(rep, path);
  return parsed(path, [&] { return mfx::parse_mf<CK>(text); });
}

// A module file, or the cokernel of a factorization file.
mfx::GradedModulePresentation<CK> load_module(RunReport& rep, const std::string& path) {
  auto text = load(rep, path);
  return parsed(path, [&] {
    if (text.rfind("mf", 0) == 0) return mfx::cokernel_module(mfx::parse_mf<CK>(text));
    return mfx::parse_module<CK>(text);
  });
}

std::string canonical_order_note(const std::vector<Check>& checks) {
  return std::to_string(checks.size()) + " check" + (checks.size() == 1 ? "" : "s");
}

void print(const RunReport& rep, const Options& opt, std::ostream& out) {
  out << "mfx " << MFX_VERSION << "\n";
  out << "command: " << rep.command << "\n";
  for (const auto& [path, digest] : rep.inputs) out << "input: " << path << " fnv1a=" << digest << "\n";
  for (const auto& l : rep.output) out << l << "\n";
  auto checks = rep.checks;
  std::stable_sort(checks.begin(), checks.end(), [](const Check& a, const Check& b) { return a.name < b.name; });
  for (const auto& c : checks) {
    if (opt.machine)
      out << "CHECK " << c.name << " " << (c.ok ? "PASS" : "FAIL") << " " << c.detail << "\n";
    else
      out << (c.ok ? "[PASS] " : "[FAIL] ") << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
  }
  if (opt.verbose)
    for (const auto& l : rep.details) out << "  " << l << "\n";
  out << "status: " << (rep.ok() ? "PASS" : "FAIL") << " (" << canonical_order_note(checks) << ")\n";
}

// ---------------------------------------------------------------------------

void cmd_verify(RunReport& rep, const Options& opt, const std::string& path, bool resolution) {
  auto m = load_mf(rep, path);
  auto v = parsed(path, [&] { return mfx::verify_mf(m); });
  rep.add("mf-identity", v, "phi*psi = psi*phi = f*I, " + std::to_string(m.size()) + "x" + std::to_string(m.size()));
  if (resolution && v.ok)
    rep.add("periodic-resolution", mfx::periodic_resolution_check(m, opt.steps, opt.cutoff),
            std::to_string(opt.steps) + " steps exact through degree " + std::to_string(opt.cutoff));
}

void cmd_transform(RunReport& rep, const Options& opt, const std::string& op, const std::string& path, int shift,
                   const std::string& u, const std::string& v, const std::string& y, bool ab,
                   const std::string& out_path) {
  auto m = load_mf(rep, path);
  auto pre = mfx::verify_mf(m);
  rep.add("input-verifies", pre);
  if (!pre.ok) return;
  std::string text;
  auto emit = [&](const mfx::MatrixFactorization<CK>& r, const std::string& name) {
    rep.add(name + "-verifies", mfx::verify_mf(r));
    text += mfx::format_mf(r);
  };
  try {
    if (op == "dual") {
      emit(mfx::dual_mf(m), "dual");
    } else if (op == "twist") {
      emit(mfx::twist_mf(m, shift), "twist");
    } else if (op == "knoerrer") {
      emit(mfx::knoerrer_periodicity(m, u, v), "knoerrer");
    } else if (op == "cover") {
      emit(mfx::double_branched_cover(m, y), "cover");
    } else if (op == "coker") {
      text = mfx::format_module(mfx::cokernel_module(m));
    } else if (op == "split") {
      std::optional<std::vector<mfx::MatrixFactorization<CK>>> blocks;
      if (ab) {
        auto [target, sub] = mfx::ab_substitution(m.ring);
        blocks = mfx::try_split(m, target, sub, opt.seed);
      } else {
        blocks = mfx::try_split(m, opt.seed);
      }
      if (!blocks) {
        rep.output.push_back("no split found");
      } else {
        rep.output.push_back("split into " + std::to_string(blocks->size()) + " blocks");
        for (std::size_t k = 0; k < blocks->size(); ++k) {
          text += "# block " + std::to_string(k + 1) + "\n";
          emit((*blocks)[k], "block-" + std::to_string(k + 1));
        }
      }
    } else {
      throw UsageError("unknown transform '" + op + "' (dual, twist, knoerrer, cover, coker, split)");
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (out_path.empty()) {
    std::istringstream lines(text);
    for (std::string l; std::getline(lines, l);) rep.output.push_back(l);
  } else {
    try {
      mfx::write_file(out_path, text);
    } catch (const std::exception& e) {
      throw UsageError(e.what());
    }
    rep.output.push_back("wrote " + out_path);
  }
}

void cmd_hilbert(RunReport& rep, const Options& opt, const std::string& path, int from) {
  auto m = load_module(rep, path);
  std::string line = "HF(" + std::to_string(from) + ".." + std::to_string(opt.cutoff) + "):";
  for (int d = from; d <= opt.cutoff; ++d) line += " " + std::to_string(m.hilbert(d));
  rep.output.push_back(line);
}

void cmd_exact(RunReport& rep, const Options& opt, const std::string& name, int ell) {
  mfx::SequenceInstance s;
  try {
    s = mfx::get_sequence(name, ell);
  } catch (const mfx::CatalogError& e) {
    throw UsageError(e.what());
  }
  rep.output.push_back("sequence: 0 -> " + mfx::format_sheaf_vector(s.classes.sub) + " -> " +
                       mfx::format_sheaf_vector(s.classes.middle) + " -> " + mfx::format_sheaf_vector(s.classes.quot) +
                       " -> 0 on " + s.model);
  rep.add(name, mfx::certify_sequence(s, opt.cutoff, opt.seed),
          "bounded certificate through degree " + std::to_string(opt.cutoff));
}

void cmd_extension(RunReport& rep, const Options& opt, const std::string& e, const std::string& a,
                   const std::string& b) {
  auto me = load_module(rep, e), ma = load_module(rep, a), mb = load_module(rep, b);
  auto r = mfx::check_extension<CK>(me, ma, mb, opt.cutoff, std::nullopt, opt.seed);
  rep.add("extension", r, "0 -> A -> E -> B -> 0 certified through degree " + std::to_string(opt.cutoff));
}

void cmd_gprime(RunReport& rep, const Options& opt, const std::string& model, const std::vector<std::string>& vecs) {
  if (std::find(mfx::model_names().begin(), mfx::model_names().end(), model) == mfx::model_names().end())
    throw UsageError("unknown model '" + model + "'");
  auto g = mfx::certified_gprime(model, opt.cutoff, opt.seed);
  rep.add("certified-sequences", g.report, std::to_string(g.group.relations.size() + g.group.expansions.size()) + " sequences enter G'");
  const auto& km = mfx::get_model(model).classes;
  rep.output.push_back("generators: " + mfx::detail::join(g.group.generators, ", "));
  for (std::size_t j = 0; j < g.group.relations.size(); ++j) {
    std::string rel;
    for (std::size_t i = 0; i < g.group.generators.size(); ++i) {
      long long c = g.group.relations[j][i];
      if (c == 0) continue;
      rel += (rel.empty() ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ")) +
             (std::llabs(c) == 1 ? "" : std::to_string(std::llabs(c)) + "*") + g.group.generators[i];
    }
    rep.output.push_back("relation " + g.group.relation_names[j] + ": " + rel + " = 0");
  }
  for (const auto& [label, cls] : g.group.expansions) {
    std::string e;
    for (std::size_t i = 0; i < cls.size(); ++i)
      if (cls[i]) e += (e.empty() ? "" : " + ") + (cls[i] == 1 ? "" : std::to_string(cls[i]) + "*") + g.group.generators[i];
    rep.output.push_back("layers " + label + " = " + e);
  }
  for (const auto& w : g.group.warnings) rep.output.push_back("warning: " + w);
  for (const auto& text : vecs) {
    mfx::SheafClassVector v;
    try {
      v = mfx::parse_sheaf_vector(text);
      (void)mfx::c1_of_vector(km, v);
    } catch (const mfx::KGroupError& e) {
      throw UsageError(e.what());
    }
    rep.output.push_back("c1(" + mfx::format_sheaf_vector(v) + ") = " + km.format_class(mfx::c1_of_vector(km, v)));
    if (!mfx::is_orientable(km, v))
      throw UsageError("{" + mfx::format_sheaf_vector(v) + "} is not orientable; condition C does not apply");
    mfx::Report r;
    auto c = mfx::check_condition_C(km, g.group, v);
    r.expect(c.holds, c.holds ? "class is rank * O, " + c.explanation : c.explanation);
    rep.add("condition-C {" + mfx::format_sheaf_vector(v) + "}", r, r.ok ? r.lines.back().substr(3) : "");
  }
}

void cmd_minv(RunReport& rep, const std::string& pattern, int n, const std::string& e, const std::string& nn) {
  const auto& km = mfx::get_model("veronese").classes;
  mfx::SheafClassVector ve, vn;
  try {
    if (!pattern.empty()) {
      auto p = mfx::get_resolution_pattern(pattern, n);
      ve = p.e;
      vn = p.n;
    } else {
      if (e.empty() || nn.empty()) throw UsageError("minv needs --pattern or both --E and --N");
      ve = mfx::parse_sheaf_vector(e);
      vn = mfx::parse_sheaf_vector(nn);
    }
    rep.output.push_back("E = " + mfx::format_sheaf_vector(ve));
    rep.output.push_back("N = " + mfx::format_sheaf_vector(vn));
    long m = mfx::veronese_m_invariant(km, ve, vn);
    rep.output.push_back("m = " + std::to_string(m));
    mfx::Report r;
    r.expect(m % 2 == 0, "m is even");
    rep.add("m-invariant", r, "m = " + std::to_string(m));
  } catch (const mfx::CatalogError& ex) {
    throw UsageError(ex.what());
  } catch (const mfx::KGroupError& ex) {
    throw UsageError(ex.what());
  }
}

void cmd_catalog(RunReport& rep, const std::string& action, const std::string& arg) {
  if (action == "list") {
    for (const auto& m : mfx::model_names()) {
      const auto& d = mfx::get_model(m);
      std::string mods;
      for (const auto& [label, mod] : d.modules) mods += (mods.empty() ? "" : ", ") + label;
      rep.output.push_back("model " + m + ": modules " + mods + "; sequences " + mfx::detail::join(d.sequences, ", "));
    }
    for (const auto& n : mfx::mf_template_names())
      rep.output.push_back("mf " + n + (mfx::mf_has_ell(n) ? " (l >= 1)" : ""));
    for (const auto& n : mfx::resolution_pattern_names())
      rep.output.push_back("pattern " + n + (n == "determinantal" ? " (n even, positive)" : ""));
  } else if (action == "dump") {
    if (arg.empty()) throw UsageError("catalog dump needs a name");
    auto text = mfx::catalog_dump(arg);
    if (!text) throw UsageError("no catalog entry '" + arg + "'");
    rep.raw = *text;
  } else if (action == "write") {
    if (arg.empty()) throw UsageError("catalog write needs a directory");
    std::error_code ec;
    std::filesystem::create_directories(arg, ec);
    try {
      for (const auto& f : mfx::catalog_files()) mfx::write_file((std::filesystem::path(arg) / f.name).string(), f.text);
    } catch (const std::exception& e) {
      throw UsageError(e.what());
    }
    rep.output.push_back("wrote " + std::to_string(mfx::catalog_files().size()) + " files to " + arg);
  } else {
    throw UsageError("unknown catalog action '" + action + "' (list, dump, write)");
  }
}

mfx::Report catalog_self_check(const Options& opt) {
  mfx::Report r;
  for (const auto& t : mfx::all_templates()) {
    auto v = mfx::verify_mf(t.mf);
    r.expect(v.ok, mfx::tag(t.name, t.ell) + " verifies" + (v.ok ? "" : ": " + v.failure));
  }
  for (const auto& m : mfx::model_names())
    for (const auto& s : mfx::model_sequences(m)) {
      auto c = mfx::certify_sequence(s, opt.cutoff, opt.seed);
      r.expect(c.ok, s.name + (s.ell ? "[l=" + std::to_string(s.ell) + "]" : "") +
                         (c.ok ? " certified" : ": " + c.failure));
    }
  const auto& km = mfx::get_model("veronese").classes;
  for (const auto& p : mfx::resolution_pattern_names()) {
    std::vector<int> ns = p == "determinantal" ? std::vector<int>{2, 4, 6} : std::vector<int>{0};
    for (int n : ns) {
      auto pat = mfx::get_resolution_pattern(p, n);
      auto e = pat.e, nn = pat.n;
      if (!mfx::is_orientable(km, e) || !mfx::is_orientable(km, nn)) {
        e.add("I_C");
        nn.add("I_C");
      }
      r.expect(mfx::is_orientable(km, e) && mfx::is_orientable(km, nn), p + " orientable on both sides");
    }
  }
  return r;
}

void cmd_selftest(RunReport& rep, const Options& opt, const std::string& data_dir) {
  mfx::AcceptanceOptions ao;
  ao.seed = opt.seed;
  ao.data_dir = data_dir;
  rep.output.push_back("seed: " + std::to_string(opt.seed));
  rep.output.push_back("data: " + data_dir);
  rep.add("catalog", catalog_self_check(opt), "templates, sequences and patterns");
  for (int k = 1; k <= 10; ++k) {
    auto c = mfx::run_criterion(k, ao);
    char id[8];
    std::snprintf(id, sizeof id, "AC%02d", k);
    rep.add(std::string(id) + "-" + c.name, c.report, c.summary);
  }
}

}  // namespace

int main(int argc, char** argv) {
  auto start = std::chrono::steady_clock::now();
  CLI::App app{"mfx: matrix factorizations, graded modules and class groups over exact fields"};
  app.set_version_flag("--version", MFX_VERSION);
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--cutoff", opt.cutoff, "degree cutoff for bounded certificates")->capture_default_str();
  app.add_option("--steps", opt.steps, "periodic resolution steps")->capture_default_str();
  app.add_option("--seed", opt.seed, "seed for randomized searches and property checks")->capture_default_str();
  app.add_flag("--machine", opt.machine, "emit CHECK <name> PASS|FAIL <detail> lines");
  app.add_flag("-v,--verbose", opt.verbose, "list every individual test");

  std::string path, op, out_path, u = "u", v = "v", y = "y", seq, e_path, a_path, b_path, model, pattern, ev, nv,
                             action, arg, data_dir = MFX_DATA_DIR;
  int shift = 0, ell = 1, from = 0, n = 0;
  bool resolution = true, ab = false;
  std::vector<std::string> vecs;

  auto* verify = app.add_subcommand("verify", "check phi*psi = psi*phi = f*I, grading and the periodic resolution");
  verify->add_option("file", path, "factorization file")->required();
  verify->add_flag("!--no-resolution", resolution, "skip the periodic resolution check");

  auto* transform = app.add_subcommand("transform", "dual, twist, knoerrer, cover, coker or split a factorization");
  transform->add_option("op", op, "dual|twist|knoerrer|cover|coker|split")->required();
  transform->add_option("file", path, "factorization file")->required();
  transform->add_option("--shift", shift, "twist amount");
  transform->add_option("--u", u, "first periodicity variable");
  transform->add_option("--v", v, "second periodicity variable");
  transform->add_option("--y", y, "double cover variable");
  transform->add_flag("--ab", ab, "split after x = (a+b)/2, y = (a-b)/2i");
  transform->add_option("-o,--output", out_path, "write the result here");

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert function of a module (or of a factorization's cokernel)");
  hilbert->add_option("file", path, "module or factorization file")->required();
  hilbert->add_option("--from", from, "first degree");

  auto* exact = app.add_subcommand("exact", "certify a catalog sequence degreewise");
  exact->add_option("sequence", seq, "sequence name")->required();
  exact->add_option("--ell", ell, "parameter l of extension sequences");

  auto* extension = app.add_subcommand("extension", "certify 0 -> A -> E -> B -> 0");
  extension->add_option("E", e_path)->required();
  extension->add_option("A", a_path)->required();
  extension->add_option("B", b_path)->required();

  auto* gprime = app.add_subcommand("gprime", "G' of a catalog model, optionally checking condition C");
  gprime->add_option("model", model)->required();
  gprime->add_option("--check", vecs, "class vector, e.g. '2*I_C + O(-1)'");

  auto* minv = app.add_subcommand("minv", "Veronese invariant m of a resolution 0 -> E -> N -> I_Z(a) -> 0");
  minv->add_option("--pattern", pattern, "catalog pattern");
  minv->add_option("--n", n, "n for the determinantal pattern");
  minv->add_option("--E", ev, "kernel class vector");
  minv->add_option("--N", nv, "middle class vector");

  auto* catalog = app.add_subcommand("catalog", "list, dump or write catalog objects");
  catalog->add_option("action", action, "list|dump|write")->required();
  catalog->add_option("name", arg, "entry name or output directory");

  auto* selftest = app.add_subcommand("selftest", "catalog self-check and acceptance criteria 1-10");
  selftest->add_option("--data-dir", data_dir, "catalog data directory")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  RunReport rep;
  for (int i = 1; i < argc; ++i) rep.command += (i > 1 ? " " : "") + std::string(argv[i]);
  try {
    if (*verify) cmd_verify(rep, opt, path, resolution);
    else if (*transform) cmd_transform(rep, opt, op, path, shift, u, v, y, ab, out_path);
    else if (*hilbert) cmd_hilbert(rep, opt, path, from);
    else if (*exact) cmd_exact(rep, opt, seq, ell);
    else if (*extension) cmd_extension(rep, opt, e_path, a_path, b_path);
    else if (*gprime) cmd_gprime(rep, opt, model, vecs);
    else if (*minv) cmd_minv(rep, pattern, n, ev, nv);
    else if (*catalog) cmd_catalog(rep, action, arg);
    else if (*selftest) cmd_selftest(rep, opt, data_dir);
  } catch (const UsageError& e) {
    std::cerr << "mfx: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "mfx: " << e.what() << "\n";
    return 2;
  }
  if (rep.raw) {
    std::cout << *rep.raw;
    return 0;
  }
  print(rep, opt, std::cout);
  auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cerr << "wall-time: " << secs << " s\n";
  return rep.ok() ? 0 : 1;
}
