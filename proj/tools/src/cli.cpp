#include "paramedial_cli/cli.hpp"

#include <algorithm>
#include <cerrno>
#include <chrono>
#include <cstring>
#include <ctime>
#include <fstream>
#include <functional>
#include <map>

#include "CLI11.hpp"
#include "json.hpp"
#include "paramedial/enum_cyclic.hpp"
#include "paramedial/enum_gl2.hpp"
#include "paramedial/errors.hpp"
#include "paramedial/oracle.hpp"
#include "paramedial/version.hpp"
#include "paramedial_cli/cache.hpp"
#include "paramedial_cli/records.hpp"

namespace paramedial::cli {

using Json = nlohmann::ordered_json;

namespace {

class IoError : public Error {
 public:
  using Error::Error;
};

struct CountArgs {
  Int order = 0;
  std::vector<std::string> group;
  bool json = false;
};

struct EnumerateArgs {
  std::vector<std::string> group;
  bool simple_only = false;
  std::string format = "json";
  std::string out;
  std::string cache_dir;
};

struct VerifyArgs {
  std::vector<std::string> group;
  std::string level = "fast";
  Int oracle_bound = oracle::kDefaultOracleBound;
};

Json group_json(const GroupDescriptor& g) {
  return Json{{"kind", g.is_cyclic() ? "cyclic" : "elem2"}, {"p", g.prime()}, {"k", g.exponent()}};
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path + " for writing: " + std::strerror(errno));
  out << content;
  out.close();
  if (!out) throw IoError("error while writing " + path);
}

int cmd_count(const CountArgs& a, std::ostream& out) {
  if ((a.order != 0) == !a.group.empty()) throw PreconditionViolation("count needs exactly one of --order or --group");
  Json report{{"command", "count"}};
  Int count = 0;
  if (a.order != 0) {
    count = pq_total(a.order);
    report["order"] = a.order;
  } else {
    const auto g = parse_group(a.group);
    count = g.is_cyclic() ? enumerate_cyclic(g.modulus()).count : enumerate_gl2(g.prime()).total;
    report["group"] = group_json(g);
  }
  report["count"] = count;
  if (a.json) {
    out << report.dump() << "\n";
  } else {
    out << count << "\n";
  }
  return kOk;
}

int cmd_enumerate(const EnumerateArgs& a, std::ostream& out) {
  const auto g = parse_group(a.group);
  Json params{{"group", group_parameters(g)}, {"simple_only", a.simple_only}, {"format", a.format}};
  const std::string key = "enumerate\n" + params.dump() + "\n" + kVersion;

  const auto cache = ResultCache::from(a.cache_dir);
  std::string text;
  if (auto hit = cache.load(key)) {
    text = std::move(*hit);
  } else {
    const auto records = collect_records(g, a.simple_only);
    if (a.format == "json") {
      text = write_json(records);
    } else if (a.format == "csv") {
      text = write_csv(records);
    } else {
      text = write_tables(records);
    }
    cache.store(key, text);
  }

  if (a.out.empty()) {
    out << text;
    return kOk;
  }
  write_file(a.out, text);
  Json manifest{{"command", "enumerate"},
                {"parameters", params},
                {"version", kVersion},
                {"timestamp", utc_timestamp()},
                {"digest", "fnv1a64:" + hex64(fnv1a(text))}};
  write_file(a.out + ".manifest.json", manifest.dump(2) + "\n");
  return kOk;
}

class Report {
 public:
  explicit Report(std::ostream& out) : out_(out) {}

  void check(const std::string& name, bool ok, const std::string& detail) {
    out_ << (ok ? "PASS " : "FAIL ") << name << ": " << detail << "\n";
    ++total_;
    if (!ok) ++failed_;
  }
  void skip(const std::string& name, const std::string& detail) { out_ << "SKIP " << name << ": " << detail << "\n"; }
  int finish() {
    out_ << (total_ - failed_) << "/" << total_ << " checks passed\n";
    return failed_ == 0 ? kOk : kVerifyFailed;
  }

 private:
  std::ostream& out_;
  int total_ = 0;
  int failed_ = 0;
};

template <class T>
std::string versus(const T& got, const T& want) {
  return std::to_string(got) + (got == want ? " = " : " != ") + std::to_string(want);
}

constexpr Int kTableCheckLimit = 25;

void structural_checks(Report& r, const GroupDescriptor& g, const std::vector<Record>& records) {
  bool squares = true;
  std::vector<AffineForm> sorted;
  for (const auto& rec : records) {
    const auto& f = rec.form;
    sorted.push_back(f);
    if (f.is_cyclic()) {
      squares = squares && f.cyclic_parts().phi.pow(2) == f.cyclic_parts().psi.pow(2);
    } else {
      squares = squares && f.planar_parts().phi.squared() == f.planar_parts().psi.squared();
    }
  }
  std::sort(sorted.begin(), sorted.end());
  const bool distinct = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  r.check("square condition", squares, "phi^2 = psi^2 for all " + std::to_string(records.size()) + " forms");
  r.check("distinct", distinct, "no form is emitted twice");
  if (g.order() > kTableCheckLimit) {
    r.skip("tables", "order " + std::to_string(g.order()) + " exceeds " + std::to_string(kTableCheckLimit));
    return;
  }
  bool latin = true, paramedial = true;
  for (const auto& rec : records) {
    const auto t = materialize(rec.form);
    latin = latin && is_latin(t);
    paramedial = paramedial && is_paramedial(t);
  }
  r.check("latin", latin, "every table is a latin square");
  r.check("paramedial", paramedial, "identity holds on all " + std::to_string(g.order()) + "^4 quadruples");
}

void fast_cyclic(Report& r, const GroupDescriptor& g) {
  const auto cls = enumerate_cyclic(g.modulus());
  const Int want = closed_form_count(g.modulus());
  const Int p = g.prime();
  const int k = g.exponent();
  std::string detail = versus(cls.count, want);
  if (p != 2) {
    Int tail = 0, pi = 1;
    for (int i = 0; i <= k - 2; ++i, pi *= p) tail += pi;
    detail += " = 2*" + std::to_string(g.order()) + "-" + std::to_string(g.order() / p) + "+" + std::to_string(tail);
  }
  r.check("count", cls.count == want, detail);
  const auto records = collect_records(g, false);
  structural_checks(r, g, records);
  const bool expect_simple = k == 1;
  bool ok = std::all_of(records.begin(), records.end(), [&](const Record& rec) { return rec.simple == expect_simple; });
  r.check("simplicity", ok, expect_simple ? "prime order: every class simple" : "every class has an invariant subgroup");
}

void fast_elem2(Report& r, const GroupDescriptor& g) {
  const Int p = g.prime();
  const auto cls = enumerate_gl2(p);
  r.check("count", cls.total == closed_form_count_elem2(p), versus(cls.total, closed_form_count_elem2(p)));
  if (p != 2) {
    const std::map<ConjKind, Int> twice{{ConjKind::kScalar, 2 * (3 * p - 1)},
                                        {ConjKind::kDiagonal, 5 * p * p - 6 * p - 1},
                                        {ConjKind::kJordan, 2 * (2 * p - 1)},
                                        {ConjKind::kIrreducible, 3 * p * p - 4 * p + 1}};
    for (const auto& [kind, want2] : twice) {
      const Int got = cls.subtotal(kind);
      r.check("subtotal " + to_string(kind), 2 * got == want2, std::to_string(got) + (2 * got == want2 ? " = " : " != ") + std::to_string(want2) + "/2");
    }
    bool reps = true;
    for (const auto& row : cls.rows) reps = reps && row.coset_reps == coset_reps_for(row.phi, row.psi);
    r.check("coset representatives", reps, "every row uses the coset representatives of 1-phi-psi");

    const auto fam = simple_family_counts(cls);
    auto get = [&](const char* label, std::size_t n) {
      auto it = fam.find({label, n});
      return it == fam.end() ? Int{0} : it->second;
    };
    const bool families = 2 * get(gl2_case::kAntipodalFamily, 1) == p * p - 4 * p + 5 &&
                          get(gl2_case::kAntipodalFamily, 2) == p - 3 &&
                          2 * get(gl2_case::kIrreducibleSame, 1) == p * p - p &&
                          2 * get(gl2_case::kIrreducibleNeg, 1) == p * p - p &&
                          2 * get(gl2_case::kIrreducibleOther, 1) == (p - 1) * (p - 3) &&
                          get(gl2_case::kIrreducibleOther, 2) == p - 1;
    r.check("simple families", families, std::to_string(simple_subset(cls).total) + " simple classes");
  }
  const auto records = collect_records(g, false);
  structural_checks(r, g, records);
  bool ok = std::all_of(records.begin(), records.end(), [](const Record& rec) { return rec.simple == is_simple(rec.form); });
  r.check("simple flags", ok, "flags agree with invariant subgroups");
}

void oracle_checks(Report& r, const GroupDescriptor& g, Int bound) {
  const auto cls = oracle::classify_triples(g, bound);
  const auto records = collect_records(g, false);
  std::vector<AffineForm> forms;
  for (const auto& rec : records) forms.push_back(rec.form);

  r.check("orbit count", cls.count() == forms.size(),
          std::to_string(cls.count()) + " classes from " + std::to_string(cls.points.size()) + " triples, " +
              std::to_string(forms.size()) + " enumerated");
  auto hits = oracle::class_hits(cls, forms);
  std::sort(hits.begin(), hits.end());
  bool once = hits.size() == cls.count();
  for (std::size_t i = 0; once && i < hits.size(); ++i) once = hits[i] == i;
  r.check("orbit hit", once, "each representative lies in its own orbit");
  r.check("fixed points", cls.burnside_count == cls.count(),
          "Burnside count " + std::to_string(cls.burnside_count) +
              (cls.partition.burnside_checked ? ", fixed points of every element tallied" : ", kernel formula"));

  bool flags = true;
  for (const auto& rec : records) {
    const auto t = materialize(rec.form);
    const bool congruent = g.order() <= 9 ? oracle::has_proper_congruence(t) : oracle::has_proper_subgroup_congruence(t, g);
    flags = flags && rec.simple == !congruent;
  }
  r.check("congruences", flags, g.order() <= 9 ? "simple flags agree with exhaustive congruence search"
                                                 : "simple flags agree with subgroup congruence search");
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const auto g = parse_group(a.group);
  if (a.level == "oracle" && g.order() > a.oracle_bound) {
    throw BoundExceeded("oracle level over " + g.name() + " (order " + std::to_string(g.order()) +
                        ") exceeds --oracle-bound " + std::to_string(a.oracle_bound));
  }
  Report r(out);
  out << "verify " << g.name() << " level " << a.level << "\n";
  if (g.is_cyclic()) {
    fast_cyclic(r, g);
  } else {
    fast_elem2(r, g);
  }
  if (a.level == "oracle") oracle_checks(r, g, a.oracle_bound);
  return r.finish();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Paramedial quasigroups affine over Z_{p^k} and Z_p^2", "paramedial"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));

  const std::string group_help = "cyclic <p> <k> | elem2 <p>";

  CountArgs count_args;
  auto* count = app.add_subcommand("count", "Number of isomorphism classes");
  auto* order_opt = count->add_option("--order", count_args.order, "Quasigroup order n")->check(CLI::PositiveNumber);
  auto* count_group = count->add_option("--group", count_args.group, group_help)->expected(2, 3);
  order_opt->excludes(count_group);
  count->add_flag("--json", count_args.json, "Print a JSON object");

  EnumerateArgs enum_args;
  auto* enumerate = app.add_subcommand("enumerate", "Export class representatives");
  enumerate->add_option("--group", enum_args.group, group_help)->expected(2, 3)->required();
  enumerate->add_flag("--simple-only", enum_args.simple_only, "Only simple quasigroups");
  enumerate->add_option("--format", enum_args.format, "json, csv or tables")
      ->check(CLI::IsMember({"json", "csv", "tables"}))
      ->capture_default_str();
  enumerate->add_option("--out", enum_args.out, "Output file; also writes <out>.manifest.json");
  enumerate->add_option("--cache-dir", enum_args.cache_dir, std::string("Result cache (default $") + kCacheEnv + ")");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Run invariant checks");
  verify->add_option("--group", verify_args.group, group_help)->expected(2, 3)->required();
  verify->add_option("--level", verify_args.level, "fast or oracle")
      ->check(CLI::IsMember({"fast", "oracle"}))
      ->capture_default_str();
  verify->add_option("--oracle-bound", verify_args.oracle_bound, "Largest group order for the oracle level")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  std::vector<std::string> argv_storage{"paramedial"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_storage) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (count->parsed()) return cmd_count(count_args, out);
    if (enumerate->parsed()) return cmd_enumerate(enum_args, out);
    return cmd_verify(verify_args, out);
  } catch (const UnsupportedOrder& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const PreconditionViolation& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidModulus& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const BoundExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kResource;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kResource;
  }
}

}  // namespace paramedial::cli
