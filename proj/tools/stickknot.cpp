// stickknot: command-line front end for the stick-knot library.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "stickknot/stickknot.hpp"

#ifndef STICKKNOT_DATA_DIR
#define STICKKNOT_DATA_DIR "data"
#endif

namespace fs = std::filesystem;
using namespace stickknot;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInput = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  out << text;
}

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt_short(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string fmt_vec(Vec3 v) { return fmt_double(v.x) + "," + fmt_double(v.y) + "," + fmt_double(v.z); }

/// Ordered key/value report printed as aligned text plus a key=value block,
/// as key=value only, or as a two-line CSV.
class Report {
 public:
  void add(std::string key, std::string value) { rows_.emplace_back(std::move(key), std::move(value)); }
  void add(std::string key, const char* v) { add(std::move(key), std::string(v)); }
  void add(std::string key, bool v) { add(std::move(key), std::string(v ? "true" : "false")); }
  void add(std::string key, long long v) { add(std::move(key), std::to_string(v)); }
  void add(std::string key, double v) { add(std::move(key), fmt_double(v)); }

  void print(std::ostream& os, const std::string& format, const std::string& title) const {
    if (format == "csv") {
      for (std::size_t i = 0; i < rows_.size(); ++i) os << (i ? "," : "") << rows_[i].first;
      os << '\n';
      for (std::size_t i = 0; i < rows_.size(); ++i) os << (i ? "," : "") << csv_quote(rows_[i].second);
      os << '\n';
      return;
    }
    if (format == "text") {
      std::size_t w = 0;
      for (const auto& [k, v] : rows_) w = std::max(w, k.size());
      os << title << '\n';
      for (const auto& [k, v] : rows_) os << "  " << k << std::string(w - k.size() + 2, ' ') << v << '\n';
      os << '\n';
    }
    for (const auto& [k, v] : rows_) os << k << '=' << v << '\n';
  }

 private:
  static std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += (c == '"') ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
  }

  std::vector<std::pair<std::string, std::string>> rows_;
};

std::string data_dir(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("STICKKNOT_DATA_DIR")) return env;
  return STICKKNOT_DATA_DIR;
}

KnotTable load_knot_table(const std::string& dir) {
  return build_table(read_file((fs::path(dir) / "prime_knots_pd.txt").string()), 64);
}

std::string join_ids(const std::set<KnotId>& ids) {
  std::string s;
  for (const KnotId& k : ids) s += (s.empty() ? "" : ";") + k.str();
  return s.empty() ? "none" : s;
}

Vec3 parse_axis(const std::string& text) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) v.push_back(detail::parse_double(detail::trim(part), 1));
  if (v.size() != 3) throw InputError("--axis expects x,y,z");
  return {v[0], v[1], v[2]};
}

struct Options {
  std::string format = "text";
  std::string data;
  std::string file;
  std::string certificate;
  std::string axis = "0,0,1";
  std::string out;
  std::string out_dir;
  std::string table_action;
  std::string knot;
  std::uint64_t seed = 0;
  std::size_t n = 10;
  double radius = 2.0;
  std::size_t count = 1;
  std::size_t jobs = 1;
  std::size_t burn_in = 10000;
  std::size_t stride = 100;
  bool identify = false;
};

int cmd_certify(const Options& o) {
  const Polygon p = load_polygon(read_file(o.file));
  const EquilateralReport r = certify_equilateral(p);
  Report rep;
  rep.add("file", o.file);
  rep.add("n", static_cast<long long>(r.n));
  rep.add("mu", r.mu);
  rep.add("max_deviation", r.max_deviation);
  rep.add("threshold", r.threshold);
  rep.add("margin_exponent", r.margin_exponent);
  rep.add("certified", r.certified);
  rep.print(std::cout, o.format, "Millett-Rawdon equilateral certification");
  return r.certified ? kExitOk : kExitNegative;
}

int cmd_identify(const Options& o) {
  const Polygon p = load_polygon(read_file(o.file));
  const KnotTable table = load_knot_table(data_dir(o.data));
  const auto id = identify_polygon(p, table, o.seed == 0 ? 1 : o.seed, skein_budget_from_env());
  Report rep;
  rep.add("file", o.file);
  rep.add("axis", fmt_vec(id.axis.unit()));
  rep.add("crossings", static_cast<long long>(id.raw_crossings));
  rep.add("reduced_crossings", static_cast<long long>(id.reduced_crossings));
  rep.add("pd", format_pd(id.pd));
  rep.add("homfly", id.poly.to_string());
  rep.add("matches", join_ids(id.matches));
  rep.print(std::cout, o.format, "Knot identification");
  return id.matches.empty() ? kExitNegative : kExitOk;
}

int cmd_sb(const Options& o) {
  const Polygon p = load_polygon(read_file(o.file));
  const SbResult r = superbridge_number(p);
  Report rep;
  rep.add("file", o.file);
  rep.add("sb", static_cast<long long>(r.value));
  rep.add("witness", fmt_vec(r.witness_direction.unit()));
  rep.add("witness_maxima", static_cast<long long>(local_maxima_count(p, r.witness_direction)));
  rep.add("cells", static_cast<long long>(r.cell_count));
  rep.print(std::cout, o.format, "Superbridge number");
  return kExitOk;
}

int cmd_certify_sb(const Options& o) {
  const IntegerPolygon p = load_integer_polygon(read_file(o.file));
  Report rep;
  rep.add("file", o.file);
  rep.add("n", static_cast<long long>(p.size()));
  auto join = [](const std::vector<BigInt>& u) {
    std::string s;
    for (const BigInt& x : u) s += (s.empty() ? "" : ",") + x.str();
    return s;
  };
  if (!o.certificate.empty()) {
    const auto u = load_integer_vector(read_file(o.certificate));
    const bool ok = verify_gordan_certificate(p, u);
    rep.add("certificate", join(u));
    rep.add("verified", ok);
    rep.add("sb_below_half", ok);
    rep.print(std::cout, o.format, "Gordan certificate check");
    return ok ? kExitOk : kExitNegative;
  }
  const auto res = find_gordan_certificate(p);
  if (const auto* c = std::get_if<GordanCertificate>(&res)) {
    rep.add("branch", std::string("certificate"));
    rep.add("certificate", join(c->u));
    rep.add("verified", verify_gordan_certificate(p, c->u));
    rep.add("sb_below_half", true);
    rep.print(std::cout, o.format, "Gordan alternative");
    return kExitOk;
  }
  const auto& w = std::get<AlternationWitness>(res);
  rep.add("branch", std::string("alternation witness"));
  rep.add("witness", w.v[0].str() + "," + w.v[1].str() + "," + w.v[2].str());
  rep.add("verified", verify_alternation_witness(p, w.v));
  rep.add("sb_below_half", false);
  rep.print(std::cout, o.format, "Gordan alternative");
  return kExitNegative;
}

int cmd_sample(const Options& o) {
  struct Row {
    std::uint64_t seed;
    std::size_t index;
    std::string file;
    std::string knot;
    Polygon poly;
  };
  std::optional<KnotTable> table;
  if (o.identify) table = load_knot_table(data_dir(o.data));
  if (!o.out_dir.empty()) fs::create_directories(o.out_dir);
  const std::size_t jobs = std::max<std::size_t>(o.jobs, 1);
  std::vector<std::vector<Row>> rows(jobs);
  std::vector<std::string> errors(jobs);
  auto run = [&](std::size_t job) {
    try {
      SamplerConfig cfg;
      cfg.n = o.n;
      cfg.radius = o.radius;
      cfg.seed = o.seed + job;
      cfg.burn_in = o.burn_in;
      cfg.stride = o.stride;
      ConfinedSampler s(cfg);
      for (std::size_t k = 0; k < o.count; ++k) {
        Row r{cfg.seed, k, "", "", s.next()};
        if (table) {
          try {
            r.knot = join_ids(identify_polygon(r.poly, *table, cfg.seed ^ k, skein_budget_from_env()).matches);
          } catch (const BudgetError&) {
            r.knot = "over-budget";
          }
        }
        rows[job].push_back(std::move(r));
      }
    } catch (const std::exception& e) {
      errors[job] = e.what();
    }
  };
  std::vector<std::thread> threads;
  for (std::size_t j = 1; j < jobs; ++j) threads.emplace_back(run, j);
  run(0);
  for (auto& t : threads) t.join();
  for (const auto& e : errors)
    if (!e.empty()) throw DegenerateError(e);

  std::string manifest = "seed,index,n,radius,file" + std::string(o.identify ? ",knot" : "") + "\n";
  for (auto& job_rows : rows)
    for (Row& r : job_rows) {
      if (!o.out_dir.empty()) {
        const std::string name = "sample_s" + std::to_string(r.seed) + "_" + std::to_string(r.index) + ".txt";
        write_file(fs::path(o.out_dir) / name,
                   "# n=" + std::to_string(o.n) + " radius=" + fmt_short(o.radius) + " seed=" + std::to_string(r.seed) +
                       " index=" + std::to_string(r.index) + "\n" + format_polygon(r.poly));
        r.file = name;
      }
      manifest += std::to_string(r.seed) + "," + std::to_string(r.index) + "," + std::to_string(o.n) + "," + fmt_short(o.radius) + "," +
                  r.file + (o.identify ? "," + r.knot : "") + "\n";
    }
  if (!o.out_dir.empty()) write_file(fs::path(o.out_dir) / "manifest.csv", manifest);
  std::cout << manifest;
  return kExitOk;
}

int cmd_table(const Options& o) {
  const std::string path = (fs::path(data_dir(o.data)) / "bounds.csv").string();
  const BoundsTable t = load_table(read_file(path));
  if (o.table_action == "check") {
    const TableAudit a = audit_table(t);
    auto join = [](const std::vector<std::string>& v) {
      std::string s;
      for (const auto& x : v) s += (s.empty() ? "" : ";") + x;
      return s.empty() ? std::string("none") : s;
    };
    Report rep;
    rep.add("entries", static_cast<long long>(t.size()));
    rep.add("fixed_point", a.not_fixed_point.empty() && a.inconsistent.empty());
    rep.add("not_fixed_point", join(a.not_fixed_point));
    rep.add("inconsistent", join(a.inconsistent));
    rep.add("conjecture_failures", join(a.conjecture_fails));
    rep.add("max_sb_hi", static_cast<long long>(a.max_sb_hi));
    rep.add("consistent", a.ok());
    rep.print(std::cout, o.format, "Bounds table audit");
    return a.ok() ? kExitOk : kExitNegative;
  }
  if (o.table_action == "show") {
    if (o.knot.empty()) throw InputError("table show needs a knot name");
    const BoundsEntry& e = t.at(o.knot);
    auto iv = [](const Interval& i) { return i.lo == i.hi ? std::to_string(i.lo) : "[" + std::to_string(i.lo) + "," + std::to_string(i.hi) + "]"; };
    Report rep;
    rep.add("knot", e.knot);
    rep.add("cr", static_cast<long long>(e.crossing_number));
    rep.add("bridge", static_cast<long long>(e.bridge_index));
    rep.add("stick", iv(e.stick));
    rep.add("eqstick", iv(e.eqstick));
    rep.add("sb", iv(e.sb));
    rep.add("provenance", e.provenance);
    if (e.crossing_number >= 7) rep.add("conjecture_holds", check_conjecture(e.crossing_number, e.sb.hi));
    rep.print(std::cout, o.format, "Bounds for " + e.knot);
    return kExitOk;
  }
  throw InputError("table action must be check or show");
}

int cmd_render(const Options& o) {
  const Polygon p = load_polygon(read_file(o.file));
  const Direction requested(parse_axis(o.axis));
  const Direction axis = perturb_axis_until_generic(p, requested, o.seed == 0 ? 1 : o.seed);
  const std::string svg = render_svg(p, axis);
  if (o.out.empty()) {
    std::cout << svg;
  } else {
    write_file(o.out, svg);
    Report rep;
    rep.add("out", o.out);
    rep.add("axis", fmt_vec(axis.unit()));
    rep.add("crossings", static_cast<long long>(render_crossings(p, axis).size()));
    rep.add("writhe", static_cast<long long>(render_writhe(p, axis)));
    rep.print(std::cout, o.format, "Rendered diagram");
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certify, identify and analyze polygonal knots"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "kv", "csv"}));
  app.add_option("--data-dir", o.data, "Directory holding prime_knots_pd.txt and bounds.csv");

  auto* certify = app.add_subcommand("certify", "Millett-Rawdon equilateral certificate for a coordinate file");
  certify->add_option("file", o.file)->required();

  auto* identify = app.add_subcommand("identify", "Identify the knot type of a coordinate file");
  identify->add_option("file", o.file)->required();
  identify->add_option("--seed", o.seed, "Seed for axis choice");

  auto* sb = app.add_subcommand("sb", "Exact superbridge number of a coordinate file");
  sb->add_option("file", o.file)->required();

  auto* csb = app.add_subcommand("certify-sb", "Gordan certificate for an integer coordinate file");
  csb->add_option("file", o.file)->required();
  csb->add_option("--certificate", o.certificate, "Verify this vector instead of searching");

  auto* sample = app.add_subcommand("sample", "Random confined equilateral polygons");
  sample->add_option("--n", o.n, "Edge count")->required();
  sample->add_option("--radius", o.radius, "Confinement radius about the centroid")->required();
  sample->add_option("--seed", o.seed, "Chain seed (job k uses seed + k)")->required();
  sample->add_option("--count", o.count, "Samples per chain");
  sample->add_option("--out-dir", o.out_dir, "Write one coordinate file per sample and manifest.csv here");
  sample->add_option("--jobs", o.jobs, "Independent chains");
  sample->add_option("--burn-in", o.burn_in, "Proposals before the first sample");
  sample->add_option("--stride", o.stride, "Accepted moves between samples");
  sample->add_flag("--identify", o.identify, "Identify each sample's knot type");

  auto* table = app.add_subcommand("table", "Bounds table: check | show <knot>");
  table->add_option("action", o.table_action)->required()->check(CLI::IsMember({"check", "show"}));
  table->add_option("knot", o.knot);

  auto* render = app.add_subcommand("render", "SVG diagram of a coordinate file");
  render->add_option("file", o.file)->required();
  render->add_option("--axis", o.axis, "Viewing direction x,y,z");
  render->add_option("--out", o.out, "SVG output path");
  render->add_option("--seed", o.seed, "Seed for axis perturbation");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*certify) return cmd_certify(o);
    if (*identify) return cmd_identify(o);
    if (*sb) return cmd_sb(o);
    if (*csb) return cmd_certify_sb(o);
    if (*sample) return cmd_sample(o);
    if (*table) return cmd_table(o);
    if (*render) return cmd_render(o);
  } catch (const InconsistentDataError& e) {
    std::cerr << "stickknot: " << e.what() << '\n';
    return kExitNegative;
  } catch (const std::exception& e) {
    std::cerr << "stickknot: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
