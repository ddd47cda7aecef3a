#include "tsharp/cli.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "tsharp/bounds.hpp"
#include "tsharp/error.hpp"
#include "tsharp/oracle.hpp"
#include "tsharp/serialize.hpp"
#include "tsharp/toeplitz.hpp"

namespace tsharp::cli {

namespace {

struct Options {
  std::string family;
  std::string phi;
  std::string phi_file;
  std::string g;
  std::string g_file;
  std::string format = "table";
  std::size_t order = kDefaultOrder;
  std::vector<std::string> quantities;
  std::string grid;
  std::optional<std::size_t> random;
  std::optional<std::size_t> spot;
  std::uint64_t seed = ScanConfig{}.seed;
  double tolerance = ScanConfig{}.tolerance;
  unsigned threads = 0;
  std::string dump_samples;
  std::string extremal_id;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Names given on the command line are usage errors, not data errors.
template <class F>
auto parse_arg(F&& parse, const std::string& text) {
  try {
    return parse(text);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Parse) throw;
    throw UsageError(e.what());
  }
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.emplace_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

double parse_number(const std::string& text) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw UsageError("not a number: '" + text + "'");
  return v;
}

std::string fmt(double v) {
  if (std::isnan(v)) return "n/a";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string fmt(cplx c) {
  if (c.imag() == 0.0) return fmt(c.real());
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g%+.12gi", c.real(), c.imag());
  return buf;
}

FamilySpec build_family(const Options& o, std::optional<FamilyKind> implied = std::nullopt) {
  const int sources = !o.phi.empty() + !o.phi_file.empty() + !o.g.empty() + !o.g_file.empty();
  if (sources != 1) throw UsageError("give exactly one of --phi, --phi-file, --g, --g-file");
  const bool base_source = !o.g.empty() || !o.g_file.empty();

  FamilyKind kind = base_source ? FamilyKind::CloseToConvex : FamilyKind::Starlike;
  if (implied) kind = *implied;
  if (!o.family.empty()) {
    const FamilyKind requested = parse_arg(parse_family, o.family);
    if (implied && requested != *implied)
      throw Error(ErrorKind::IncompatibleExtremal, "extremal '" + o.extremal_id + "' does not belong to --family " +
                                                       o.family);
    kind = requested;
  }
  if ((kind == FamilyKind::CloseToConvex) != base_source)
    throw UsageError(kind == FamilyKind::CloseToConvex ? "the ctc family takes --g or --g-file"
                                                       : "starlike/convex families take --phi or --phi-file");

  if (base_source) {
    if (!o.g.empty()) return FamilySpec::close_to_convex(base_named(o.g, o.order), o.g);
    return FamilySpec::close_to_convex(read_series_file(o.g_file), "custom(" + o.g_file + ")");
  }
  MindaGenerator phi = !o.phi.empty()
                           ? parse_phi(o.phi, o.order)
                           : make_generator(read_series_file(o.phi_file), "custom(" + o.phi_file + ")");
  return kind == FamilyKind::Starlike ? FamilySpec::starlike(std::move(phi)) : FamilySpec::convex(std::move(phi));
}

Json family_json(const FamilySpec& fam) {
  Json j{{"family", fam.label()}, {"kind", to_string(fam.kind)}};
  if (fam.generator) {
    j["B1"] = fam.generator->b1();
    j["B2"] = fam.generator->b2();
    j["B3"] = fam.generator->b3();
  } else {
    j["b2"] = Json::array({fam.b2().real(), fam.b2().imag()});
    j["b3"] = Json::array({fam.b3().real(), fam.b3().imag()});
  }
  return j;
}

void print_family_header(std::ostream& out, const FamilySpec& fam) {
  out << "family " << fam.label();
  if (fam.generator)
    out << "  B1=" << fmt(fam.generator->b1()) << " B2=" << fmt(fam.generator->b2())
        << " B3=" << fmt(fam.generator->b3());
  else
    out << "  b2=" << fmt(fam.b2()) << " b3=" << fmt(fam.b3());
  out << '\n';
}

std::string preconditions_text(const BoundReport& b) {
  std::string s;
  for (const auto& p : b.preconditions) {
    if (!s.empty()) s += "; ";
    s += p.name + (p.ok ? " [ok]" : " [FAILED]");
  }
  return s.empty() ? "-" : s;
}

void print_bounds_table(std::ostream& out, const std::vector<BoundReport>& bounds) {
  out << std::left << std::setw(9) << "quantity" << std::setw(7) << "side" << std::setw(18) << "value"
      << std::setw(34) << "case" << std::setw(16) << "mu/sigma" << std::setw(7) << "sharp" << std::setw(10)
      << "extremal"
      << "preconditions\n";
  for (const auto& b : bounds) {
    out << std::left << std::setw(9) << to_string(b.quantity) << std::setw(7) << to_string(b.side) << std::setw(18)
        << fmt(b.value) << std::setw(34) << b.case_label << std::setw(16)
        << (b.mu_or_sigma ? fmt(*b.mu_or_sigma) : std::string("-")) << std::setw(7) << (b.sharp ? "yes" : "no")
        << std::setw(10) << (b.extremal ? std::string(to_string(*b.extremal)) : std::string("-"))
        << preconditions_text(b) << '\n';
    if (!b.notes.empty()) out << "    note: " << b.notes << '\n';
  }
}

void print_bounds_csv(std::ostream& out, const std::vector<BoundReport>& bounds) {
  out << "quantity,side,value,case,mu_or_sigma,sharp,extremal,applicable\n";
  for (const auto& b : bounds) {
    char value[32] = "", mu[32] = "";
    if (b.applicable()) std::snprintf(value, sizeof value, "%.17g", b.value);
    if (b.mu_or_sigma) std::snprintf(mu, sizeof mu, "%.17g", *b.mu_or_sigma);
    out << to_string(b.quantity) << ',' << to_string(b.side) << ',' << value << ',' << b.case_label << ',' << mu
        << ',' << (b.sharp ? "true" : "false") << ','
        << (b.extremal ? std::string(to_string(*b.extremal)) : std::string()) << ','
        << (b.applicable() ? "true" : "false") << '\n';
  }
}

void check_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (format == a) return;
  throw UsageError("unsupported --format '" + format + "'");
}

int cmd_bounds(const Options& o, std::ostream& out) {
  check_format(o.format, {"json", "table", "csv"});
  const FamilySpec fam = build_family(o);
  std::vector<BoundReport> bounds = bounds_for(fam);
  if (!o.quantities.empty()) {
    std::vector<Quantity> wanted;
    for (const auto& q : o.quantities) wanted.push_back(parse_arg(parse_quantity, q));
    std::erase_if(bounds, [&](const BoundReport& b) {
      return std::find(wanted.begin(), wanted.end(), b.quantity) == wanted.end();
    });
  }

  if (o.format == "json") {
    Json j = family_json(fam);
    Json arr = Json::array();
    for (const auto& b : bounds) arr.push_back(bound_to_json(b));
    j["bounds"] = std::move(arr);
    out << j.dump(2) << '\n';
  } else if (o.format == "csv") {
    print_bounds_csv(out, bounds);
  } else {
    print_family_header(out, fam);
    print_bounds_table(out, bounds);
  }
  const bool any = std::any_of(bounds.begin(), bounds.end(), [](const BoundReport& b) { return b.applicable(); });
  return any ? kPass : kInapplicable;
}

ScanConfig scan_config(const Options& o) {
  ScanConfig cfg;
  if (!o.grid.empty()) {
    const auto parts = split(o.grid, ',');
    if (parts.size() != 3 && parts.size() != 4) throw UsageError("--grid takes p1,radius,phase[,p1_phase]");
    std::vector<std::size_t> n;
    for (const auto& p : parts) {
      const double v = parse_number(p);
      if (v < 0 || v != static_cast<double>(static_cast<std::size_t>(v))) throw UsageError("bad --grid entry '" + p + "'");
      n.push_back(static_cast<std::size_t>(v));
    }
    cfg.grid_p1 = n[0];
    cfg.grid_zeta_radius = n[1];
    cfg.grid_zeta_phase = n[2];
    if (n.size() == 4) cfg.grid_p1_phase = n[3];
  }
  if (o.random) cfg.random_samples = *o.random;
  if (o.spot) cfg.complex_spot_checks = *o.spot;
  cfg.seed = o.seed;
  cfg.tolerance = o.tolerance;
  cfg.threads = o.threads;
  return cfg;
}

int cmd_verify(const Options& o, std::ostream& out) {
  check_format(o.format, {"json", "table"});
  const FamilySpec fam = build_family(o);
  const ScanConfig cfg = scan_config(o);

  std::ofstream dump;
  SampleSink sink;
  if (!o.dump_samples.empty()) {
    dump.open(o.dump_samples);
    if (!dump) throw Error(ErrorKind::Io, "cannot write " + o.dump_samples);
    dump << "p1,re_zeta,im_zeta,re_a2,im_a2,re_a3,im_a3,det31,im_p1\n";
    sink = [&dump](const SampleRow& r) {
      char line[384];
      std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n",
                    r.point.p1.real(), r.point.zeta.real(), r.point.zeta.imag(), r.coeffs.a2.real(),
                    r.coeffs.a2.imag(), r.coeffs.a3.real(), r.coeffs.a3.imag(), r.det31, r.point.p1.imag());
      dump << line;
    };
  }

  const OracleReport rep = verify_family(fam, cfg, sink);
  if (dump.is_open() && !dump.flush()) throw Error(ErrorKind::Io, "failed writing " + o.dump_samples);

  if (o.format == "json") {
    out << report_to_json(rep, cfg).dump(2) << '\n';
  } else {
    print_family_header(out, fam);
    if (!rep.applicable) {
      out << "INAPPLICABLE: scan precondition failed\n";
      print_bounds_table(out, rep.bounds);
      return kInapplicable;
    }
    out << "samples " << rep.samples << ", violations " << rep.violation_count << '\n';
    for (const auto& s : rep.stats)
      out << "  " << std::left << std::setw(8) << to_string(s.quantity) << " min " << std::setw(18) << fmt(s.emp_min)
          << " at p1=" << fmt(s.argmin.p1) << " zeta=" << fmt(s.argmin.zeta) << "\n           max "
          << std::setw(18) << fmt(s.emp_max) << " at p1=" << fmt(s.argmax.p1) << " zeta=" << fmt(s.argmax.zeta)
          << '\n';
    print_bounds_table(out, rep.bounds);
    for (const auto& [k, v] : rep.empirical_gaps) out << "  empirical gap " << k << " = " << fmt(v) << '\n';
    for (const auto& [k, v] : rep.sharp_gaps) out << "  sharpness gap " << k << " = " << fmt(v) << '\n';
    out << (rep.pass() ? "PASS" : "FAIL") << '\n';
  }
  if (!rep.applicable) return kInapplicable;
  return rep.pass() ? kPass : kViolation;
}

int cmd_extremal(const Options& o, std::ostream& out) {
  check_format(o.format, {"json", "table"});
  const ExtremalId id = parse_arg(parse_extremal, o.extremal_id);
  Options opts = o;
  if (id == ExtremalId::F6 && opts.g.empty() && opts.g_file.empty() && opts.phi.empty() && opts.phi_file.empty())
    opts.g = "id";
  const FamilySpec fam = build_family(opts, extremal_family(id));
  const Series f = extremal(id, fam);
  const double t21 = det_t21(f[2]);
  const double t31 = det_t31(f[2], f[3]);
  const double t22 = abs_det_t22(f[2], f[3]);

  if (o.format == "json") {
    Json j = family_json(fam);
    j["extremal"] = to_string(id);
    j["coefficients"] = series_to_json(f);
    j["det_t21"] = t21;
    j["det_t31"] = t31;
    j["abs_det_t22"] = t22;
    out << j.dump(2) << '\n';
  } else {
    print_family_header(out, fam);
    out << "extremal " << to_string(id) << '\n';
    for (std::size_t k = 2; k <= std::min<std::size_t>(5, f.order()); ++k)
      out << "  a" << k << " = " << fmt(f[k]) << '\n';
    out << "  det T21  = " << fmt(t21) << '\n';
    out << "  det T31  = " << fmt(t31) << '\n';
    out << "  |det T22| = " << fmt(t22) << '\n';
  }
  return kPass;
}

int cmd_classes(const Options& o, std::ostream& out) {
  check_format(o.format, {"json", "table"});
  std::vector<std::pair<const RegistryEntry*, std::optional<MindaGenerator>>> gens;
  for (const auto& e : generator_registry()) {
    std::optional<MindaGenerator> g;
    if (e.param_names.empty()) g = phi_named(e.name, {}, o.order);
    gens.emplace_back(&e, std::move(g));
  }
  if (o.format == "json") {
    Json j{{"generators", Json::array()}, {"bases", Json::array()}};
    for (const auto& [e, g] : gens) {
      Json item{{"name", e->name}, {"params", e->param_names}, {"description", e->description}};
      if (g) item["B"] = Json::array({g->b1(), g->b2(), g->b3()});
      j["generators"].push_back(std::move(item));
    }
    for (const auto& b : base_registry()) {
      const Series s = base_named(b.name, o.order);
      j["bases"].push_back(Json{{"name", b.name}, {"description", b.description}, {"b2", s[2].real()}, {"b3", s[3].real()}});
    }
    out << j.dump(2) << '\n';
    return kPass;
  }
  out << "generators (--phi name[:params]):\n";
  for (const auto& [e, g] : gens) {
    std::string sig = e->name;
    if (!e->param_names.empty()) {
      sig += ':';
      for (std::size_t i = 0; i < e->param_names.size(); ++i) sig += (i ? "," : "") + e->param_names[i] + "=..";
    }
    out << "  " << std::left << std::setw(22) << sig << std::setw(46) << e->description;
    if (g) out << "B1=" << fmt(g->b1()) << " B2=" << fmt(g->b2()) << " B3=" << fmt(g->b3());
    out << '\n';
  }
  out << "  custom                --phi-file <json array of [re, im]>\n";
  out << "bases for the ctc family (--g name):\n";
  for (const auto& b : base_registry()) {
    const Series s = base_named(b.name, o.order);
    out << "  " << std::left << std::setw(22) << b.name << std::setw(46) << b.description << "b2=" << fmt(s[2])
        << " b3=" << fmt(s[3]) << '\n';
  }
  out << "  custom                --g-file <json array of [re, im]>\n";
  return kPass;
}

int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::Io: return kIoError;
    case ErrorKind::Parse: return kDataError;
    default: return kUsage;
  }
}

void add_source_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--family", o.family, "starlike | convex | ctc");
  cmd->add_option("--phi", o.phi, "generator, e.g. janowski:A=1,B=-1 or sin");
  cmd->add_option("--phi-file", o.phi_file, "generator series as JSON [[re, im], ...]");
  cmd->add_option("--g", o.g, "ctc base: f1-base | f2-base | f3-base | koebe | f4-base | id");
  cmd->add_option("--g-file", o.g_file, "ctc base series as JSON [[re, im], ...]");
  cmd->add_option("--order", o.order, "truncation order of the series")->check(CLI::Range(3, 64));
  cmd->add_option("--format", o.format, "json | table | csv");
}

}  // namespace

MindaGenerator parse_phi(std::string_view text, std::size_t order) {
  const auto colon = text.find(':');
  const std::string name(text.substr(0, colon));
  const auto& reg = generator_registry();
  const auto entry = std::find_if(reg.begin(), reg.end(), [&](const RegistryEntry& e) { return e.name == name; });
  if (entry == reg.end()) throw Error(ErrorKind::UnknownClass, "no generator named '" + name + "'");

  std::vector<double> params;
  if (colon != std::string_view::npos) {
    std::vector<std::optional<double>> slots(entry->param_names.size());
    std::size_t positional = 0;
    for (const auto& item : split(text.substr(colon + 1), ',')) {
      const auto eq = item.find('=');
      if (eq == std::string::npos) {
        if (positional >= slots.size()) throw Error(ErrorKind::BadParams, "too many parameters for " + name);
        slots[positional++] = parse_number(item);
        continue;
      }
      std::string key = lower(item.substr(0, eq));
      if (key == "alpha") key = "a";
      const auto it = std::find_if(entry->param_names.begin(), entry->param_names.end(),
                                   [&](const std::string& p) { return lower(p) == key; });
      if (it == entry->param_names.end())
        throw Error(ErrorKind::BadParams, name + " has no parameter '" + item.substr(0, eq) + "'");
      slots[static_cast<std::size_t>(it - entry->param_names.begin())] = parse_number(item.substr(eq + 1));
    }
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if (!slots[i]) throw Error(ErrorKind::BadParams, name + " is missing parameter " + entry->param_names[i]);
      params.push_back(*slots[i]);
    }
  }
  return phi_named(name, params, order);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sharp Hermitian-Toeplitz determinant bounds for starlike, convex and close-to-convex classes",
               "toeplitz_sharp"};
  app.require_subcommand(1);
  Options o;

  auto* bounds = app.add_subcommand("bounds", "closed-form bounds with case labels and preconditions");
  add_source_options(bounds, o);
  bounds->add_option("--quantity", o.quantities, "restrict to T21 | T31 | ABS_T22 (repeatable)");

  auto* verify = app.add_subcommand("verify", "scan the coefficient body and check every bound");
  add_source_options(verify, o);
  verify->add_option("--grid", o.grid, "p1,radius,phase[,p1_phase] grid counts (default 200,64,64,32)");
  verify->add_option("--random", o.random, "uniform random samples (default 1000000)");
  verify->add_option("--spot", o.spot, "complex-p1 spot checks (default 10000)");
  verify->add_option("--seed", o.seed, "master seed");
  verify->add_option("--tol", o.tolerance, "absolute tolerance");
  verify->add_option("--threads", o.threads, "worker threads (0 = auto)");
  verify->add_option("--dump-samples", o.dump_samples, "write every sample as CSV");

  auto* ext = app.add_subcommand("extremal", "coefficients and determinants of an extremal function");
  ext->add_option("id", o.extremal_id, "identity | f1 .. f7")->required();
  add_source_options(ext, o);

  auto* classes = app.add_subcommand("classes", "registry of generators and bases");
  classes->require_subcommand(1);
  auto* list = classes->add_subcommand("list", "list built-in generators and bases");
  list->add_option("--format", o.format, "json | table");
  list->add_option("--order", o.order, "truncation order")->check(CLI::Range(3, 64));

  std::vector<std::string> argv_rev(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (bounds->parsed()) return cmd_bounds(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (ext->parsed()) return cmd_extremal(o, out);
    if (list->parsed()) return cmd_classes(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  }
  return kUsage;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  return run(std::vector<std::string>(argv, argv + argc), out, err);
}

}  // namespace tsharp::cli
