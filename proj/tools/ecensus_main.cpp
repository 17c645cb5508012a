#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ecensus/bounds.hpp"
#include "ecensus/census2.hpp"
#include "ecensus/census3.hpp"
#include "ecensus/oracle.hpp"
#include "ecensus/ordinary.hpp"

namespace {

using ecensus::Int;
using ordered_json = nlohmann::ordered_json;

struct Options {
  int g = 2;
  std::vector<Int> cm;
  bool no_cm = false;
  std::vector<Int> pol;
  Int max_degree = 0;
  Int min_degree = 0;
  Int box = 3;
  int threads = 0;
  std::string format = "json";
  std::string out;
  bool with_basis = false;
};

void add_common_options(CLI::App* sub, Options& o, bool with_degree = true) {
  sub->add_option("--g", o.g, "dimension of the self product (2 or 3)")
      ->required()
      ->check(CLI::IsMember({2, 3}));
  sub->add_option("--cm", o.cm,
                  "CM parameters u,v,w of w*tau^2 + u*tau + v = 0")
      ->delimiter(',')
      ->expected(3);
  sub->add_flag("--no-cm", o.no_cm, "assume End(E) = Z (no complex multiplication)");
  sub->add_option("--pol", o.pol, "product polarization multipliers (g values)")
      ->delimiter(',')
      ->required();
  if (with_degree)
    sub->add_option("--max-degree", o.max_degree, "degree bound t")->required();
  sub->add_option("--threads", o.threads,
                  "worker threads (default: EC_CENSUS_THREADS or 1)");
  sub->add_option("--out", o.out, "write output to this path instead of stdout");
}

int resolve_threads(const Options& o) {
  if (o.threads > 0) return o.threads;
  if (const char* env = std::getenv("EC_CENSUS_THREADS")) {
    int n = std::atoi(env);
    if (n > 0) return n;
  }
  return 1;
}

// Throws InvalidCmError (caught in main) when --cm violates an invariant.
ecensus::CmMode resolve_mode(const Options& o) {
  if (o.no_cm == !o.cm.empty())
    throw ecensus::Error("exactly one of --cm and --no-cm must be given");
  if (o.no_cm) return ecensus::NoCm{};
  return ecensus::validate_cm(o.cm[0], o.cm[1], o.cm[2]);
}

ecensus::Polarization resolve_pol(const Options& o) {
  if (static_cast<int>(o.pol.size()) != o.g)
    throw ecensus::Error("--pol must list exactly g multipliers");
  return ecensus::Polarization(o.pol);
}

ordered_json params_json(const Options& o, const ecensus::CmMode& mode) {
  ordered_json j;
  j["g"] = o.g;
  if (o.no_cm) {
    j["cm"] = nullptr;
  } else {
    j["cm"] = o.cm;
    j["disc"] = std::get<ecensus::CmParams>(mode).disc;
  }
  j["no_cm"] = o.no_cm;
  j["pol"] = o.pol;
  return j;
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::fwrite(text.data(), 1, text.size(), stdout);
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw ecensus::Error("cannot open output file: " + o.out);
  f << text;
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", x);
  return buf;
}

// Uniform row view over the two censuses.
struct Row {
  ecensus::ClassTuple coords;
  Int degree;
  ecensus::CurveKind kind;
  std::optional<ecensus::LatticeBasis> basis;
};

std::vector<Row> collect_rows(const ecensus::CmMode& mode,
                              const ecensus::Polarization& pol, const Options& o,
                              Int t, int threads, bool with_basis) {
  std::vector<Row> rows;
  if (o.g == 2) {
    for (auto& r : ecensus::enumerate2(mode, pol, t, threads, with_basis))
      rows.push_back({r.cls.tuple(), r.degree, r.kind, std::move(r.basis)});
  } else {
    for (auto& r : ecensus::enumerate3(mode, pol, t, threads, with_basis))
      rows.push_back({r.cls.tuple(), r.degree, r.kind, std::move(r.basis)});
  }
  return rows;
}

const char* coord_header(int g) {
  return g == 2 ? "alpha,beta,gamma,eta"
                : "alpha,beta,gamma,delta,epsilon,zeta,eta,theta,iota";
}

int cmd_enumerate(const Options& o) {
  const auto mode = resolve_mode(o);
  const auto pol = resolve_pol(o);
  const auto rows =
      collect_rows(mode, pol, o, o.max_degree, resolve_threads(o), o.with_basis);

  if (o.format == "csv") {
    std::ostringstream csv;
    csv << coord_header(o.g) << ",degree,kind\n";
    for (const Row& r : rows) {
      for (Int c : r.coords) csv << c << ',';
      csv << r.degree << ',' << ecensus::kind_name(r.kind) << '\n';
    }
    emit(o, csv.str());
    return 0;
  }

  ordered_json j;
  j["params"] = params_json(o, mode);
  j["t"] = o.max_degree;
  j["count"] = rows.size();
  j["curves"] = ordered_json::array();
  for (const Row& r : rows) {
    ordered_json c;
    c["coords"] = r.coords;
    c["degree"] = r.degree;
    c["kind"] = ecensus::kind_name(r.kind);
    if (r.basis) {
      c["basis"] = {{"lambda", r.basis->first.flat()},
                    {"mu", r.basis->second.flat()}};
    }
    j["curves"].push_back(std::move(c));
  }
  emit(o, j.dump(2) + "\n");
  return 0;
}

int cmd_count(const Options& o) {
  const auto mode = resolve_mode(o);
  const auto pol = resolve_pol(o);
  const auto rows = collect_rows(mode, pol, o, o.max_degree, resolve_threads(o), false);
  emit(o, std::to_string(rows.size()) + "\n");
  return 0;
}

int cmd_sweep(const Options& o) {
  const auto mode = resolve_mode(o);
  const auto pol = resolve_pol(o);
  if (o.min_degree < 0 || o.min_degree > o.max_degree)
    throw ecensus::Error("need 0 <= --min-degree <= --max-degree");
  // One enumeration at the top degree serves every row: records(t) is a
  // prefix-by-degree of records(max t).
  const auto rows = collect_rows(mode, pol, o, o.max_degree, resolve_threads(o), false);

  std::ostringstream csv;
  csv << "t,count,ordinary,extraordinary,bound\n";
  for (Int t = o.min_degree; t <= o.max_degree; ++t) {
    Int count = 0, ordinary = 0;
    for (const Row& r : rows) {
      if (r.degree > t) continue;
      ++count;
      if (r.kind == ecensus::CurveKind::Ordinary) ++ordinary;
    }
    const double bound = o.g == 2 ? ecensus::census2_bound(mode, pol, t).value
                                  : ecensus::census3_bound(mode, pol, t).value;
    csv << t << ',' << count << ',' << ordinary << ',' << (count - ordinary) << ','
        << format_double(bound) << '\n';
  }
  emit(o, csv.str());
  return 0;
}

int cmd_bound(const Options& o) {
  const auto mode = resolve_mode(o);
  const auto pol = resolve_pol(o);
  const ecensus::BoundReport rep = o.g == 2
                                       ? ecensus::census2_bound(mode, pol, o.max_degree)
                                       : ecensus::census3_bound(mode, pol, o.max_degree);
  ordered_json j;
  j["params"] = params_json(o, mode);
  j["kind"] = rep.kind;
  j["constants"] = rep.constants;
  j["t"] = rep.t;
  j["value"] = rep.value;
  emit(o, j.dump(2) + "\n");
  return 0;
}

int cmd_verify(const Options& o) {
  const auto mode = resolve_mode(o);
  const auto pol = resolve_pol(o);
  if (o.no_cm) throw ecensus::Error("verify needs --cm (the oracle runs in CM mode)");
  const auto rep = ecensus::oracle_compare(std::get<ecensus::CmParams>(mode), o.g, pol,
                                           o.max_degree, o.box, resolve_threads(o));
  ordered_json j;
  j["params"] = params_json(o, mode);
  j["t"] = o.max_degree;
  j["box"] = o.box;
  j["oracle_count"] = rep.oracle_classes.size();
  j["census_count"] = rep.census_classes.size();
  j["missing_from_census"] = rep.missing_from_census;
  j["unwitnessed"] = rep.extra_in_census_unwitnessed;
  j["roundtrip_failures"] = rep.roundtrip_failures;
  j["ok"] = rep.passed();
  emit(o, j.dump(2) + "\n");
  return rep.passed() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact census of elliptic curves in E^2 and E^3 under a product polarization"};
  app.require_subcommand(1);
  Options o;

  CLI::App* enumerate = app.add_subcommand(
      "enumerate", "list all curves of degree <= t with class, degree and kind");
  add_common_options(enumerate, o);
  enumerate->add_option("--format", o.format, "json (default) or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  enumerate->add_flag("--with-basis", o.with_basis,
                      "include a reconstructed lattice basis per curve (json)");

  CLI::App* count = app.add_subcommand("count", "print N(t) only");
  add_common_options(count, o);

  CLI::App* sweep = app.add_subcommand(
      "sweep", "CSV table of t, N(t), ordinary/extra-ordinary split and bound");
  add_common_options(sweep, o);
  sweep->add_option("--min-degree", o.min_degree, "first t of the sweep (default 0)");

  CLI::App* bound = app.add_subcommand("bound", "evaluate the counting bound at t");
  add_common_options(bound, o);

  CLI::App* verify = app.add_subcommand(
      "verify", "compare the census against the brute-force lattice oracle");
  add_common_options(verify, o);
  verify->add_option("--box", o.box, "oracle box radius B (default 3)")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (app.got_subcommand(enumerate)) return cmd_enumerate(o);
    if (app.got_subcommand(count)) return cmd_count(o);
    if (app.got_subcommand(sweep)) return cmd_sweep(o);
    if (app.got_subcommand(bound)) return cmd_bound(o);
    if (app.got_subcommand(verify)) return cmd_verify(o);
  } catch (const ecensus::Error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  return 1;
}
