#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "upinv/action.hpp"
#include "upinv/constructions.hpp"
#include "upinv/errors.hpp"
#include "upinv/families.hpp"
#include "upinv/invariants.hpp"
#include "upinv/io.hpp"
#include "upinv/records.hpp"
#include "upinv/verdict.hpp"

namespace upinv::cli {

namespace {

using nlohmann::json;

constexpr const char* kCapEnv = "UPINV_CLOSURE_CAP";

struct Settings {
  std::string format = "text";
  std::string group_path;
  std::size_t cap = kDefaultClosureCap;
  bool cap_given = false;

  std::uint32_t degree = 0;
  std::uint32_t max_degree = 12;
  std::string poly;
  std::string polys;
  std::uint32_t n_max = 0;
  bool cross_check = false;

  std::int64_t p = 3;
  std::string output;
  std::string family;
  std::int64_t s = 0;
  std::vector<std::int64_t> c_list;
  std::vector<std::int64_t> b_list;

  bool record() const { return format == "record"; }
};

std::size_t closure_cap(const Settings& st) {
  if (st.cap_given) return st.cap;
  if (const char* env = std::getenv(kCapEnv)) {
    try {
      return static_cast<std::size_t>(std::stoull(env));
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidArgument, std::string(kCapEnv) + " is not a number");
    }
  }
  return kDefaultClosureCap;
}

MatrixGroup load_group(const Settings& st) { return parse_group_file(st.group_path, closure_cap(st)); }

json render_list(const std::vector<Polynomial>& polys) {
  json arr = json::array();
  for (const auto& f : polys) arr.push_back(render(f));
  return arr;
}

void cmd_order(const Settings& st, std::ostream& out) {
  const auto g = load_group(st);
  if (st.record()) {
    out << json{{"kind", "order"}, {"p", g.modulus().value()}, {"order", g.order()}}.dump() << '\n';
  } else {
    out << "order " << g.order() << '\n';
  }
}

void cmd_classify(const Settings& st, std::ostream& out) {
  const auto g = load_group(st);
  json rows = json::array();
  for (std::size_t i = 0; i < g.order(); ++i) {
    const auto& m = g.elements()[i];
    const auto cls = classify(m);
    rows.push_back({{"index", i},
                    {"matrix", to_string(m)},
                    {"type", to_string(cls.type)},
                    {"shape", to_string(cls.kind)},
                    {"element_order", element_order(m)}});
  }
  if (st.record()) {
    out << json{{"kind", "classification"}, {"p", g.modulus().value()}, {"elements", rows}}.dump() << '\n';
    return;
  }
  out << std::left << std::setw(6) << "#" << std::setw(28) << "matrix" << std::setw(21) << "type"
      << std::setw(15) << "shape" << "order\n";
  for (const auto& r : rows) {
    out << std::setw(6) << r["index"].get<std::size_t>() << std::setw(28) << r["matrix"].get<std::string>()
        << std::setw(21) << r["type"].get<std::string>() << std::setw(15) << r["shape"].get<std::string>()
        << r["element_order"].get<std::uint64_t>() << '\n';
  }
}

void cmd_invariants(const Settings& st, std::ostream& out) {
  const auto g = load_group(st);
  const auto basis = invariant_basis(g, st.degree);
  if (st.record()) {
    out << json{{"kind", "invariant_basis"},
                {"p", g.modulus().value()},
                {"degree", st.degree},
                {"dimension", basis.size()},
                {"basis", render_list(basis)}}
               .dump()
        << '\n';
    return;
  }
  out << "degree " << st.degree << " invariants: dimension " << basis.size() << '\n';
  for (const auto& f : basis) out << "  " << render(f) << '\n';
}

void cmd_hilbert(const Settings& st, std::ostream& out) {
  const auto g = load_group(st);
  const auto hf = hilbert_function(g, st.max_degree);
  if (st.record()) {
    out << to_record(hf) << '\n';
    return;
  }
  out << "dims";
  for (auto d : hf.dims) out << ' ' << d;
  out << '\n';
}

void cmd_norm(const Settings& st, std::ostream& out) {
  const auto g = load_group(st);
  const auto f = parse_poly(st.poly, g.modulus());
  const auto orb = orbit(g, f);
  const auto en = effective_norm(orb);
  if (st.record()) {
    out << json{{"kind", "effective_norm"},
                {"p", g.modulus().value()},
                {"input", render(f)},
                {"stabilizer_order", orb.stabilizer_order},
                {"orbit_size", orb.images.size()},
                {"degree", en.degree()},
                {"norm", render(en)}}
               .dump()
        << '\n';
    return;
  }
  out << "stabilizer order " << orb.stabilizer_order << ", orbit size " << orb.images.size() << '\n';
  out << "degree " << en.degree() << '\n';
  out << render(en) << '\n';
}

std::array<Polynomial, 3> three_polys(const std::string& list, PrimeModulus p) {
  auto polys = parse_poly_list(list, p);
  if (polys.size() != 3) throw Error(ErrorCode::InvalidArgument, "--polys needs exactly three polynomials");
  return {polys[0], polys[1], polys[2]};
}

void print_certificate(const HsopCertificate& cert, std::ostream& out) {
  static constexpr const char* names[3] = {"x", "y", "z"};
  out << "status " << to_string(cert.status) << '\n';
  out << "degrees " << cert.degrees[0] << ' ' << cert.degrees[1] << ' ' << cert.degrees[2] << " (product "
      << std::size_t{cert.degrees[0]} * cert.degrees[1] * cert.degrees[2] << ", |G| = " << cert.group_order
      << ")\n";
  for (std::size_t i = 0; i < 3; ++i) {
    out << names[i] << "^N in ideal: ";
    if (cert.power_exponents[i]) {
      out << "N = " << *cert.power_exponents[i] << '\n';
    } else {
      out << "no N <= " << cert.n_max << '\n';
    }
  }
  out << "degree product matches group order: " << (cert.degree_product_ok ? "yes" : "no") << '\n';
}

void cmd_certify(const Settings& st, std::ostream& out) {
  const auto g = load_group(st);
  const auto polys = three_polys(st.polys, g.modulus());
  const auto cert = hsop_check(g, polys, st.n_max ? std::optional<std::uint32_t>(st.n_max) : std::nullopt);
  if (st.record()) {
    out << to_record(cert, g.modulus()) << '\n';
  } else {
    print_certificate(cert, out);
  }
}

void print_falsifier(const FalsifierReport& r, std::ostream& out) {
  out << "group order " << r.group_order << ", checked up to degree " << r.max_degree << '\n';
  out << "dims";
  for (auto d : r.hf.dims) out << ' ' << d;
  out << '\n';
  for (const auto& c : r.candidates) {
    out << "  (" << c.degrees[0] << ", " << c.degrees[1] << ", " << c.degrees[2] << "): ";
    if (c.survives()) {
      out << "survives\n";
    } else {
      out << "mismatch at degree " << *c.first_mismatch << '\n';
    }
  }
  out << "verdict " << to_string(r.verdict) << '\n';
}

void cmd_falsify(const Settings& st, std::ostream& out) {
  const auto g = load_group(st);
  const auto report = hilbert_falsify(g, st.max_degree);
  if (st.record()) {
    out << to_record(report) << '\n';
  } else {
    print_falsifier(report, out);
  }
}

void cmd_verdict(const Settings& st, std::ostream& out) {
  const auto g = load_group(st);
  VerdictOptions opts;
  opts.cross_check = st.cross_check;
  opts.falsifier_degree = st.max_degree;
  if (!st.polys.empty()) opts.candidate_invariants = three_polys(st.polys, g.modulus());
  if (st.n_max) opts.hsop_n_max = st.n_max;
  const auto v = classify_polynomiality(g, opts);
  if (st.record()) {
    out << to_record(v, g.modulus()) << '\n';
    return;
  }
  out << "outcome " << to_string(v.outcome) << '\n';
  out << "rule " << to_string(v.rule) << '\n';
  out << "reason " << v.reason << '\n';
  const auto& pre = v.preconditions;
  out << "p " << pre.p << ", |G| " << pre.group_order << ", upper triangular "
      << (pre.upper_triangular ? "yes" : "no") << '\n';
  if (pre.unipotent_order) out << "|H| " << *pre.unipotent_order << '\n';
  if (pre.unipotent_abelian) out << "H abelian " << (*pre.unipotent_abelian ? "yes" : "no") << '\n';
  if (pre.transvection_count) out << "transvections in H " << *pre.transvection_count << '\n';
  if (pre.transvection_subgroup_order) out << "|<transvections>| " << *pre.transvection_subgroup_order << '\n';
  if (pre.pseudoreflection_subgroup_order) {
    out << "|<pseudoreflections>| " << *pre.pseudoreflection_subgroup_order << '\n';
  }
  if (v.falsifier) print_falsifier(*v.falsifier, out);
  if (v.certificate) print_certificate(*v.certificate, out);
  if (!v.evidence_consistent) out << "WARNING evidence contradicts the rule-based outcome\n";
}

void emit_group(const GroupFile& file, const MatrixGroup& g, const Settings& st, std::ostream& out,
                const std::vector<Polynomial>& invariants) {
  const std::string doc = write_group_document(file);
  if (!st.output.empty()) {
    std::ofstream f(st.output);
    if (!f) throw Error(ErrorCode::InvalidArgument, "cannot write " + st.output);
    f << doc;
  }
  if (st.record()) {
    json rec{{"kind", "group"}, {"group", json::parse(doc)}, {"order", g.order()}};
    if (!invariants.empty()) rec["invariants"] = render_list(invariants);
    out << rec.dump() << '\n';
    return;
  }
  if (st.output.empty()) out << doc;
  out << "order " << g.order() << '\n';
  if (!invariants.empty()) {
    out << "basic invariants\n";
    for (const auto& f : invariants) out << "  " << render(f) << '\n';
  }
}

void cmd_example(const Settings& st, std::ostream& out) {
  const PrimeModulus p(st.p);
  const auto g = MatrixGroup::closure(p, example_generators(p), closure_cap(st));
  emit_group(to_group_file(g, "dihedral-times-cyclic counterexample, p = " + std::to_string(st.p)), g, st, out, {});
}

void cmd_construct(const Settings& st, std::ostream& out) {
  const PrimeModulus p(st.p);
  std::string family = st.family;
  std::transform(family.begin(), family.end(), family.begin(), [](unsigned char ch) { return std::tolower(ch); });
  if (family == "a") {
    const auto g = construct_A(p, st.s, st.c_list);
    const auto inv = construct_A_invariants(p, st.s, st.c_list);
    emit_group(to_group_file(g, "A family"), g, st, out, {inv.begin(), inv.end()});
  } else if (family == "b") {
    const auto g = construct_B(p, st.b_list);
    const auto inv = construct_B_invariants(p, st.b_list);
    emit_group(to_group_file(g, "B family"), g, st, out, {inv.begin(), inv.end()});
  } else if (family == "b-sigma") {
    if (st.c_list.size() != 1) throw Error(ErrorCode::InvalidArgument, "b-sigma needs exactly one --c value");
    const auto g = construct_B_sigma(p, st.s, st.c_list[0], st.b_list);
    const auto inv = construct_B_sigma_invariants(p, st.s, st.c_list[0], st.b_list);
    emit_group(to_group_file(g, "<B, sigma> family"), g, st, out, {inv.begin(), inv.end()});
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown family " + st.family + " (expected a, b or b-sigma)");
  }
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Polynomiality of invariant rings for 3-dimensional upper-triangular groups over F_p"};
  app.name("upinv");
  app.require_subcommand(1);
  app.fallthrough();
  Settings st;

  app.add_option("--format", st.format, "Output format")
      ->check(CLI::IsMember({"text", "record"}))
      ->capture_default_str();
  auto* cap = app.add_option("--cap", st.cap, "Closure size limit (overrides $UPINV_CLOSURE_CAP)");

  auto group_opt = [&](CLI::App* sub) {
    sub->add_option("--group,-g", st.group_path, "Group file (JSON)")->required()->check(CLI::ExistingFile);
  };

  auto* order = app.add_subcommand("order", "Print the order of the closed group");
  group_opt(order);
  auto* classify_cmd = app.add_subcommand("classify", "Classify every group element");
  group_opt(classify_cmd);
  auto* invariants = app.add_subcommand("invariants", "Basis of the invariants of one degree");
  group_opt(invariants);
  invariants->add_option("--degree,-d", st.degree, "Degree")->required();
  auto* hilbert = app.add_subcommand("hilbert", "Dimensions of the graded invariant spaces");
  group_opt(hilbert);
  hilbert->add_option("--max-degree,-D", st.max_degree, "Largest degree")->required();
  auto* norm = app.add_subcommand("norm", "Effective norm of a polynomial");
  group_opt(norm);
  norm->add_option("--poly", st.poly, "Polynomial expression")->required();
  auto* certify = app.add_subcommand("certify", "Certify three invariants as an hsop");
  group_opt(certify);
  certify->add_option("--polys", st.polys, "f1,f2,f3")->required();
  certify->add_option("--nmax", st.n_max, "Largest power exponent to search (default d1+d2+d3)");
  auto* falsify = app.add_subcommand("falsify", "Rule out generator degree triples by the Hilbert function");
  group_opt(falsify);
  falsify->add_option("--max-degree,-D", st.max_degree, "Largest degree compared")->capture_default_str();
  auto* verdict = app.add_subcommand("verdict", "Decide polynomiality of the invariant ring");
  group_opt(verdict);
  verdict->add_flag("--cross-check", st.cross_check, "Attach Hilbert falsifier evidence");
  verdict->add_option("--max-degree,-D", st.max_degree, "Falsifier degree for --cross-check")->capture_default_str();
  verdict->add_option("--polys", st.polys, "Candidate basic invariants f1,f2,f3 to certify");
  verdict->add_option("--nmax", st.n_max, "Power exponent bound for --polys");
  auto* example = app.add_subcommand("example", "Build the dihedral-times-cyclic counterexample group");
  example->add_option("--p", st.p, "Odd prime")->required();
  example->add_option("--output,-o", st.output, "Write the group file here");
  auto* construct = app.add_subcommand("construct", "Build an A, B or <B,sigma> group with its basic invariants");
  construct->add_option("--family", st.family, "a | b | b-sigma")->required();
  construct->add_option("--p", st.p, "Odd prime")->required();
  construct->add_option("--s", st.s, "Superdiagonal sum s");
  construct->add_option("--c", st.c_list, "c values")->delimiter(',');
  construct->add_option("--b", st.b_list, "Corner entries")->delimiter(',');
  construct->add_option("--output,-o", st.output, "Write the group file here");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }
  st.cap_given = cap->count() > 0;

  try {
    if (order->parsed()) cmd_order(st, out);
    else if (classify_cmd->parsed()) cmd_classify(st, out);
    else if (invariants->parsed()) cmd_invariants(st, out);
    else if (hilbert->parsed()) cmd_hilbert(st, out);
    else if (norm->parsed()) cmd_norm(st, out);
    else if (certify->parsed()) cmd_certify(st, out);
    else if (falsify->parsed()) cmd_falsify(st, out);
    else if (verdict->parsed()) cmd_verdict(st, out);
    else if (example->parsed()) cmd_example(st, out);
    else if (construct->parsed()) cmd_construct(st, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace upinv::cli
