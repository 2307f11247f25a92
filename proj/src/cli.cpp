#include "cubewalk/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cubewalk/errors.hpp"
#include "cubewalk/table_fixtures.hpp"
#include "cubewalk/walk_oracle.hpp"

namespace cubewalk::cli {

namespace {

using nlohmann::json;

constexpr int kMaxDotDimension = 8;
constexpr Index kMaxFullSimulateOrder = 64;
constexpr int kEarlyGridPoints = 64;

std::string format_number(double x) {
  if (std::trunc(x) == x && std::abs(x) < 9007199254740992.0)
    return std::to_string(static_cast<long long>(x));
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

Index offset(Indexing indexing) { return indexing == Indexing::OneBased ? 1 : 0; }

const char* indexing_name(Indexing indexing) {
  return indexing == Indexing::OneBased ? "one-based" : "zero-based";
}

json number_json(double x) {
  if (std::trunc(x) == x && std::abs(x) < 9007199254740992.0) return static_cast<std::int64_t>(x);
  return x;
}

json vector_json(const Eigen::VectorXd& v, const std::optional<IntVector>& exact) {
  json arr = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i)
    arr.push_back(exact ? json((*exact)(i)) : number_json(v(i)));
  return arr;
}

json weights_json(const WeightVector& z) {
  return vector_json(z.values(), z.is_integral() ? std::optional<IntVector>(z.integers()) : std::nullopt);
}

json spectrum_json(const Spectrum& s) {
  return vector_json(s.values(), s.is_integral() ? std::optional<IntVector>(s.integers()) : std::nullopt);
}

std::string list_text(const Spectrum& s) {
  std::string out = "[";
  for (Index k = 0; k < s.size(); ++k) {
    if (k) out += ", ";
    out += s.is_integral() ? std::to_string(s.integers()(k)) : format_number(s[k]);
  }
  return out + "]";
}

/// Pairs at fidelity one: the transfer partition, or the diagonal when periodic.
std::vector<VertexPair> listed_pairs(const PstResult& r) {
  if (r.kind == PstKind::PerfectStateTransfer) return r.pairs;
  std::vector<VertexPair> out;
  for (Index u = 0; u < r.sigma.order(); ++u) out.push_back({u, u});
  return out;
}

std::string pairs_text(const std::vector<VertexPair>& pairs, Indexing indexing) {
  std::string out;
  const Index o = offset(indexing);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (i) out += ", ";
    out += "(" + std::to_string(pairs[i].u + o) + ", " + std::to_string(pairs[i].v + o) + ")";
  }
  return out;
}

json pairs_json(const std::vector<VertexPair>& pairs, Indexing indexing) {
  json arr = json::array();
  const Index o = offset(indexing);
  for (const auto& p : pairs) arr.push_back({p.u + o, p.v + o});
  return arr;
}

std::string kind_text(PstKind kind) {
  return kind == PstKind::Periodic ? "periodic with period dividing pi/2"
                                   : "perfect state transfer at time pi/2";
}

const WeightVector& weights_of(const JobSpec& spec) {
  if (!spec.weights) throw InputError("no weights given (use --input or --z)");
  return *spec.weights;
}

void write_result_json(json& doc, const PstResult& r, Indexing indexing) {
  doc["sigma"] = r.sigma.bits();
  doc["sigma_bits"] = r.sigma.to_string();
  doc["kind"] = to_string(r.kind);
  doc["time"] = kTransferTime;
  doc["pairs"] = pairs_json(listed_pairs(r), indexing);
}

json base_document(const JobSpec& spec, const WeightVector& z) {
  return json{{"indexing", indexing_name(spec.indexing)}, {"d", z.dimension()}, {"z", weights_json(z)}};
}

ExitCode run_eigs(const JobSpec& spec, std::ostream& out) {
  const WeightVector& z = weights_of(spec);
  const Spectrum s = eigenvalues_from_weights(z);
  const StructuralReport report = structural_report(z);
  if (spec.format == Format::Json) {
    json doc = base_document(spec, z);
    doc["eigenvalues"] = spectrum_json(s);
    json checks{{"loop_free", report.loop_free}, {"integral", report.integral}, {"trace", number_json(report.trace)}};
    if (report.eigenvalue_parity) checks["eigenvalue_parity"] = *report.eigenvalue_parity ? "odd" : "even";
    doc["checks"] = checks;
    out << doc.dump() << '\n';
    return ExitCode::Success;
  }
  out << "eigenvalues: " << list_text(s) << '\n';
  out << "loop-free: " << (report.loop_free ? "yes" : "no") << ", integral: " << (report.integral ? "yes" : "no");
  if (report.eigenvalue_parity) out << ", eigenvalues all " << (*report.eigenvalue_parity ? "odd" : "even");
  out << '\n';
  return ExitCode::Success;
}

ExitCode run_pst(const JobSpec& spec, std::ostream& out) {
  const WeightVector& z = weights_of(spec);
  const PstResult r = classify(z);
  if (spec.format == Format::Json) {
    json doc = base_document(spec, z);
    doc["eigenvalues"] = spectrum_json(eigenvalues_from_weights(z));
    write_result_json(doc, r, spec.indexing);
    out << doc.dump() << '\n';
    return ExitCode::Success;
  }
  out << "sigma = " << r.sigma.bits() << " (binary " << r.sigma.to_string() << ")\n";
  out << "kind: " << kind_text(r.kind) << '\n';
  out << "pairs (" << indexing_name(spec.indexing) << "): " << pairs_text(listed_pairs(r), spec.indexing) << '\n';
  return ExitCode::Success;
}

ExitCode run_simulate(const JobSpec& spec, std::ostream& out) {
  const WeightVector& z = weights_of(spec);
  const TransitionMatrix u = transition_spectral(z, spec.time);
  std::vector<VertexPair> pairs = spec.pairs;
  if (pairs.empty()) {
    if (u.size() > kMaxFullSimulateOrder)
      throw InputError("graph too large to print every entry; select entries with --pair");
    for (Index a = 0; a < u.size(); ++a)
      for (Index b = 0; b < u.size(); ++b) pairs.push_back({a, b});
  }
  for (const auto& p : pairs)
    if (p.u >= u.size() || p.v >= u.size())
      throw InputError("pair (" + std::to_string(p.u + offset(spec.indexing)) + ", " +
                       std::to_string(p.v + offset(spec.indexing)) + ") out of range");
  const Index o = offset(spec.indexing);
  if (spec.format == Format::Json) {
    json doc = base_document(spec, z);
    doc["time"] = spec.time;
    json arr = json::array();
    for (const auto& p : pairs) arr.push_back({{"u", p.u + o}, {"v", p.v + o}, {"fidelity", fidelity(u, p.u, p.v)}});
    doc["fidelities"] = arr;
    out << doc.dump() << '\n';
    return ExitCode::Success;
  }
  out << "time = " << std::setprecision(17) << spec.time << " (" << indexing_name(spec.indexing) << ")\n";
  out << std::setprecision(12) << std::fixed;
  for (const auto& p : pairs) out << "|U(t)[" << p.v + o << "][" << p.u + o << "]| = " << fidelity(u, p.u, p.v) << '\n';
  out.unsetf(std::ios::floatfield);
  return ExitCode::Success;
}

ExitCode run_verify(const JobSpec& spec, std::ostream& out) {
  const WeightVector& z = weights_of(spec);
  const PstResult computed = classify(z);
  std::vector<std::string> claim_failures;
  PstResult claimed = computed;
  if (spec.claim) {
    claimed = PstResult::from_sigma(GroupElement(spec.claim->sigma, z.dimension()));
    if (spec.claim->kind != claimed.kind) claim_failures.push_back("claimed kind contradicts claimed sigma");
    if (!spec.claim->pairs.empty()) {
      std::set<VertexPair> expected, given;
      for (auto p : listed_pairs(claimed)) expected.insert(p);
      for (auto p : spec.claim->pairs) given.insert({std::min(p.u, p.v), std::max(p.u, p.v)});
      if (expected != given) claim_failures.push_back("claimed pairs are not the partition induced by claimed sigma");
    }
    if (claimed.sigma != computed.sigma)
      claim_failures.push_back("claimed sigma " + std::to_string(spec.claim->sigma) + " differs from computed sigma " +
                               std::to_string(computed.sigma.bits()));
  }
  VerifyOptions options;
  options.use_taylor = z.dimension() <= kMaxTaylorDimension;
  VerificationReport report = verify_result(z, claimed, options);
  report.failures.insert(report.failures.end(), claim_failures.begin(), claim_failures.end());

  const Index o = offset(spec.indexing);
  if (spec.format == Format::Json) {
    json doc = base_document(spec, z);
    write_result_json(doc, claimed, spec.indexing);
    json fids = json::array();
    for (const auto& c : report.checks)
      fids.push_back({{"route", c.route}, {"u", c.u + o}, {"v", c.v + o}, {"fidelity", c.fidelity},
                      {"leakage", c.leakage}, {"passed", c.passed}});
    doc["fidelities"] = fids;
    doc["checks"] = {{"passed", report.passed()}, {"failures", report.failures}};
    if (report.route_discrepancy >= 0) doc["checks"]["route_discrepancy"] = report.route_discrepancy;
    out << doc.dump() << '\n';
  } else {
    out << "sigma = " << claimed.sigma.bits() << " (binary " << claimed.sigma.to_string() << "), "
        << kind_text(claimed.kind) << '\n';
    for (const auto& c : report.checks) {
      std::ostringstream line;
      line << "[" << c.route << "] (" << c.u + o << ", " << c.v + o << ") fidelity " << std::fixed
           << std::setprecision(12) << c.fidelity << " leakage " << std::scientific << std::setprecision(2)
           << c.leakage << ' ' << (c.passed ? "PASS" : "FAIL");
      out << line.str() << '\n';
    }
    if (report.route_discrepancy >= 0) out << "route discrepancy: " << report.route_discrepancy << '\n';
    for (const auto& f : report.failures) out << "failure: " << f << '\n';
    out << "verification " << (report.passed() ? "PASSED" : "FAILED") << '\n';
  }
  return report.passed() ? ExitCode::Success : ExitCode::Failure;
}

void write_dot(const WeightVector& z, Indexing indexing, std::ostream& out) {
  const Index o = offset(indexing);
  out << "graph cubelike_d" << z.dimension() << " {\n";
  for (Index u = 0; u < z.size(); ++u)
    out << "  " << u + o << " [label=\"" << GroupElement(u, z.dimension()).to_string() << "\"];\n";
  if (z[0] != 0.0)
    for (Index u = 0; u < z.size(); ++u)
      out << "  " << u + o << " -- " << u + o << " [label=\"" << format_number(z[0]) << "\"];\n";
  for (Index u = 0; u < z.size(); ++u)
    for (Index v = u + 1; v < z.size(); ++v)
      if (z[u ^ v] != 0.0)
        out << "  " << u + o << " -- " << v + o << " [label=\"" << format_number(z[u ^ v]) << "\"];\n";
  out << "}\n";
}

ExitCode run_export(const JobSpec& spec, std::ostream& out) {
  const WeightVector& z = weights_of(spec);
  if (z.dimension() > kMaxDotDimension)
    throw ResourceError("DOT export limited to dimension " + std::to_string(kMaxDotDimension));
  if (spec.dot_path.empty()) {
    write_dot(z, spec.indexing, out);
    return ExitCode::Success;
  }
  std::ofstream file(spec.dot_path);
  if (!file) throw InputError("cannot open " + spec.dot_path + " for writing");
  write_dot(z, spec.indexing, file);
  out << "wrote " << spec.dot_path << '\n';
  return ExitCode::Success;
}

ExitCode run_table_command(const JobSpec& spec, std::ostream& out) {
  const auto reports = run_table(true);
  bool all = true;
  if (spec.format == Format::Json) {
    json rows = json::array();
    for (const auto& r : reports) {
      all = all && r.passed();
      rows.push_back({{"row", r.id}, {"d", r.dimension}, {"eigenvalues_match", r.eigenvalues_match},
                      {"pairs_match", r.pairs_match}, {"oracle_passed", r.oracle_passed.value_or(false)},
                      {"early_max_fidelity", r.early_max_fidelity}, {"diffs", r.diffs},
                      {"passed", r.passed()}});
    }
    out << json{{"indexing", "one-based"}, {"rows", rows}, {"passed", all}}.dump() << '\n';
  } else {
    for (const auto& r : reports) {
      all = all && r.passed();
      out << "row " << r.id << " (d=" << r.dimension << "): eigenvalues " << (r.eigenvalues_match ? "ok" : "MISMATCH")
          << ", pairs " << (r.pairs_match ? "ok" : "MISMATCH") << ", oracle "
          << (r.oracle_passed ? (*r.oracle_passed ? "ok" : "FAILED") : "skipped") << " -> "
          << (r.passed() ? "PASS" : "FAIL") << '\n';
      for (const auto& d : r.diffs) out << "  " << d << '\n';
    }
    double early = 0.0;
    for (const auto& r : reports) early = std::max(early, r.early_max_fidelity);
    out << "observation: max claimed-pair fidelity on " << kEarlyGridPoints << " times in (0, pi/2) is "
        << std::setprecision(6) << early << (early < 1.0 - 1e-6 ? " (no earlier transfer)" : " (EARLIER TRANSFER SEEN)")
        << '\n';
  }
  return all ? ExitCode::Success : ExitCode::Failure;
}

WeightVector weights_from_json(const json& z) {
  if (!z.is_array()) throw InputError("\"z\" must be an array of numbers");
  bool all_integers = true;
  for (const auto& e : z) {
    if (!e.is_number()) throw InputError("\"z\" must contain only numbers");
    if (!e.is_number_integer()) all_integers = false;
  }
  if (z.empty()) throw InputError("\"z\" is empty");
  if (all_integers) {
    IntVector v(static_cast<Eigen::Index>(z.size()));
    for (std::size_t i = 0; i < z.size(); ++i) {
      if (z[i].is_number_unsigned() && z[i].get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX))
        throw InputError("weight out of int64 range");
      v(static_cast<Eigen::Index>(i)) = z[i].get<std::int64_t>();
    }
    return WeightVector(std::move(v));
  }
  Eigen::VectorXd v(static_cast<Eigen::Index>(z.size()));
  for (std::size_t i = 0; i < z.size(); ++i) v(static_cast<Eigen::Index>(i)) = z[i].get<double>();
  return WeightVector(v);
}

PstKind kind_from_string(const std::string& s) {
  if (s == "periodic") return PstKind::Periodic;
  if (s == "perfect_state_transfer") return PstKind::PerfectStateTransfer;
  throw InputError("unknown kind \"" + s + "\"");
}

VertexPair parse_pair(const std::string& text, Indexing indexing) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw InputError("pair \"" + text + "\" must look like U,V");
  auto parse_label = [&](std::string_view s) {
    long long value = 0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), value);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size())
      throw InputError("bad vertex label \"" + std::string(s) + "\"");
    value -= offset(indexing);
    if (value < 0) throw InputError("vertex label below the " + std::string(indexing_name(indexing)) + " range");
    return static_cast<Index>(value);
  };
  const std::string_view sv(text);
  return {parse_label(sv.substr(0, comma)), parse_label(sv.substr(comma + 1))};
}

}  // namespace

WeightVector parse_weights_csv(const std::string& text) {
  std::vector<std::string> fields;
  std::stringstream ss(text);
  for (std::string field; std::getline(ss, field, ',');) {
    field.erase(std::remove_if(field.begin(), field.end(), [](unsigned char c) { return std::isspace(c); }),
                field.end());
    fields.push_back(field);
  }
  if (fields.empty()) throw InputError("empty weight list");
  json arr = json::array();
  for (const auto& f : fields) {
    try {
      arr.push_back(json::parse(f));
    } catch (const json::parse_error&) {
      throw InputError("bad weight \"" + f + "\"");
    }
  }
  return weights_from_json(arr);
}

JobSpec parse_job_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("job document must be a JSON object");
  if (!doc.contains("z")) throw InputError("job document lacks \"z\"");
  JobSpec spec;
  spec.format = Format::Json;
  spec.indexing = Indexing::ZeroBased;
  spec.weights = weights_from_json(doc["z"]);
  if (doc.contains("d")) {
    if (!doc["d"].is_number_integer() || doc["d"].get<int>() != spec.weights->dimension())
      throw InputError("\"d\" does not match the length of \"z\"");
  }
  if (doc.contains("time")) {
    if (!doc["time"].is_number() || !std::isfinite(doc["time"].get<double>()))
      throw InputError("\"time\" must be a finite number");
    spec.time = doc["time"].get<double>();
  }
  if (doc.contains("indexing")) {
    const auto s = doc["indexing"].get<std::string>();
    if (s == "one-based") spec.indexing = Indexing::OneBased;
    else if (s != "zero-based") throw InputError("unknown indexing \"" + s + "\"");
  }
  if (doc.contains("sigma")) {
    if (!doc["sigma"].is_number_unsigned()) throw InputError("\"sigma\" must be a non-negative integer");
    Claim claim{doc["sigma"].get<Index>(), PstKind::Periodic, {}};
    claim.kind = doc.contains("kind") ? kind_from_string(doc["kind"].get<std::string>())
                                      : (claim.sigma ? PstKind::PerfectStateTransfer : PstKind::Periodic);
    if (doc.contains("pairs")) {
      const Index o = offset(spec.indexing);
      for (const auto& p : doc["pairs"]) {
        if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer())
          throw InputError("\"pairs\" must hold [u, v] integer pairs");
        const auto u = p[0].get<long long>() - o, v = p[1].get<long long>() - o;
        if (u < 0 || v < 0 || u >= spec.weights->size() || v >= spec.weights->size())
          throw InputError("claimed pair out of range");
        claim.pairs.push_back({static_cast<Index>(u), static_cast<Index>(v)});
      }
    }
    spec.claim = std::move(claim);
  }
  return spec;
}

ExitCode run(const JobSpec& spec, std::ostream& out, std::ostream& err) {
  try {
    switch (spec.command) {
      case Command::Eigs:
        return run_eigs(spec, out);
      case Command::Pst:
        return run_pst(spec, out);
      case Command::Simulate:
        return run_simulate(spec, out);
      case Command::Verify:
        return run_verify(spec, out);
      case Command::Export:
        return run_export(spec, out);
      case Command::Table:
        return run_table_command(spec, out);
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return ExitCode::Usage;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
    return ExitCode::Usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return ExitCode::Failure;
  }
  return ExitCode::Usage;
}

std::vector<TableRowReport> run_table(bool with_oracle) {
  std::vector<TableRowReport> reports;
  for (const TableRow& row : reference_table()) {
    TableRowReport rep;
    rep.id = row.id;
    const WeightVector z(to_int_vector(row.weights));
    rep.dimension = z.dimension();

    const Spectrum s = eigenvalues_from_weights(z);
    rep.eigenvalues_match = s.integers() == to_int_vector(row.eigenvalues);
    if (!rep.eigenvalues_match)
      rep.diffs.push_back("eigenvalues " + list_text(s) + " != " + list_text(Spectrum(to_int_vector(row.eigenvalues))));

    const PstResult r = classify(z);
    std::set<VertexPair> computed, expected;
    for (const auto& p : listed_pairs(r)) computed.insert({p.u + 1, p.v + 1});
    for (const auto& p : row.pairs_one_based) expected.insert({std::min(p.u, p.v), std::max(p.u, p.v)});
    rep.pairs_match = computed == expected;
    if (!rep.pairs_match)
      rep.diffs.push_back("pairs " + pairs_text(listed_pairs(r), Indexing::OneBased) + " != " +
                          pairs_text(row.pairs_one_based, Indexing::ZeroBased));

    if (with_oracle) {
      const VerificationReport v = verify_result(z, r);
      rep.oracle_passed = v.passed();
      for (const auto& f : v.failures) rep.diffs.push_back(f);
    }

    for (int m = 1; m <= kEarlyGridPoints; ++m) {
      const double t = kTransferTime * m / (kEarlyGridPoints + 1);
      const TransitionMatrix u = transition_spectral(z, t);
      for (const auto& p : listed_pairs(r)) rep.early_max_fidelity = std::max(rep.early_max_fidelity, fidelity(u, p.u, p.v));
    }
    reports.push_back(std::move(rep));
  }
  return reports;
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectra and perfect state transfer of weighted cubelike graphs"};
  app.require_subcommand(1, 1);

  std::string input_path, csv, dot_path;
  std::vector<std::string> pair_args;
  bool json_flag = false, one_based = false, zero_based = false;
  double time = kTransferTime;

  auto add_job_options = [&](CLI::App* sub) {
    sub->add_option("--input", input_path, "JSON job file {\"d\", \"z\", \"time\"?}; '-' reads stdin");
    sub->add_option("--z", csv, "comma-separated weights, e.g. 0,1,-7,-10");
    sub->add_flag("--json", json_flag, "machine-readable output (zero-based unless --one-based)");
    auto* ob = sub->add_flag("--one-based", one_based, "label vertices 1..n");
    sub->add_flag("--zero-based", zero_based, "label vertices 0..n-1")->excludes(ob);
  };

  auto* eigs = app.add_subcommand("eigs", "print the spectrum");
  auto* pst = app.add_subcommand("pst", "classify: perfect state transfer or periodic at pi/2");
  auto* simulate = app.add_subcommand("simulate", "print |U(t)| entries");
  auto* verify = app.add_subcommand("verify", "check the classification against U(pi/2)");
  auto* exportc = app.add_subcommand("export", "write the graph in DOT format");
  auto* table = app.add_subcommand("table", "reproduce the reference table");
  for (auto* sub : {eigs, pst, simulate, verify, exportc}) add_job_options(sub);
  CLI::Option* time_opt = simulate->add_option("--time", time, "walk time (default pi/2)");
  simulate->add_option("--pair", pair_args, "vertex pair U,V (repeatable)");
  exportc->add_option("--dot", dot_path, "output file (default stdout)");
  table->add_flag("--json", json_flag, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : static_cast<int>(ExitCode::Usage);
  }

  JobSpec spec;
  try {
    if (table->parsed()) {
      spec.command = Command::Table;
    } else {
      if (!input_path.empty() && !csv.empty()) throw InputError("use either --input or --z, not both");
      if (!input_path.empty()) {
        std::string text;
        if (input_path == "-") {
          text.assign(std::istreambuf_iterator<char>(std::cin), {});
        } else {
          std::ifstream file(input_path);
          if (!file) throw InputError("cannot read " + input_path);
          text.assign(std::istreambuf_iterator<char>(file), {});
        }
        spec = parse_job_json(text);
      } else if (!csv.empty()) {
        spec.weights = parse_weights_csv(csv);
      } else {
        throw InputError("no weights given (use --input or --z)");
      }
      spec.command = eigs->parsed() ? Command::Eigs
                     : pst->parsed() ? Command::Pst
                     : simulate->parsed() ? Command::Simulate
                     : verify->parsed() ? Command::Verify
                                        : Command::Export;
      if (time_opt->count() > 0) {
        if (!std::isfinite(time)) throw InputError("--time must be finite");
        spec.time = time;
      }
    }
    spec.format = spec.command == Command::Export ? Format::Dot : json_flag ? Format::Json : Format::Text;
    spec.indexing = one_based    ? Indexing::OneBased
                    : zero_based ? Indexing::ZeroBased
                    : spec.format == Format::Json ? Indexing::ZeroBased
                                                  : Indexing::OneBased;
    // A claim read from JSON carries its own labels; they were already mapped to zero-based.
    for (const auto& p : pair_args) spec.pairs.push_back(parse_pair(p, spec.indexing));
    spec.dot_path = dot_path;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::Usage);
  }
  return static_cast<int>(run(spec, out, err));
}

int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  return main(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace cubewalk::cli
