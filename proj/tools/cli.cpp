#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>

#include "tmc/curves.hpp"
#include "tmc/hausdorff.hpp"
#include "tmc/similarity.hpp"

namespace tmc::cli {

using nlohmann::json;

namespace {

const char* kInstructionHelp =
    "Instruction grammar: z@rot. z is a cyclotomic literal such as 1, -1/2, "
    "1 + 2*z(6,1) (z(m,e) is the root of unity exp(2 pi i e/m)); rot is e/m, 1, -1 or z(m,e). "
    "Omitting @rot means no turn.";

// %.9g keeps SVG and table output byte-stable
std::string fmt(double v) {
  if (v == 0) v = 0;  // no "-0"
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::string str(std::uint64_t v) { return std::to_string(v); }

std::optional<SequenceSpec> sequence_from_flags(const std::vector<std::uint64_t>& tm,
                                                const std::vector<std::uint64_t>& periodic,
                                                const std::vector<std::uint64_t>& dekking) {
  const int chosen = !tm.empty() + !periodic.empty() + !dekking.empty();
  if (chosen != 1) throw UsageError("choose exactly one of --tm, --periodic, --dekking");
  if (!tm.empty()) return SequenceSpec::thue_morse(tm[0]);
  if (!periodic.empty()) return SequenceSpec::periodic(periodic[0]);
  return SequenceSpec::dekking(dekking[0], dekking[1]);
}

TurtleCurve curve_from_flags(std::uint64_t p, const std::vector<std::string>& taus) {
  if (taus.size() != p)
    throw UsageError("a curve over t_" + str(p) + " needs " + str(p) + " instructions, got " + str(taus.size()));
  std::vector<GroupElement> images;
  for (const auto& t : taus) images.push_back(parse_instruction(t));
  return thue_morse_curve(p, std::move(images));
}

// --tau0/--tau1 or a repeated --tau, never both
std::vector<std::string> collect_taus(const std::string& tau0, const std::string& tau1,
                                      const std::vector<std::string>& tau) {
  if (!tau.empty()) {
    if (!tau0.empty() || !tau1.empty()) throw UsageError("use either --tau0/--tau1 or --tau, not both");
    return tau;
  }
  if (tau0.empty() || tau1.empty()) throw UsageError("missing --tau0/--tau1");
  return {tau0, tau1};
}

void write_svg(std::ostream& os, const std::vector<std::complex<double>>& pts, double scale) {
  double min_x = 0, max_x = 0, min_y = 0, max_y = 0;  // the origin is always drawn
  for (const auto& z : pts) {
    min_x = std::min(min_x, z.real() * scale);
    max_x = std::max(max_x, z.real() * scale);
    min_y = std::min(min_y, -z.imag() * scale);
    max_y = std::max(max_y, -z.imag() * scale);
  }
  const double margin = 10;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fmt(min_x - margin) << ' '
     << fmt(min_y - margin) << ' ' << fmt(max_x - min_x + 2 * margin) << ' ' << fmt(max_y - min_y + 2 * margin)
     << "\">\n";
  os << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"1\" stroke-linejoin=\"round\" points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) os << ' ';
    os << fmt(pts[i].real() * scale) << ',' << fmt(-pts[i].imag() * scale);
  }
  os << "\"/>\n";
  os << "<circle cx=\"0\" cy=\"0\" r=\"3\" fill=\"red\"/>\n";
  os << "</svg>\n";
}

json report_json(const WitnessReport& r) {
  json j{{"passed", r.passed}, {"depth", r.depth}};
  j["first_failure"] = r.first_failure ? json(*r.first_failure) : json(nullptr);
  return j;
}

std::string report_text(const WitnessReport& r) {
  if (r.passed) return "PASS (n <= " + str(r.depth) + ")";
  return "FAIL at n = " + str(*r.first_failure);
}

std::string modulus_text(const ModulusInterval& m) {
  return "[" + fmt(m.lower.get_d()) + ", " + fmt(m.upper.get_d()) + "]";
}

int cmd_seq(const SequenceSpec& spec, std::uint64_t len, const std::string& format, std::ostream& out) {
  const bool product = spec.kind == SequenceSpec::Kind::dekking;
  if (format == "json") {
    json arr = json::array();
    for (std::uint64_t n = 0; n < len; ++n) {
      const Symbol s = spec.at(n);
      arr.push_back(product ? json(spec.format_symbol(s)) : json(s));
    }
    out << arr.dump() << '\n';
    return kOk;
  }
  for (std::uint64_t n = 0; n < len; ++n) {
    if (n) out << ',';
    const std::string sym = spec.format_symbol(spec.at(n));
    out << (product ? "\"" + sym + "\"" : sym);
  }
  out << '\n';
  return kOk;
}

int cmd_render(const TurtleCurve& curve, std::uint64_t steps, double scale, const std::string& path,
               std::ostream& out) {
  if (steps == 0) throw UsageError("--steps must be at least 1");
  if (steps > segment_cap_from_env())
    throw UsageError("--steps " + str(steps) + " exceeds the segment cap " + str(segment_cap_from_env()));
  if (!(scale > 0)) throw UsageError("--scale must be positive");
  const SegmentSet set = polyline(curve, steps);
  std::vector<std::complex<double>> pts{set.segments.front().a};
  for (const Segment& s : set.segments) pts.push_back(s.b);
  if (path.empty()) {
    write_svg(out, pts, scale);
  } else {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw UsageError("cannot open " + path + " for writing");
    write_svg(file, pts, scale);
  }
  return kOk;
}

int cmd_verify(const TurtleCurve& curve, std::uint64_t depth, const std::string& format, std::ostream& out) {
  const MainResultCertificate cert = certify_main_result(curve, depth);
  const DekkingCurve& mid = cert.intermediate;
  const std::string t_name = "T", b_name = "B", r_name = cert.target.name();
  const std::vector<std::pair<std::string, std::string>> names{
      {t_name, b_name}, {b_name, mid.name()}, {mid.name(), r_name}};

  if (format == "json") {
    json j;
    j["curve"] = curve.describe();
    j["b"] = cert.b;
    j["q"] = cert.q;
    j["k2"] = cert.k2;
    j["d"] = cert.d;
    j["k1"] = cert.k1;
    j["c0"] = cert.c0.to_string();
    j["c1"] = cert.c1.to_string();
    j["intermediate"] = mid.name();
    j["target"] = {{"name", r_name},
                   {"r", cert.target_scaling.r.to_string()},
                   {"r_norm", cert.target_scaling.r_norm.to_string()},
                   {"modulus", {cert.target_scaling.modulus.lower.get_d(), cert.target_scaling.modulus.upper.get_d()}},
                   {"regular", cert.target_scaling.regular}};
    json chain = json::array();
    for (std::size_t i = 0; i < cert.chain.size(); ++i)
      chain.push_back({{"lhs", names[i].first},
                       {"rhs", names[i].second},
                       {"c", cert.chain[i].c.to_string()},
                       {"k1", cert.chain[i].k1},
                       {"k2", cert.chain[i].k2},
                       {"report", report_json(cert.reports[i])}});
    j["chain"] = chain;
    j["composite"] = {{"c", cert.composite->c.to_string()},
                      {"k1", cert.composite->k1},
                      {"k2", cert.composite->k2},
                      {"report", report_json(cert.composite_report)}};
    j["koch"] = cert.koch;
    j["verified"] = cert.verified();
    out << j.dump(2) << '\n';
  } else {
    out << "curve:        " << curve.describe() << '\n';
    out << "heading:      alpha_T(phi(0)) = z(" << str(cert.q << cert.b) << "," << cert.k2 << ")  b=" << cert.b
        << " q=" << cert.q << " k2=" << cert.k2 << '\n';
    out << "blocks:       c0 = " << cert.c0.to_string() << ", c1 = " << cert.c1.to_string() << '\n';
    out << "target:       " << r_name << " with k1 = 2^" << cert.d << " * " << cert.k2 << " mod " << cert.q << " = "
        << cert.k1 << ", r = " << cert.target_scaling.r.to_string() << ", |r| in "
        << modulus_text(cert.target_scaling.modulus) << (cert.target_scaling.regular ? ", regular" : ", NOT regular")
        << '\n';
    for (std::size_t i = 0; i < cert.chain.size(); ++i) {
      const auto& w = cert.chain[i];
      out << names[i].first << " ~ " << names[i].second << ": c = " << w.c.to_string() << ", strides (" << w.k1
          << ", " << w.k2 << ")  " << report_text(cert.reports[i]) << '\n';
    }
    out << "T ~ " << r_name << " (composite): c = " << cert.composite->c.to_string() << ", strides ("
        << cert.composite->k1 << ", " << cert.composite->k2 << ")  " << report_text(cert.composite_report) << '\n';
    out << "koch:         " << (cert.koch ? "yes" : "no") << '\n';
    out << "verified:     " << (cert.verified() ? "yes" : "no") << '\n';
  }
  return cert.verified() ? kOk : kCounterexample;
}

int cmd_converge(const DekkingCurve& curve, std::uint64_t n_max, double resolution, bool against_koch,
                 const std::string& format, std::ostream& out) {
  if (!curve.coprime())
    throw UsageError(curve.name() + ": gcd(p, q) != 1, no scaling factor is defined");
  if (n_max == 0) throw UsageError("--n must be at least 1");
  if (!(resolution > 0)) throw UsageError("--resolution must be positive");
  if (against_koch && !(curve == DekkingCurve(2, 3, 1)))
    throw UsageError("--against-koch is only meaningful for D_{2,3,1}");
  const ScalingInfo info = scaling_info(curve);
  if (!info.regular)
    throw UsageError(curve.name() + " is not regular: |r| in " + modulus_text(info.modulus));

  ConvergenceOptions options;
  options.resolution = resolution;
  options.against_koch = against_koch;
  options.segment_cap = segment_cap_from_env();
  const auto rows = convergence_report(curve, n_max, options);

  bool ok = true;
  for (const auto& row : rows) {
    ok = ok && row.within_bound;
    if (row.koch) ok = ok && row.koch->value <= row.koch->error;
  }
  if (format == "json") {
    json arr = json::array();
    for (const auto& row : rows) {
      json j{{"n", row.n},
             {"step_distance", row.step_distance.value},
             {"error", row.step_distance.error},
             {"bound", row.bound},
             {"tail_bound", row.tail_bound},
             {"within_bound", row.within_bound}};
      if (row.koch) j["koch"] = {{"distance", row.koch->value}, {"error", row.koch->error}};
      arr.push_back(j);
    }
    out << json{{"curve", curve.name()}, {"Q", info.big_q}, {"r", info.r.to_string()}, {"rows", arr}}.dump(2)
        << '\n';
  } else {
    out << "n,step_distance,error,bound,tail_bound,within_bound" << (against_koch ? ",koch_distance,koch_error" : "")
        << '\n';
    for (const auto& row : rows) {
      out << row.n << ',' << fmt(row.step_distance.value) << ',' << fmt(row.step_distance.error) << ','
          << fmt(row.bound) << ',' << fmt(row.tail_bound) << ',' << (row.within_bound ? "true" : "false");
      if (row.koch) out << ',' << fmt(row.koch->value) << ',' << fmt(row.koch->error);
      out << '\n';
    }
  }
  return ok ? kOk : kCounterexample;
}

}  // namespace

RootOfUnity parse_rotation(const std::string& text) {
  if (text.find('z') == std::string::npos && text.find('/') != std::string::npos) {
    const auto slash = text.find('/');
    try {
      std::size_t used = 0;
      const std::int64_t e = std::stoll(text.substr(0, slash), &used);
      if (used != slash) throw std::invalid_argument("");
      const std::string m_text = text.substr(slash + 1);
      const std::int64_t m = std::stoll(m_text, &used);
      if (used != m_text.size() || m <= 0) throw std::invalid_argument("");
      return RootOfUnity(static_cast<std::uint64_t>(m), e);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed rotation '" + text + "', expected e/m");
    }
  }
  const auto u = parse_cyc(text).as_root_of_unity();
  if (!u) throw std::invalid_argument("rotation '" + text + "' is not a root of unity");
  return *u;
}

GroupElement parse_instruction(const std::string& text) {
  const auto at = text.find('@');
  if (at == std::string::npos) return {parse_cyc(text), RootOfUnity::one()};
  if (text.find('@', at + 1) != std::string::npos) throw std::invalid_argument("instruction '" + text + "' has two '@'");
  return {parse_cyc(text.substr(0, at)), parse_rotation(text.substr(at + 1))};
}

std::uint64_t segment_cap_from_env() {
  const char* raw = std::getenv("TMC_SEGMENT_CAP");
  if (!raw || !*raw) return kDefaultSegmentCap;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (*end != '\0' || v == 0) throw std::invalid_argument(std::string("TMC_SEGMENT_CAP must be a positive integer, got ") + raw);
  return v;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Thue-Morse turtle curves, Dekking curves and their limit curves", "tmcurve"};
  app.require_subcommand(1);
  app.footer("Exit codes: 0 ok, 1 counterexample or bound violation, 2 invalid input.");

  std::vector<std::uint64_t> tm, periodic, dekking2, dekking3;
  std::uint64_t len = 32, steps = 256, depth = 1000, n_max = 6;
  std::uint64_t tm_p = 0;
  double scale = 10, resolution = 1e-3;
  std::string format, out_path, tau0, tau1;
  std::vector<std::string> tau;
  bool against_koch = false;

  auto* seq = app.add_subcommand("seq", "print a prefix of t_p, f_q or z_{p,q}");
  seq->add_option("--tm", tm, "t_p with p symbols")->expected(1);
  seq->add_option("--periodic", periodic, "f_q(n) = n mod q")->expected(1);
  seq->add_option("--dekking", dekking2, "z_{p,q}")->expected(2);
  seq->add_option("--len", len, "number of symbols")->capture_default_str();
  seq->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  auto* render = app.add_subcommand("render", "draw a curve prefix as SVG");
  render->footer(kInstructionHelp);
  render->add_option("--dekking", dekking3, "D_{p,q,k}")->expected(3);
  render->add_option("--tm", tm_p, "Thue-Morse curve over t_p");
  render->add_option("--tau0", tau0, "instruction for symbol 0");
  render->add_option("--tau1", tau1, "instruction for symbol 1");
  render->add_option("--tau", tau, "instructions for symbols 0, 1, ... in order (repeatable)");
  render->add_option("--steps", steps, "number of steps")->capture_default_str();
  render->add_option("--scale", scale, "SVG units per unit length")->capture_default_str();
  render->add_option("--out", out_path, "output file (default: stdout)");

  auto* verify = app.add_subcommand("verify", "certify the chain T ~ B ~ D ~ R for a curve over t_2");
  verify->footer(kInstructionHelp);
  verify->add_option("--tau0", tau0, "instruction for symbol 0")->required();
  verify->add_option("--tau1", tau1, "instruction for symbol 1")->required();
  verify->add_option("--depth", depth, "check every witness for n <= depth")->capture_default_str();
  verify->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* converge = app.add_subcommand("converge", "Hausdorff distances between consecutive scaled prefixes");
  converge->add_option("--dekking", dekking3, "D_{p,q,k}")->expected(3)->required();
  converge->add_option("--n", n_max, "number of levels")->capture_default_str();
  converge->add_option("--resolution", resolution, "sampling resolution")->capture_default_str();
  converge->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  converge->add_flag("--against-koch", against_koch, "compare S_n with the level-n Koch polyline");

  std::vector<std::string> argv_store{"tmcurve"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "tmcurve: " << e.what() << '\n';
    return kInvalidInput;
  }

  try {
    if (seq->parsed()) {
      const auto spec = sequence_from_flags(tm, periodic, dekking2);
      return cmd_seq(*spec, len, format.empty() ? "csv" : format, out);
    }
    if (render->parsed()) {
      if (!dekking3.empty() == (tm_p != 0)) throw UsageError("choose exactly one of --dekking and --tm");
      if (!dekking3.empty()) {
        const DekkingCurve d(dekking3[0], dekking3[1], static_cast<std::int64_t>(dekking3[2]));
        return cmd_render(d.as_turtle(), steps, scale, out_path, out);
      }
      return cmd_render(curve_from_flags(tm_p, collect_taus(tau0, tau1, tau)), steps, scale, out_path, out);
    }
    if (verify->parsed())
      return cmd_verify(curve_from_flags(2, {tau0, tau1}), depth, format.empty() ? "text" : format, out);
    if (converge->parsed()) {
      const DekkingCurve d(dekking3[0], dekking3[1], static_cast<std::int64_t>(dekking3[2]));
      return cmd_converge(d, n_max, resolution, against_koch, format.empty() ? "csv" : format, out);
    }
  } catch (const HypothesisError& e) {
    err << "tmcurve: hypothesis violated: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::invalid_argument& e) {
    err << "tmcurve: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::length_error& e) {
    err << "tmcurve: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::overflow_error& e) {
    err << "tmcurve: " << e.what() << '\n';
    return kInvalidInput;
  }
  return kInvalidInput;
}

}  // namespace tmc::cli
