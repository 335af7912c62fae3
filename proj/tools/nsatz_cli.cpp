#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "nsatz/certificate.hpp"
#include "nsatz/elimination.hpp"
#include "nsatz/errors.hpp"
#include "nsatz/hentzelt.hpp"
#include "nsatz/nullsatz.hpp"
#include "nsatz/parse.hpp"
#include "nsatz/uresolvent.hpp"

using json = nlohmann::json;
using namespace nsatz;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitParse = 2;
constexpr int kExitUnsupported = 3;
constexpr int kExitRetry = 4;

struct ParsedInput {
  Ideal ideal;
  std::optional<Poly> query;
};

std::string read_stream(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw domain_error("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string strip(const std::string& line) {
  std::string s = line;
  if (auto hash = s.find('#'); hash != std::string::npos) s.erase(hash);
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

ParsedInput read_input(const std::string& path) {
  std::istringstream in(read_stream(path));
  std::string line;
  CtxPtr ctx;
  std::vector<Poly> gens;
  std::optional<Poly> query;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string s = strip(line);
    if (s.empty()) continue;
    if (!ctx) {
      if (s.rfind("vars:", 0) != 0)
        throw parse_error("line " + std::to_string(lineno) +
                              ": expected a 'vars:' header line",
                          0);
      std::istringstream names(s.substr(5));
      std::vector<std::string> vars;
      std::string name;
      while (names >> name) vars.push_back(name);
      if (vars.empty())
        throw parse_error("line " + std::to_string(lineno) +
                              ": no variables declared",
                          0);
      ctx = make_ctx(vars);
      continue;
    }
    try {
      if (s[0] == '?') {
        if (query)
          throw parse_error("line " + std::to_string(lineno) +
                                ": duplicate query line",
                            0);
        query = parse(s.substr(1), ctx);
      } else {
        gens.push_back(parse(s, ctx));
      }
    } catch (const parse_error& e) {
      throw parse_error("line " + std::to_string(lineno) + ": " + e.what(),
                        e.pos);
    }
  }
  if (!ctx) throw parse_error("empty input: missing 'vars:' header", 0);
  if (gens.empty()) throw domain_error("input declares no generators");
  return ParsedInput{Ideal{ctx, std::move(gens)}, std::move(query)};
}

json error_json(const std::string& kind, const std::string& message) {
  json j;
  j["error"]["kind"] = kind;
  j["error"]["message"] = message;
  return j;
}

std::vector<std::string> poly_strings(const std::vector<Poly>& ps) {
  std::vector<std::string> out;
  out.reserve(ps.size());
  for (const auto& p : ps) out.push_back(p.str());
  return out;
}

json certificate_json(const Certificate& cert, const Ideal& ideal) {
  json j;
  j["kind"] = cert.kind == CertKind::Unit ? "unit" : "radical";
  j["rho"] = cert.rho;
  j["target"] = cert.target.str();
  j["cofactors"] = poly_strings(cert.cofactors);
  j["generators"] = poly_strings(ideal.gens);
  j["vars"] = ideal.ctx->names();
  j["verified"] = verify_certificate(cert, ideal);
  return j;
}

json chain_json(const ResolventChain& ch) {
  json j;
  j["attempts"] = ch.attempts;
  j["complete_resolvent"] = ch.complete_resolvent.str();
  j["partial_resolvents"] = poly_strings(ch.partial_resolvents);
  json stages = json::array();
  for (const auto& st : ch.steps) {
    json s;
    s["variable"] = ch.input.ctx->name(st.var);
    s["pass_through"] = st.pass_through;
    s["D"] = st.D.str();
    s["next_generators"] = poly_strings(st.next_gens);
    json cof = json::array();
    for (const auto& row : st.cofactors) cof.push_back(poly_strings(row));
    s["cofactors"] = cof;
    stages.push_back(std::move(s));
  }
  j["stages"] = stages;
  if (ch.resolvent_cofactors)
    j["resolvent_cofactors"] = poly_strings(*ch.resolvent_cofactors);
  return j;
}

void emit(const json& j, const std::string& text, const std::string& format) {
  if (format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

int cmd_resolvent(const ParsedInput& in, std::uint64_t seed,
                  const std::string& format) {
  ResolventChain ch = kronecker_resolvent(in.ideal, seed);
  json j = chain_json(ch);
  j["command"] = "resolvent";
  std::ostringstream text;
  text << "complete resolvent: " << ch.complete_resolvent.str() << "\n";
  text << "attempts: " << ch.attempts << "\n";
  emit(j, text.str(), format);
  return kExitOk;
}

int cmd_hentzelt(const ParsedInput& in, std::uint64_t seed,
                 const std::string& format) {
  HentzeltChain hc = hentzelt_chain(in.ideal, seed);
  json j;
  j["command"] = "hentzelt";
  j["zeros"] = hc.has_zeros();
  j["terminal"] = hc.has_zeros() ? "zero" : "unit";
  j["terminal_stage"] = hc.terminal_stage;
  j["attempts"] = hc.attempts;
  json stages = json::array();
  for (const auto& st : hc.stages) {
    json s;
    s["variable"] = hc.input.ctx->name(st.var);
    s["pass_through"] = st.pass_through;
    s["order"] = st.order;
    s["minors"] = poly_strings(st.minors);
    stages.push_back(std::move(s));
  }
  j["stages"] = stages;
  std::ostringstream text;
  text << "zeros: " << (hc.has_zeros() ? "yes" : "no") << "\n";
  for (std::size_t i = 0; i < hc.stages.size(); ++i) {
    text << "stage " << i << " minors:";
    for (const auto& m : hc.stages[i].minors) text << " [" << m.str() << "]";
    text << "\n";
  }
  emit(j, text.str(), format);
  return hc.has_zeros() ? kExitNegative : kExitOk;
}

int cmd_solve(const ParsedInput& in, std::uint64_t seed,
              const std::string& format) {
  UResolvent ur = u_resolvent(in.ideal, seed);
  json j;
  j["command"] = "solve";
  j["zero_dimensional"] = ur.zero_dimensional;
  j["resolvent"] = ur.resolvent.str();
  j["residual"] = ur.residual.str();
  j["notes"] = ur.notes;
  json points = json::array();
  for (const auto& p : extract_points(ur)) {
    json coords = json::array();
    for (const auto& c : p.coords) coords.push_back(c.str());
    points.push_back(std::move(coords));
  }
  j["points"] = points;
  std::ostringstream text;
  text << "zero dimensional: " << (ur.zero_dimensional ? "yes" : "no") << "\n";
  if (ur.zero_dimensional) {
    for (const auto& p : extract_points(ur)) {
      text << "point:";
      for (std::size_t i = 0; i < p.coords.size(); ++i)
        text << (i ? ", " : " ") << p.coords[i].str();
      text << "\n";
    }
    text << "residual: " << ur.residual.str() << "\n";
    for (const auto& n : ur.notes) text << "note: " << n << "\n";
  } else {
    text << "resolvent: " << ur.resolvent.str() << "\n";
  }
  if (!ur.zero_dimensional) {
    emit(j, text.str(), format);
    std::cerr << error_json("unsupported",
                            "positive-dimensional system: no point extraction")
                     .dump()
              << "\n";
    return kExitUnsupported;
  }
  emit(j, text.str(), format);
  return kExitOk;
}

int cmd_wnss(const ParsedInput& in, std::uint64_t seed,
             const std::string& format) {
  WeakNssResult r = weak_nss(in.ideal, seed);
  json j;
  j["command"] = "wnss";
  j["empty"] = r.empty;
  if (r.certificate) j["certificate"] = certificate_json(*r.certificate, in.ideal);
  std::ostringstream text;
  text << "empty: " << (r.empty ? "yes" : "no") << "\n";
  if (r.certificate) {
    text << "rho: " << r.certificate->rho << "\n";
    text << "certificate verified: "
         << (verify_certificate(*r.certificate, in.ideal) ? "true" : "false")
         << "\n";
  }
  emit(j, text.str(), format);
  return r.empty ? kExitOk : kExitNegative;
}

int cmd_radical(const ParsedInput& in, std::uint64_t seed, bool minimize,
                const std::string& format) {
  if (!in.query) throw domain_error("radical requires a '?' query line");
  RadicalMembership rm = radical_membership(*in.query, in.ideal, seed, minimize);
  json j;
  j["command"] = "radical";
  j["member"] = rm.member;
  j["query"] = in.query->str();
  if (rm.certificate)
    j["certificate"] = certificate_json(*rm.certificate, in.ideal);
  std::ostringstream text;
  text << "member: " << (rm.member ? "yes" : "no") << "\n";
  if (rm.certificate) {
    text << "rho: " << rm.certificate->rho << "\n";
    text << "certificate verified: "
         << (verify_certificate(*rm.certificate, in.ideal) ? "true" : "false")
         << "\n";
  }
  emit(j, text.str(), format);
  return rm.member ? kExitOk : kExitNegative;
}

int cmd_member(const ParsedInput& in, int cap, const std::string& format) {
  if (!in.query) throw domain_error("member requires a '?' query line");
  MembershipResult mr = ideal_membership_bounded(*in.query, in.ideal, cap);
  json j;
  j["command"] = "member";
  j["member"] = mr.member;
  j["cap"] = mr.cap;
  j["query"] = in.query->str();
  if (mr.certificate)
    j["certificate"] = certificate_json(*mr.certificate, in.ideal);
  std::ostringstream text;
  text << "member: " << (mr.member ? "yes" : "no") << "\n";
  text << "cap: " << mr.cap << "\n";
  emit(j, text.str(), format);
  return mr.member ? kExitOk : kExitNegative;
}

std::pair<int, int> parse_nu(const std::string& spec) {
  auto dots = spec.find("..");
  try {
    if (dots == std::string::npos) {
      int hi = std::stoi(spec);
      return {0, hi};
    }
    int lo = std::stoi(spec.substr(0, dots));
    int hi = std::stoi(spec.substr(dots + 2));
    if (lo > hi) throw domain_error("empty nu range: " + spec);
    return {lo, hi};
  } catch (const std::invalid_argument&) {
    throw domain_error("malformed nu range: " + spec);
  } catch (const std::out_of_range&) {
    throw domain_error("malformed nu range: " + spec);
  }
}

int cmd_hilbert(const ParsedInput& in, const std::string& nu_spec,
                const std::string& format) {
  auto [lo, hi] = parse_nu(nu_spec);
  json j;
  j["command"] = "hilbert";
  j["nu_from"] = lo;
  j["nu_to"] = hi;
  json values = json::array();
  std::ostringstream text;
  for (int nu = lo; nu <= hi; ++nu) {
    int h = hilbert_function(in.ideal, nu);
    values.push_back(h);
    text << "H(" << nu << ") = " << h << "\n";
  }
  j["values"] = values;
  emit(j, text.str(), format);
  return kExitOk;
}

int cmd_wpnss(const ParsedInput& in, std::uint64_t seed,
              const std::string& format) {
  WpnssResult w = weak_projective_nss(in.ideal, seed);
  json j;
  j["command"] = "wpnss";
  j["has_projective_zeros"] = w.has_projective_zeros;
  std::ostringstream text;
  text << "projective zeros: " << (w.has_projective_zeros ? "yes" : "no")
       << "\n";
  if (!w.has_projective_zeros) {
    j["exponent"] = w.exponent;
    text << "exponent: " << w.exponent << "\n";
    json pv = json::array();
    for (const auto& v : w.per_var) {
      json e;
      e["variable"] = in.ideal.ctx->name(v.var);
      e["rho"] = v.rho;
      e["certificate"] = certificate_json(v.certificate, in.ideal);
      pv.push_back(std::move(e));
      text << "rho[" << in.ideal.ctx->name(v.var) << "] = " << v.rho << "\n";
    }
    j["per_variable"] = pv;
  } else if (w.failing_var) {
    j["failing_variable"] = in.ideal.ctx->name(*w.failing_var);
    text << "failing variable: " << in.ideal.ctx->name(*w.failing_var) << "\n";
  }
  emit(j, text.str(), format);
  return w.has_projective_zeros ? kExitNegative : kExitOk;
}

int cmd_certify_check(const std::string& path, const std::string& format) {
  json j;
  try {
    j = json::parse(read_stream(path));
  } catch (const json::parse_error& e) {
    std::cerr << error_json("schema", e.what()).dump() << "\n";
    return kExitParse;
  }
  Certificate cert;
  Ideal ideal;
  try {
    std::vector<std::string> vars =
        j.at("vars").get<std::vector<std::string>>();
    CtxPtr ctx = make_ctx(vars);
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "unit")
      cert.kind = CertKind::Unit;
    else if (kind == "radical")
      cert.kind = CertKind::Radical;
    else
      throw domain_error("unknown certificate kind: " + kind);
    cert.rho = j.at("rho").get<int>();
    cert.target = parse(j.at("target").get<std::string>(), ctx);
    for (const auto& s : j.at("cofactors"))
      cert.cofactors.push_back(parse(s.get<std::string>(), ctx));
    std::vector<Poly> gens;
    for (const auto& s : j.at("generators"))
      gens.push_back(parse(s.get<std::string>(), ctx));
    ideal = Ideal{ctx, std::move(gens)};
    validate_ideal(ideal);
    if (cert.cofactors.size() != ideal.gens.size())
      throw domain_error("cofactor count does not match generator count");
  } catch (const json::exception& e) {
    std::cerr << error_json("schema", e.what()).dump() << "\n";
    return kExitParse;
  } catch (const parse_error& e) {
    std::cerr << error_json("schema", e.what()).dump() << "\n";
    return kExitParse;
  } catch (const domain_error& e) {
    std::cerr << error_json("schema", e.what()).dump() << "\n";
    return kExitParse;
  }
  bool ok = verify_certificate(cert, ideal);
  json out;
  out["command"] = "certify-check";
  out["verified"] = ok;
  emit(out, std::string("verified: ") + (ok ? "true" : "false") + "\n", format);
  return ok ? kExitOk : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Nullstellensatz toolbox: resolvents, elimination chains, "
               "membership certificates and rational solving"};
  app.require_subcommand(1);

  std::string input_path;
  std::string format = "text";
  std::uint64_t seed = 0;
  int cap = 8;
  bool minimize = false;
  std::string nu_spec = "0..5";
  std::string cert_path;

  auto add_common = [&](CLI::App* sub, bool with_seed = true) {
    sub->add_option("input", input_path, "input file ('-' for stdin)")
        ->required();
    sub->add_option("--format", format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    if (with_seed)
      sub->add_option("--seed", seed, "seed for the linear-change retries");
  };

  CLI::App* resolvent = app.add_subcommand(
      "resolvent", "complete resolvent by successive elimination");
  add_common(resolvent);
  CLI::App* hentzelt =
      app.add_subcommand("hentzelt", "Hentzelt elimination chain");
  add_common(hentzelt);
  CLI::App* solve =
      app.add_subcommand("solve", "rational solutions via the u-resolvent");
  add_common(solve);
  CLI::App* wnss =
      app.add_subcommand("wnss", "weak Nullstellensatz emptiness decision");
  add_common(wnss);
  CLI::App* radical = app.add_subcommand(
      "radical", "radical membership of the '?' query polynomial");
  add_common(radical);
  radical->add_flag("--minimize", minimize,
                    "search for a smaller certificate exponent");
  CLI::App* member = app.add_subcommand(
      "member", "degree-capped ideal membership of the '?' query");
  add_common(member, false);
  member->add_option("--cap", cap, "cofactor degree cap");
  CLI::App* hilbert =
      app.add_subcommand("hilbert", "Hilbert function of a homogeneous ideal");
  add_common(hilbert, false);
  hilbert->add_option("--nu", nu_spec, "degree range, e.g. 0..5 or 8");
  CLI::App* wpnss = app.add_subcommand(
      "wpnss", "weak projective Nullstellensatz for a homogeneous ideal");
  add_common(wpnss);
  CLI::App* certify = app.add_subcommand(
      "certify-check", "re-verify an emitted certificate file");
  certify->add_option("certificate", cert_path, "certificate JSON file")
      ->required();
  certify->add_option("--format", format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (certify->parsed()) return cmd_certify_check(cert_path, format);
    ParsedInput in = read_input(input_path);
    if (resolvent->parsed()) return cmd_resolvent(in, seed, format);
    if (hentzelt->parsed()) return cmd_hentzelt(in, seed, format);
    if (solve->parsed()) return cmd_solve(in, seed, format);
    if (wnss->parsed()) return cmd_wnss(in, seed, format);
    if (radical->parsed()) return cmd_radical(in, seed, minimize, format);
    if (member->parsed()) return cmd_member(in, cap, format);
    if (hilbert->parsed()) return cmd_hilbert(in, nu_spec, format);
    if (wpnss->parsed()) return cmd_wpnss(in, seed, format);
  } catch (const parse_error& e) {
    std::cerr << error_json("parse", e.what()).dump() << "\n";
    return kExitParse;
  } catch (const retry_exhausted& e) {
    std::cerr << error_json("retry_exhausted", e.what()).dump() << "\n";
    return kExitRetry;
  } catch (const degenerate_error& e) {
    std::cerr << error_json("degenerate", e.what()).dump() << "\n";
    return kExitRetry;
  } catch (const domain_error& e) {
    std::cerr << error_json("unsupported", e.what()).dump() << "\n";
    return kExitUnsupported;
  } catch (const std::exception& e) {
    std::cerr << error_json("internal", e.what()).dump() << "\n";
    return kExitRetry;
  }
  return kExitOk;
}
