#include "qsig/cli.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <map>
#include <ostream>
#include <sstream>

#include "qsig/cherednik.hpp"
#include "qsig/errors.hpp"
#include "qsig/format.hpp"
#include "qsig/hecke.hpp"
#include "qsig/limit.hpp"
#include "qsig/seminormal.hpp"

namespace qsig {

namespace {

struct Request {
  std::string shape;
  std::string c;
  std::string variant = "normalized";
  std::string format = "json";
  int degree = 10;
  int precision = 128;
  int a = 0;
  int order = 0;
  unsigned jobs = 1;
  bool bridge = false;
};

// "--c -7/8" would otherwise be read as an unknown option.
std::vector<std::string> attach_negative_values(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    bool is_long_opt = a.size() > 2 && a.rfind("--", 0) == 0 && a.find('=') == std::string::npos;
    if (is_long_opt && i + 1 < args.size()) {
      const std::string& v = args[i + 1];
      if (v.size() > 1 && v[0] == '-' && std::isdigit(static_cast<unsigned char>(v[1]))) {
        out.push_back(a + "=" + v);
        ++i;
        continue;
      }
    }
    out.push_back(a);
  }
  return out;
}

std::string join(const std::vector<BigInt>& xs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? ", " : "") << xs[i];
  return os.str();
}

std::string join(const std::vector<Rational>& xs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? ", " : "") << xs[i].to_string();
  return os.str();
}

SignatureVariant parse_variant(const std::string& v) {
  if (v == "raw") return SignatureVariant::raw;
  if (v == "normalized") return SignatureVariant::normalized;
  throw InvalidInput("unknown variant '" + v + "' (expected raw or normalized)");
}

class Dispatcher {
 public:
  Dispatcher(const Request& req, std::ostream& out) : req_(req), out_(out) {}

  void hecke_sig(bool has_at) {
    Partition shape = Partition::parse(req_.shape);
    SignatureVariant variant = parse_variant(req_.variant);
    Json j = Json::object();
    j["shape"] = to_json(shape);
    j["variant"] = req_.variant;
    if (!has_at) {
      ZExpr e = variant == SignatureVariant::raw ? signature_z_raw(shape) : signature_z_normalized(shape);
      j["signature_z"] = to_json(e);
      emit(j, e.to_string());
      return;
    }
    HeckeParam p(Rational::parse(req_.c), shape.size());
    BigInt s = signature_at(shape, p, variant);
    j["c"] = to_json(p.c());
    j["signature"] = to_json(s);
    emit(j, s.get_str());
  }

  void hecke_oracle() {
    Partition shape = Partition::parse(req_.shape);
    HeckeParam p(Rational::parse(req_.c), shape.size());
    SeminormalReport rep = seminormal_report(shape, p, req_.precision);
    bool relations = action_relations_check(shape, p, req_.precision);
    Json j = Json::object();
    j["shape"] = to_json(shape);
    j["c"] = to_json(p.c());
    j["precision"] = req_.precision;
    j["signature"] = rep.signature;
    j["relations_ok"] = relations;
    emit(j, "signature " + std::to_string(rep.signature) + (relations ? ", relations ok" : ", relations FAILED"));
  }

  void rca_series() {
    auto [shape, p] = rca_input();
    if (req_.degree < 0) throw InvalidInput("degree must be nonnegative");
    auto series = character_series(shape, p, req_.degree + 1);
    Json j = Json::object();
    j["shape"] = to_json(shape);
    j["c"] = to_json(p.c());
    j["degree"] = req_.degree;
    Json a = Json::array();
    for (const auto& x : series) a.push_back(to_json(x));
    j["series"] = a;
    emit(j, join(series));
  }

  void rca_closed() {
    auto [shape, p] = rca_input();
    RatFun r = character_closed(shape, p, ClosedFormOptions{req_.jobs});
    emit(to_json(r), r.to_string());
  }

  void rca_asym() {
    auto [shape, p] = rca_input();
    Json j = Json::object();
    j["shape"] = to_json(shape);
    j["c"] = to_json(p.c());
    if (!req_.bridge) {
      BigInt a = asymptotic_signature(shape, p, ClosedFormOptions{req_.jobs});
      j["asymptotic_signature"] = to_json(a);
      emit(j, a.get_str());
      return;
    }
    BridgeReport r = bridge_check(shape, p, ClosedFormOptions{req_.jobs});
    j["asymptotic_signature"] = to_json(r.asymptotic);
    j["hecke_raw"] = to_json(r.hecke_raw);
    j["hecke_normalized"] = to_json(r.hecke_normalized);
    j["signed_match_raw"] = r.signed_match_raw;
    j["abs_match_raw"] = r.abs_match_raw;
    j["signed_match_normalized"] = r.signed_match_normalized;
    j["abs_match_normalized"] = r.abs_match_normalized;
    std::ostringstream text;
    text << "a_s = " << r.asymptotic << ", raw = " << r.hecke_raw << ", normalized = " << r.hecke_normalized
         << "; raw " << (r.signed_match_raw ? "signed match" : (r.abs_match_raw ? "absolute match, sign differs" : "mismatch"));
    emit(j, text.str());
  }

  void rca_limit() {
    Partition shape = Partition::parse(req_.shape);
    RatFun r = limit_character(shape);
    emit(to_json(r), r.to_string());
  }

  void stable_series_cmd() {
    if (req_.degree < 0) throw InvalidInput("degree must be nonnegative");
    auto s = stable_series(req_.a, req_.degree + 1);
    Json j = Json::object();
    j["a"] = req_.a;
    Json arr = Json::array();
    for (const auto& x : s) arr.push_back(to_json(x));
    j["series"] = arr;
    emit(j, join(s));
  }

  void stable_poly_cmd() {
    SymbolicPoly p = stable_poly(req_.order);
    Json j = Json::object();
    j["order"] = req_.order;
    j["poly"] = to_json(p);
    emit(j, p.to_string());
  }

 private:
  std::pair<Partition, RcaParam> rca_input() {
    Partition shape = Partition::parse(req_.shape);
    return {shape, validate_param(Rational::parse(req_.c), shape.size())};
  }

  void emit(const Json& j, const std::string& text) {
    if (req_.format == "json")
      out_ << j.dump() << "\n";
    else
      out_ << text << "\n";
  }

  const Request& req_;
  std::ostream& out_;
};

}  // namespace

int run_cli(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  Request req;
  CLI::App app{"Signatures of Hecke Specht modules and Cherednik signature characters", "qsig"};
  app.require_subcommand(1);

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", req.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  };
  auto add_shape = [&](CLI::App* sub) { sub->add_option("--shape", req.shape, "Partition, e.g. 2,2,1")->required(); };

  CLI::App* hecke = app.add_subcommand("hecke", "Hecke algebra Specht module signatures");
  hecke->require_subcommand(1);
  CLI::App* hsig = hecke->add_subcommand("sig", "Symbolic signature, or its value at c");
  add_shape(hsig);
  CLI::Option* at_opt = hsig->add_option("--at", req.c, "Rational c with Q = exp(2 pi i c)");
  hsig->add_option("--variant", req.variant, "raw or normalized")->check(CLI::IsMember({"raw", "normalized"}));
  add_format(hsig);
  CLI::App* horacle = hecke->add_subcommand("oracle", "Floating seminormal-form signature");
  add_shape(horacle);
  horacle->add_option("--at", req.c, "Rational c")->required();
  horacle->add_option("--prec", req.precision, "Precision in bits")->check(CLI::Range(32, 100000));
  add_format(horacle);

  CLI::App* rca = app.add_subcommand("rca", "Cherednik signature characters");
  rca->require_subcommand(1);
  auto add_rca = [&](CLI::App* sub) {
    add_shape(sub);
    sub->add_option("--c", req.c, "Negative rational c")->required();
    add_format(sub);
  };
  CLI::App* rseries = rca->add_subcommand("series", "Coefficients up to t^degree by enumeration");
  add_rca(rseries);
  rseries->add_option("--degree", req.degree, "Highest power of t")->required();
  CLI::App* rclosed = rca->add_subcommand("closed", "Exact rational function");
  add_rca(rclosed);
  rclosed->add_option("--jobs", req.jobs, "Worker threads")->check(CLI::Range(1U, 1024U));
  CLI::App* rasym = rca->add_subcommand("asym", "Asymptotic signature");
  add_rca(rasym);
  rasym->add_flag("--bridge", req.bridge, "Compare with the Hecke signature");
  rasym->add_option("--jobs", req.jobs, "Worker threads")->check(CLI::Range(1U, 1024U));
  CLI::App* rlimit = rca->add_subcommand("limit", "Limit as c -> -infinity");
  add_shape(rlimit);
  add_format(rlimit);

  CLI::App* stable = app.add_subcommand("stable", "Stable limit of the sign-representation character");
  stable->require_subcommand(1);
  CLI::App* sseries = stable->add_subcommand("series", "Coefficients of f(a, t) up to t^degree");
  sseries->add_option("--a", req.a, "Rank a")->required()->check(CLI::NonNegativeNumber);
  sseries->add_option("--degree", req.degree, "Highest power of t")->required();
  add_format(sseries);
  CLI::App* spoly = stable->add_subcommand("poly", "P_r as a polynomial in a");
  spoly->add_option("--order", req.order, "r")->required()->check(CLI::NonNegativeNumber);
  add_format(spoly);

  std::vector<std::string> args = attach_negative_values(raw_args);
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    err << "error: " << msg.substr(0, msg.find('\n')) << "\n";
    return kInvalidInput;
  }

  Dispatcher run(req, out);
  try {
    if (hsig->parsed()) run.hecke_sig(at_opt->count() > 0);
    else if (horacle->parsed()) run.hecke_oracle();
    else if (rseries->parsed()) run.rca_series();
    else if (rclosed->parsed()) run.rca_closed();
    else if (rasym->parsed()) run.rca_asym();
    else if (rlimit->parsed()) run.rca_limit();
    else if (sseries->parsed()) run.stable_series_cmd();
    else if (spoly->parsed()) run.stable_poly_cmd();
  } catch (const ConsistencyError& e) {
    err << "internal consistency failure: " << e.what() << "\n";
    return kInternalError;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const DegenerateParameter& e) {
    err << e.what() << "\n";
    return kInvalidInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
  return kOk;
}

}  // namespace qsig
