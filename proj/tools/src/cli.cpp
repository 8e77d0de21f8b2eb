#include "hitchin_cli/cli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "hitchin/burau.hpp"
#include "hitchin/error.hpp"
#include "hitchin/hitchin_graph.hpp"
#include "hitchin/monodromy.hpp"
#include "hitchin/serialization.hpp"

namespace hitchin::cli {

namespace {

struct Options {
  std::string genus = "3";
  int n = 4;
  std::string spec = "generic";
  std::string format = "json";
  bool quotient = false;
  bool check = false;
  std::string out;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int single_genus(const std::string& text) {
  const GenusRange r = parse_genus_range(text);
  if (r.first != r.last) throw UsageError("expected a single genus, got " + text);
  return r.first;
}

void require_format(const Options& o, std::initializer_list<const char*> allowed, const char* command) {
  if (std::none_of(allowed.begin(), allowed.end(), [&](const char* f) { return o.format == f; })) {
    throw UsageError(std::string(command) + " does not support --format " + o.format);
  }
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

void for_each_nonzero(const IntegerMatrix& m, const std::function<void(std::size_t, std::size_t, const Integer&)>& f) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (m(r, c) != 0) f(r, c, m(r, c));
}

void write_matrix_csv(std::ostream& os, const std::string& name, const IntegerMatrix& m) {
  for_each_nonzero(m, [&](std::size_t r, std::size_t c, const Integer& v) {
    os << name << ',' << r << ',' << c << ',' << to_decimal(v) << '\n';
  });
}

std::string cmd_graph(const Options& o) {
  require_format(o, {"json", "dot", "csv"}, "graph");
  const HitchinModel m = build_model(single_genus(o.genus));
  if (o.format == "dot") return m.base_surface.to_dot("base") + m.lifted_surface.to_dot("lifted");
  if (o.format == "csv") {
    std::ostringstream os;
    os << "complex,edge,tail,head\n";
    for (const auto* s : {&m.base_surface, &m.lifted_surface}) {
      const char* name = s == &m.base_surface ? "base" : "lifted";
      for (std::size_t e = 0; e < s->edge_count(); ++e) {
        const auto [t, h] = s->endpoints(e);
        os << name << ',' << s->edges()[e] << ',' << s->vertices()[t] << ',' << s->vertices()[h] << '\n';
      }
    }
    return os.str();
  }
  return dump({{"genus", m.genus}, {"base", m.base_surface.to_json()}, {"lifted", m.lifted_surface.to_json()}});
}

std::string cmd_words(const Options& o) {
  require_format(o, {"json", "csv"}, "words");
  const int g = single_genus(o.genus);
  const auto base = base_words(g);
  const auto lifted = lifted_words(g);
  if (o.format == "csv") {
    std::ostringstream os;
    os << "complex,face,word\n";
    for (const auto& w : base) os << "base," << w.face << ',' << w.to_string() << '\n';
    for (const auto& w : lifted) os << "lifted," << w.face << ',' << w.to_string() << '\n';
    return os.str();
  }
  const auto list = [](const std::vector<FaceWord>& words) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& w : words) a.push_back({{"face", w.face}, {"word", w.to_string()}});
    return a;
  };
  const HitchinModel m = build_model(g);
  const PsiData data = psi_map(m);
  nlohmann::json psi = nlohmann::json::object();
  nlohmann::json face_vectors = nlohmann::json::object();
  for (std::size_t i = 0; i < m.edges.size(); ++i) {
    nlohmann::json chain = nlohmann::json::object();
    for (const auto& [sym, c] : m.lifted_surface.chain_from_vector(data.psi[i]).coefficients) {
      if (c != 0) chain[sym] = to_decimal(c);
    }
    psi[m.edges[i].symbol()] = std::move(chain);
  }
  for (std::size_t f = 0; f < data.face_vectors.size(); ++f) {
    nlohmann::json v = nlohmann::json::object();
    for (std::size_t i = 0; i < m.edges.size(); ++i) {
      if (data.face_vectors[f][i] != 0) v[m.edges[i].symbol()] = to_decimal(data.face_vectors[f][i]);
    }
    face_vectors[base_face_names()[f]] = std::move(v);
  }
  return dump({{"genus", g},
               {"base_words", list(base)},
               {"lifted_words", list(lifted)},
               {"psi", std::move(psi)},
               {"Psi", std::move(face_vectors)}});
}

std::string cmd_intersections(const Options& o) {
  require_format(o, {"json", "csv"}, "intersections");
  const HitchinModel m = build_model(single_genus(o.genus));
  const PairingMatrix p = pairing_matrix(m, psi_map(m));
  if (o.format == "csv") {
    std::ostringstream os;
    os << "first,second,value\n";
    for_each_nonzero(p.matrix, [&](std::size_t r, std::size_t c, const Integer& v) {
      os << p.labels[r].symbol() << ',' << p.labels[c].symbol() << ',' << to_decimal(v) << '\n';
    });
    return os.str();
  }
  nlohmann::json labels = nlohmann::json::array();
  for (const auto& e : p.labels) labels.push_back(e.symbol());
  return dump({{"genus", m.genus}, {"labels", labels}, {"pairing", to_json(p.matrix)}});
}

std::string cmd_monodromy(const Options& o) {
  require_format(o, {"json", "csv"}, "monodromy");
  const HitchinModel m = build_model(single_genus(o.genus));
  const MonodromyRep rep = build_rep(m);
  std::optional<PrymLattice> prym;
  if (o.quotient) prym = prym_quotient(rep);
  const auto& gens = prym ? prym->reduced_generators : rep.generators;
  const IntegerMatrix& tau = prym ? prym->reduced_tau : rep.tau;
  const auto& labels = rep.pairing.labels;

  if (o.format == "csv") {
    std::ostringstream os;
    os << "generator,row,col,entry\n";
    for (std::size_t i = 0; i < gens.size(); ++i) write_matrix_csv(os, labels[i].symbol(), gens[i]);
    write_matrix_csv(os, "tau", tau);
    return os.str();
  }
  nlohmann::json list = nlohmann::json::array();
  for (std::size_t i = 0; i < gens.size(); ++i) list.push_back({{"edge", labels[i].symbol()}, {"matrix", to_json(gens[i])}});
  nlohmann::json j{{"genus", m.genus}, {"quotient", o.quotient}, {"generators", list}, {"tau", to_json(tau)}};
  if (prym) {
    j["projection"] = to_json(prym->projection.projection);
    j["section"] = to_json(prym->projection.section);
    j["pairing"] = to_json(prym->reduced_pairing);
  } else {
    j["pairing"] = to_json(rep.pairing.matrix);
  }
  return dump(j);
}

int cmd_burau(const Options& o, std::string& text) {
  require_format(o, {"json", "csv"}, "burau");
  if (o.n < 2) throw UsageError("--n must be at least 2");
  QuotientSpec spec = QuotientSpec::generic();
  try {
    spec = QuotientSpec::parse(o.spec);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  std::vector<LaurentMatrix> gens;
  for (int j = 1; j < o.n; ++j) gens.push_back(burau_generator(o.n, j).specialize(spec));

  CheckReport report;
  if (o.check) {
    report.append(check_braid_relations(o.n, spec));
    report.append(check_permutation_specialization(o.n));
    if (o.n >= 3) report.append(zeta_basis_action(o.n));
  }
  if (o.format == "csv") {
    std::ostringstream os;
    os << "generator,row,col,exponent,coefficient\n";
    for (std::size_t j = 0; j < gens.size(); ++j) {
      for (std::size_t r = 0; r < gens[j].rows(); ++r) {
        for (std::size_t c = 0; c < gens[j].cols(); ++c) {
          for (const auto& [e, coef] : gens[j](r, c).terms()) {
            os << 's' << j + 1 << ',' << r << ',' << c << ',' << e << ',' << to_decimal(coef) << '\n';
          }
        }
      }
    }
    if (o.check) {
      for (const auto& c : report.checks()) os << "# " << c.name << ',' << (c.passed ? "pass" : "fail") << '\n';
    }
    text = os.str();
  } else {
    nlohmann::json list = nlohmann::json::array();
    for (std::size_t j = 0; j < gens.size(); ++j) list.push_back({{"generator", j + 1}, {"matrix", to_json(gens[j])}});
    nlohmann::json j{{"n", o.n}, {"spec", spec.to_string()}, {"generators", list}};
    if (o.check) j["report"] = report.to_json();
    text = dump(j);
  }
  return report.passed() ? success : verification_failed;
}

int cmd_verify(const Options& o, std::string& text) {
  require_format(o, {"json"}, "verify");
  if (o.n < 2) throw UsageError("--n must be at least 2");
  const nlohmann::json report = verify_report(parse_genus_range(o.genus), o.n);
  text = dump(report);
  return report.at("passed").get<bool>() ? success : verification_failed;
}

}  // namespace

GenusRange parse_genus_range(const std::string& text) {
  const auto parse_int = [&](const std::string& s) {
    if (s.empty() || s.size() > 6 || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); })) {
      throw Error(ErrorCode::InvalidArgument, "malformed genus '" + text + "'");
    }
    return std::stoi(s);
  };
  GenusRange r;
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    r.first = r.last = parse_int(text);
  } else {
    r.first = parse_int(text.substr(0, dots));
    r.last = parse_int(text.substr(dots + 2));
  }
  if (r.first > r.last) throw Error(ErrorCode::InvalidArgument, "empty genus range '" + text + "'");
  if (r.first < 3) throw Error(ErrorCode::InvalidArgument, "genus must be at least 3, got '" + text + "'");
  return r;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Combinatorial Hitchin monodromy over hyperelliptic curves"};
  app.name("hitchin");
  app.require_subcommand(1);
  Options o;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "json, dot or csv")->check(CLI::IsMember({"json", "dot", "csv"}));
    sub->add_option("--out", o.out, "Output file (default stdout)");
  };
  auto* graph = app.add_subcommand("graph", "Base and lifted cell complexes");
  graph->add_option("--genus", o.genus, "Genus g >= 3");
  auto* words = app.add_subcommand("words", "Face boundary words");
  words->add_option("--genus", o.genus, "Genus g >= 3");
  auto* inter = app.add_subcommand("intersections", "Pairing matrix psi(e).psi(e')");
  inter->add_option("--genus", o.genus, "Genus g >= 3");
  auto* mono = app.add_subcommand("monodromy", "Transvection generators and tau");
  mono->add_option("--genus", o.genus, "Genus g >= 3");
  mono->add_flag("--quotient", o.quotient, "Act on the Prym quotient lattice");
  auto* burau = app.add_subcommand("burau", "Classical Burau matrices");
  burau->add_option("--n", o.n, "Number of strands");
  burau->add_option("--spec", o.spec, "generic, t=-1, unit_root:K, t^K=1 or compact:K");
  burau->add_flag("--check", o.check, "Check braid relations, t=1 and zeta action");
  auto* verify = app.add_subcommand("verify", "Run every invariant check");
  verify->add_option("--genus", o.genus, "Genus or inclusive range a..b")->default_str("3..8");
  verify->add_option("--n", o.n, "Largest strand count for the Burau checks")->default_str("8");
  for (auto* sub : {graph, words, inter, mono, burau, verify}) add_common(sub);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return success;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  }
  if (verify->parsed()) {
    if (verify->count("--genus") == 0) o.genus = "3..8";
    if (verify->count("--n") == 0) o.n = 8;
  }

  std::string text;
  int code = success;
  try {
    if (graph->parsed()) text = cmd_graph(o);
    else if (words->parsed()) text = cmd_words(o);
    else if (inter->parsed()) text = cmd_intersections(o);
    else if (mono->parsed()) text = cmd_monodromy(o);
    else if (burau->parsed()) code = cmd_burau(o, text);
    else code = cmd_verify(o, text);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  } catch (const Error& e) {
    const bool usage = e.code() == ErrorCode::InvalidArgument || e.code() == ErrorCode::GenusTooSmall;
    err << "error: " << e.what() << '\n';
    return usage ? usage_error : verification_failed;
  }

  if (o.out.empty()) {
    out << text;
  } else {
    std::ofstream file(o.out, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << o.out << '\n';
      return usage_error;
    }
    file << text;
  }
  return code;
}

}  // namespace hitchin::cli
