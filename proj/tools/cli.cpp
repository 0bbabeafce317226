#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "mbetti/betti.hpp"
#include "mbetti/io.hpp"
#include "mbetti/lspace.hpp"
#include "mbetti/schur.hpp"

namespace mbetti::cli {

namespace {

using io::json;

// Raised for anything wrong with the command line or the input files.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "table";
  std::string lambda;
  std::size_t nvars = 0;
  std::string method = "bialternant";
  std::string e;
  std::string twist;
  std::vector<std::string> inputs;
};

bool as_json(const Options& o) { return o.format == "json"; }

DifferenceVector parse_e(const std::string& s) {
  std::vector<int> v;
  try {
    v = io::parse_int_list(s);
    return DifferenceVector(v);
  } catch (const std::exception& ex) {
    throw UsageError("--e: " + std::string(ex.what()));
  }
}

Partition parse_lambda(const std::string& s) {
  try {
    return Partition(io::parse_int_list(s));
  } catch (const std::exception& ex) {
    throw UsageError("--lambda: " + std::string(ex.what()));
  }
}

Exponent parse_twist(const std::string& s, std::size_t n) {
  std::vector<int> v;
  try {
    v = io::parse_int_list(s);
  } catch (const std::exception& ex) {
    throw UsageError("--twist: " + std::string(ex.what()));
  }
  if (v.size() != n)
    throw UsageError("--twist needs " + std::to_string(n) + " entries, got " + std::to_string(v.size()));
  return Exponent(std::span<const int>(v));
}

BettiDiagram read_diagram(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  try {
    return io::diagram_from_json(json::parse(in));
  } catch (const json::exception& ex) {
    throw UsageError(path + ": malformed JSON: " + ex.what());
  } catch (const io::ParseError& ex) {
    throw UsageError(path + ": " + ex.what());
  }
}

std::string exponent_text(const Exponent& e) { return e.to_string(); }

json int_array(std::span<const int> v) { return json(std::vector<int>(v.begin(), v.end())); }

// Columns per homological index: rank, total degree, then multidegrees.
void print_diagram_table(const BettiDiagram& d, std::ostream& out) {
  const std::size_t cols = d.nvars() + 1;
  std::vector<std::vector<std::string>> col(cols);
  std::size_t height = 0;
  for (std::size_t i = 0; i < cols; ++i) {
    const LaurentPoly& s = d.slice(i);
    col[i].push_back(std::to_string(i));
    col[i].push_back("S^" + io::to_string(d.rank(i)));
    const auto deg = s.total_degree();
    col[i].push_back(deg ? std::to_string(*deg) : (s.is_zero() ? "" : "mixed"));
    for (const auto& t : s.terms()) {
      std::string cell = exponent_text(t.exp);
      if (t.coeff != 1) cell = io::to_string(t.coeff) + "*" + cell;
      col[i].push_back(cell);
    }
    height = std::max(height, col[i].size());
  }
  const std::vector<std::string> labels = {"i", "rank", "degree"};
  std::size_t label_w = 7;
  std::vector<std::size_t> width(cols, 0);
  for (std::size_t i = 0; i < cols; ++i)
    for (const auto& c : col[i]) width[i] = std::max(width[i], c.size());
  for (std::size_t r = 0; r < height; ++r) {
    std::string line = r < labels.size() ? labels[r] : "";
    line.resize(label_w, ' ');
    for (std::size_t i = 0; i < cols; ++i) {
      std::string cell = r < col[i].size() ? col[i][r] : "";
      if (i + 1 < cols) cell.resize(width[i] + 2, ' ');
      line += cell;
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
}

int cmd_schur(const Options& o, std::ostream& out) {
  const Partition lam = parse_lambda(o.lambda);
  if (o.nvars < 1 || o.nvars > Exponent::kMaxVars)
    throw UsageError("--nvars must be between 1 and " + std::to_string(Exponent::kMaxVars));
  if (o.method == "both") {
    const auto a = schur_bialternant(lam, o.nvars);
    const auto b = schur_ssyt(lam, o.nvars);
    if (as_json(o)) {
      out << json{{"lambda", int_array(lam.parts())},
                  {"nvars", o.nvars},
                  {"bialternant", io::to_json(a)},
                  {"ssyt", io::to_json(b)},
                  {"agree", a == b}}
                 .dump(2)
          << '\n';
    } else {
      out << "bialternant: " << io::to_text(a) << '\n'
          << "ssyt:        " << io::to_text(b) << '\n'
          << "agree:       " << (a == b ? "yes" : "no") << '\n';
    }
    return kOk;
  }
  const auto s = o.method == "ssyt" ? schur_ssyt(lam, o.nvars) : schur_bialternant(lam, o.nvars);
  if (as_json(o)) {
    out << json{{"lambda", int_array(lam.parts())}, {"nvars", o.nvars}, {"poly", io::to_json(s)}}.dump(2)
        << '\n';
  } else {
    out << io::to_text(s) << '\n';
  }
  return kOk;
}

int cmd_equivariant(const Options& o, std::ostream& out) {
  const DifferenceVector e = parse_e(o.e);
  BettiDiagram d = equivariant(e);
  if (!o.twist.empty()) d = twist(d, parse_twist(o.twist, e.size()));
  if (as_json(o)) {
    json j = io::to_json(d);
    j["e"] = int_array(e.entries());
    out << j.dump(2) << '\n';
  } else {
    out << "e = " << e.to_string() << '\n';
    print_diagram_table(d, out);
  }
  return kOk;
}

int cmd_check(const Options& o, std::ostream& out) {
  const BettiDiagram d = read_diagram(o.inputs.at(0));
  const PurityProfile prof = purity_profile(d);
  const HkReport hk = check_hk(d);
  if (as_json(o)) {
    json j;
    j["pure"] = prof.pure;
    j["degrees"] = prof.pure ? json(prof.degrees) : json(nullptr);
    j["e"] = prof.pure ? json(prof.differences) : json(nullptr);
    j["purity_reason"] = prof.pure ? json(nullptr) : json(prof.reason);
    j["hk"] = {{"pass", hk.pass},
               {"failing_var", hk.failing_var ? json(*hk.failing_var + 1) : json(nullptr)},
               {"residual", hk.pass ? json(nullptr) : io::to_json(hk.residual)}};
    out << j.dump(2) << '\n';
    return kOk;
  }
  if (prof.pure) {
    out << "pure: yes\ndegrees:";
    for (int x : prof.degrees) out << ' ' << x;
    out << "\ne: " << DifferenceVector(prof.differences).to_string() << '\n';
  } else {
    out << "pure: no (" << prof.reason << ")\n";
  }
  if (hk.pass) {
    out << "hk: pass\n";
  } else {
    out << "hk: fail at t" << *hk.failing_var + 1 << " = 1\nresidual: " << io::to_text(hk.residual) << '\n';
  }
  return kOk;
}

int cmd_decompose(const Options& o, std::ostream& out) {
  const BettiDiagram d = read_diagram(o.inputs.at(0));
  const DifferenceVector e = parse_e(o.e);
  if (e.size() != d.nvars()) {
    throw UsageError("--e has " + std::to_string(e.size()) + " entries but the diagram has " +
                     std::to_string(d.nvars()) + " variables");
  }
  const MembershipReport rep = membership(d.polynomials(), e);
  if (as_json(o)) {
    out << io::to_json(rep).dump(2) << '\n';
    return kOk;
  }
  out << "in_space: " << (rep.in_space ? "true" : "false") << '\n';
  out << "cofactor: " << (rep.cofactor ? io::to_text(*rep.cofactor) : "none") << '\n';
  out << "integral: " << (rep.integral ? "true" : "false") << '\n';
  for (const auto& r : rep.reasons) out << "reason: " << r << '\n';
  return kOk;
}

int cmd_gcd_schur(const Options& o, std::ostream& out) {
  const DifferenceVector e = parse_e(o.e);
  const SchurFamilyGcd fam = schur_gcd_family(e);
  if (as_json(o)) {
    json cof = json::array();
    for (const auto& c : fam.cofactors) cof.push_back(io::to_json(c));
    out << json{{"e", int_array(e.entries())}, {"r", fam.r}, {"gcd", io::to_json(fam.gcd_poly)}, {"cofactors", cof}}
               .dump(2)
        << '\n';
    return kOk;
  }
  out << "r: " << fam.r << '\n' << "gcd: " << io::to_text(fam.gcd_poly) << '\n';
  for (std::size_t i = 0; i < fam.cofactors.size(); ++i)
    out << "cofactor " << i << ": " << io::to_text(fam.cofactors[i]) << '\n';
  return kOk;
}

int cmd_generator(const Options& o, std::ostream& out) {
  std::vector<BettiTuple> tuples;
  for (const auto& path : o.inputs) tuples.push_back(read_diagram(path).polynomials());
  for (std::size_t k = 1; k < tuples.size(); ++k) {
    if (tuples[k].nvars() != tuples[0].nvars())
      throw UsageError(o.inputs[k] + ": variable count differs from " + o.inputs[0]);
  }
  const BettiTuple g = find_generator(tuples);
  const BettiDiagram gd = BettiDiagram::from_tuple(g);
  std::vector<LaurentPoly> cof;
  for (const auto& t : tuples) cof.push_back(*decompose(t, g));
  if (as_json(o)) {
    json c = json::array();
    for (const auto& p : cof) c.push_back(io::to_json(p));
    out << json{{"generator", io::to_json(gd)}, {"cofactors", c}}.dump(2) << '\n';
    return kOk;
  }
  print_diagram_table(gd, out);
  for (std::size_t k = 0; k < cof.size(); ++k) out << o.inputs[k] << ": " << io::to_text(cof[k]) << '\n';
  return kOk;
}

int cmd_collapse(const Options& o, std::ostream& out) {
  const auto c = collapse_total(read_diagram(o.inputs.at(0)));
  if (as_json(o)) {
    json entries = json::array();
    for (const auto& [key, m] : c)
      entries.push_back({{"i", key.first}, {"deg", key.second}, {"mult", io::to_string(m)}});
    out << json{{"entries", entries}}.dump(2) << '\n';
    return kOk;
  }
  out << "i  degree  mult\n";
  for (const auto& [key, m] : c) {
    std::string line = std::to_string(key.first);
    line.resize(3, ' ');
    std::string deg = std::to_string(key.second);
    deg.resize(8, ' ');
    out << line << deg << io::to_string(m) << '\n';
  }
  return kOk;
}

int cmd_hilbert(const Options& o, std::ostream& out) {
  const BettiTuple b = read_diagram(o.inputs.at(0)).polynomials();
  const auto h = hilbert_numerator(b);
  if (as_json(o)) {
    out << json{{"divisible", h.has_value()}, {"numerator", h ? io::to_json(*h) : json(nullptr)}}.dump(2) << '\n';
    return kOk;
  }
  if (h) {
    out << "h: " << io::to_text(*h) << '\n';
  } else {
    const HkReport hk = check_hk(b);
    out << "h: not divisible";
    if (hk.failing_var) out << " (HK fails at t" << *hk.failing_var + 1 << " = 1)";
    out << '\n';
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multigraded Betti diagrams of pure resolutions", "mbetti"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"table", "json"}))
      ->capture_default_str();

  auto* schur = app.add_subcommand("schur", "Schur polynomial s_lambda");
  schur->add_option("--lambda", o.lambda, "Partition, e.g. 4,2,1")->required();
  schur->add_option("--nvars", o.nvars, "Number of variables")->required();
  schur->add_option("--method", o.method, "bialternant, ssyt or both")
      ->check(CLI::IsMember({"bialternant", "ssyt", "both"}))
      ->capture_default_str();

  auto* eq = app.add_subcommand("equivariant", "Betti diagram of the equivariant resolution E(e)");
  eq->add_option("--e", o.e, "Difference vector, e.g. 2,3")->required();
  eq->add_option("--twist", o.twist, "Twist by a multidegree, e.g. 1,-1");

  auto* check = app.add_subcommand("check", "Purity and HK report for a diagram");
  check->add_option("--in", o.inputs, "Diagram JSON")->required()->expected(1);

  auto* dec = app.add_subcommand("decompose", "Membership in L'(e) and cofactor against the generator");
  dec->add_option("--in", o.inputs, "Diagram JSON")->required()->expected(1);
  dec->add_option("--e", o.e, "Difference vector")->required();

  auto* gs = app.add_subcommand("gcd-schur", "gcd of the Schur family s_{alpha(e,i)}");
  gs->add_option("--e", o.e, "Difference vector")->required();

  auto* gen = app.add_subcommand("generator", "Common generator of several diagrams");
  gen->add_option("--in", o.inputs, "Diagram JSON files")->required()->expected(1, 1 << 20);

  auto* col = app.add_subcommand("collapse", "Collapse multidegrees to total degrees");
  col->add_option("--in", o.inputs, "Diagram JSON")->required()->expected(1);

  auto* hil = app.add_subcommand("hilbert", "Hilbert series numerator");
  hil->add_option("--in", o.inputs, "Diagram JSON")->required()->expected(1);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& ex) {
    err << "mbetti: " << ex.what() << '\n';
    return kUsageError;
  }

  std::ostringstream buf;
  try {
    int code = kOk;
    if (*schur) code = cmd_schur(o, buf);
    else if (*eq) code = cmd_equivariant(o, buf);
    else if (*check) code = cmd_check(o, buf);
    else if (*dec) code = cmd_decompose(o, buf);
    else if (*gs) code = cmd_gcd_schur(o, buf);
    else if (*gen) code = cmd_generator(o, buf);
    else if (*col) code = cmd_collapse(o, buf);
    else if (*hil) code = cmd_hilbert(o, buf);
    out << buf.str();
    return code;
  } catch (const UsageError& ex) {
    err << "mbetti: " << ex.what() << '\n';
    return kUsageError;
  } catch (const std::exception& ex) {
    err << "mbetti: " << ex.what() << '\n';
    return kDomainError;
  }
}

}  // namespace mbetti::cli
