// Command-line front end: lcm, check, classify and ball reports.

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <openssl/evp.h>

#include "CLI11.hpp"
#include "json.hpp"
#include "rlcm/artin.hpp"
#include "rlcm/ball.hpp"
#include "rlcm/error.hpp"
#include "rlcm/inclusions.hpp"
#include "rlcm/lcm.hpp"
#include "rlcm/rep_parser.hpp"
#include "rlcm/replab.hpp"
#include "rlcm/spec_parser.hpp"

namespace {

using json = nlohmann::json;
using namespace rlcm;

constexpr int kExitAssert = 1;
constexpr int kExitInput = 2;
constexpr int kExitResource = 3;

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw Error("SHA-256 digest failed");
  }
  std::ostringstream out;
  for (unsigned int i = 0; i < len; ++i) {
    out << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  }
  return out.str();
}

std::size_t default_cap() {
  if (const char* env = std::getenv("RLCM_CLASS_CAP")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw ValidationError("RLCM_CLASS_CAP must be a positive integer");
    }
  }
  return kDefaultClassCap;
}

struct Options {
  std::string spec_path;
  std::size_t radius = 5;
  std::size_t cap = 0;
  bool json = false;
  bool assert_holds = false;
  bool timing = false;
  // lcm
  std::string x, y;
  // check
  std::string check;
  std::string subset;
  std::string set;
  std::string rep = "regular";
  // classify
  std::string matrix;
  // ball
  bool list = false;
};

// Report under construction. `status` aggregates every verdict for
// --assert-holds.
struct Report {
  json doc;
  Verdict status = Verdict::holds(0);
  std::vector<std::string> text;
};

json verdict_json(const Verdict& v, const Alphabet& a) {
  json j;
  j["status"] = std::string(to_string(v.status()));
  j["radius"] = v.radius();
  if (v.is_fails()) {
    const auto& w = v.witness();
    json elements = json::object();
    for (const auto& [role, word] : w.elements) {
      elements[role] = a.format(word);
    }
    j["witness"] = {{"property", w.property}, {"elements", elements}, {"note", w.note}};
  }
  if (v.is_inconclusive()) {
    j["reason"] = v.reason();
  }
  return j;
}

std::string verdict_text(const std::string& name, const Verdict& v, const Alphabet& a) {
  std::string line = name + ": " + std::string(to_string(v.status()));
  if (v.is_fails()) {
    const auto& w = v.witness();
    line += " (" + w.property;
    for (const auto& [role, word] : w.elements) {
      line += ", " + role + " = " + a.format(word);
    }
    if (!w.note.empty()) {
      line += "; " + w.note;
    }
    line += ")";
  } else if (v.is_inconclusive()) {
    line += " (" + v.reason() + ")";
  }
  return line;
}

void add_verdict(Report& r, const std::string& name, const Verdict& v, const Alphabet& a,
                 json extra = json::object()) {
  extra["name"] = name;
  extra["verdict"] = verdict_json(v, a);
  r.doc["results"].push_back(extra);
  r.text.push_back(verdict_text(name, v, a));
  r.status.absorb(v);
}

std::vector<letter_type> parse_generators(const Alphabet& a, const std::string& text) {
  std::vector<letter_type> out;
  for (const auto& w : a.parse_list(text)) {
    if (w.size() != 1) {
      throw ValidationError("'" + a.format(w) + "' is not a single generator");
    }
    out.push_back(w[0]);
  }
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
    throw ValidationError("generator listed twice in --subset");
  }
  return out;
}

element_id locate(const Ball& ball, const word_type& w, const std::string& what) {
  if (w.size() > ball.radius()) {
    throw ValidationError(what + " has length " + std::to_string(w.size()) +
                          ", beyond the radius " + std::to_string(ball.radius()));
  }
  return *ball.find(w);
}

json lcm_json(const Ball& ball, element_id x, element_id y, const LcmResult& r) {
  const auto& a = ball.presentation().alphabet();
  json j;
  j["kind"] = std::string(kind_name(r));
  if (const auto* l = std::get_if<Lcm>(&r)) {
    j["lcm"] = a.format(ball.word(l->r));
    j["z1"] = a.format(ball.word(*ball.quotient(x, l->r)));
    j["z2"] = a.format(ball.word(*ball.quotient(y, l->r)));
  } else if (const auto* e = std::get_if<EmptyUpTo>(&r)) {
    j["radius"] = e->radius;
  } else if (const auto* p = std::get_if<ProvenEmpty>(&r)) {
    j["reason"] = p->reason;
  } else if (const auto* i = std::get_if<InconclusiveUpTo>(&r)) {
    j["radius"] = i->radius;
    json minimal = json::array();
    for (auto m : i->minimal) {
      minimal.push_back(a.format(ball.word(m)));
    }
    j["minimal"] = minimal;
  }
  return j;
}

std::string lcm_text(const Ball& ball, element_id x, element_id y, const LcmResult& r) {
  const auto& a = ball.presentation().alphabet();
  std::string head = "lcm(" + a.format(ball.word(x)) + ", " + a.format(ball.word(y)) + "): ";
  if (const auto* l = std::get_if<Lcm>(&r)) {
    return head + "Lcm " + a.format(ball.word(l->r)) + " = " + a.format(ball.word(x)) + "." +
           a.format(ball.word(*ball.quotient(x, l->r))) + " = " + a.format(ball.word(y)) +
           "." + a.format(ball.word(*ball.quotient(y, l->r)));
  }
  if (const auto* e = std::get_if<EmptyUpTo>(&r)) {
    return head + "EmptyUpTo radius " + std::to_string(e->radius);
  }
  if (const auto* p = std::get_if<ProvenEmpty>(&r)) {
    return head + "ProvenEmpty (" + p->reason + ")";
  }
  const auto& i = std::get<InconclusiveUpTo>(r);
  std::string list;
  for (auto m : i.minimal) {
    list += (list.empty() ? "" : ", ") + a.format(ball.word(m));
  }
  return head + "InconclusiveUpTo radius " + std::to_string(i.radius) + ", minimal {" + list +
         "}";
}

json matrix_json(const DenseMatrix<Rational>& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      row.push_back(format_rational(m(i, j)));
    }
    rows.push_back(row);
  }
  return rows;
}

Report start_report(const std::string& command, const Options& o) {
  Report r;
  r.doc["tool"] = {{"name", "rlcm"}, {"version", RLCM_VERSION}};
  r.doc["command"] = command;
  r.doc["parameters"] = {{"radius", o.radius}, {"cap", o.cap}};
  r.doc["results"] = json::array();
  r.status = Verdict::holds(o.radius);
  return r;
}

struct LoadedSpec {
  MonoidSpec spec;
  std::string digest;
};

LoadedSpec load(const Options& o, Report& r) {
  auto text = read_file(o.spec_path);
  LoadedSpec out{parse_spec(text), sha256_hex(text)};
  r.doc["input"] = {{"sha256", out.digest},
                    {"monoid", out.spec.presentation.label()},
                    {"kind", std::string(to_string(out.spec.kind))},
                    {"generators", out.spec.presentation.alphabet().names()}};
  return out;
}

Report cmd_lcm(const Options& o) {
  auto r = start_report("lcm", o);
  auto in = load(o, r);
  const auto& pres = in.spec.presentation;
  const auto& a = pres.alphabet();
  auto wx = a.parse(o.x);
  auto wy = a.parse(o.y);
  auto ball = enumerate_ball(pres, o.radius, o.cap);
  auto x = locate(ball, wx, "x");
  auto y = locate(ball, wy, "y");
  auto result = lcm(ball, x, y);
  json item = lcm_json(ball, x, y, result);
  item["name"] = "lcm";
  item["x"] = a.format(ball.word(x));
  item["y"] = a.format(ball.word(y));
  r.doc["results"].push_back(item);
  r.text.push_back(lcm_text(ball, x, y, result));
  if (!resolved(result)) {
    r.status.absorb(Verdict::inconclusive(o.radius, std::string(kind_name(result))));
  }
  return r;
}

OperatorFamily<Rational> family_for(const Options& o, const Ball& ball, Report& r,
                                    const std::optional<ParabolicInclusion>& inc) {
  if (o.rep == "regular") {
    if (inc) {
      throw ValidationError("--subset with --rep regular is not supported; give a file");
    }
    return build_regular_rep<Rational>(ball).family;
  }
  auto text = read_file(o.rep);
  r.doc["input"]["rep_sha256"] = sha256_hex(text);
  auto rep = parse_representation(text, ball.presentation());
  if (inc) {
    return extend_by_zero(*inc, rep);
  }
  for (auto s : ball.generators()) {
    if (!rep.assigns(s)) {
      throw ValidationError("representation file gives no matrix for generator " +
                            ball.presentation().alphabet().name(s));
    }
  }
  return evaluate_on_ball(rep, ball);
}

void run_pair_check(const Options& o, const Ball& ball, Report& r) {
  std::optional<ParabolicInclusion> none;
  auto fam = family_for(o, ball, r, none);
  std::vector<element_pair> pairs;
  std::size_t unresolved = 0;
  for (element_id x = 0; x < ball.size(); ++x) {
    for (element_id y = x; y < ball.size(); ++y) {
      if (resolved(lcm(ball, x, y))) {
        pairs.emplace_back(x, y);
      } else {
        ++unresolved;
      }
    }
  }
  auto v = o.check == "covariance" ? check_covariance(fam, ball, pairs)
                                   : check_wick(fam, ball, pairs);
  const auto& a = ball.presentation().alphabet();
  add_verdict(r, o.check, v, a,
              {{"rep", o.rep == "regular" ? "regular" : "file"},
               {"pairs_checked", pairs.size()},
               {"pairs_unresolved", unresolved}});
  r.text.push_back("  " + std::to_string(pairs.size()) + " resolved pairs checked, " +
                   std::to_string(unresolved) + " unresolved pairs skipped");
}

void run_inclusion(const Options& o, const Ball& ball, Report& r) {
  if (o.subset.empty()) {
    throw ValidationError("--check inclusion needs --subset");
  }
  const auto& a = ball.presentation().alphabet();
  ParabolicInclusion inc(ball, parse_generators(a, o.subset));
  json subset = json::array();
  for (auto s : inc.subset()) {
    subset.push_back(a.name(s));
  }
  r.doc["parameters"]["subset"] = subset;
  add_verdict(r, "closed-under-factorization", check_closed_under_factorization(inc), a);
  add_verdict(r, "preserves-orthogonality", check_preserves_orthogonality(inc), a);
  add_verdict(r, "respects-lcm", check_respects_lcm(inc), a);
}

void run_zf(const Options& o, const Ball& ball, Report& r) {
  if (o.set.empty()) {
    throw ValidationError("--check zf needs --set");
  }
  const auto& a = ball.presentation().alphabet();
  std::vector<element_id> f;
  json set = json::array();
  for (const auto& w : a.parse_list(o.set)) {
    auto x = locate(ball, w, "set element " + a.format(w));
    if (std::find(f.begin(), f.end(), x) == f.end()) {
      f.push_back(x);
      set.push_back(a.format(ball.word(x)));
    }
  }
  r.doc["parameters"]["set"] = set;
  r.doc["parameters"]["rep"] = o.rep == "regular" ? "regular" : "file";
  std::optional<ParabolicInclusion> inc;
  if (!o.subset.empty()) {
    inc.emplace(ball, parse_generators(a, o.subset));
    json subset = json::array();
    for (auto s : inc->subset()) {
      subset.push_back(a.name(s));
    }
    r.doc["parameters"]["subset"] = subset;
  }
  auto fam = family_for(o, ball, r, inc);
  DenseMatrix<Rational> z;
  try {
    z = z_functional(fam, ball, f);
  } catch (const InconclusiveError& e) {
    add_verdict(r, "zf", Verdict::inconclusive(ball.radius(), e.what()), a);
    return;
  }
  bool positive = psd(z);
  auto v = Verdict::holds(ball.radius());
  if (!positive) {
    Witness w{"z-positivity", {}, "Z(F) is not positive semidefinite"};
    for (std::size_t i = 0; i < f.size(); ++i) {
      w.elements.emplace_back("f" + std::to_string(i + 1), ball.word(f[i]));
    }
    v = Verdict::fails(ball.radius(), std::move(w));
  }
  add_verdict(r, "zf", v, a, {{"psd", positive}, {"dim", z.rows()}, {"matrix", matrix_json(z)}});
  r.text.push_back(std::string("  Z(F) is ") + (positive ? "" : "not ") +
                   "positive semidefinite (dimension " + std::to_string(z.rows()) + ")");
}

Report cmd_check(const Options& o) {
  auto r = start_report("check", o);
  r.doc["parameters"]["check"] = o.check;
  auto in = load(o, r);
  auto ball = enumerate_ball(in.spec.presentation, o.radius, o.cap);
  const auto& a = ball.presentation().alphabet();
  r.doc["ball_size"] = ball.size();
  if (o.check == "covariance" || o.check == "wick") {
    run_pair_check(o, ball, r);
  } else if (o.check == "rightlcm") {
    add_verdict(r, "right-lcm", verify_right_lcm(ball), a);
  } else if (o.check == "cancellativity") {
    add_verdict(r, "cancellativity", check_cancellativity(ball), a);
  } else if (o.check == "inclusion") {
    run_inclusion(o, ball, r);
  } else if (o.check == "zf") {
    run_zf(o, ball, r);
  }
  return r;
}

CoxeterMatrix parse_matrix_option(const std::string& text) {
  std::vector<std::vector<std::uint32_t>> rows(1);
  std::istringstream in(text);
  std::string tok;
  std::size_t col = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    char c = i < text.size() ? text[i] : ';';
    if (c == ';' || c == ' ' || c == ',') {
      if (!tok.empty()) {
        if (tok == "inf") {
          rows.back().push_back(CoxeterMatrix::infinity);
        } else {
          std::size_t used = 0;
          unsigned long v = 0;
          try {
            v = std::stoul(tok, &used);
          } catch (const std::exception&) {
            used = 0;
          }
          if (used != tok.size() || v >= CoxeterMatrix::infinity) {
            throw ParseError(0, col + 1, "expected an integer or inf, got '" + tok + "'");
          }
          rows.back().push_back(static_cast<std::uint32_t>(v));
        }
        tok.clear();
      }
      if (c == ';' && i < text.size()) {
        rows.emplace_back();
      }
      continue;
    }
    if (tok.empty()) {
      col = i;
    }
    tok += c;
  }
  if (rows.back().empty()) {
    rows.pop_back();
  }
  for (const auto& row : rows) {
    if (row.size() != rows.size()) {
      throw ValidationError("--matrix must be square, rows separated by ';'");
    }
  }
  return CoxeterMatrix::from_rows(rows);
}

json verdict_json(const AmenabilityVerdict& v) {
  json j{{"kind", std::string(to_string(v.kind))},
         {"reason", v.reason},
         {"citation", v.citation}};
  if (v.dihedral) {
    j["dihedral"] = {{"i", v.dihedral->i + 1},
                     {"j", v.dihedral->j + 1},
                     {"m", format_coxeter_entry(v.dihedral->m)}};
  }
  if (v.factor) {
    j["factor"] = *v.factor + 1;
  }
  return j;
}

AmenabilityVerdict spec_verdict(const MonoidSpec& spec) {
  if (spec.kind == MonoidSpec::Kind::GraphProduct) {
    std::vector<AmenabilityVerdict> verdicts;
    std::vector<HomogeneousPresentation> factors;
    for (const auto& f : spec.factors) {
      verdicts.push_back(spec_verdict(f));
      factors.push_back(f.presentation);
    }
    return propagate_graph_product(spec.graph, verdicts, factors);
  }
  if (spec.coxeter) {
    return amenability_verdict(*spec.coxeter);
  }
  AmenabilityVerdict v;
  v.kind = AmenabilityVerdict::Kind::Unknown;
  v.reason = "not an Artin monoid";
  v.citation = "no classification applies to a general presentation";
  return v;
}

void classify_matrix(const CoxeterMatrix& m, const Alphabet& a, const Options& o, Report& r) {
  auto cls = classify(m);
  json c{{"rank", m.rank()},
         {"right_angled", cls.right_angled},
         {"spherical", cls.spherical},
         {"abelian", cls.abelian},
         {"component_types", cls.component_types}};
  if (cls.offending_entry) {
    const auto& e = *cls.offending_entry;
    c["offending_entry"] = {{"i", e.i + 1}, {"j", e.j + 1}, {"m", format_coxeter_entry(e.m)},
                            {"generators", {a.name(static_cast<letter_type>(e.i)),
                                            a.name(static_cast<letter_type>(e.j))}}};
  }
  r.doc["class"] = c;
  std::string types;
  for (const auto& t : cls.component_types) {
    types += (types.empty() ? "" : " + ") + t;
  }
  r.text.push_back(std::string("right-angled: ") + (cls.right_angled ? "yes" : "no") +
                   ", spherical: " + (cls.spherical ? "yes (" + types + ")" : "no") +
                   ", abelian: " + (cls.abelian ? "yes" : "no"));
  if (cls.right_angled || m.rank() == 2) {
    if (!cls.right_angled) {
      r.doc["dihedral_witness"] = {{"note", "already dihedral; the witness is the whole monoid"}};
      r.text.push_back("dihedral witness: already dihedral; the witness is the whole monoid");
    }
    return;
  }
  auto report = dihedral_witness_report(m, o.radius, o.cap);
  json w{{"generators", {a.name(static_cast<letter_type>(report.pair.i)),
                         a.name(static_cast<letter_type>(report.pair.j))}},
         {"m", format_coxeter_entry(report.pair.m)},
         {"radius", report.radius},
         {"closed_under_factorization", verdict_json(report.closed_under_factorization, a)},
         {"preserves_orthogonality", verdict_json(report.preserves_orthogonality, a)},
         {"respects_lcm", verdict_json(report.respects_lcm, a)}};
  if (!report.caveat.empty()) {
    w["caveat"] = report.caveat;
  }
  r.doc["dihedral_witness"] = w;
  r.text.push_back("dihedral witness {" + a.name(static_cast<letter_type>(report.pair.i)) +
                   ", " + a.name(static_cast<letter_type>(report.pair.j)) + "}, m = " +
                   format_coxeter_entry(report.pair.m) + ", radius " +
                   std::to_string(report.radius) + ":");
  r.text.push_back("  " + verdict_text("closed-under-factorization",
                                       report.closed_under_factorization, a));
  r.text.push_back("  " + verdict_text("preserves-orthogonality",
                                       report.preserves_orthogonality, a));
  r.text.push_back("  " + verdict_text("respects-lcm", report.respects_lcm, a));
  if (!report.caveat.empty()) {
    r.text.push_back("  caveat: " + report.caveat);
  }
}

Report cmd_classify(const Options& o) {
  auto r = start_report("classify", o);
  AmenabilityVerdict verdict;
  if (!o.matrix.empty()) {
    if (!o.spec_path.empty()) {
      throw ValidationError("give either a spec file or --matrix, not both");
    }
    auto m = parse_matrix_option(o.matrix);
    r.doc["input"] = {{"sha256", sha256_hex(o.matrix)}, {"kind", "matrix"}};
    auto a = Alphabet::standard(m.rank());
    classify_matrix(m, a, o, r);
    verdict = amenability_verdict(m);
  } else {
    if (o.spec_path.empty()) {
      throw ValidationError("classify needs a spec file or --matrix");
    }
    auto in = load(o, r);
    const auto& spec = in.spec;
    if (spec.kind == MonoidSpec::Kind::Presentation) {
      throw ValidationError("classify needs an Artin monoid or a graph product, got a "
                            "general presentation");
    }
    if (spec.coxeter) {
      classify_matrix(*spec.coxeter, spec.presentation.alphabet(), o, r);
    }
    verdict = spec_verdict(spec);
  }
  r.doc["verdict"] = verdict_json(verdict);
  r.text.push_back("verdict: " + std::string(to_string(verdict.kind)) + " (" + verdict.reason +
                   ")");
  r.text.push_back("  " + verdict.citation);
  if (verdict.kind == AmenabilityVerdict::Kind::Unknown) {
    r.status.absorb(Verdict::inconclusive(o.radius, verdict.reason));
  }
  return r;
}

Report cmd_ball(const Options& o) {
  auto r = start_report("ball", o);
  auto in = load(o, r);
  auto ball = enumerate_ball(in.spec.presentation, o.radius, o.cap);
  const auto& a = ball.presentation().alphabet();
  auto sizes = ball.sizes_by_length();
  r.doc["size"] = ball.size();
  r.doc["sizes_by_length"] = sizes;
  std::string line;
  for (auto s : sizes) {
    line += (line.empty() ? "" : " ") + std::to_string(s);
  }
  r.text.push_back("elements: " + std::to_string(ball.size()));
  r.text.push_back("by length: " + line);
  if (o.list) {
    json elements = json::array();
    for (element_id x = 0; x < ball.size(); ++x) {
      elements.push_back({{"word", a.format(ball.word(x))},
                          {"class_size", ball.element(x).class_size}});
      r.text.push_back("  " + a.format(ball.word(x)) + " (" +
                       std::to_string(ball.element(x).class_size) + " words)");
    }
    r.doc["elements"] = elements;
  }
  return r;
}

int emit(const Report& r, const Options& o, double elapsed_ms) {
  if (o.json) {
    json doc = r.doc;
    doc["status"] = std::string(to_string(r.status.status()));
    if (o.timing) {
      doc["timing_ms"] = elapsed_ms;
    }
    std::cout << doc.dump(2) << "\n";
  } else {
    for (const auto& line : r.text) {
      std::cout << line << "\n";
    }
    std::cout << "status: " << to_string(r.status.status()) << "\n";
    if (o.timing) {
      std::cout << "time: " << std::fixed << std::setprecision(1) << elapsed_ms << " ms\n";
    }
  }
  return o.assert_holds && !r.status.is_holds() ? kExitAssert : 0;
}

void common_flags(CLI::App* sub, Options& o) {
  sub->add_option("--radius,-L", o.radius, "Ball radius")->capture_default_str();
  sub->add_option("--cap", o.cap, "Maximum word-class size (default 1000000 or RLCM_CLASS_CAP)");
  sub->add_flag("--json", o.json, "Emit a canonical JSON report");
  sub->add_flag("--assert-holds", o.assert_holds, "Exit 1 unless every verdict Holds");
  sub->add_flag("--timing", o.timing, "Report elapsed time");
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Exact toolkit for homogeneous right-LCM monoids"};
  app.set_version_flag("--version", std::string("rlcm ") + RLCM_VERSION);
  app.require_subcommand(1);

  auto* lcm_cmd = app.add_subcommand("lcm", "Least common right multiple of two words");
  lcm_cmd->add_option("spec", o.spec_path, "Monoid spec file")->required();
  lcm_cmd->add_option("x", o.x, "First word")->required();
  lcm_cmd->add_option("y", o.y, "Second word")->required();
  common_flags(lcm_cmd, o);

  auto* check_cmd = app.add_subcommand("check", "Run a bounded property check");
  check_cmd->add_option("spec", o.spec_path, "Monoid spec file")->required();
  check_cmd->add_option("--check", o.check, "Property to check")
      ->required()
      ->check(CLI::IsMember(
          {"covariance", "wick", "rightlcm", "cancellativity", "inclusion", "zf"}));
  check_cmd->add_option("--subset", o.subset, "Generators of a parabolic submonoid, e.g. s1,s2");
  check_cmd->add_option("--set", o.set, "Elements F for Z(F), e.g. a,b");
  check_cmd->add_option("--rep", o.rep, "'regular' or a representation file")
      ->capture_default_str();
  common_flags(check_cmd, o);

  auto* classify_cmd = app.add_subcommand("classify", "Classify an Artin monoid");
  classify_cmd->add_option("spec", o.spec_path, "Monoid spec file");
  classify_cmd->add_option("--matrix", o.matrix, "Coxeter matrix, rows separated by ';'");
  common_flags(classify_cmd, o);

  auto* ball_cmd = app.add_subcommand("ball", "Enumerate a ball");
  ball_cmd->add_option("spec", o.spec_path, "Monoid spec file")->required();
  ball_cmd->add_flag("--list", o.list, "List every element");
  common_flags(ball_cmd, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (o.cap == 0) {
      o.cap = default_cap();
    }
    auto start = std::chrono::steady_clock::now();
    Report r;
    if (lcm_cmd->parsed()) {
      r = cmd_lcm(o);
    } else if (check_cmd->parsed()) {
      r = cmd_check(o);
    } else if (classify_cmd->parsed()) {
      r = cmd_classify(o);
    } else {
      r = cmd_ball(o);
    }
    auto elapsed = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    return emit(r, o, elapsed);
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitInput;
  } catch (const HypothesisError& e) {
    std::cerr << "hypothesis not verified: " << e.what() << "\n";
    return kExitInput;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}
