// puiseux: command-line front end for the library.
//
// Exit status: 0 on success, 1 on a domain error (message on stderr), 2 on a
// usage error. With --json every command writes exactly one JSON document.

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "puiseux/classify.hpp"
#include "puiseux/constructions.hpp"
#include "puiseux/cyclic.hpp"
#include "puiseux/error.hpp"
#include "puiseux/family.hpp"
#include "puiseux/fg_monoid.hpp"
#include "puiseux/numerical_semigroup.hpp"
#include "puiseux/serialize.hpp"
#include "puiseux/verifier.hpp"

using namespace puiseux;

namespace {

struct Options {
  std::string gens;
  std::string other;
  std::string x;
  std::string r;
  std::string z;
  std::vector<std::string> specs;
  std::string target;
  std::string eps;
  std::string primes;
  std::string subset;
  std::string report;
  std::vector<std::string> claims{"all"};
  std::string dir = "up";
  std::uint64_t cap = 8;
  std::uint64_t limit = 100000;
  std::uint64_t n = 10;
  std::uint64_t k = 2;
  std::uint64_t j = 1;
  std::uint64_t i = 1;
  std::uint64_t m = 1;
  std::uint64_t t = 1;
  std::uint64_t truncation = 50;
  bool json = false;
};

/// Plain text goes to stdout line by line; JSON is collected and printed once.
struct Output {
  bool json;
  Json doc;
  std::ostringstream text;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, sep)) out.push_back(token);
  return out;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  auto e = s.find_last_not_of(" \t");
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

std::vector<Integer> parse_integers(const std::string& text) {
  std::vector<Integer> out;
  for (const auto& tok : split(text, ',')) out.push_back(parse_integer(trim(tok)));
  return out;
}

std::vector<PositiveRational> parse_rationals(const std::string& text) {
  std::vector<PositiveRational> out;
  for (const auto& tok : split(text, ',')) out.push_back(PositiveRational::parse(trim(tok)));
  return out;
}

std::vector<std::uint64_t> parse_indices(const std::string& text) {
  std::vector<std::uint64_t> out;
  for (const auto& v : parse_integers(text)) out.push_back(to_uint64(v));
  return out;
}

Json read_json(const std::string& source) {
  std::string body;
  if (!source.empty() && source.front() == '{') {
    body = source;
  } else {
    std::ifstream in(source);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open spec file " + source);
    std::stringstream buf;
    buf << in.rdbuf();
    body = buf.str();
  }
  try {
    return Json::parse(body);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
  }
}

FamilySpec load_spec(const Options& o, std::size_t which = 0) {
  if (o.specs.size() <= which) {
    throw Error(ErrorCode::PreconditionViolated, "missing --spec");
  }
  return family_from_json(read_json(o.specs[which]));
}

/// Accepts the JSON factorization schema or the plain "k*(a) + k*(a)" form.
Factorization parse_factorization(const std::string& text) {
  if (!text.empty() && text.front() == '{') return factorization_from_json(read_json(text));
  Factorization z;
  if (trim(text) == "0") return z;
  for (const auto& term : split(text, '+')) {
    const std::string s = trim(term);
    auto star = s.find('*');
    if (star == std::string::npos) {
      z.add(PositiveRational::parse(s));
      continue;
    }
    std::string atom = trim(s.substr(star + 1));
    if (atom.size() >= 2 && atom.front() == '(' && atom.back() == ')') {
      atom = atom.substr(1, atom.size() - 2);
    }
    z.add(PositiveRational::parse(atom), parse_integer(trim(s.substr(0, star))));
  }
  return z;
}

std::string join(const std::vector<Integer>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + xs[i].get_str();
  return out;
}

std::string join(const std::vector<PositiveRational>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + xs[i].str();
  return out;
}

Json ints_json(const std::vector<Integer>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(integer_json(x));
  return out;
}

Json rationals_json(const std::vector<PositiveRational>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(x.str());
  return out;
}

std::string verdict_line(const char* name, const Finding& f) {
  std::string line = std::string(name) + ": " + std::string(to_string(f.verdict));
  if (!f.citation.empty()) line += " [" + f.citation + (f.paper_asserted ? ", asserted" : "") + "]";
  return line;
}

// ---------------------------------------------------------------------------

void ns_mingens(const Options& o, Output& out) {
  auto gens = minimal_generators(NumericalSemigroup::parse(o.gens));
  if (out.json) out.doc = ints_json(gens);
  else out.text << join(gens) << "\n";
}

void ns_frobenius(const Options& o, Output& out) {
  Integer f = frobenius(NumericalSemigroup::parse(o.gens));
  if (out.json) out.doc = {{"frobenius", integer_json(f)}};
  else out.text << f.get_str() << "\n";
}

void ns_member(const Options& o, Output& out) {
  NumericalSemigroup s = NumericalSemigroup::parse(o.gens);
  auto rep = find_representation(s, parse_integer(o.x));
  if (out.json) {
    out.doc = {{"member", rep.has_value()}};
    if (rep) out.doc["witness"] = ints_json(*rep);
    return;
  }
  out.text << (rep ? "true" : "false") << "\n";
  if (rep) {
    std::string terms;
    for (std::size_t i = 0; i < rep->size(); ++i) {
      if ((*rep)[i] == 0) continue;
      terms += (terms.empty() ? "" : " + ") + (*rep)[i].get_str() + "*" + s.generators()[i].get_str();
    }
    out.text << "witness: " << o.x << " = " << (terms.empty() ? "0" : terms) << "\n";
  }
}

void ns_factorize(const Options& o, Output& out) {
  NumericalSemigroup s = NumericalSemigroup::parse(o.gens);
  auto reps = representations(s, parse_integer(o.x));
  if (out.json) {
    out.doc = Json::array();
    for (const auto& r : reps) out.doc.push_back(ints_json(r));
    return;
  }
  out.text << "generators: " << join(s.generators()) << "\n";
  for (const auto& r : reps) out.text << "[" << join(r) << "]\n";
  out.text << reps.size() << " representation(s)\n";
}

void fg_atoms(const Options& o, Output& out) {
  auto a = atoms(FgMonoid::parse(o.gens));
  if (out.json) out.doc = rationals_json(a);
  else out.text << join(a) << "\n";
}

/// One factorization over the given generators, found through the scaled
/// numerical semigroup without enumerating the rest.
std::optional<Factorization> one_factorization(const FgMonoid& m, const Rational& x) {
  if (x.is_zero()) return Factorization();
  if (m.is_trivial()) return std::nullopt;
  ScaledForm form = to_scaled_integer(m);
  Rational scaled = x / form.scale.value();
  if (!scaled.is_integer()) return std::nullopt;
  auto rep = find_representation(form.semigroup, scaled.num());
  if (!rep) return std::nullopt;
  Factorization z;
  for (std::size_t i = 0; i < rep->size(); ++i) z.add(m.generators()[i], (*rep)[i]);
  return z;
}

void fg_member(const Options& o, Output& out) {
  FgMonoid m = FgMonoid::parse(o.gens);
  Rational x = Rational::parse(o.x);
  const bool member = contains(m, x);
  std::optional<Factorization> witness;
  if (member) witness = one_factorization(m, x);
  if (out.json) {
    out.doc = {{"member", member}};
    if (witness) out.doc["witness"] = to_json(*witness);
    return;
  }
  out.text << (member ? "true" : "false") << "\n";
  if (witness) out.text << "witness: " << x.str() << " = " << witness->str() << "\n";
}

void fg_factorize(const Options& o, Output& out) {
  auto zs = factorizations(FgMonoid::parse(o.gens), Rational::parse(o.x));
  if (out.json) {
    out.doc = Json::array();
    for (const auto& z : zs) out.doc.push_back(to_json(z));
    return;
  }
  for (const auto& z : zs) out.text << z.str() << "  (length " << z.length().get_str() << ")\n";
  out.text << zs.size() << " factorization(s)\n";
}

void fg_lengths(const Options& o, Output& out) {
  auto ls = lengths(FgMonoid::parse(o.gens), Rational::parse(o.x));
  if (out.json) out.doc = ints_json(ls);
  else out.text << "{" << join(ls) << "}\n";
}

void fg_support(const Options& o, Output& out) {
  auto s = atom_support(FgMonoid::parse(o.gens), Rational::parse(o.x));
  if (out.json) out.doc = rationals_json(s);
  else out.text << "{" << join(s) << "}\n";
}

void fg_iso(const Options& o, Output& out) {
  if (o.other.empty()) throw Error(ErrorCode::PreconditionViolated, "missing --other");
  auto w = isomorphism_witness(FgMonoid::parse(o.gens), FgMonoid::parse(o.other));
  if (out.json) {
    out.doc = {{"isomorphic", w.has_value()}};
    if (w) out.doc["witness"] = w->str();
    return;
  }
  out.text << (w ? "true" : "false") << "\n";
  if (w) out.text << "witness: " << w->str() << " * M = N\n";
}

void family_gen(const Options& o, Output& out) {
  FamilySpec spec = load_spec(o);
  PositiveRational g = generator_at(spec, o.n);
  if (out.json) out.doc = {{"index", o.n}, {"generator", g.str()}};
  else out.text << g.str() << "\n";
}

void family_truncate(const Options& o, Output& out) {
  FgMonoid m = truncate(load_spec(o), o.n);
  if (out.json) out.doc = rationals_json(m.generators());
  else out.text << join(m.generators()) << "\n";
}

void family_classify(const Options& o, Output& out) {
  FamilySpec spec = load_spec(o);
  ClassificationReport r = classify(spec);
  if (out.json) {
    out.doc = to_json(r);
    return;
  }
  out.text << family_name(spec) << "\n"
           << verdict_line("dense", r.dense) << "\n"
           << verdict_line("atomic", r.atomic) << "\n"
           << verdict_line("antimatter", r.antimatter) << "\n"
           << verdict_line("strongly_bounded", r.strongly_bounded) << "\n"
           << verdict_line("finite", r.finite) << "\n"
           << verdict_line("hereditarily_atomic", r.hereditarily_atomic) << "\n";
}

void family_approx(const Options& o, Output& out) {
  FamilySpec spec = load_spec(o);
  PositiveRational target = PositiveRational::parse(o.target);
  PositiveRational eps = PositiveRational::parse(o.eps);
  Approximation a = approximate(spec, target, eps, o.limit);
  if (out.json) {
    out.doc = to_json(a, target);
    return;
  }
  out.text << a.value.str() << "\n"
           << "witness: " << a.value.str() << " = " << a.multiplier.get_str() << "*("
           << a.generator.str() << "), generator " << a.index << "\n"
           << "gap: " << (target.value() - a.value.value()).str() << "\n";
}

void family_dense_atoms(const Options& o, Output& out) {
  auto entries = dense_atom_monoid(rseq::CalkinWilf{}, o.j, o.n);
  if (out.json) {
    out.doc = to_json(entries);
    return;
  }
  for (const auto& e : entries) {
    out.text << e.k << ": " << e.generator.str() << "  target " << e.target.str() << "  error "
             << e.error.str() << "\n";
  }
}

void family_noniso(const Options& o, Output& out) {
  if (o.specs.size() != 2) throw Error(ErrorCode::PreconditionViolated, "noniso needs two --spec");
  auto cert = disjoint_prime_noniso(load_spec(o, 0), load_spec(o, 1));
  if (out.json) {
    out.doc = cert ? to_json(*cert) : Json(nullptr);
    return;
  }
  if (cert) out.text << "not isomorphic: " << cert->reason << "\n";
  else out.text << "no certificate\n";
}

void cyclic_member(const Options& o, Output& out) {
  PositiveRational r = PositiveRational::parse(o.r);
  CyclicMembership m = cyclic_contains(r, Rational::parse(o.x), o.cap);
  if (out.json) {
    out.doc = to_json(m);
    return;
  }
  if (auto* yes = std::get_if<cyclic::Member>(&m)) {
    out.text << "true\nwitness: " << o.x << " = " << yes->witness.str() << "\n";
  } else if (auto* no = std::get_if<cyclic::NonMember>(&m)) {
    out.text << "false\nreason: " << no->reason << ": " << no->detail << "\n";
  } else {
    out.text << "unknown (no representation with exponents up to "
             << std::get<cyclic::UnknownUpTo>(m).cap << ")\n";
  }
}

void cyclic_factorize(const Options& o, Output& out) {
  auto zs = cyclic_factorizations(PositiveRational::parse(o.r), Rational::parse(o.x), o.cap);
  if (out.json) {
    out.doc = Json::array();
    for (const auto& z : zs) out.doc.push_back(to_json(z));
    return;
  }
  for (const auto& z : zs) out.text << z.str() << "  (length " << z.length().get_str() << ")\n";
  out.text << zs.size() << " factorization(s)\n";
}

void cyclic_trade_cmd(const Options& o, Output& out) {
  PositiveRational r = PositiveRational::parse(o.r);
  TradeDirection dir;
  if (o.dir == "up") dir = TradeDirection::Up;
  else if (o.dir == "down") dir = TradeDirection::Down;
  else throw Error(ErrorCode::ParseError, "--dir must be up or down");
  Factorization z = parse_factorization(o.z);
  Factorization traded = cyclic_trade(r, z, o.t, dir);
  if (out.json) out.doc = to_json(traded);
  else out.text << traded.str() << "  (length " << traded.length().get_str() << ")\n";
}

void cyclic_embed(const Options& o, Output& out) {
  auto rs = parse_rationals(o.r);
  CyclicEmbedding e = generalized_cyclic_embed(rs, o.i, o.m);
  if (out.json) {
    out.doc = to_json(e, rs, o.i, o.m);
    return;
  }
  out.text << "(" << rs.at(o.i - 1).str() << ")^" << o.m << " = " << e.coefficient.get_str()
           << " * (" << Rational(e.prime, e.denominator_product).str() << ")^" << o.m << "\n";
}

void witness_kprimary(const Options& o, Output& out) {
  AntimatterWitness w = kprimary_antimatter_witness(parse_integers(o.primes), o.limit);
  if (out.json) {
    out.doc = to_json(w);
    return;
  }
  out.text << "m = " << w.m.get_str() << ", p' = " << w.p_prime.get_str() << ", n = "
           << w.n.get_str() << ", q' = " << w.q_prime.get_str() << "\n"
           << w.generator.str() << " = " << w.decomposition.str() << "\n";
}

void witness_padic(const Options& o, Output& out) {
  FamilySpec spec = load_spec(o);
  auto* padic = std::get_if<family::PAdic>(&spec);
  if (!padic) throw Error(ErrorCode::PreconditionViolated, "padic-atoms needs a PAdic spec");
  PadicExtraction e = padic_candidate_atoms(*padic, o.n);
  if (out.json) {
    out.doc = to_json(e, *padic);
    return;
  }
  out.text << "q = " << e.q.get_str() << (e.decreasing ? "" : " (decrease not certified)")
           << "\nkept:";
  for (auto i : e.kept) out.text << " " << i;
  out.text << "\n";
  for (const auto& x : e.excluded) {
    out.text << "r_" << x.index << " = " << padic->p.get_str() << "^" << x.p_exponent.get_str()
             << " * " << e.q.get_str() << "^" << x.q_exponent.get_str() << " * r_" << x.via
             << "\n";
  }
}

void witness_sumk(const Options& o, Output& out) {
  auto subset = parse_indices(o.subset);
  const bool atom = sum_kprimary_atom_check(o.k, subset, o.n);
  PositiveRational g = sum_kprimary_generator(subset);
  if (out.json) out.doc = {{"generator", g.str()}, {"atom", atom}, {"n", o.n}};
  else out.text << g.str() << (atom ? " is" : " is not") << " an atom\n";
}

void verify_run(const Options& o, Output& out) {
  VerifierParams params;
  params.truncation = o.truncation;
  params.cap = o.cap;
  params.prime_limit = o.limit;
  auto outcomes = run_claims(o.claims, params);
  Json report = Json::array();
  for (const auto& c : outcomes) report.push_back(to_json(c));
  if (!o.report.empty()) {
    std::ofstream f(o.report);
    if (!f) throw Error(ErrorCode::PreconditionViolated, "cannot write " + o.report);
    f << report.dump(2) << "\n";
  }
  if (out.json) {
    out.doc = report;
    return;
  }
  for (const auto& c : outcomes) {
    out.text << c.claim_id << " " << to_string(c.status) << "  (" << c.witnesses.size()
             << " witness lines)\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with Puiseux monoids and numerical semigroups"};
  app.require_subcommand(1);
  Options o;
  std::function<void(const Options&, Output&)> action;

  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help,
                  void (*fn)(const Options&, Output&)) {
    CLI::App* cmd = parent->add_subcommand(name, help);
    cmd->add_flag("--json", o.json, "Emit one JSON document");
    cmd->callback([&action, fn] { action = fn; });
    return cmd;
  };
  auto group = [&](const std::string& name, const std::string& help) {
    CLI::App* g = app.add_subcommand(name, help);
    g->require_subcommand(1);
    return g;
  };

  auto* ns = group("ns", "Numerical semigroups");
  auto* c = leaf(ns, "mingens", "Minimal generating set", ns_mingens);
  c->add_option("--gens", o.gens, "Comma-separated positive integers")->required();
  c = leaf(ns, "frobenius", "Frobenius number", ns_frobenius);
  c->add_option("--gens", o.gens)->required();
  c = leaf(ns, "member", "Membership with a witness", ns_member);
  c->add_option("--gens", o.gens)->required();
  c->add_option("--x", o.x, "Integer")->required();
  c = leaf(ns, "factorize", "All representations", ns_factorize);
  c->add_option("--gens", o.gens)->required();
  c->add_option("--x", o.x)->required();

  auto* fg = group("fg", "Finitely generated Puiseux monoids");
  c = leaf(fg, "atoms", "Atoms", fg_atoms);
  c->add_option("--gens", o.gens, "Comma-separated n/d tokens")->required();
  for (auto [name, help, fn] :
       std::initializer_list<std::tuple<const char*, const char*, void (*)(const Options&, Output&)>>{
           {"member", "Membership with a witness", fg_member},
           {"factorize", "All factorizations", fg_factorize},
           {"lengths", "Set of lengths", fg_lengths},
           {"support", "Atoms dividing x", fg_support}}) {
    c = leaf(fg, name, help, fn);
    c->add_option("--gens", o.gens)->required();
    c->add_option("--x", o.x, "Rational n/d")->required();
  }
  c = leaf(fg, "iso", "Isomorphism witness", fg_iso);
  c->add_option("--gens", o.gens)->required();
  c->add_option("--other", o.other, "Second generator list")->required();

  auto* fam = group("family", "Infinite families given by closed forms");
  c = leaf(fam, "gen", "n-th generator", family_gen);
  c->add_option("--spec", o.specs, "FamilySpec JSON file (or inline JSON)")->required();
  c->add_option("--n", o.n, "1-based index")->required();
  c = leaf(fam, "truncate", "First n generators", family_truncate);
  c->add_option("--spec", o.specs)->required();
  c->add_option("--n", o.n)->required();
  c = leaf(fam, "classify", "Structural properties", family_classify);
  c->add_option("--spec", o.specs)->required();
  c = leaf(fam, "approx", "Element within eps below target", family_approx);
  c->add_option("--spec", o.specs)->required();
  c->add_option("--target", o.target)->required();
  c->add_option("--eps", o.eps)->required();
  c->add_option("--limit", o.limit, "Generator search limit");
  c = leaf(fam, "dense-atoms", "Atoms approximating Calkin-Wilf targets", family_dense_atoms);
  c->add_option("--class", o.j, "Prime partition class j >= 1");
  c->add_option("--n", o.n, "Number of generators");
  c = leaf(fam, "noniso", "Non-isomorphism certificate", family_noniso);
  c->add_option("--spec", o.specs, "Two FamilySpec files")->required();

  auto* cyc = group("cyclic", "Multiplicatively cyclic monoids <r^t>");
  c = leaf(cyc, "member", "Membership", cyclic_member);
  c->add_option("--r", o.r)->required();
  c->add_option("--x", o.x)->required();
  c->add_option("--cap", o.cap, "Exponent cap");
  c = leaf(cyc, "factorize", "Factorizations with exponents up to cap", cyclic_factorize);
  c->add_option("--r", o.r)->required();
  c->add_option("--x", o.x)->required();
  c->add_option("--cap", o.cap);
  c = leaf(cyc, "trade", "Apply one trade move", cyclic_trade_cmd);
  c->add_option("--r", o.r)->required();
  c->add_option("--z", o.z, "Factorization, e.g. \"3*(3/2)\"")->required();
  c->add_option("--t", o.t, "Lower exponent")->required();
  c->add_option("--dir", o.dir, "up or down")->check(CLI::IsMember({"up", "down"}));
  c = leaf(cyc, "embed", "Generalized cyclic embedding", cyclic_embed);
  c->add_option("--r", o.r, "Comma-separated bases")->required();
  c->add_option("--i", o.i, "1-based base index")->required();
  c->add_option("--m", o.m, "Exponent")->required();

  auto* wit = group("witness", "Constructive witnesses");
  c = leaf(wit, "kprimary", "Antimatter decomposition", witness_kprimary);
  c->add_option("--primes", o.primes, "Comma-separated distinct primes")->required();
  c->add_option("--limit", o.limit, "Search limit");
  c = leaf(wit, "padic-atoms", "Candidate atoms of a p-adic family", witness_padic);
  c->add_option("--spec", o.specs)->required();
  c->add_option("--n", o.n, "Truncation");
  c = leaf(wit, "sumk-atom", "Atom check in a sum k-primary truncation", witness_sumk);
  c->add_option("--k", o.k)->required();
  c->add_option("--s", o.subset, "Comma-separated 1-based prime indices")->required();
  c->add_option("--n", o.n, "Truncation over primes 1..n")->required();

  auto* ver = group("verify", "Claim verifier");
  c = leaf(ver, "run", "Run claims", verify_run);
  c->add_option("--claims", o.claims, "Claim ids or all")->delimiter(',');
  c->add_option("--truncation", o.truncation);
  c->add_option("--cap", o.cap);
  c->add_option("--limit", o.limit, "Prime search limit");
  c->add_option("--report", o.report, "Also write the JSON report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  Output out{o.json, Json(), {}};
  try {
    action(o, out);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  if (out.json) std::cout << out.doc.dump(2) << "\n";
  else std::cout << out.text.str();
  return 0;
}
