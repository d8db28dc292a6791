// coxsig: command-line driver for the Coxeter signature library.
//
// Exit codes: 0 success, 1 domain error, 2 usage error.  Output documents
// go to stdout and are deterministic for a fixed argv and cache state; all
// big integers are serialized as decimal strings.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "coxsig/cuspidal.hpp"
#include "coxsig/repr.hpp"

using coxsig::BigInt;
using coxsig::BigRat;
using coxsig::ClassTable;
using coxsig::CoxeterSystem;
using coxsig::GroupTable;
using coxsig::MultiPoly;
using coxsig::QuadScalar;
using coxsig::Signature;
using coxsig::Word;
using nlohmann::json;

namespace {

struct Options {
  std::string format = "json";
  std::string labeling = "table2";
  std::string data_file = "data/cuspidal_reps.json";
  unsigned threads = 1;
  bool extended = false;
};

std::vector<std::size_t> labeling_perm(const std::string& labeling, std::size_t rank) {
  std::vector<std::size_t> perm(rank);
  if (labeling == "table2") {
    for (std::size_t i = 0; i < rank; ++i) perm[i] = i;
  } else if (labeling == "example73") {
    // Reversed node order, as used by the published H3 example.
    for (std::size_t i = 0; i < rank; ++i) perm[i] = rank - 1 - i;
  } else if (labeling.rfind("perm:", 0) == 0) {
    std::stringstream ss(labeling.substr(5));
    std::string tok;
    std::size_t i = 0;
    std::vector<bool> used(rank, false);
    while (std::getline(ss, tok, ',')) {
      if (i >= rank) throw coxsig::domain_error("labeling permutation too long");
      std::size_t v = std::stoul(tok);
      if (v < 1 || v > rank || used[v - 1])
        throw coxsig::domain_error("labeling is not a permutation of 1.." +
                                   std::to_string(rank));
      used[v - 1] = true;
      perm[i++] = v - 1;
    }
    if (i != rank) throw coxsig::domain_error("labeling permutation too short");
  } else {
    throw coxsig::domain_error("unknown labeling " + labeling +
                               " (use table2, example73 or perm:i,j,...)");
  }
  return perm;
}

CoxeterSystem make_system(const std::string& type_spec, const Options& opt) {
  CoxeterSystem sys = coxsig::parse_type(type_spec);
  auto perm = labeling_perm(opt.labeling, sys.rank);
  bool ident = true;
  for (std::size_t i = 0; i < sys.rank; ++i) ident = ident && perm[i] == i;
  return ident ? sys : coxsig::relabel(sys, perm);
}

Signature parse_alpha(const std::string& csv, std::size_t rank) {
  Signature a;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) a.push_back(unsigned(std::stoul(tok)));
  if (a.size() != rank)
    throw coxsig::domain_error("alpha has " + std::to_string(a.size()) +
                               " parts; the type has rank " + std::to_string(rank));
  return a;
}

json scalar_json(const QuadScalar& q) {
  json j;
  j["num"] = boost::multiprecision::numerator(q.rat()).str();
  j["den"] = boost::multiprecision::denominator(q.rat()).str();
  j["irr_num"] = boost::multiprecision::numerator(q.irr()).str();
  j["irr_den"] = boost::multiprecision::denominator(q.irr()).str();
  j["d"] = q.disc();
  return j;
}

QuadScalar scalar_from_json(const json& j) {
  if (j.is_number_integer()) return QuadScalar(BigRat(j.get<long long>()));
  if (j.is_string()) return QuadScalar(BigRat(j.get<std::string>()));
  auto part = [&](const char* num, const char* den) {
    BigInt n = 0, d = 1;
    if (j.contains(num)) n = BigInt(j[num].is_string() ? j[num].get<std::string>()
                                                       : std::to_string(j[num].get<long long>()));
    if (j.contains(den)) d = BigInt(j[den].is_string() ? j[den].get<std::string>()
                                                       : std::to_string(j[den].get<long long>()));
    return BigRat(n, d);
  };
  return QuadScalar(part("num", "den"), part("irr_num", "irr_den"), j.value("d", 1));
}

json poly_json(const MultiPoly& p) {
  json terms = json::array();
  for (const auto& [mono, c] : p.terms()) {
    json t;
    t["exponents"] = mono;
    t["coeff"] = scalar_json(c);
    terms.push_back(t);
  }
  json j;
  j["nvars"] = p.nvars();
  j["terms"] = terms;
  return j;
}

MultiPoly poly_from_json(const json& j) {
  MultiPoly p(j.at("nvars").get<std::size_t>());
  for (const auto& t : j.at("terms"))
    p.add_term(t.at("exponents").get<coxsig::Mono>(), scalar_from_json(t.at("coeff")));
  return p;
}

json unipoly_json(const coxsig::UniPoly& p) {
  json coeffs = json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(scalar_json(c));
  return coeffs;
}

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

std::string var_name(std::size_t i) { return "x" + std::to_string(i); }

std::vector<std::string> var_names(std::size_t nvars) {
  std::vector<std::string> v;
  for (std::size_t i = 0; i < nvars; ++i) v.push_back(var_name(i));
  return v;
}

coxsig::Representation rep_from_spec(const std::string& spec, const CoxeterSystem& sys) {
  if (spec == "reflection") return coxsig::reflection_rep(sys);
  if (spec == "trivial") return coxsig::trivial_rep(sys.rank);
  if (spec == "sign") return coxsig::sign_rep(sys.rank);
  if (spec.rfind("young:", 0) == 0) {
    std::vector<unsigned> lambda;
    std::stringstream ss(spec.substr(6));
    std::string tok;
    unsigned n = 0;
    while (std::getline(ss, tok, ',')) {
      lambda.push_back(unsigned(std::stoul(tok)));
      n += lambda.back();
    }
    bool is_symmetric = sys.components.size() == 1 && sys.components[0].family == 'A';
    if (!is_symmetric || sys.rank + 1 != n)
      throw coxsig::domain_error("young:" + spec.substr(6) + " needs type A" +
                                 std::to_string(n ? n - 1 : 1));
    return coxsig::young_natural(lambda);
  }
  if (spec.rfind("file:", 0) == 0) {
    auto rep = coxsig::load_representation(spec.substr(5));
    if (rep.matrices.size() != sys.rank)
      throw coxsig::domain_error("representation file has " +
                                 std::to_string(rep.matrices.size()) +
                                 " generators; the type has rank " + std::to_string(sys.rank));
    return rep;
  }
  throw coxsig::domain_error("unknown representation spec " + spec +
                             " (use reflection|trivial|sign|young:...|file:...)");
}

coxsig::PolyCatalog catalog_for(const CoxeterSystem& sys) {
  if (sys.components.size() == 1 && sys.components[0].family == 'A')
    return coxsig::sn_catalog(unsigned(sys.rank + 1));
  if (sys.rank == 2) return coxsig::dihedral_catalog(sys.m(0, 1));
  throw coxsig::domain_error("no full irreducible catalog for type " + sys.type_spec +
                             " (supported: A-types and rank-2 dihedral types)");
}

// ---- subcommand bodies ----------------------------------------------------

void cmd_group(const std::string& type_spec, const Options& opt) {
  CoxeterSystem sys = make_system(type_spec, opt);
  GroupTable t = coxsig::enumerate_group_cached(sys);
  json j;
  j["type"] = type_spec;
  j["rank"] = sys.rank;
  json comps = json::array();
  for (const auto& c : sys.components) comps.push_back(c.atom());
  j["components"] = comps;
  j["order"] = BigInt(t.order).str();
  j["max_length"] = t.max_length();
  emit(j);
}

void cmd_classes(const std::string& type_spec, const Options& opt) {
  CoxeterSystem sys = make_system(type_spec, opt);
  GroupTable t = coxsig::enumerate_group_cached(sys);
  ClassTable ct = coxsig::conjugacy_classes(sys, t);
  if (opt.format == "csv") {
    std::cout << "id,name,size,min_length,cuspidal\n";
    for (std::size_t c = 0; c < ct.count(); ++c)
      std::cout << c << "," << ct.name(c) << "," << ct.classes[c].size() << ","
                << ct.min_length[c] << "," << (ct.cuspidal[c] ? 1 : 0) << "\n";
    return;
  }
  json j;
  j["type"] = type_spec;
  j["num_classes"] = ct.count();
  json arr = json::array();
  for (std::size_t c = 0; c < ct.count(); ++c) {
    json cj;
    cj["id"] = c;
    cj["name"] = ct.name(c);
    cj["size"] = ct.classes[c].size();
    cj["min_length"] = ct.min_length[c];
    cj["cuspidal"] = bool(ct.cuspidal[c]);
    if (!ct.char_poly.empty()) cj["char_poly"] = unipoly_json(ct.char_poly[c]);
    arr.push_back(cj);
  }
  j["classes"] = arr;
  emit(j);
}

void cmd_sigvec(const std::string& type_spec, const std::string& alpha_csv,
                const Options& opt) {
  CoxeterSystem sys = make_system(type_spec, opt);
  GroupTable t = coxsig::enumerate_group_cached(sys);
  ClassTable ct = coxsig::conjugacy_classes(sys, t);
  Signature alpha = parse_alpha(alpha_csv, sys.rank);
  auto v = coxsig::signature_vector(t, ct, alpha);
  if (opt.format == "csv") {
    for (std::size_t c = 0; c < v.size(); ++c)
      std::cout << (c ? "," : "") << v[c].str();
    std::cout << "\n";
    return;
  }
  if (opt.format == "latex") {
    for (std::size_t c = 0; c < v.size(); ++c)
      std::cout << (c ? " & " : "") << v[c].str();
    std::cout << " \\\\\n";
    return;
  }
  json j;
  j["type"] = type_spec;
  j["alpha"] = alpha;
  json names = json::array(), vec = json::array();
  for (std::size_t c = 0; c < ct.count(); ++c) names.push_back(ct.name(c));
  for (const auto& x : v) vec.push_back(x.str());
  j["classes"] = names;
  j["vector"] = vec;
  emit(j);
}

void cmd_iss(const std::string& type_spec, const Options& opt) {
  CoxeterSystem sys = make_system(type_spec, opt);
  GroupTable t = coxsig::enumerate_group_cached(sys);
  ClassTable ct = coxsig::conjugacy_classes(sys, t);
  coxsig::IssReport rep = coxsig::iss_for_system(sys, t, ct);
  if (opt.format == "csv" || opt.format == "latex") {
    const char* sep = opt.format == "csv" ? "," : " & ";
    const char* eol = opt.format == "csv" ? "\n" : " \\\\\n";
    for (const auto& row : rep.matrix) {
      for (std::size_t c = 0; c < row.size(); ++c)
        std::cout << (c ? sep : "") << row[c].str();
      std::cout << eol;
    }
    return;
  }
  json j;
  j["type"] = type_spec;
  json order = json::array();
  for (std::size_t c : rep.class_order) order.push_back(ct.name(c));
  j["class_order"] = order;
  j["signatures"] = rep.signatures;
  json m = json::array();
  for (const auto& row : rep.matrix) {
    json r = json::array();
    for (const auto& x : row) r.push_back(x.str());
    m.push_back(r);
  }
  j["matrix"] = m;
  j["triangular"] = rep.triangular;
  j["diagonal_nonzero"] = rep.diagonal_nonzero;
  emit(j);
}

void cmd_dpoly(const std::string& type_spec, const std::string& rep_spec, bool tilde,
               const Options& opt) {
  CoxeterSystem sys = make_system(type_spec, opt);
  auto rep = rep_from_spec(rep_spec, sys);
  MultiPoly d = tilde ? coxsig::d_tilde(rep) : coxsig::d_poly(rep);
  if (opt.format == "latex") {
    std::cout << d.str(var_names(d.nvars())) << "\n";
    return;
  }
  json j;
  j["type"] = type_spec;
  j["rep"] = rep.name;
  j["degree"] = rep.degree;
  j["tilde"] = tilde;
  j["poly"] = poly_json(d);
  j["display"] = d.str(var_names(d.nvars()));
  emit(j);
}

void cmd_decompose(const std::string& type_spec, const std::string& poly_path,
                   const Options& opt) {
  CoxeterSystem sys = make_system(type_spec, opt);
  std::ifstream in(poly_path);
  if (!in) throw coxsig::domain_error("cannot open polynomial file " + poly_path);
  json doc = json::parse(in);
  // Accept either a bare polynomial object or the wrapper emitted by dpoly.
  MultiPoly p = poly_from_json(doc.contains("nvars") ? doc : doc.at("poly"));
  auto catalog = catalog_for(sys);
  auto mult = coxsig::decompose(p, catalog);
  json j;
  j["type"] = type_spec;
  j["factors"] = mult;
  emit(j);
}

void cmd_restrict(const std::string& from, const std::string& to, const std::string& rep_spec,
                  const Options& opt) {
  auto parse_sn = [](const std::string& s) {
    if (s.size() < 2 || (s[0] != 'S' && s[0] != 's'))
      throw coxsig::domain_error("restrict: --from/--to must look like S4");
    return unsigned(std::stoul(s.substr(1)));
  };
  unsigned n = parse_sn(from), m = parse_sn(to);
  if (m >= n) throw coxsig::domain_error("restrict: target must be a smaller symmetric group");
  if (m < 2) throw coxsig::domain_error("restrict: target must be at least S2");
  CoxeterSystem sys = coxsig::parse_type("A" + std::to_string(n - 1));
  auto rep = rep_from_spec(rep_spec, sys);
  MultiPoly d = coxsig::d_poly(rep);
  MultiPoly res = coxsig::restrict_poly(d, m);
  auto mult = coxsig::decompose(res, coxsig::sn_catalog(m));
  json j;
  j["from"] = "S" + std::to_string(n);
  j["to"] = "S" + std::to_string(m);
  j["rep"] = rep.name;
  j["poly"] = poly_json(res);
  j["display"] = res.str(var_names(res.nvars()));
  j["factors"] = mult;
  emit(j);
}

void cmd_cuspcheck(const std::string& type_spec, const std::string& word_digits, int target,
                   const Options& opt) {
  CoxeterSystem sys = make_system(type_spec, opt);
  Word w = coxsig::parse_word(word_digits);
  for (std::size_t l : w)
    if (l >= sys.rank) throw coxsig::domain_error("word letter out of range for the type");
  auto t0 = std::chrono::steady_clock::now();
  coxsig::AlgAResult res;
  std::string mode;
  coxsig::CandidateStream stream(sys, coxsig::signature_of(w, sys.rank));
  BigInt total = stream.total_count();
  if (!opt.extended && total > 10000000)
    throw coxsig::domain_error("candidate set has " + total.str() +
                               " words; rerun with --extended to attempt it anyway");
  if (sys.order() <= 1000000) {
    mode = "enumeration";
    GroupTable t = coxsig::enumerate_group_cached(sys);
    ClassTable ct = coxsig::conjugacy_classes(sys, t);
    std::size_t target_class = coxsig::cuspidal_class_by_index(sys, t, ct, target);
    res = coxsig::algorithm_A_enumeration(sys, t, ct, w, target_class);
  } else {
    mode = "fingerprint";
    auto data = coxsig::load_cuspidal_data(opt.data_file, type_spec);
    const coxsig::CuspidalDatum* datum = nullptr;
    for (const auto& d : data)
      if (d.gp_index == target) datum = &d;
    if (!datum)
      throw coxsig::domain_error("no cuspidal datum with index " + std::to_string(target) +
                                 " for " + type_spec + " in " + opt.data_file);
    res = coxsig::algorithm_A_fingerprint(sys, w, coxsig::datum_char_poly(sys, *datum));
  }
  double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  json j;
  j["type"] = type_spec;
  j["word"] = word_digits;
  j["target"] = target;
  j["mode"] = mode;
  j["flag"] = res.flag;
  j["candidates_checked"] = res.candidates_checked.str();
  j["candidates_total"] = total.str();
  j["elapsed"] = elapsed;
  emit(j);
}

void cmd_verify(const std::string& type_spec, const Options& opt) {
  CoxeterSystem sys = make_system(type_spec, opt);
  GroupTable t = coxsig::enumerate_group_cached(sys);
  ClassTable ct = coxsig::conjugacy_classes(sys, t);
  coxsig::IssReport rep = coxsig::iss_for_system(sys, t, ct);
  coxsig::IsmVerdict v = coxsig::verify_ism(t, ct, rep);
  json j;
  j["type"] = type_spec;
  j["ism"] = {{"vectors_match", v.vectors_match},
              {"triangular", v.triangular},
              {"diagonal_nonzero", v.diagonal_nonzero},
              {"det_nonzero", v.det_nonzero},
              {"pass", v.pass()},
              {"detail", v.detail}};
  bool have_catalog = true;
  try {
    auto catalog = catalog_for(sys);
    auto mt = coxsig::verify_main_theorem(sys, t, ct, catalog, 100, 1);
    j["main_theorem"] = {{"pairwise_distinct", mt.pairwise_distinct},
                         {"direct_sums_ok", mt.direct_sums_ok},
                         {"ism_ok", mt.ism_ok},
                         {"trials", mt.trials},
                         {"pass", mt.pass()},
                         {"detail", mt.detail}};
  } catch (const coxsig::domain_error&) {
    have_catalog = false;
  }
  j["catalog_available"] = have_catalog;
  emit(j);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"characteristic polynomials and combinatorics of finite Coxeter groups"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--format", opt.format, "output format: json, csv or latex")
      ->check(CLI::IsMember({"json", "csv", "latex"}));
  app.add_option("--labeling", opt.labeling, "generator labeling: table2, example73, perm:...");
  app.add_option("--threads", opt.threads, "worker threads (affects wall time only)")
      ->check(CLI::PositiveNumber);
  app.add_option("--data-file", opt.data_file, "cuspidal reference data (JSON)");
  app.add_flag("--extended", opt.extended, "allow long-running candidate scans");

  std::string type_spec, alpha_csv, rep_spec = "reflection", word_digits, poly_path;
  std::string from_spec, to_spec;
  bool tilde = false;
  int target = 0;

  auto* cg = app.add_subcommand("group", "enumerate a group and print basic facts");
  cg->add_option("type", type_spec)->required();
  auto* cc = app.add_subcommand("classes", "conjugacy classes, lengths, cuspidal flags");
  cc->add_option("type", type_spec)->required();
  auto* cs = app.add_subcommand("sigvec", "signature vector over conjugacy classes");
  cs->add_option("type", type_spec)->required();
  cs->add_option("--alpha", alpha_csv, "signature, e.g. 2,4,3")->required();
  auto* ci = app.add_subcommand("iss", "independent signature sequence and its matrix");
  ci->add_option("type", type_spec)->required();
  auto* cd = app.add_subcommand("dpoly", "multivariate characteristic polynomial d(S,rho)");
  cd->add_option("type", type_spec)->required();
  cd->add_option("--rep", rep_spec, "reflection|trivial|sign|young:3,1|file:path");
  cd->add_flag("--tilde", tilde, "compute the x0 := 1 variant");
  auto* cx = app.add_subcommand("decompose", "factor a d polynomial over a catalog");
  cx->add_option("type", type_spec)->required();
  cx->add_option("--poly", poly_path, "polynomial JSON file")->required();
  auto* cr = app.add_subcommand("restrict", "restrict an S_n representation polynomial");
  cr->add_option("--from", from_spec, "source group, e.g. S4")->required();
  cr->add_option("--to", to_spec, "target group, e.g. S3")->required();
  cr->add_option("--rep", rep_spec, "representation spec");
  auto* cu = app.add_subcommand("cuspcheck", "Algorithm A tie-pair separation check");
  cu->add_option("type", type_spec)->required();
  cu->add_option("--word", word_digits, "designated word, digit string")->required();
  cu->add_option("--target", target, "cuspidal class index (1-based)")->required();
  auto* cv = app.add_subcommand("verify", "ISS/ISM and catalog verification report");
  cv->add_option("type", type_spec)->required();

  // Let global options (--format, --labeling, ...) appear after the subcommand.
  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cg->parsed()) cmd_group(type_spec, opt);
    if (cc->parsed()) cmd_classes(type_spec, opt);
    if (cs->parsed()) cmd_sigvec(type_spec, alpha_csv, opt);
    if (ci->parsed()) cmd_iss(type_spec, opt);
    if (cd->parsed()) cmd_dpoly(type_spec, rep_spec, tilde, opt);
    if (cx->parsed()) cmd_decompose(type_spec, poly_path, opt);
    if (cr->parsed()) cmd_restrict(from_spec, to_spec, rep_spec, opt);
    if (cu->parsed()) cmd_cuspcheck(type_spec, word_digits, target, opt);
    if (cv->parsed()) cmd_verify(type_spec, opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
