#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fermatci/aut_oracle.hpp"
#include "fermatci/cover.hpp"
#include "fermatci/errors.hpp"
#include "fermatci/faithful.hpp"
#include "fermatci/group.hpp"
#include "fermatci/hodge.hpp"
#include "fermatci/involution.hpp"
#include "fermatci/numeric.hpp"
#include "fermatci/perm.hpp"
#include "report.hpp"

#ifndef FERMATCI_VERSION
#define FERMATCI_VERSION "0.1.0"
#endif

namespace {

using namespace fermatci;
using cli::join_residues;
using cli::Report;
using nlohmann::json;

const char* bstr(bool b) { return b ? "true" : "false"; }

std::string join_int_vec(const std::vector<Int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += " ";
    out += v[i].get_str();
  }
  return out;
}

std::string join_rats(const RatVec& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += " ";
    out += rat_to_string(v[i]);
  }
  return out;
}

std::string join_commas(const ResidueVec& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out;
}

Perm perm_from_images(const ResidueVec& images) {
  std::vector<int> im;
  im.reserve(images.size());
  for (std::int64_t v : images) {
    if (v < 0 || v > 1'000'000) throw UsageError("permutation image out of range");
    im.push_back(static_cast<int>(v));
  }
  return Perm(std::move(im));
}

/// All flag values for every subcommand; only the chosen subcommand's fields
/// are read.
struct Options {
  std::int64_t n = 0, r = 0, d = 0, t = 0;
  std::int64_t height = 50;
  std::int64_t n_max = 0, d_max = 0, c_max = 0;
  std::uint64_t seed = 0;
  int workers = 1;
  ResidueVec degrees, chi, tau;
  std::vector<std::string> lambdas;
  std::string format = "text";
  std::string output;
  bool timing = false;
};

/// Picks the coefficient tuple: explicit --lambdas, else the seeded sampler,
/// else the canonical tuple (0, 1, ..., n). Reports which source was used and
/// the resulting n.
RatVec resolve_lambdas(const Options& o, bool lambdas_given, bool seed_given, bool n_given,
                       std::int64_t* n_out, std::string* source) {
  if (lambdas_given) {
    RatVec v;
    v.reserve(o.lambdas.size());
    for (const std::string& s : o.lambdas) v.push_back(rat_from_string(s));
    if (v.size() < 2) throw UsageError("--lambdas needs at least two entries");
    *n_out = static_cast<std::int64_t>(v.size()) - 1;
    *source = "explicit";
    return v;
  }
  if (!n_given) throw UsageError("provide --lambdas or --n");
  *n_out = o.n;
  if (seed_given) {
    *source = "seeded";
    return sample_lambda_seeded(o.n, o.seed, o.height);
  }
  *source = "canonical";
  return sample_lambda_canonical(o.n);
}

// ---------------------------------------------------------------- faithful

Report run_faithful(const Options& o) {
  FaithfulnessCertificate cert = faithfulness_certificate(o.n, o.r, o.d);

  Report rep;
  rep.subcommand = "faithful";
  rep.verdict = cert.verdict == Verdict::faithful ? "faithful" : "not_faithful";
  rep.inputs = {{"n", o.n}, {"r", o.r}, {"d", o.d}};
  rep.notes = {
      "Certifies whether the group (Z/d)^(n+1)/diagonal acts faithfully on the "
      "primitive middle cohomology of the member with r equations of common degree d "
      "in projective n-space.",
      "A faithful verdict exhibits characters of positive isotypic dimension whose "
      "joint kernel is the diagonal; a not_faithful verdict exhibits a nontrivial "
      "group element annihilated by every contributing character."};

  json res;
  res["mode"] = cert.mode;
  if (cert.star)
    res["star_parameters"] = {{"k", cert.star->k}, {"s", cert.star->s}, {"t", cert.star->t}};
  else
    res["star_parameters"] = nullptr;
  auto sep = json::array();
  for (const SeparatingEntry& e : cert.separating_set)
    sep.push_back({{"chi", cli::json_residue_vec(e.chi.entries)},
                   {"eigen_dim", e.eigen_dim},
                   {"wedge_dim", cli::json_int(e.wedge_dim)}});
  res["separating_set"] = sep;
  res["kernel"] = {{"is_diagonal", cert.kernel.is_diagonal},
                   {"contains_diagonal", cert.kernel.contains_diagonal}};
  res["witness"] = cert.witness ? cli::json_residue_vec(cert.witness->entries) : json(nullptr);
  res["diagnostics"] = cert.diagnostics;
  rep.results = res;

  rep.text_lines.push_back("n: " + std::to_string(o.n));
  rep.text_lines.push_back("r: " + std::to_string(o.r));
  rep.text_lines.push_back("d: " + std::to_string(o.d));
  rep.text_lines.push_back("mode: " + cert.mode);
  if (cert.star)
    rep.text_lines.push_back("star_parameters: k=" + std::to_string(cert.star->k) +
                             " s=" + std::to_string(cert.star->s) +
                             " t=" + std::to_string(cert.star->t));
  rep.text_lines.push_back("separating_set_size: " + std::to_string(cert.separating_set.size()));
  for (const SeparatingEntry& e : cert.separating_set)
    rep.text_lines.push_back("separating: (" + join_residues(e.chi.entries) +
                             ") eigen_dim=" + std::to_string(e.eigen_dim) +
                             " wedge_dim=" + e.wedge_dim.get_str());
  rep.text_lines.push_back(std::string("kernel_is_diagonal: ") + bstr(cert.kernel.is_diagonal));
  rep.text_lines.push_back(std::string("kernel_contains_diagonal: ") +
                           bstr(cert.kernel.contains_diagonal));
  if (cert.witness)
    rep.text_lines.push_back("witness: " + join_residues(cert.witness->entries));
  for (const std::string& diag : cert.diagnostics)
    rep.text_lines.push_back("diagnostic: " + diag);
  return rep;
}

// ---------------------------------------------------------------- separate

Report run_separate(const Options& o) {
  StarParams p = star_parameters(o.n, o.d);
  std::vector<CharacterVec> chars = separating_characters(o.n, o.d, p);
  JointKernelReport kernel = joint_kernel_is_diagonal(chars);

  Report rep;
  rep.subcommand = "separate";
  rep.verdict = kernel.is_diagonal ? "diagonal" : "not_diagonal";
  rep.inputs = {{"n", o.n}, {"d", o.d}};
  rep.notes = {
      "Builds the separating character family from the congruence parameters "
      "k = (-n) mod d, t = least t with gcd(n+t, d) = 1, s = (k+1-t) mod d, and tests "
      "whether the joint kernel of the family is exactly the diagonal subgroup."};

  json res;
  res["star_parameters"] = {{"k", p.k}, {"s", p.s}, {"t", p.t}};
  auto arr = json::array();
  for (const CharacterVec& c : chars) arr.push_back(cli::json_residue_vec(c.entries));
  res["characters"] = arr;
  res["kernel"] = {{"is_diagonal", kernel.is_diagonal},
                   {"contains_diagonal", kernel.contains_diagonal}};
  rep.results = res;

  rep.text_lines.push_back("n: " + std::to_string(o.n));
  rep.text_lines.push_back("d: " + std::to_string(o.d));
  rep.text_lines.push_back("star_parameters: k=" + std::to_string(p.k) +
                           " s=" + std::to_string(p.s) + " t=" + std::to_string(p.t));
  for (const CharacterVec& c : chars)
    rep.text_lines.push_back("character: (" + join_residues(c.entries) + ")");
  rep.text_lines.push_back(std::string("kernel_is_diagonal: ") + bstr(kernel.is_diagonal));
  rep.text_lines.push_back(std::string("kernel_contains_diagonal: ") +
                           bstr(kernel.contains_diagonal));
  return rep;
}

// ---------------------------------------------------------------- cover

Report run_cover(const Options& o) {
  CharacterVec chi = make_character(o.d, o.chi);
  BranchData b = branch_data(chi);
  std::int64_t genus = genus_riemann_hurwitz(b);
  CoverSummary s = cover_summary(chi);

  Report rep;
  rep.subcommand = "cover";
  rep.inputs = {{"d", o.d}, {"chi", cli::json_residue_vec(o.chi)}};
  rep.notes = {
      "Attaches to the character (a_0, ..., a_n) mod d the cyclic cover "
      "y^e = prod_i (x - c_i)^(b_i) of the line, with e = d / gcd(a_i, d) and "
      "b_i = a_i e / d, and reports its genus together with the dimension of the "
      "character eigenspace, max(#nonzero entries - 2, 0)."};

  json res;
  res["branch"] = {{"degree", b.degree},
                   {"exponents", cli::json_residue_vec(b.exponents)},
                   {"unbranched_at_infinity", b.unbranched_at_infinity}};
  res["genus"] = genus;
  res["eigen_dim"] = s.eigen_dim;
  res["branch_count"] = s.branch_count;
  res["display_variant_genus"] =
      s.display_variant_genus ? json(*s.display_variant_genus) : json(nullptr);
  res["display_variant_matches"] = s.display_variant_matches;
  rep.results = res;

  rep.text_lines.push_back("d: " + std::to_string(o.d));
  rep.text_lines.push_back("chi: (" + join_residues(chi.entries) + ")");
  rep.text_lines.push_back("covering_degree: " + std::to_string(b.degree));
  rep.text_lines.push_back("reduced_exponents: (" + join_residues(b.exponents) + ")");
  rep.text_lines.push_back(std::string("unbranched_at_infinity: ") +
                           bstr(b.unbranched_at_infinity));
  rep.text_lines.push_back("genus: " + std::to_string(genus));
  rep.text_lines.push_back("eigen_dim: " + std::to_string(s.eigen_dim));
  rep.text_lines.push_back("branch_count: " + std::to_string(s.branch_count));
  rep.text_lines.push_back("display_variant_genus: " +
                           (s.display_variant_genus ? std::to_string(*s.display_variant_genus)
                                                    : std::string("none")));
  rep.text_lines.push_back(std::string("display_variant_matches: ") +
                           bstr(s.display_variant_matches));
  return rep;
}

// ---------------------------------------------------------------- decomp

Report run_decomp(const Options& o) {
  Decomposition dec = primitive_decomposition(o.n, o.r, o.d, o.workers);

  Report rep;
  rep.subcommand = "decomp";
  rep.inputs = {{"n", o.n}, {"r", o.r}, {"d", o.d}, {"workers", o.workers}};
  rep.notes = {
      "Decomposes the primitive middle cohomology of the member with r equations of "
      "common degree d into character eigenspaces; the character with eigenspace "
      "dimension B-2 contributes C(B-2, n-r), and only nonzero contributions are "
      "listed (lexicographic character order)."};

  json res;
  res["total"] = cli::json_int(dec.total);
  res["entry_count"] = dec.entries.size();
  auto arr = json::array();
  for (const DecompEntry& e : dec.entries)
    arr.push_back({{"chi", cli::json_residue_vec(e.chi)},
                   {"eigen_dim", e.eigen_dim},
                   {"wedge_dim", cli::json_int(e.wedge_dim)}});
  res["entries"] = arr;
  rep.results = res;

  rep.text_lines.push_back("n: " + std::to_string(o.n));
  rep.text_lines.push_back("r: " + std::to_string(o.r));
  rep.text_lines.push_back("d: " + std::to_string(o.d));
  rep.text_lines.push_back("workers: " + std::to_string(o.workers));
  rep.text_lines.push_back("total: " + dec.total.get_str());
  rep.text_lines.push_back("entry_count: " + std::to_string(dec.entries.size()));
  for (const DecompEntry& e : dec.entries)
    rep.text_lines.push_back("entry: (" + join_residues(e.chi) +
                             ") eigen_dim=" + std::to_string(e.eigen_dim) +
                             " wedge_dim=" + e.wedge_dim.get_str());

  std::string csv = "chi,eigen_dim,wedge_dim\n";
  for (const DecompEntry& e : dec.entries)
    csv += join_residues(e.chi) + "," + std::to_string(e.eigen_dim) + "," +
           e.wedge_dim.get_str() + "\n";
  rep.csv = csv;
  return rep;
}

// ---------------------------------------------------------------- aut-oracle

Report run_aut_oracle(const Options& o, bool lambdas_given, bool seed_given) {
  std::int64_t n_from_lambdas = 0;
  std::string source;
  RatVec lambdas =
      resolve_lambdas(o, lambdas_given, seed_given, /*n_given=*/true, &n_from_lambdas, &source);
  FermatFamily fam = make_family(o.n, o.r, o.d, lambdas);
  AutOrderReport aut = aut_group_order(fam);

  Report rep;
  rep.subcommand = "aut-oracle";
  rep.verdict = aut.generic ? "generic" : "non_generic";
  rep.inputs = {{"n", o.n}, {"r", o.r}, {"d", o.d}, {"lambda_source", source}};
  if (seed_given) {
    rep.inputs["seed"] = o.seed;
    rep.inputs["height"] = o.height;
  }
  rep.notes = {
      "Scans every coordinate permutation tau for monomial symmetries of the member "
      "determined by the coefficient tuple: tau is admissible when some all-nonzero "
      "scaling mu makes the monomial map preserve the span of the defining equations.",
      "A generic verdict means only the identity is admissible, so the automorphism "
      "group is the diagonal one of order d^n."};

  json res;
  res["lambdas"] = cli::json_rat_vec(fam.lambdas);
  res["generic"] = aut.generic;
  res["order"] = aut.order ? cli::json_int(*aut.order) : json(nullptr);
  res["permutations_scanned"] = aut.permutations_scanned;
  auto arr = json::array();
  for (const PermSolveReport& p : aut.admissible)
    arr.push_back({{"tau", p.tau.cycle_string()},
                   {"tau_images", cli::json_residue_vec(
                                      ResidueVec(p.tau.images().begin(), p.tau.images().end()))},
                   {"solution_dim", p.solution_dim},
                   {"admissible", p.admissible},
                   {"sample_mu", p.sample_mu ? cli::json_rat_vec(*p.sample_mu) : json(nullptr)}});
  res["admissible"] = arr;
  rep.results = res;

  rep.text_lines.push_back("n: " + std::to_string(o.n));
  rep.text_lines.push_back("r: " + std::to_string(o.r));
  rep.text_lines.push_back("d: " + std::to_string(o.d));
  rep.text_lines.push_back("lambda_source: " + source);
  rep.text_lines.push_back("lambdas: " + join_rats(fam.lambdas));
  rep.text_lines.push_back("permutations_scanned: " + std::to_string(aut.permutations_scanned));
  rep.text_lines.push_back(std::string("generic: ") + bstr(aut.generic));
  if (aut.order) rep.text_lines.push_back("order: " + aut.order->get_str());
  rep.text_lines.push_back("admissible_count: " + std::to_string(aut.admissible.size()));
  for (const PermSolveReport& p : aut.admissible)
    rep.text_lines.push_back("admissible: " + p.tau.cycle_string() +
                             " solution_dim=" + std::to_string(p.solution_dim) + " sample_mu=" +
                             (p.sample_mu ? join_rats(*p.sample_mu) : std::string("none")));
  return rep;
}

// ---------------------------------------------------------------- interp

Report run_interp(const Options& o, bool lambdas_given, bool seed_given, bool n_given) {
  std::int64_t n = 0;
  std::string source;
  RatVec lambdas = resolve_lambdas(o, lambdas_given, seed_given, n_given, &n, &source);
  Perm tau = perm_from_images(o.tau);
  if (static_cast<std::size_t>(tau.size()) != lambdas.size())
    throw UsageError("--tau must list images for all " + std::to_string(lambdas.size()) +
                     " coefficient positions");
  bool exists = interpolation_exists(lambdas, tau, o.r);

  Report rep;
  rep.subcommand = "interp";
  rep.verdict = exists ? "interpolation_exists" : "no_interpolation";
  rep.inputs = {{"r", o.r},
                {"tau", cli::json_residue_vec(o.tau)},
                {"lambda_source", source},
                {"n", n}};
  if (seed_given) {
    rep.inputs["seed"] = o.seed;
    rep.inputs["height"] = o.height;
  }
  rep.notes = {
      "Decides exactly whether some polynomial p of degree at most r-1 satisfies "
      "p(lambda_i) = lambda_(tau(i)) for all i; the existence of such an interpolating "
      "polynomial is the coefficient pattern that permits extra symmetries."};

  json res;
  res["lambdas"] = cli::json_rat_vec(lambdas);
  res["tau"] = tau.cycle_string();
  res["exists"] = exists;
  rep.results = res;

  rep.text_lines.push_back("n: " + std::to_string(n));
  rep.text_lines.push_back("r: " + std::to_string(o.r));
  rep.text_lines.push_back("lambda_source: " + source);
  rep.text_lines.push_back("lambdas: " + join_rats(lambdas));
  rep.text_lines.push_back("tau: " + tau.cycle_string());
  rep.text_lines.push_back(std::string("interpolation_exists: ") + bstr(exists));
  return rep;
}

// ---------------------------------------------------------------- involution

json involution_row_json(const InvolutionRow& row) {
  return {{"n", row.n},
          {"r", row.r},
          {"d", row.degree},
          {"n1", row.defect.n1},
          {"n2", row.defect.n2},
          {"f1", row.defect.f1},
          {"f2", row.defect.f2},
          {"min", cli::json_int(row.defect.minimum)},
          {"positive", row.defect.positive},
          {"hypothesis", row.hypothesis}};
}

std::string involution_row_text(const InvolutionRow& row) {
  return "row: n=" + std::to_string(row.n) + " r=" + std::to_string(row.r) +
         " d=" + std::to_string(row.degree) + " min=" + row.defect.minimum.get_str() +
         " n1=" + std::to_string(row.defect.n1) + " n2=" + std::to_string(row.defect.n2) +
         " f1=" + std::to_string(row.defect.f1) + " f2=" + std::to_string(row.defect.f2) +
         " positive=" + bstr(row.defect.positive) + " hypothesis=" + bstr(row.hypothesis);
}

std::string involution_row_csv(const InvolutionRow& row) {
  return std::to_string(row.n) + "," + std::to_string(row.r) + "," + std::to_string(row.degree) +
         "," + std::to_string(row.defect.n1) + "," + std::to_string(row.defect.n2) + "," +
         std::to_string(row.defect.f1) + "," + std::to_string(row.defect.f2) + "," +
         row.defect.minimum.get_str() + "," + bstr(row.defect.positive) + "\n";
}

Report run_involution(const Options& o, bool point_mode) {
  std::vector<InvolutionRow> rows;
  Report rep;
  rep.subcommand = "involution";
  if (point_mode) {
    InvolutionRow row;
    row.n = o.n;
    row.r = o.r;
    row.degree = o.d;
    row.defect = min_defect(o.n, o.r, o.d);
    row.hypothesis = (o.d >= 3) || (o.r >= 3);
    rows.push_back(row);
    rep.inputs = {{"mode", "point"}, {"n", o.n}, {"r", o.r}, {"d", o.d}};
  } else {
    rows = involution_scan(o.n_max, o.d_max);
    rep.inputs = {{"mode", "scan"}, {"n_max", o.n_max}, {"d_max", o.d_max}};
  }
  rep.notes = {
      "Minimizes the obstruction count defect(n1, n2, f1, f2) = f2(e1-f1) + f1(e2-f2) "
      "- 2 n1 n2 for equipping a member having r equations of degree d with a "
      "coordinate involution that negates an n2-coordinate block; a positive minimum "
      "rules such involutions out.",
      "Rows with hypothesis=true (d >= 3, or d = 2 with r >= 3) are where positivity "
      "is asserted; the remaining rows are negative controls."};

  bool all_positive = true;
  for (const InvolutionRow& row : rows)
    if (row.hypothesis && !row.defect.positive) all_positive = false;
  if (point_mode) all_positive = rows.front().defect.positive;
  rep.verdict = all_positive ? "positive" : "not_positive";

  json res;
  res["row_count"] = rows.size();
  auto arr = json::array();
  for (const InvolutionRow& row : rows) arr.push_back(involution_row_json(row));
  res["rows"] = arr;
  rep.results = res;

  if (point_mode) {
    rep.text_lines.push_back("n: " + std::to_string(o.n));
    rep.text_lines.push_back("r: " + std::to_string(o.r));
    rep.text_lines.push_back("d: " + std::to_string(o.d));
  } else {
    rep.text_lines.push_back("n_max: " + std::to_string(o.n_max));
    rep.text_lines.push_back("d_max: " + std::to_string(o.d_max));
    rep.text_lines.push_back("row_count: " + std::to_string(rows.size()));
  }
  for (const InvolutionRow& row : rows) rep.text_lines.push_back(involution_row_text(row));

  std::string csv = "n,r,d,n1,n2,f1,f2,min,positive\n";
  for (const InvolutionRow& row : rows) csv += involution_row_csv(row);
  rep.csv = csv;
  return rep;
}

// ---------------------------------------------------------------- betti

Report run_betti(const Options& o) {
  MultiDegree md = make_multidegree(o.degrees, o.n);
  Int euler = euler_characteristic(md);
  Int betti = primitive_middle_betti(md);

  Report rep;
  rep.subcommand = "betti";
  rep.inputs = {{"degrees", cli::json_residue_vec(o.degrees)}, {"n", o.n}};
  rep.notes = {
      "Computes the rank of the primitive part of the middle cohomology of the smooth "
      "complete intersection of the given multidegree from its topological Euler "
      "characteristic."};

  json res;
  res["degrees"] = cli::json_residue_vec(md.degrees);
  res["n"] = md.n;
  res["m"] = md.m();
  res["euler_characteristic"] = cli::json_int(euler);
  res["primitive_middle_betti"] = cli::json_int(betti);
  rep.results = res;

  rep.text_lines.push_back("degrees: " + join_residues(md.degrees));
  rep.text_lines.push_back("n: " + std::to_string(md.n));
  rep.text_lines.push_back("m: " + std::to_string(md.m()));
  rep.text_lines.push_back("euler_characteristic: " + euler.get_str());
  rep.text_lines.push_back("primitive_middle_betti: " + betti.get_str());
  return rep;
}

// ---------------------------------------------------------------- hodge

Report run_hodge(const Options& o) {
  MultiDegree md = make_multidegree(o.degrees, o.n);
  Int euler = euler_characteristic(md);
  std::vector<Int> omega = chi_omega(md);
  HodgeMiddleRow row = hodge_middle_row(md);
  Int twist = chi_structure_sheaf_twist(md, o.t);

  Report rep;
  rep.subcommand = "hodge";
  rep.inputs = {{"degrees", cli::json_residue_vec(o.degrees)}, {"n", o.n}, {"t", o.t}};
  rep.notes = {
      "Computes chi(Omega^p) for p = 0..m by Hirzebruch-Riemann-Roch with exact "
      "truncated series, assembles the middle Hodge row h^(p, m-p) and its primitive "
      "part, and evaluates the Koszul-resolution Euler characteristic of the twist "
      "O(t)."};

  json res;
  res["degrees"] = cli::json_residue_vec(md.degrees);
  res["n"] = md.n;
  res["m"] = md.m();
  res["euler_characteristic"] = cli::json_int(euler);
  res["chi_omega"] = cli::json_int_vec(omega);
  res["middle_row"] = cli::json_int_vec(row.values);
  res["primitive_middle_row"] = cli::json_int_vec(row.primitive);
  res["t"] = o.t;
  res["chi_twist"] = cli::json_int(twist);
  rep.results = res;

  rep.text_lines.push_back("degrees: " + join_residues(md.degrees));
  rep.text_lines.push_back("n: " + std::to_string(md.n));
  rep.text_lines.push_back("m: " + std::to_string(md.m()));
  rep.text_lines.push_back("euler_characteristic: " + euler.get_str());
  rep.text_lines.push_back("chi_omega: " + join_int_vec(omega));
  rep.text_lines.push_back("middle_row: " + join_int_vec(row.values));
  rep.text_lines.push_back("primitive_middle_row: " + join_int_vec(row.primitive));
  rep.text_lines.push_back("t: " + std::to_string(o.t));
  rep.text_lines.push_back("chi_twist: " + twist.get_str());
  return rep;
}

// ---------------------------------------------------------------- scan-hodge

Report run_scan_hodge(const Options& o) {
  std::vector<MultiDegree> scan = straight_polygon_scan(o.n_max, o.d_max, o.c_max);

  Report rep;
  rep.subcommand = "scan-hodge";
  rep.inputs = {{"n_max", o.n_max}, {"d_max", o.d_max}, {"c_max", o.c_max}};
  rep.notes = {
      "Lists every multidegree in the box (dimension >= 2, n <= n_max, degrees <= "
      "d_max, codimension <= c_max) whose primitive middle Hodge numbers vanish away "
      "from the center, in deterministic order (codimension, degree tuple, n)."};

  json res;
  res["member_count"] = scan.size();
  auto arr = json::array();
  for (const MultiDegree& md : scan)
    arr.push_back(
        {{"degrees", cli::json_residue_vec(md.degrees)}, {"n", md.n}, {"m", md.m()}});
  res["members"] = arr;
  rep.results = res;

  rep.text_lines.push_back("n_max: " + std::to_string(o.n_max));
  rep.text_lines.push_back("d_max: " + std::to_string(o.d_max));
  rep.text_lines.push_back("c_max: " + std::to_string(o.c_max));
  rep.text_lines.push_back("member_count: " + std::to_string(scan.size()));
  for (const MultiDegree& md : scan)
    rep.text_lines.push_back("member: (" + join_commas(md.degrees) + "; " +
                             std::to_string(md.n) + ") m=" + std::to_string(md.m()));

  std::string csv = "degrees,n,m\n";
  for (const MultiDegree& md : scan)
    csv += join_residues(md.degrees) + "," + std::to_string(md.n) + "," +
           std::to_string(md.m()) + "\n";
  rep.csv = csv;
  return rep;
}

// ---------------------------------------------------------------- classify

Report run_classify(const Options& o) {
  MultiDegree md = make_multidegree(o.degrees, o.n);
  Classification cls = classify_theorem_case(md);

  Report rep;
  rep.subcommand = "classify";
  rep.verdict = to_string(cls.kind);
  rep.inputs = {{"degrees", cli::json_residue_vec(o.degrees)}, {"n", o.n}};
  rep.notes = {
      "Reduces the multidegree to (smallest degree d, its multiplicity r) and reports "
      "which case of the automorphism classification the complete intersection falls "
      "into: covered by the generic-triviality statement, the excluded plane cubic, "
      "general hyperquadrics, intersections of two quadrics, or the remaining open "
      "configurations."};

  json res;
  res["degrees"] = cli::json_residue_vec(md.degrees);
  res["n"] = md.n;
  res["m"] = md.m();
  res["reduced_degree"] = cls.reduced_degree;
  res["reduced_count"] = cls.reduced_count;
  res["kind"] = to_string(cls.kind);
  rep.results = res;

  rep.text_lines.push_back("degrees: " + join_residues(md.degrees));
  rep.text_lines.push_back("n: " + std::to_string(md.n));
  rep.text_lines.push_back("m: " + std::to_string(md.m()));
  rep.text_lines.push_back("reduced_degree: " + std::to_string(cls.reduced_degree));
  rep.text_lines.push_back("reduced_count: " + std::to_string(cls.reduced_count));
  return rep;
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format, "output format: text, json, or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  sub->add_option("--output", o.output, "write the report to this file instead of stdout");
  sub->add_flag("--timing", o.timing, "include wall-clock milliseconds (text and json only)");
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{
      "fermatci: exact verifiers for the automorphisms and cohomology of Fermat-type "
      "complete intersection families"};
  app.set_version_flag("--version", FERMATCI_VERSION);
  app.require_subcommand(1);

  auto* sc_faithful =
      app.add_subcommand("faithful", "certify (non-)faithfulness of the diagonal group action "
                                     "on primitive middle cohomology");
  sc_faithful->add_option("--n", o.n, "projective ambient dimension")->required();
  sc_faithful->add_option("--r", o.r, "number of defining equations")->required();
  sc_faithful->add_option("--d", o.d, "common equation degree (group modulus)")->required();
  add_common(sc_faithful, o);

  auto* sc_separate =
      app.add_subcommand("separate", "test whether the separating character family has "
                                     "exactly the diagonal as joint kernel");
  sc_separate->add_option("--n", o.n, "projective ambient dimension")->required();
  sc_separate->add_option("--d", o.d, "modulus")->required();
  add_common(sc_separate, o);

  auto* sc_cover = app.add_subcommand(
      "cover", "genus and eigenspace dimension of the cyclic cover attached to a character");
  sc_cover->add_option("--d", o.d, "modulus")->required();
  sc_cover
      ->add_option("--chi", o.chi,
                   "character entries a_0,...,a_n (must sum to 0 mod d), e.g. 1,2,3")
      ->delimiter(',')
      ->required();
  add_common(sc_cover, o);

  auto* sc_decomp = app.add_subcommand(
      "decomp", "character-isotypic decomposition of the primitive middle cohomology");
  sc_decomp->add_option("--n", o.n, "projective ambient dimension")->required();
  sc_decomp->add_option("--r", o.r, "number of defining equations")->required();
  sc_decomp->add_option("--d", o.d, "common equation degree")->required();
  sc_decomp->add_option("--workers", o.workers, "worker thread count")
      ->envname("FERMATCI_WORKERS")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_common(sc_decomp, o);

  auto* sc_aut = app.add_subcommand(
      "aut-oracle", "scan all coordinate permutations for monomial symmetries of a member");
  sc_aut->add_option("--n", o.n, "projective ambient dimension")->required();
  sc_aut->add_option("--r", o.r, "number of defining equations")->required();
  sc_aut->add_option("--d", o.d, "common equation degree")->required();
  auto* aut_lambdas =
      sc_aut->add_option("--lambdas", o.lambdas,
                         "explicit coefficient tuple, e.g. 0,1,2,3 or 1/2,3,-1,5")
          ->delimiter(',');
  auto* aut_seed = sc_aut->add_option("--seed", o.seed, "seed for the deterministic sampler");
  auto* aut_height =
      sc_aut->add_option("--height", o.height, "numerator/denominator bound for the sampler")
          ->capture_default_str();
  aut_lambdas->excludes(aut_seed);
  aut_lambdas->excludes(aut_height);
  aut_height->needs(aut_seed);
  add_common(sc_aut, o);

  auto* sc_interp = app.add_subcommand(
      "interp", "decide whether a degree < r polynomial maps the coefficients to their "
                "permutation");
  auto* interp_n = sc_interp->add_option("--n", o.n, "projective ambient dimension");
  sc_interp->add_option("--r", o.r, "number of defining equations")->required();
  sc_interp
      ->add_option("--tau", o.tau, "permutation image list, e.g. 4,3,2,1,0")
      ->delimiter(',')
      ->required();
  auto* interp_lambdas =
      sc_interp->add_option("--lambdas", o.lambdas, "explicit coefficient tuple")
          ->delimiter(',');
  auto* interp_seed =
      sc_interp->add_option("--seed", o.seed, "seed for the deterministic sampler");
  auto* interp_height =
      sc_interp->add_option("--height", o.height, "numerator/denominator bound for the sampler")
          ->capture_default_str();
  interp_lambdas->excludes(interp_seed);
  interp_lambdas->excludes(interp_height);
  interp_lambdas->excludes(interp_n);
  interp_height->needs(interp_seed);
  add_common(sc_interp, o);

  auto* sc_involution = app.add_subcommand(
      "involution", "minimized obstruction count against coordinate involutions "
                    "(single point or scan)");
  auto* inv_n = sc_involution->add_option("--n", o.n, "projective ambient dimension");
  auto* inv_r = sc_involution->add_option("--r", o.r, "number of defining equations");
  auto* inv_d = sc_involution->add_option("--d", o.d, "common equation degree");
  auto* inv_nmax = sc_involution->add_option("--n-max", o.n_max, "scan bound on n");
  auto* inv_dmax = sc_involution->add_option("--d-max", o.d_max, "scan bound on d");
  inv_n->needs(inv_r);
  inv_n->needs(inv_d);
  inv_nmax->needs(inv_dmax);
  inv_nmax->excludes(inv_n);
  inv_nmax->excludes(inv_r);
  inv_nmax->excludes(inv_d);
  add_common(sc_involution, o);

  auto* sc_betti = app.add_subcommand(
      "betti", "primitive middle Betti number of a smooth complete intersection");
  sc_betti->add_option("--degrees", o.degrees, "multidegree, e.g. 2,2")->delimiter(',')->required();
  sc_betti->add_option("--n", o.n, "projective ambient dimension")->required();
  add_common(sc_betti, o);

  auto* sc_hodge = app.add_subcommand(
      "hodge", "middle Hodge row, chi(Omega^p), and twisted structure-sheaf Euler "
               "characteristic");
  sc_hodge->add_option("--degrees", o.degrees, "multidegree, e.g. 3,3")->delimiter(',')->required();
  sc_hodge->add_option("--n", o.n, "projective ambient dimension")->required();
  sc_hodge->add_option("--t", o.t, "twist for chi(O(t))")->capture_default_str();
  add_common(sc_hodge, o);

  auto* sc_scan = app.add_subcommand(
      "scan-hodge", "list multidegrees whose primitive middle Hodge numbers are "
                    "concentrated in the center");
  o.n_max = 7;
  o.d_max = 5;
  o.c_max = 3;
  sc_scan->add_option("--n-max", o.n_max, "bound on n")->capture_default_str();
  sc_scan->add_option("--d-max", o.d_max, "bound on each degree")->capture_default_str();
  sc_scan->add_option("--c-max", o.c_max, "bound on the codimension")->capture_default_str();
  add_common(sc_scan, o);

  auto* sc_classify = app.add_subcommand(
      "classify", "which case of the automorphism classification a multidegree falls into");
  sc_classify->add_option("--degrees", o.degrees, "multidegree, e.g. 2,3,4")
      ->delimiter(',')
      ->required();
  sc_classify->add_option("--n", o.n, "projective ambient dimension")->required();
  add_common(sc_classify, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the error to stderr
    return 2;
  }

  try {
    const auto start = std::chrono::steady_clock::now();
    Report rep;
    if (sc_faithful->parsed()) {
      rep = run_faithful(o);
    } else if (sc_separate->parsed()) {
      rep = run_separate(o);
    } else if (sc_cover->parsed()) {
      rep = run_cover(o);
    } else if (sc_decomp->parsed()) {
      rep = run_decomp(o);
    } else if (sc_aut->parsed()) {
      rep = run_aut_oracle(o, aut_lambdas->count() > 0, aut_seed->count() > 0);
    } else if (sc_interp->parsed()) {
      rep = run_interp(o, interp_lambdas->count() > 0, interp_seed->count() > 0,
                       interp_n->count() > 0);
    } else if (sc_involution->parsed()) {
      const bool point_mode = inv_n->count() > 0;
      if (!point_mode && inv_nmax->count() == 0)
        throw UsageError("involution needs either --n/--r/--d or --n-max/--d-max");
      rep = run_involution(o, point_mode);
    } else if (sc_betti->parsed()) {
      rep = run_betti(o);
    } else if (sc_hodge->parsed()) {
      rep = run_hodge(o);
    } else if (sc_scan->parsed()) {
      rep = run_scan_hodge(o);
    } else if (sc_classify->parsed()) {
      rep = run_classify(o);
    }
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    std::optional<std::int64_t> timing;
    if (o.timing) timing = elapsed.count();

    const std::string bytes = cli::emit(rep, o.format, timing);
    if (!o.output.empty()) {
      std::ofstream out(o.output, std::ios::binary);
      if (!out) throw fermatci::UsageError("cannot open output file: " + o.output);
      out << bytes;
      if (!out) throw fermatci::UsageError("failed writing output file: " + o.output);
    } else {
      std::cout << bytes;
    }
    return cli::exit_code_for(rep);
  } catch (const fermatci::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const fermatci::CheckFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
