// qdual: JSON front end of the exact engine. Every subcommand maps to one
// library operation (or a documented composite reached through flags); output
// field order is fixed so identical inputs give byte-identical output.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qdual/errors.hpp"
#include "qdual/params.hpp"
#include "qdual/unitarity.hpp"
#include "qdual/weights.hpp"

using json = nlohmann::ordered_json;
using namespace qdual;

namespace {

struct Opts {
  // engine-wide
  std::string q = "1/2";
  long cutoff = 12;
  long steps = 64;
  int jobs = 1;
  int json_indent = 2;
  // shared inputs
  std::string label;
  std::string weight;
  std::string word;
  std::string lambda, nu_re, nu_im;
  std::string lambda2, nu_re2, nu_im2;
  std::string big_re, big_im, big2_re, big2_im;
  std::string mu, lam;
  std::string z_re = "0", z_im = "0";
  std::string m = "0", s = "0", len_sq = "2";
  std::string qnum_arg, qs = "3/10,7/10";
  int simple_index = 0;
  int gap_bound = 0;
  bool flag_minimal = false, flag_enumerate = false, flag_x_reduce = false;
  bool flag_inverse = false, flag_psi = false, flag_shift = false;
  bool flag_eigen = false, flag_factors = false;
};

std::string dec30(const real50& x) { return x.str(30); }

json qvalue_json(const QValue& v) {
  json j;
  j["value_re"] = dec30(v.value.real());
  j["value_im"] = dec30(v.value.imag());
  j["exact_sign"] = v.exact_sign ? json(*v.exact_sign) : json(nullptr);
  j["unit_modulus"] = v.is_unit_modulus ? json(*v.is_unit_modulus) : json(nullptr);
  return j;
}

json verdict_json(const UnitarityVerdict& v) {
  json j;
  j["verdict"] = verdict_kind_str(v.kind);
  j["witness"] = v.witness ? json{{"ktype", weight_str(v.witness->ktype)},
                                  {"detail", v.witness->detail}}
                           : json(nullptr);
  j["cutoff"] = v.cutoff;
  j["certified_ktypes"] = v.certified_ktypes;
  j["note"] = v.note;
  return j;
}

// Negative verdicts are ordinary successful runs; only malformed input and
// math-domain failures change the exit code.
struct Cli {
  Opts o;
  json out;

  Weight weight_or_zero(const std::string& s, int rank) const {
    if (s.empty()) return Weight::zero(rank);
    Weight w = parse_weight(s);
    if (w.rank() != rank)
      throw DimensionMismatch("expected " + std::to_string(rank) + " coordinates, got " +
                              std::to_string(w.rank()));
    return w;
  }

  QParam qparam() const { return QParam(parse_rat(o.q)); }

  ParamPair pair(const RootSystem& rs) const {
    return ParamPair{weight_or_zero(o.lambda, rs.rank),
                     ComplexWeight{weight_or_zero(o.nu_re, rs.rank),
                                   weight_or_zero(o.nu_im, rs.rank)}};
  }

  void emit(json input, json result) {
    out["input"] = std::move(input);
    out["result"] = std::move(result);
    out["engine"] = json{{"q", rat_str(parse_rat(o.q))},
                         {"cutoff", o.cutoff},
                         {"steps", o.steps},
                         {"jobs", o.jobs}};
  }

  void run_root_info() {
    const RootSystem& rs = root_system(o.label);
    json res;
    res["label"] = rs.label;
    res["rank"] = rs.rank;
    res["weyl_order"] = rs.weyl_order;
    res["positive_roots"] = rs.positive_roots.size();
    res["cartan"] = rs.cartan;
    res["d"] = rs.d;
    res["rho"] = weight_str(rs.rho);
    json roots = json::array();
    for (const Root& b : rs.positive_roots)
      roots.push_back(json{{"omega", weight_str(b.weight)},
                           {"alpha", b.alpha},
                           {"length_sq", rat_str(b.length_sq)},
                           {"height", b.height}});
    res["roots"] = roots;
    emit(json{{"label", o.label}}, std::move(res));
  }

  void run_weyl_orbit() {
    const RootSystem& rs = root_system(o.label);
    Weight x = parse_weight(o.weight);
    std::vector<Weight> orb = orbit(rs, x);
    json arr = json::array();
    for (const Weight& w : orb) arr.push_back(weight_str(w));
    emit(json{{"label", o.label}, {"weight", weight_str(x)}},
         json{{"size", orb.size()}, {"orbit", arr}});
  }

  void run_weyl_dominant() {
    const RootSystem& rs = root_system(o.label);
    Weight x = parse_weight(o.weight);
    auto [dom, w] = dominant_representative(rs, x);
    json res;
    res["dominant"] = weight_str(dom);
    res["word"] = word_str(w);
    res["length"] = weyl_length(rs, w);
    if (o.simple_index > 0) res["reflected"] = weight_str(reflect(rs, o.simple_index, x));
    if (!o.word.empty()) {
      WeylWord ww = parse_word(o.word);
      res["applied"] = weight_str(apply_word(rs, ww, x));
      res["dot_applied"] = weight_str(dot_apply(rs, ww, x));
    }
    json in{{"label", o.label}, {"weight", weight_str(x)}};
    if (!o.word.empty()) in["word"] = o.word;
    emit(std::move(in), std::move(res));
  }

  void run_weyl_longest() {
    const RootSystem& rs = root_system(o.label);
    WeylWord w0 = longest_word(rs);
    emit(json{{"label", o.label}},
         json{{"word", word_str(w0)},
              {"length", weyl_length(rs, w0)},
              {"weyl_order", rs.weyl_order}});
  }

  void run_weight_mult() {
    const RootSystem& rs = root_system(o.label);
    Weight mu = parse_weight(o.mu), lam = parse_weight(o.lam);
    emit(json{{"label", o.label}, {"mu", weight_str(mu)}, {"lambda", weight_str(lam)}},
         json{{"multiplicity", freudenthal_multiplicity(rs, mu, lam)}});
  }

  void run_weight_dim() {
    const RootSystem& rs = root_system(o.label);
    Weight mu = parse_weight(o.mu);
    emit(json{{"label", o.label}, {"mu", weight_str(mu)}},
         json{{"dimension", weyl_dimension(rs, mu)}});
  }

  void run_weight_spins() {
    const RootSystem& rs = root_system(o.label);
    Weight mu = parse_weight(o.mu), lam = parse_weight(o.lam);
    SpinMultiset sm = sl2_spin_content(rs, mu, lam, o.simple_index);
    json arr = json::array();
    for (const auto& [s, n] : sm.entries) arr.push_back(json{{"s", rat_str(s)}, {"mult", n}});
    emit(json{{"label", o.label},
              {"mu", weight_str(mu)},
              {"lambda", weight_str(lam)},
              {"i", o.simple_index}},
         json{{"spins", arr}, {"total", sm.total()}});
  }

  void run_weight_ktype_mult() {
    const RootSystem& rs = root_system(o.label);
    Weight mu = parse_weight(o.mu), lam = parse_weight(o.lam);
    json res{{"multiplicity", ktype_multiplicity(rs, mu, lam)}};
    if (o.flag_minimal) res["minimal_ktype"] = weight_str(minimal_ktype(rs, lam));
    if (o.flag_enumerate) {
      json arr = json::array();
      for (const Weight& k : enumerate_ktypes(rs, lam, Rat(o.cutoff)))
        arr.push_back(weight_str(k));
      res["ktypes"] = arr;
    }
    emit(json{{"label", o.label}, {"mu", weight_str(mu)}, {"lambda", weight_str(lam)}},
         std::move(res));
  }

  void run_param_dominant() {
    const RootSystem& rs = root_system(o.label);
    ComplexWeight nu{weight_or_zero(o.nu_re, rs.rank), weight_or_zero(o.nu_im, rs.rank)};
    emit(json{{"label", o.label}, {"nu_re", weight_str(nu.re)}, {"nu_im", weight_str(nu.im)}},
         json{{"dominant", is_dominant(rs, qparam(), nu)}});
  }

  void run_param_small() {
    const RootSystem& rs = root_system(o.label);
    json res;
    json in{{"label", o.label}};
    if (!o.weight.empty()) {
      Weight x = parse_weight(o.weight);
      in["weight"] = weight_str(x);
      res["small"] = is_small(rs, x);
    }
    if (o.gap_bound > 0) {
      in["gap_bound"] = o.gap_bound;
      res["coweight_gap"] = coweight_gap_oracle(rs, o.gap_bound);
    }
    if (res.empty()) throw DomainError("param small: give a weight or --gap-bound");
    emit(std::move(in), std::move(res));
  }

  void run_param_almost_real() {
    const RootSystem& rs = root_system(o.label);
    ComplexWeight nu{weight_or_zero(o.nu_re, rs.rank), weight_or_zero(o.nu_im, rs.rank)};
    emit(json{{"label", o.label}, {"nu_re", weight_str(nu.re)}, {"nu_im", weight_str(nu.im)}},
         json{{"almost_real", is_almost_real(rs, nu)}});
  }

  void run_param_canonical() {
    const RootSystem& rs = root_system(o.label);
    ParamPair p = pair(rs);
    auto [c, w] = canonicalize(rs, p);
    json res;
    res["lambda"] = weight_str(c.lambda);
    res["nu_re"] = weight_str(c.nu.re);
    res["nu_im"] = weight_str(c.nu.im);
    res["word"] = word_str(w);
    if (o.flag_x_reduce) res["x_reduced_im"] = weight_str(x_reduce(rs, p.nu).im);
    emit(json{{"label", o.label},
              {"lambda", weight_str(p.lambda)},
              {"nu_re", weight_str(p.nu.re)},
              {"nu_im", weight_str(p.nu.im)}},
         std::move(res));
  }

  void run_param_equiv() {
    const RootSystem& rs = root_system(o.label);
    ParamPair p1 = pair(rs);
    ParamPair p2{weight_or_zero(o.lambda2, rs.rank),
                 ComplexWeight{weight_or_zero(o.nu_re2, rs.rank),
                               weight_or_zero(o.nu_im2, rs.rank)}};
    emit(json{{"label", o.label},
              {"lambda", weight_str(p1.lambda)},
              {"nu_re", weight_str(p1.nu.re)},
              {"nu_im", weight_str(p1.nu.im)},
              {"lambda2", weight_str(p2.lambda)},
              {"nu_re2", weight_str(p2.nu.re)},
              {"nu_im2", weight_str(p2.nu.im)}},
         json{{"equivalent", equivalent(rs, p1, p2)}});
  }

  void run_param_hermitian() {
    const RootSystem& rs = root_system(o.label);
    ParamPair p = pair(rs);
    auto w = hermitian_exists(rs, p);
    emit(json{{"label", o.label},
              {"lambda", weight_str(p.lambda)},
              {"nu_re", weight_str(p.nu.re)},
              {"nu_im", weight_str(p.nu.im)}},
         json{{"exists", w.has_value()}, {"witness", w ? json(word_str(*w)) : json(nullptr)}});
  }

  void run_param_reduce_a() {
    const RootSystem& rs = root_system(o.label);
    if (rs.series != 'A') throw WrongType("param reduce-a: type A only, got " + rs.label);
    Weight x = parse_weight(o.weight);
    Weight shift = reduce_small_typeA(rs.rank + 1, x);
    Weight rem = x - shift;
    emit(json{{"label", o.label}, {"weight", weight_str(x)}},
         json{{"shift", weight_str(shift)},
              {"remainder", weight_str(rem)},
              {"small", is_small(rs, rem)}});
  }

  void run_param_cat_o() {
    const RootSystem& rs = root_system(o.label);
    json in{{"label", o.label}};
    json res;
    CategoryOParam c;
    if (o.flag_inverse) {
      c = CategoryOParam{ComplexWeight{weight_or_zero(o.big_re, rs.rank),
                                       weight_or_zero(o.big_im, rs.rank)},
                         ComplexWeight{weight_or_zero(o.big2_re, rs.rank),
                                       weight_or_zero(o.big2_im, rs.rank)}};
      in["Lambda_re"] = weight_str(c.Lambda.re);
      in["Lambda_im"] = weight_str(c.Lambda.im);
      in["LambdaPrime_re"] = weight_str(c.LambdaPrime.re);
      in["LambdaPrime_im"] = weight_str(c.LambdaPrime.im);
      ParamPair p = from_category_O(rs, c);
      res["lambda"] = weight_str(p.lambda);
      res["nu_re"] = weight_str(p.nu.re);
      res["nu_im"] = weight_str(p.nu.im);
    } else {
      ParamPair p = pair(rs);
      in["lambda"] = weight_str(p.lambda);
      in["nu_re"] = weight_str(p.nu.re);
      in["nu_im"] = weight_str(p.nu.im);
      c = to_category_O(rs, p);
      res["Lambda_re"] = weight_str(c.Lambda.re);
      res["Lambda_im"] = weight_str(c.Lambda.im);
      res["LambdaPrime_re"] = weight_str(c.LambdaPrime.re);
      res["LambdaPrime_im"] = weight_str(c.LambdaPrime.im);
    }
    if (o.flag_psi) {
      auto killer = psi_nonvanishing(rs, c);
      res["psi_nonvanishing"] = !killer.has_value();
      res["killing_root"] = killer ? json(weight_str(killer->weight)) : json(nullptr);
    }
    emit(std::move(in), std::move(res));
  }

  void run_unitary_decide() {
    const RootSystem& rs = root_system(o.label);
    QParam q = qparam();
    ParamPair p = pair(rs);
    json in{{"label", o.label},
            {"lambda", weight_str(p.lambda)},
            {"nu_re", weight_str(p.nu.re)},
            {"nu_im", weight_str(p.nu.im)}};
    json res;
    if (o.flag_shift) {
      if (rs.series != 'A') throw WrongType("--shift: type A only, got " + rs.label);
      p = typeA_shift_reduce(rs.rank + 1, q, p);
      res["shifted_nu_im"] = weight_str(p.nu.im);
    }
    UnitarityVerdict v;
    if (rs.label == "A1") {
      res["method"] = "rank1-exact";
      v = signature_rank1(q, p, o.cutoff);
    } else {
      res["method"] = "scan";
      v = unitarity_scan(rs, q, p, o.cutoff, o.steps, o.jobs);
    }
    json vj = verdict_json(v);
    for (auto& [k, val] : vj.items()) res[k] = val;
    res["embedding"] = embedding_direction_str(embedding_direction(rs, q, p));
    emit(std::move(in), std::move(res));
  }

  void run_unitary_compare() {
    const RootSystem& rs = root_system(o.label);
    ParamPair p = pair(rs);
    std::vector<QParam> qlist;
    for (const std::string& part : split_list(o.qs)) qlist.push_back(QParam(parse_rat(part)));
    CompareReport rep = compare_q_classical(rs, p, qlist, o.cutoff, o.steps);
    json entries = json::array();
    for (const CompareEntry& e : rep.entries)
      entries.push_back(json{{"q", rat_str(e.q)}, {"verdict", verdict_json(e.verdict)}});
    emit(json{{"label", o.label},
              {"lambda", weight_str(p.lambda)},
              {"nu_re", weight_str(p.nu.re)},
              {"nu_im", weight_str(p.nu.im)},
              {"qs", o.qs}},
         json{{"entries", entries}, {"all_certified_agree", rep.all_certified_agree}});
  }

  void run_unitary_det() {
    const RootSystem& rs = root_system(o.label);
    QParam q = qparam();
    json in{{"label", o.label}};
    json res;
    if (!o.qnum_arg.empty()) {
      Weight t = parse_weight(o.qnum_arg);
      if (t.rank() < 1 || t.rank() > 2) throw DomainError("--qnum expects \"re\" or \"re,im\"");
      ComplexScalar zc{t[0], t.rank() == 2 ? t[1] : Rat(0)};
      in["t"] = o.qnum_arg;
      res["qnum"] = qvalue_json(qnum(q, zc));
    } else if (o.flag_eigen) {
      ComplexScalar z{parse_rat(o.z_re), parse_rat(o.z_im)};
      in["len_sq"] = o.len_sq;
      in["m"] = o.m;
      in["s"] = o.s;
      in["z_re"] = o.z_re;
      in["z_im"] = o.z_im;
      res["eigenvalue"] =
          qvalue_json(rank_one_eigenvalue(q, parse_rat(o.len_sq), parse_rat(o.m), parse_rat(o.s), z));
    } else if (o.simple_index > 0) {
      Weight mu = parse_weight(o.mu);
      Weight lam = weight_or_zero(o.lambda, rs.rank);
      ComplexScalar z{parse_rat(o.z_re), parse_rat(o.z_im)};
      in["mu"] = weight_str(mu);
      in["lambda"] = weight_str(lam);
      in["i"] = o.simple_index;
      in["z_re"] = o.z_re;
      in["z_im"] = o.z_im;
      res["det"] = qvalue_json(rank_one_det(rs, q, mu, lam, o.simple_index, z));
    } else {
      Weight mu = parse_weight(o.mu);
      ParamPair p = pair(rs);
      WeylWord w = o.word.empty() ? longest_word(rs) : parse_word(o.word);
      in["mu"] = weight_str(mu);
      in["lambda"] = weight_str(p.lambda);
      in["nu_re"] = weight_str(p.nu.re);
      in["nu_im"] = weight_str(p.nu.im);
      in["word"] = word_str(w);
      res["det"] = qvalue_json(intertwiner_det(rs, q, mu, p, w));
      if (o.flag_factors) {
        json arr = json::array();
        for (const auto& [key, e] : det_factor_map(rs, mu, p, w))
          arr.push_back(json{{"k", rat_str(key.k)},
                             {"z_re", rat_str(key.z_re)},
                             {"z_im", rat_str(key.z_im)},
                             {"length_sq", rat_str(key.len_sq)},
                             {"exponent", e}});
        res["factors"] = arr;
      }
    }
    emit(std::move(in), std::move(res));
  }

  static std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
      if (ch == ',') {
        out.push_back(cur);
        cur.clear();
      } else {
        cur += ch;
      }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
  }
};

void add_engine_flags(CLI::App* c, Opts& o) {
  c->add_option("--q", o.q, "deformation parameter, \"p/q\" in (0,1] (1 = classical)");
  c->add_option("--cutoff", o.cutoff, "K-type coroot-height cutoff");
  c->add_option("--steps", o.steps, "sample points along scan paths");
  c->add_option("--jobs", o.jobs, "scan parallelism: 1 = serial reference, 0 = all cores");
  c->add_option("--json-indent", o.json_indent, "output indent; negative = compact");
}

void add_pair_flags(CLI::App* c, Opts& o) {
  c->add_option("--lambda", o.lambda, "integral weight lambda (default 0)");
  c->add_option("--nu-re", o.nu_re, "real part of nu (default 0)");
  c->add_option("--nu-im", o.nu_im, "imaginary part of nu, units of 2 pi/|log q| (default 0)");
}

}  // namespace

int main(int argc, char** argv) {
  Cli cli;
  Opts& o = cli.o;
  CLI::App app{"exact engine for the unitary duals of q-deformed groups"};
  app.require_subcommand(1);

  auto* root = app.add_subcommand("root", "root system data")->require_subcommand(1);
  auto* root_info = root->add_subcommand("info", "full immutable datum");
  root_info->add_option("label", o.label)->required();
  add_engine_flags(root_info, o);
  root_info->callback([&] { cli.run_root_info(); });

  auto* weyl = app.add_subcommand("weyl", "Weyl group operations")->require_subcommand(1);
  auto* weyl_orbit = weyl->add_subcommand("orbit", "full orbit of a weight");
  weyl_orbit->add_option("label", o.label)->required();
  weyl_orbit->add_option("weight", o.weight)->required();
  add_engine_flags(weyl_orbit, o);
  weyl_orbit->callback([&] { cli.run_weyl_orbit(); });
  auto* weyl_dom = weyl->add_subcommand("dominant", "dominant representative and word");
  weyl_dom->add_option("label", o.label)->required();
  weyl_dom->add_option("weight", o.weight)->required();
  weyl_dom->add_option("--reflect", o.simple_index, "also reflect at this simple index");
  weyl_dom->add_option("--apply", o.word, "also apply this word (plain and dot action)");
  add_engine_flags(weyl_dom, o);
  weyl_dom->callback([&] { cli.run_weyl_dominant(); });
  auto* weyl_long = weyl->add_subcommand("longest", "longest element");
  weyl_long->add_option("label", o.label)->required();
  add_engine_flags(weyl_long, o);
  weyl_long->callback([&] { cli.run_weyl_longest(); });

  auto* wt = app.add_subcommand("weight", "weight multiplicities")->require_subcommand(1);
  auto* wt_mult = wt->add_subcommand("mult", "weight multiplicity dim V(mu)_lambda");
  wt_mult->add_option("label", o.label)->required();
  wt_mult->add_option("mu", o.mu)->required();
  wt_mult->add_option("lambda", o.lam)->required();
  add_engine_flags(wt_mult, o);
  wt_mult->callback([&] { cli.run_weight_mult(); });
  auto* wt_dim = wt->add_subcommand("dim", "dim V(mu)");
  wt_dim->add_option("label", o.label)->required();
  wt_dim->add_option("mu", o.mu)->required();
  add_engine_flags(wt_dim, o);
  wt_dim->callback([&] { cli.run_weight_dim(); });
  auto* wt_spins = wt->add_subcommand("spins", "sl2 spin content along a simple root");
  wt_spins->add_option("label", o.label)->required();
  wt_spins->add_option("mu", o.mu)->required();
  wt_spins->add_option("lambda", o.lam)->required();
  wt_spins->add_option("i", o.simple_index)->required();
  add_engine_flags(wt_spins, o);
  wt_spins->callback([&] { cli.run_weight_spins(); });
  auto* wt_kt = wt->add_subcommand("ktype-mult", "K-type multiplicity in the principal series");
  wt_kt->add_option("label", o.label)->required();
  wt_kt->add_option("mu", o.mu)->required();
  wt_kt->add_option("lambda", o.lam)->required();
  wt_kt->add_flag("--minimal", o.flag_minimal, "also report the minimal K-type");
  wt_kt->add_flag("--enumerate", o.flag_enumerate, "also list K-types up to --cutoff");
  add_engine_flags(wt_kt, o);
  wt_kt->callback([&] { cli.run_weight_ktype_mult(); });

  auto* par = app.add_subcommand("param", "parameter predicates")->require_subcommand(1);
  auto* par_dom = par->add_subcommand("dominant", "deformed dominance of nu");
  par_dom->add_option("label", o.label)->required();
  par_dom->add_option("--nu-re", o.nu_re);
  par_dom->add_option("--nu-im", o.nu_im);
  add_engine_flags(par_dom, o);
  par_dom->callback([&] { cli.run_param_dominant(); });
  auto* par_small = par->add_subcommand("small", "smallness of a real weight");
  par_small->add_option("label", o.label)->required();
  par_small->add_option("weight", o.weight);
  par_small->add_option("--gap-bound", o.gap_bound,
                        "also run the coroot-lattice gap search to this height");
  add_engine_flags(par_small, o);
  par_small->callback([&] { cli.run_param_small(); });
  auto* par_ar = par->add_subcommand("almost-real", "almost-reality of nu");
  par_ar->add_option("label", o.label)->required();
  par_ar->add_option("--nu-re", o.nu_re);
  par_ar->add_option("--nu-im", o.nu_im);
  add_engine_flags(par_ar, o);
  par_ar->callback([&] { cli.run_param_almost_real(); });
  auto* par_can = par->add_subcommand("canonical", "canonical orbit representative");
  par_can->add_option("label", o.label)->required();
  add_pair_flags(par_can, o);
  par_can->add_flag("--x-reduce", o.flag_x_reduce, "also report the X-reduced nu.im");
  add_engine_flags(par_can, o);
  par_can->callback([&] { cli.run_param_canonical(); });
  auto* par_eq = par->add_subcommand("equiv", "diagonal W-equivalence of two pairs");
  par_eq->add_option("label", o.label)->required();
  add_pair_flags(par_eq, o);
  par_eq->add_option("--lambda2", o.lambda2);
  par_eq->add_option("--nu-re2", o.nu_re2);
  par_eq->add_option("--nu-im2", o.nu_im2);
  add_engine_flags(par_eq, o);
  par_eq->callback([&] { cli.run_param_equiv(); });
  auto* par_h = par->add_subcommand("hermitian", "existence of an invariant hermitian form");
  par_h->add_option("label", o.label)->required();
  add_pair_flags(par_h, o);
  add_engine_flags(par_h, o);
  par_h->callback([&] { cli.run_param_hermitian(); });
  auto* par_ra = par->add_subcommand("reduce-a", "type A small-remainder reduction");
  par_ra->add_option("label", o.label)->required();
  par_ra->add_option("weight", o.weight)->required();
  add_engine_flags(par_ra, o);
  par_ra->callback([&] { cli.run_param_reduce_a(); });
  auto* par_co = par->add_subcommand("cat-o", "translation to highest-weight parameters");
  par_co->add_option("label", o.label)->required();
  add_pair_flags(par_co, o);
  par_co->add_flag("--inverse", o.flag_inverse, "map (Lambda, Lambda') back to (lambda, nu)");
  par_co->add_option("--Lambda-re", o.big_re);
  par_co->add_option("--Lambda-im", o.big_im);
  par_co->add_option("--Lambda2-re", o.big2_re);
  par_co->add_option("--Lambda2-im", o.big2_im);
  par_co->add_flag("--psi", o.flag_psi, "also test translation-functor nonvanishing");
  add_engine_flags(par_co, o);
  par_co->callback([&] { cli.run_param_cat_o(); });

  auto* un = app.add_subcommand("unitary", "unitarity decisions")->require_subcommand(1);
  auto* un_dec = un->add_subcommand("decide", "unitarity of V_q(lambda, nu)");
  un_dec->add_option("label", o.label)->required();
  add_pair_flags(un_dec, o);
  un_dec->add_flag("--shift", o.flag_shift, "type A: reduce nu.im by a lattice shift first");
  add_engine_flags(un_dec, o);
  un_dec->callback([&] { cli.run_unitary_decide(); });
  auto* un_cmp = un->add_subcommand("compare", "verdicts across q against the classical limit");
  un_cmp->add_option("label", o.label)->required();
  add_pair_flags(un_cmp, o);
  un_cmp->add_option("--qs", o.qs, "comma-separated list of q values");
  add_engine_flags(un_cmp, o);
  un_cmp->callback([&] { cli.run_unitary_compare(); });
  auto* un_det = un->add_subcommand("det", "intertwiner determinants and q-numbers");
  un_det->add_option("label", o.label)->required();
  un_det->add_option("--mu", o.mu, "K-type");
  add_pair_flags(un_det, o);
  un_det->add_option("--word", o.word, "reduced word (default: longest element)");
  un_det->add_flag("--factors", o.flag_factors, "also list the symbolic factor map");
  un_det->add_option("--simple", o.simple_index, "rank-one determinant at this simple index");
  un_det->add_flag("--eigen", o.flag_eigen, "single rank-one eigenvalue from --len-sq/--m/--s");
  un_det->add_option("--len-sq", o.len_sq);
  un_det->add_option("--m", o.m);
  un_det->add_option("--s", o.s);
  un_det->add_option("--z-re", o.z_re);
  un_det->add_option("--z-im", o.z_im);
  un_det->add_option("--qnum", o.qnum_arg, "evaluate (t)_q, t = \"re\" or \"re,im\"");
  add_engine_flags(un_det, o);
  un_det->callback([&] { cli.run_unitary_det(); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the usage message to stderr
    return 2;
  } catch (const EngineError& e) {
    std::cerr << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 3;
  }
  std::cout << cli.out.dump(o.json_indent) << "\n";
  return 0;
}
