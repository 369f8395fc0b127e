#pragma once

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ncalg/acceptance.hpp"
#include "ncalg/parser.hpp"

namespace ncalg::cli {

using nlohmann::json;

enum Exit : int { ok = 0, check_failed = 1, usage = 2, truncated = 3 };

inline const char* builtin_source() {
  return R"(# built-in algebras
algebra A { generators: x, y; relations: x*y - y*x - x; }
algebra Z2 { generators: s; relations: s^2 - 1; }
algebra D { generators: s; star: auto; relations: s^2 - 1; }
algebra F1 { generators: x; relations: ; }
algebra F2 { generators: x, y; relations: ; }
)";
}

inline std::string fmt_double(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

inline std::string fmt_complex(Complex z) {
  if (z.imag() == 0.0) return fmt_double(z.real());
  return "(" + fmt_double(z.real()) + (z.imag() < 0 ? " - " : " + ") + fmt_double(std::abs(z.imag())) + " i)";
}

inline std::vector<std::string> matrix_rows(const MatrixC& m) {
  std::vector<std::string> rows;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    std::string r = "[";
    for (Eigen::Index j = 0; j < m.cols(); ++j) r += (j ? ", " : "") + fmt_complex(m(i, j));
    rows.push_back(r + "]");
  }
  return rows;
}

inline json matrix_json(const MatrixC& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(row);
  }
  return rows;
}

inline json trust_json(const RewriteSystem& s) {
  auto tb = s.trust_bound();
  return tb ? json(*tb) : json(nullptr);
}

/// Collects human-readable lines and the JSON report; prints one of them.
class Report {
 public:
  Report(std::string command, bool as_json, bool quiet) : as_json_(as_json), quiet_(quiet) {
    j_["command"] = std::move(command);
    j_["tolerance"] = nullptr;
    j_["trust_bound"] = nullptr;
    j_["status"] = "ok";
  }
  json& operator[](const char* key) { return j_[key]; }
  void line(const std::string& s) { lines_.push_back({s, false}); }
  void detail(const std::string& s) { lines_.push_back({s, true}); }
  void status(const std::string& s) { j_["status"] = s; }
  void write(std::ostream& out) const {
    if (as_json_) {
      out << j_.dump(2) << "\n";
      return;
    }
    for (const auto& [s, is_detail] : lines_)
      if (!(quiet_ && is_detail)) out << s << "\n";
  }

 private:
  json j_;
  std::vector<std::pair<std::string, bool>> lines_;
  bool as_json_;
  bool quiet_;
};

struct Options {
  std::size_t max_deg = 8;
  std::uint64_t seed = acceptance::default_seed;
  bool json = false;
  bool quiet = false;
  std::string file;
};

/// True when every generator is paired and each relator lies in one factor.
inline bool is_star_double(const Presentation& p) {
  if (!p.is_star()) return false;
  for (const auto& g : p.generators())
    if (g.kind != GeneratorKind::star_pair) return false;
  for (const auto& r : p.relators()) {
    bool plain = false, starred = false;
    for (const auto& [w, c] : r)
      for (Letter l : w) (p.letters()[l].starred ? starred : plain) = true;
    if (plain && starred) return false;
  }
  return true;
}

class Runner {
 public:
  Runner(Options opt, std::ostream& out, std::ostream& err) : opt_(std::move(opt)), out_(out), err_(err) {}

  Presentation algebra(const std::string& name) {
    if (!catalog_loaded_) load_catalog();
    if (const AlgebraDecl* d = user_.find(name)) return build_presentation(*d);
    if (const AlgebraDecl* d = builtins_.find(name)) return build_presentation(*d);
    throw ConfigError("unknown algebra '" + name + "'");
  }

  /// The *-double the structural checks run in: D(P) for plain P, P itself if it is a double.
  Presentation double_context(const std::string& name) {
    Presentation p = algebra(name);
    if (!p.is_star()) return star_double(p).presentation;
    if (!is_star_double(p)) throw PreconditionError("'" + name + "' is a *-algebra but not a *-double");
    return p;
  }

  int finish(Report& rep, int code) {
    rep.write(out_);
    return code;
  }

  // ---- rewriting

  int gbasis(const std::string& name) {
    Presentation p = algebra(name);
    Algebra a = complete_algebra(p, opt_.max_deg);
    Report rep("gbasis", opt_.json, opt_.quiet);
    bool complete = a.system.is_complete();
    rep.status(complete ? "complete" : "truncated");
    rep["trust_bound"] = trust_json(a.system);
    rep["algebra"] = p.name();
    rep["degree_bound"] = a.system.degree_bound();
    json rules = json::array();
    for (const auto& r : a.system.rules()) {
      std::string lhs = p.render_word(r.lhs), rhs = p.render(r.rhs);
      rules.push_back({{"lhs", lhs}, {"rhs", rhs}});
      rep.line(lhs + " -> " + rhs);
    }
    rep["rules"] = rules;
    rep.line(complete ? "status: complete" : "status: truncated at degree " + std::to_string(opt_.max_deg));
    return finish(rep, complete ? ok : truncated);
  }

  int reduce_cmd(const std::string& name, const std::string& expr) {
    Presentation p = algebra(name);
    Algebra a = complete_algebra(p, opt_.max_deg);
    FreeElement f = parse_element(p, expr);
    Report rep("reduce", opt_.json, opt_.quiet);
    rep["trust_bound"] = trust_json(a.system);
    rep["input"] = expr;
    FreeElement c = a.canonical(f);
    rep["result"] = p.render(c);
    rep.line(p.render(c));
    return finish(rep, ok);
  }

  int basis(const std::string& name, std::optional<std::size_t> len) {
    Presentation p = algebra(name);
    std::size_t n = len.value_or(opt_.max_deg);
    Algebra a = complete_algebra(p, std::max(n, opt_.max_deg));
    Report rep("basis", opt_.json, opt_.quiet);
    rep["trust_bound"] = trust_json(a.system);
    auto words = basis_words(a.system, n);
    json list = json::array();
    std::vector<std::size_t> counts(n + 1, 0);
    for (const auto& w : words) {
      list.push_back(p.render_word(w));
      ++counts[w.length()];
      rep.detail(p.render_word(w));
    }
    rep["words"] = list;
    rep["counts_per_length"] = counts;
    std::string census;
    for (std::size_t k = 0; k <= n; ++k) census += (k ? "," : "") + std::to_string(counts[k]);
    rep.line(std::to_string(words.size()) + " basis words up to length " + std::to_string(n) + " (per length " +
             census + ")");
    return finish(rep, ok);
  }

  // ---- constructions

  std::string presentation_text(const Presentation& p) {
    try {
      return print(to_decl(p));
    } catch (const ConfigError&) {
      std::string s = "presentation " + p.name() + "\n  letters:";
      for (Letter l = 0; l < p.letter_count(); ++l) s += " " + p.letter_name(l);
      s += "\n  relators:\n";
      for (const auto& r : p.relators()) s += "    " + p.render(r) + "\n";
      return s;
    }
  }

  json presentation_json(const Presentation& p) {
    json letters = json::array(), rels = json::array();
    for (Letter l = 0; l < p.letter_count(); ++l) letters.push_back(p.letter_name(l));
    for (const auto& r : p.relators()) rels.push_back(p.render(r));
    return {{"name", p.name()}, {"letters", letters}, {"relators", rels}, {"star", p.is_star()}};
  }

  int show_presentation(const char* command, const Presentation& p) {
    Report rep(command, opt_.json, opt_.quiet);
    rep["presentation"] = presentation_json(p);
    std::string text = presentation_text(p);
    if (!text.empty() && text.back() == '\n') text.pop_back();
    rep.line(text);
    return finish(rep, ok);
  }

  int double_cmd(const std::string& name) {
    Presentation p = algebra(name);
    return show_presentation("double", p.is_star() ? double_of_star(p).presentation : star_double(p).presentation);
  }

  int opposite_cmd(const std::string& name) {
    Presentation p = algebra(name);
    if (p.is_star()) throw PreconditionError("opposite expects a plain algebra");
    return show_presentation("opposite", opposite(p));
  }

  int freeprod(const std::string& a, const std::string& b, bool star, bool rename) {
    Presentation p1 = algebra(a), p2 = algebra(b);
    if (rename) {
      p1 = with_generator_suffix(p1, "1");
      p2 = with_generator_suffix(p2, "2");
    }
    return show_presentation("freeprod", free_product(p1, p2, star ? ProductKind::star : ProductKind::plain));
  }

  int fock(const std::string& name, std::optional<std::size_t> len) {
    Presentation p = algebra(name);
    std::string suffix = "'";
    if (p.is_star()) {
      p = underlying_plain(p);
      suffix = "^";
    }
    std::size_t n = len.value_or(opt_.max_deg);
    auto words = fock_basis(p, n, suffix);
    StarDouble d = star_double(p, suffix);
    Algebra dbl = complete_algebra(d.presentation, std::max(n, opt_.max_deg));
    auto oracle = basis_words(dbl.system, n);
    bool agree = words == oracle;
    Report rep("fock", opt_.json, opt_.quiet);
    rep["trust_bound"] = trust_json(dbl.system);
    json list = json::array();
    for (const auto& w : words) {
      list.push_back(d.presentation.render_word(w));
      rep.detail(d.presentation.render_word(w));
    }
    rep["words"] = list;
    rep["agrees_with_double_basis"] = agree;
    rep.status(agree ? "ok" : "mismatch");
    rep.line(std::to_string(words.size()) + " alternating words up to length " + std::to_string(n) +
             (agree ? ", equal to the basis words of " : ", DIFFERENT from the basis words of ") +
             d.presentation.name());
    return finish(rep, agree ? ok : check_failed);
  }

  // ---- structural checks

  std::vector<FreeElement> parse_all(const Presentation& p, const std::vector<std::string>& exprs) {
    std::vector<FreeElement> out;
    for (const auto& e : exprs) out.push_back(parse_element(p, e));
    return out;
  }

  int check_ordered(const std::string& name, const std::vector<std::string>& elems, std::size_t samples) {
    Presentation p = double_context(name);
    Algebra a = complete_algebra(p, std::max<std::size_t>(opt_.max_deg, 6));
    Report rep("check ordered", opt_.json, opt_.quiet);
    rep["trust_bound"] = trust_json(a.system);
    rep["algebra"] = p.name();
    if (!elems.empty()) {
      SquareSumReport sq = sum_of_star_squares(a, parse_all(p, elems));
      rep["is_zero"] = sq.is_zero;
      rep["degree"] = sq.degree ? json(*sq.degree) : json(nullptr);
      rep["canonical"] = p.render(sq.canonical);
      rep.line("sum of x'x: " + p.render(sq.canonical));
      rep.line(sq.is_zero ? "zero (all inputs vanish)" : "nonzero, degree " + std::to_string(*sq.degree));
      return finish(rep, ok);
    }
    Rng rng(opt_.seed);
    std::uniform_int_distribution<std::size_t> len(1, 4);
    std::size_t pass = 0;
    for (std::size_t t = 0; t < samples; ++t) {
      std::vector<FreeElement> xs;
      std::size_t n = len(rng), deg = 0;
      for (std::size_t k = 0; k < n; ++k) xs.push_back(random_element(rng, p.letter_count(), 3));
      for (const auto& x : xs) deg = std::max(deg, a.canonical(x).degree());
      SquareSumReport sq = sum_of_star_squares(a, xs);
      pass += (!sq.is_zero && sq.degree == 2 * deg) ? 1 : 0;
    }
    rep["samples"] = samples;
    rep["passed"] = pass;
    rep["seed"] = opt_.seed;
    rep.line(std::to_string(pass) + "/" + std::to_string(samples) + " random tuples: sum of x'x has degree 2d");
    return finish(rep, pass == samples ? ok : check_failed);
  }

  int check_bounded(const std::string& name, const std::vector<std::string>& elems, std::size_t samples) {
    Presentation p = double_context(name);
    Algebra a = complete_algebra(p, std::max<std::size_t>(opt_.max_deg, 6));
    Report rep("check bounded", opt_.json, opt_.quiet);
    rep["trust_bound"] = trust_json(a.system);
    if (!elems.empty()) {
      bool unit = boundedness_test(a, parse_all(p, elems));
      rep["sum_is_unit"] = unit;
      rep.line(unit ? "sum of x'x = 1 (all inputs scalar)" : "sum of x'x != 1");
      return finish(rep, ok);
    }
    Rng rng(opt_.seed);
    std::size_t pass = 0;
    for (std::size_t t = 0; t < samples; ++t) {
      std::vector<FreeElement> xs{random_nonscalar(rng, p.letter_count(), 3), random_element(rng, p.letter_count(), 3)};
      pass += boundedness_test(a, xs) ? 0 : 1;
    }
    rep["samples"] = samples;
    rep["passed"] = pass;
    rep["seed"] = opt_.seed;
    rep.line(std::to_string(pass) + "/" + std::to_string(samples) + " tuples with a non-scalar entry are unbounded");
    return finish(rep, pass == samples ? ok : check_failed);
  }

  int check_modulus(const std::string& name, const std::string& x, const std::string& y) {
    Presentation p = double_context(name);
    Algebra a = complete_algebra(p, std::max<std::size_t>(opt_.max_deg, 6));
    Report rep("check modulus", opt_.json, opt_.quiet);
    rep["trust_bound"] = trust_json(a.system);
    auto lambda = modulus_match(a, parse_element(p, x), parse_element(p, y));
    rep["lambda"] = lambda ? json(lambda->to_string()) : json(nullptr);
    rep.line(lambda ? "y = " + lambda->to_string() + " x, |lambda| = 1" : "none: x'x != y'y");
    return finish(rep, ok);
  }

  int check_isometry(const std::string& name, const std::vector<std::string>& elems, std::size_t samples) {
    Presentation p = double_context(name);
    std::size_t need = 3;
    for (const auto& e : parse_all(p, elems)) need = std::max(need, 3 * e.degree());
    Algebra a = complete_algebra(p, std::max(opt_.max_deg, need));
    Report rep("check isometry", opt_.json, opt_.quiet);
    rep["trust_bound"] = trust_json(a.system);
    if (!elems.empty()) {
      json results = json::array();
      for (const auto& e : elems) {
        IsometryReport r = isometry_classify(a, parse_element(p, e));
        results.push_back({{"element", e}, {"kind", to_string(r.kind)}});
        rep.line(e + ": " + to_string(r.kind));
      }
      rep["results"] = results;
      return finish(rep, ok);
    }
    Rng rng(opt_.seed);
    std::size_t pass = 0;
    for (std::size_t t = 0; t < samples; ++t)
      pass += isometry_classify(a, random_nonscalar(rng, p.letter_count(), 3)).kind == IsometryKind::none ? 1 : 0;
    rep["samples"] = samples;
    rep["passed"] = pass;
    rep["seed"] = opt_.seed;
    rep.line(std::to_string(pass) + "/" + std::to_string(samples) + " random non-scalar elements classify as none");
    return finish(rep, pass == samples ? ok : check_failed);
  }

  // ---- embeddings

  int embed_gamma(const std::string& name, std::size_t verify_deg) {
    Presentation a = algebra(name);
    if (!a.is_star()) throw PreconditionError("embed gamma needs a *-algebra (declare 'star: auto')");
    GammaEmbedding ge = gamma_embed(a, std::max(opt_.max_deg, 3 * verify_deg));
    Report rep("embed gamma", opt_.json, opt_.quiet);
    const Presentation& src = ge.map.source().presentation;
    const Presentation& dst = ge.map.target().presentation;
    rep["trust_bound"] = trust_json(ge.map.target().system);
    json images = json::object();
    for (Letter l = 0; l < src.letter_count(); ++l) {
      images[src.letter_name(l)] = dst.render(ge.map.images()[l]);
      rep.detail(src.letter_name(l) + " -> " + dst.render(ge.map.images()[l]));
    }
    rep["images"] = images;
    std::size_t words = 0, roundtrip = 0;
    for (const auto& w : fock_basis(underlying_plain(a), verify_deg, "^")) {
      ++words;
      FreeElement f = FreeElement::monomial(w);
      roundtrip += gamma_inverse(ge, ge.map.apply(f)) == ge.map.source().canonical(f) ? 1 : 0;
    }
    InjectivityReport inj = injectivity_certificate(ge.map, verify_deg);
    bool pass = roundtrip == words && inj.injective_at_bound();
    rep["relators_preserved"] = true;
    rep["star_compatible"] = ge.map.star_compatible();
    rep["roundtrip"] = {{"words", words}, {"identity", roundtrip}};
    rep["injectivity"] = {{"bound", verify_deg}, {"basis_words", inj.basis_words}, {"rank", inj.rank}};
    rep.status(pass ? "verified" : "failed");
    rep.line("gamma: " + src.name() + " -> " + dst.name() + ", relators and star preserved");
    rep.line("inverse o gamma = id on " + std::to_string(roundtrip) + "/" + std::to_string(words) + " words");
    rep.line("rank " + std::to_string(inj.rank) + "/" + std::to_string(inj.basis_words) + " at degree " +
             std::to_string(verify_deg) + (inj.injective_at_bound() ? " (injective at this degree)" : " (DEFICIENT)"));
    return finish(rep, pass ? ok : check_failed);
  }

  int embed_z2z2(const std::string& name, std::size_t verify_deg) {
    Presentation a = algebra(name);
    if (!a.is_star()) throw PreconditionError("embed z2z2 needs a *-algebra (declare 'star: auto')");
    GammaEmbedding ge = gamma_embed(a, std::max(opt_.max_deg, 3 * verify_deg));
    GeneratorMap composed = gamma_z2z2(ge, std::max(opt_.max_deg, 5 * verify_deg));
    InjectivityReport inj = injectivity_certificate(composed, verify_deg);
    Report rep("embed z2z2", opt_.json, opt_.quiet);
    const Presentation& src = composed.source().presentation;
    const Presentation& dst = composed.target().presentation;
    rep["trust_bound"] = trust_json(composed.target().system);
    json images = json::object();
    for (Letter l = 0; l < src.letter_count(); ++l) {
      images[src.letter_name(l)] = dst.render(composed.images()[l]);
      rep.detail(src.letter_name(l) + " -> " + dst.render(composed.images()[l]));
    }
    rep["images"] = images;
    rep["injectivity"] = {{"bound", verify_deg}, {"basis_words", inj.basis_words}, {"rank", inj.rank}};
    rep.status(inj.injective_at_bound() ? "verified" : "failed");
    rep.line(src.name() + " -> " + dst.name() + ": rank " + std::to_string(inj.rank) + "/" +
             std::to_string(inj.basis_words) + " at degree " + std::to_string(verify_deg));
    return finish(rep, inj.injective_at_bound() ? ok : check_failed);
  }

  // ---- numerics

  static Scalar parse_scalar(const std::string& text) {
    static const Presentation none("C", {}, {});
    FreeElement f = parse_element(none, text);
    auto s = f.scalar_value();
    if (!s) throw ConfigError("'" + text + "' is not a scalar");
    return *s;
  }

  static MatrixC parse_matrix(const std::string& text) {
    std::vector<std::vector<Complex>> rows;
    std::stringstream rs(text);
    std::string row;
    while (std::getline(rs, row, ';')) {
      std::vector<Complex> r;
      std::stringstream cs(row);
      std::string cell;
      while (std::getline(cs, cell, ',')) r.push_back(parse_scalar(cell).to_complex());
      rows.push_back(std::move(r));
    }
    if (rows.empty() || rows[0].empty()) throw ConfigError("empty matrix");
    MatrixC m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows[0].size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != rows[0].size()) throw ConfigError("ragged matrix");
      for (std::size_t j = 0; j < rows[i].size(); ++j)
        m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
    }
    return m;
  }

  void matrix_lines(Report& rep, const std::string& label, const MatrixC& m) {
    rep.line(label + " =");
    for (const auto& r : matrix_rows(m)) rep.line("  " + r);
  }

  int matrep_dz2(const std::string& lambda_text) {
    Complex lambda = parse_scalar(lambda_text).to_complex();
    MatRep r = dz2_rep(lambda);
    Report rep("matrep dz2", opt_.json, opt_.quiet);
    rep["tolerance"] = tol::relator_residual;
    rep["lambda"] = {lambda.real(), lambda.imag()};
    rep["s"] = matrix_json(r.matrix(0));
    rep["s_star"] = matrix_json(r.matrix(1));
    rep["max_relator_residual"] = r.max_relator_residual();
    rep["outside_unit_disc"] = std::abs(lambda) > 1.0;
    matrix_lines(rep, "s", r.matrix(0));
    matrix_lines(rep, "s'", r.matrix(1));
    rep.line("max relator residual " + fmt_double(r.max_relator_residual()));
    if (std::abs(lambda) > 1.0) rep.line("note: |lambda| > 1");
    return finish(rep, ok);
  }

  int matrep_faithful(std::size_t bound, const std::vector<std::string>& lambda_texts) {
    std::vector<Scalar> lambdas;
    if (lambda_texts.empty())
      lambdas = acceptance::criterion_9_lambdas();
    else
      for (const auto& t : lambda_texts) lambdas.push_back(parse_scalar(t));
    FaithfulnessReport f = faithfulness_certificate(bound, lambdas);
    Report rep("matrep faithful", opt_.json, opt_.quiet);
    rep["tolerance"] = f.threshold;
    rep["bound"] = bound;
    rep["basis_words"] = f.basis_words;
    rep["samples"] = f.samples;
    rep["required_samples"] = f.required_samples;
    rep["numerical_rank"] = f.numerical_rank;
    rep["exact_rank"] = f.exact_rank;
    rep["sigma_ratio_min"] = f.sigma_ratio_min;
    int code = ok;
    if (f.inconclusive()) {
      rep.status("inconclusive");
      code = truncated;
    } else if (!f.full_rank()) {
      rep.status("rank_deficient");
      code = check_failed;
    }
    rep.line(std::to_string(f.basis_words) + " basis words up to length " + std::to_string(bound) + ", " +
             std::to_string(f.samples) + " distinct nonzero lambdas (" + std::to_string(f.required_samples) +
             " needed)");
    rep.line("numerical rank " + std::to_string(f.numerical_rank) + " (sigma_min/sigma_max = " +
             fmt_double(f.sigma_ratio_min) + ", threshold " + fmt_double(f.threshold) + ")");
    rep.line("exact rank " + std::to_string(f.exact_rank));
    if (f.inconclusive()) rep.line("inconclusive: too few samples");
    return finish(rep, code);
  }

  int example_cholesky(const std::string& matrix) {
    MatrixC c = parse_matrix(matrix);
    MatrixC l = cholesky(c);
    Report rep("example cholesky", opt_.json, opt_.quiet);
    rep["tolerance"] = tol::cholesky_residual;
    rep["L"] = matrix_json(l);
    double res = (l * l.adjoint() - c).norm();
    rep["residual"] = res;
    matrix_lines(rep, "L", l);
    rep.line("|LL* - C| = " + fmt_double(res));
    return finish(rep, ok);
  }

  int example_triangular(const std::string& s_text, const std::string& t_text, int n) {
    MatrixC s, t;
    if (!t_text.empty()) {
      MatrixC d = parse_matrix(t_text);
      t = MatrixC::Zero(d.size(), d.size());
      for (Eigen::Index k = 0; k < d.size(); ++k) t(k, k) = d(k);
    } else {
      t = MatrixC::Zero(n, n);
      for (int k = 0; k < n; ++k) t(k, k) = k + 1.0;
    }
    if (!s_text.empty()) {
      s = parse_matrix(s_text);
    } else {
      Rng rng(opt_.seed);
      s = random_disc_matrix(rng, t.rows(), t.rows()) + 2.0 * MatrixC::Identity(t.rows(), t.rows());
    }
    SimilarityWitness w = nonisometric_witness(s, t);
    Report rep("example triangular", opt_.json, opt_.quiet);
    rep["tolerance"] = w.residual_bound;
    rep["A"] = matrix_json(w.a);
    rep["B"] = matrix_json(w.b);
    rep["residual"] = w.residual;
    rep["cond_C"] = w.cond_c;
    rep["cond_S"] = w.cond_s;
    rep["scalar_flag"] = w.scalar_flag;
    rep["contract_holds"] = w.contract_holds();
    rep.status(w.contract_holds() ? "ok" : "failed");
    matrix_lines(rep, "A", w.a);
    matrix_lines(rep, "B", w.b);
    rep.line("|C B* C^-1 - A| = " + fmt_double(w.residual) + " (bound " + fmt_double(w.residual_bound) + ")");
    rep.line("cond(C) = " + fmt_double(w.cond_c) + ", cond(S) = " + fmt_double(w.cond_s));
    rep.line(w.scalar_flag ? "A is scalar (degenerate)" : "A is not scalar");
    return finish(rep, w.contract_holds() ? ok : check_failed);
  }

  int example_vcbound(const std::string& c_text, const std::string& y_text) {
    Complex c = parse_scalar(c_text).to_complex();
    MatrixC y = parse_matrix(y_text);
    VcWitness w = vc_bound_witness(c, y);
    Report rep("example vcbound", opt_.json, opt_.quiet);
    rep["tolerance"] = tol::witness;
    rep["relation_residual"] = w.relation_residual;
    rep["norm_Y"] = w.norm_y;
    rep["norm_phi_E22"] = w.norm_phi_e22;
    rep["phi_lower"] = w.phi_lower;
    rep["phi_inverse_lower"] = w.phi_inverse_lower;
    rep["witness_product"] = w.witness_product;
    rep["target"] = w.target;
    rep["certified"] = w.certified;
    rep.status(w.certified ? "ok" : "failed");
    rep.line("relations X^2 = 0, XA = cX, AX = 0: residual " + fmt_double(w.relation_residual));
    rep.line("|phi| >= " + fmt_double(w.phi_lower) + ", |phi^-1| >= " + fmt_double(w.phi_inverse_lower));
    rep.line("product " + fmt_double(w.witness_product) + " vs 1/|c| = " + fmt_double(w.target) +
             (w.certified ? " (certified)" : " (NOT certified)"));
    return finish(rep, w.certified ? ok : check_failed);
  }

  int selftest() {
    auto results = acceptance::run_all(opt_.seed);
    Report rep("selftest", opt_.json, opt_.quiet);
    json list = json::array();
    bool all = true;
    for (const auto& r : results) {
      all = all && r.pass;
      list.push_back({{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"detail", r.detail}, {"seconds", r.seconds}});
      rep.line(acceptance::format_line(r));
    }
    rep["criteria"] = list;
    rep.status(all ? "ok" : "failed");
    return finish(rep, all ? ok : check_failed);
  }

 private:
  void load_catalog() {
    builtins_ = parse(builtin_source());
    if (!opt_.file.empty()) {
      std::ifstream in(opt_.file);
      if (!in) throw ConfigError("cannot read " + opt_.file);
      std::stringstream ss;
      ss << in.rdbuf();
      user_ = parse(ss.str());
    }
    catalog_loaded_ = true;
  }

  Options opt_;
  std::ostream& out_;
  std::ostream& err_;
  PresentationFile builtins_, user_;
  bool catalog_loaded_ = false;
};

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"ncalg: noncommutative *-algebra toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--max-deg", opt.max_deg, "completion and trust bound")->capture_default_str();
  app.add_option("--seed", opt.seed, "seed for randomized checks");
  app.add_flag("--json", opt.json, "machine-readable report");
  app.add_flag("--quiet", opt.quiet, "only the result lines");
  app.add_option("-f,--file", opt.file, "presentation file");

  std::function<int(Runner&)> action;
  std::string alg, alg2, expr, x, y, lambda = "1", matrix = "4, 2; 2, 5", s_text, t_text, c_text = "1/2",
                                       y_text = "1";
  std::optional<std::size_t> len;
  std::vector<std::string> elems, lambdas;
  std::size_t samples = 200, verify_deg = 4, bound = 8;
  bool star = false, rename = false;
  int n = 4;

  auto algebra_arg = [&](CLI::App* s) { s->add_option("algebra", alg, "algebra name")->required(); };

  auto* gb = app.add_subcommand("gbasis", "complete and list the rewrite rules");
  algebra_arg(gb);
  gb->callback([&] { action = [&](Runner& r) { return r.gbasis(alg); }; });

  auto* rd = app.add_subcommand("reduce", "canonical form of an element");
  algebra_arg(rd);
  rd->add_option("expr", expr, "element")->required();
  rd->callback([&] { action = [&](Runner& r) { return r.reduce_cmd(alg, expr); }; });

  auto* bw = app.add_subcommand("basis", "basis words up to a length");
  algebra_arg(bw);
  bw->add_option("--len", len, "maximal length (default: --max-deg)");
  bw->callback([&] { action = [&](Runner& r) { return r.basis(alg, len); }; });

  auto* db = app.add_subcommand("double", "the *-double D(A)");
  algebra_arg(db);
  db->callback([&] { action = [&](Runner& r) { return r.double_cmd(alg); }; });

  auto* op = app.add_subcommand("opposite", "the opposite algebra");
  algebra_arg(op);
  op->callback([&] { action = [&](Runner& r) { return r.opposite_cmd(alg); }; });

  auto* fp = app.add_subcommand("freeprod", "free product of two algebras");
  fp->add_option("first", alg, "first factor")->required();
  fp->add_option("second", alg2, "second factor")->required();
  fp->add_flag("--star", star, "*-free product");
  fp->add_flag("--rename", rename, "suffix generators with 1 and 2");
  fp->callback([&] { action = [&](Runner& r) { return r.freeprod(alg, alg2, star, rename); }; });

  auto* fk = app.add_subcommand("fock", "alternating word basis of D(A)");
  algebra_arg(fk);
  fk->add_option("--len", len, "maximal length (default: --max-deg)");
  fk->callback([&] { action = [&](Runner& r) { return r.fock(alg, len); }; });

  auto* ck = app.add_subcommand("check", "structural checks in a *-double");
  ck->require_subcommand(1);
  ck->fallthrough();
  auto check_sub = [&](const char* name, const char* help) {
    auto* s = ck->add_subcommand(name, help);
    s->fallthrough();
    algebra_arg(s);
    return s;
  };
  auto* co = check_sub("ordered", "sum of x'x is nonzero of degree 2d");
  co->add_option("--elem", elems, "element (repeatable); random tuples when absent");
  co->add_option("--samples", samples, "random tuples");
  co->callback([&] { action = [&](Runner& r) { return r.check_ordered(alg, elems, samples); }; });
  auto* cb = check_sub("bounded", "sum of x'x = 1 only for scalars");
  cb->add_option("--elem", elems, "element (repeatable)");
  cb->add_option("--samples", samples, "random tuples");
  cb->callback([&] { action = [&](Runner& r) { return r.check_bounded(alg, elems, samples); }; });
  auto* cm = check_sub("modulus", "x'x = y'y forces y = lambda x");
  cm->add_option("--x", x, "element of the first factor")->required();
  cm->add_option("--y", y, "element")->required();
  cm->callback([&] { action = [&](Runner& r) { return r.check_modulus(alg, x, y); }; });
  auto* ci = check_sub("isometry", "unitary / projection / partial isometry");
  ci->add_option("--elem", elems, "element (repeatable)");
  ci->add_option("--samples", samples, "random elements");
  ci->callback([&] { action = [&](Runner& r) { return r.check_isometry(alg, elems, samples); }; });

  auto* em = app.add_subcommand("embed", "the gamma embeddings");
  em->require_subcommand(1);
  em->fallthrough();
  auto* eg = em->add_subcommand("gamma", "D(A) -> A (*) D(C[Z])");
  eg->fallthrough();
  algebra_arg(eg);
  eg->add_option("--verify-deg", verify_deg, "degree for roundtrip and rank checks")->capture_default_str();
  eg->callback([&] { action = [&](Runner& r) { return r.embed_gamma(alg, verify_deg); }; });
  auto* ez = em->add_subcommand("z2z2", "D(A) -> A (*) D(C[Z2]) (*) D(C[Z2])");
  ez->fallthrough();
  algebra_arg(ez);
  ez->add_option("--verify-deg", verify_deg, "degree for the rank check")->capture_default_str();
  ez->callback([&] { action = [&](Runner& r) { return r.embed_z2z2(alg, verify_deg); }; });

  auto* mr = app.add_subcommand("matrep", "2x2 representations of D(C[Z2])");
  mr->require_subcommand(1);
  mr->fallthrough();
  auto* md = mr->add_subcommand("dz2", "s -> [[1, lambda], [0, -1]]");
  md->fallthrough();
  md->add_option("--lambda", lambda, "lambda")->capture_default_str();
  md->callback([&] { action = [&](Runner& r) { return r.matrep_dz2(lambda); }; });
  auto* mf = mr->add_subcommand("faithful", "rank of the basis words under sum of representations");
  mf->fallthrough();
  mf->add_option("--bound", bound, "word length")->capture_default_str();
  mf->add_option("--lambda", lambdas, "lambda samples (repeatable)");
  mf->callback([&] { action = [&](Runner& r) { return r.matrep_faithful(bound, lambdas); }; });

  auto* ex = app.add_subcommand("example", "matrix examples");
  ex->require_subcommand(1);
  ex->fallthrough();
  auto* xc = ex->add_subcommand("cholesky", "C = L L*");
  xc->fallthrough();
  xc->add_option("--matrix", matrix, "rows separated by ';'")->capture_default_str();
  xc->callback([&] { action = [&](Runner& r) { return r.example_cholesky(matrix); }; });
  auto* xt = ex->add_subcommand("triangular", "A = L T L^-1, B = L T* L^-1");
  xt->fallthrough();
  xt->add_option("--S", s_text, "matrix S (default random)");
  xt->add_option("--T", t_text, "diagonal of T (default 1..n)");
  xt->add_option("--n", n, "size when S and T are not given")->capture_default_str();
  xt->callback([&] { action = [&](Runner& r) { return r.example_triangular(s_text, t_text, n); }; });
  auto* xv = ex->add_subcommand("vcbound", "block witnesses for |phi| |phi^-1| >= 1/|c|");
  xv->fallthrough();
  xv->add_option("--c", c_text, "nonzero scalar c")->capture_default_str();
  xv->add_option("--Y", y_text, "matrix Y")->capture_default_str();
  xv->callback([&] { action = [&](Runner& r) { return r.example_vcbound(c_text, y_text); }; });

  auto* st = app.add_subcommand("selftest", "run the acceptance suite");
  st->callback([&] { action = [&](Runner& r) { return r.selftest(); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  }

  std::string command;
  for (const CLI::App* sub = &app; !sub->get_subcommands().empty();) {
    sub = sub->get_subcommands().front();
    command += (command.empty() ? "" : " ") + sub->get_name();
  }
  auto fail = [&](int code, const std::string& prefix, const std::string& status, const Error& e) {
    if (opt.json) {
      json j{{"command", command}, {"status", status}, {"error", e.what()}, {"tolerance", nullptr},
             {"trust_bound", code == truncated ? json(opt.max_deg) : json(nullptr)}};
      out << j.dump(2) << "\n";
    }
    err << prefix << e.what() << "\n";
    return code;
  };

  Runner runner(opt, out, err);
  try {
    return action(runner);
  } catch (const TrustBoundExceeded& e) {
    return fail(truncated, "inconclusive: ", "truncated", e);
  } catch (const ParseError& e) {
    return fail(usage, "parse error: ", "error", e);
  } catch (const ConfigError& e) {
    return fail(usage, "error: ", "error", e);
  } catch (const PreconditionError& e) {
    return fail(usage, "error: ", "error", e);
  } catch (const Error& e) {
    return fail(check_failed, "check failed: ", "failed", e);
  }
}

}  // namespace ncalg::cli
