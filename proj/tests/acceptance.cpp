/*
 * Acceptance suite.  "acceptance N" runs criterion N and exits nonzero when
 * it fails; without arguments every criterion runs and one line is printed
 * for each.
 */

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "oracle.hpp"
#include "z2z4/classify.hpp"
#include "z2z4/construct.hpp"
#include "z2z4/duality.hpp"
#include "z2z4/enumerator.hpp"
#include "z2z4/errors.hpp"
#include "z2z4/search.hpp"
#include "z2z4/shadow.hpp"

using namespace z2z4;

namespace {

/* Collects failed expectations of one criterion. */
class Report {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_.size() < 8) failures_.push_back(what);
    failed_ += !ok;
  }

  bool passed() const { return failed_ == 0; }

  std::string summary() const {
    std::ostringstream s;
    s << checks_ - failed_ << "/" << checks_ << " checks";
    for (const auto& f : failures_) s << "; " << f;
    if (failed_ > failures_.size()) s << "; ...";
    return s.str();
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failed_ = 0;
  std::vector<std::string> failures_;
};

GeneratorMatrix matrix(Ambient a, std::initializer_list<const char*> rows) {
  GeneratorMatrix g(a);
  for (const char* r : rows) g.add_row(parse_vector(r, a));
  return g;
}

std::vector<oracle::Word> word_rows(std::initializer_list<const char*> rows) {
  std::vector<oracle::Word> out;
  for (const char* r : rows) out.push_back(oracle::word(r));
  return out;
}

std::vector<long long> counts(std::initializer_list<long long> c) { return c; }

std::string text(const oracle::Type& t) {
  std::ostringstream s;
  s << "(" << t.alpha << "," << t.beta << ";" << t.gamma << "," << t.delta << ";" << t.kappa << ")";
  return s.str();
}

std::string params_of(const AdditiveCode& c) { return to_string(type_params(c)); }

oracle::Form form_of(const std::vector<long long>& c) { return oracle::Form(c.begin(), c.end()); }

bool same_form(const WeightEnumerator& w, const oracle::Form& f) {
  return w.coefficients == std::vector<Rational>(f.begin(), f.end());
}

/* Even-weight subcode, its dual by scanning, and C0-perp minus C. */
std::set<oracle::Word> reference_shadow(const oracle::Code& c) {
  oracle::Code even{c.alpha, c.beta, {}};
  for (const auto& w : c.words) {
    if (oracle::weight(w, c.alpha) % 2 == 0) even.words.insert(w);
  }
  std::set<oracle::Word> out;
  for (const auto& w : oracle::dual(even).words) {
    if (!c.words.count(w)) out.insert(w);
  }
  return out;
}

/* Self-duality without scanning the ambient: generators pairwise orthogonal and |C|^2 = 2^n. */
bool generators_self_dual(const AdditiveCode& c) {
  const int alpha = static_cast<int>(c.ambient().alpha);
  std::vector<oracle::Word> rows;
  for (const auto& r : c.generators().rows()) rows.push_back(oracle::from_vector(r));
  for (const auto& a : rows) {
    for (const auto& b : rows) {
      if (oracle::inner(a, b, alpha) != 0) return false;
    }
  }
  const oracle::Code spanned = oracle::span(alpha, static_cast<int>(c.ambient().beta), rows);
  return spanned.words.size() * spanned.words.size() == (std::size_t{1} << c.ambient().length()) &&
         spanned.words == oracle::from_code(c).words;
}

/* 0, 1, 2 from the weights alone. */
int weight_class(const oracle::Code& c) {
  bool doubly = true;
  for (const auto& w : c.words) {
    const int wt = oracle::weight(w, c.alpha);
    if (wt % 2) return 0;
    if (wt % 4) doubly = false;
  }
  return doubly ? 2 : 1;
}

/* Gleason decomposition re-expanded with the test-side ring generators. */
bool gleason_reexpands(const WeightEnumerator& w, const GleasonDecomposition& d, int cls) {
  const auto [g1, g2] = oracle::ring(cls);
  oracle::Form sum(w.degree + 1, Rational(0));
  for (std::size_t i = 0; i < d.monomials.size(); ++i) {
    const auto [a, b] = d.monomials[i];
    const oracle::Form term = oracle::multiply(oracle::power(g1, a), oracle::power(g2, b));
    if (term.size() != sum.size()) return false;
    for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += d.coefficients[i] * term[k];
  }
  return same_form(w, sum);
}

std::string run_cli_text(const std::vector<std::string>& args, int* status = nullptr) {
  std::ostringstream out, err;
  const int s = run_cli(args, out, err);
  if (status) *status = s;
  return out.str() + err.str();
}

/* ---- criteria ---- */

bool criterion_1(Report& r) {
  const GeneratorMatrix g = matrix({2, 2}, {"11|20", "01|11"});
  const oracle::Code o = oracle::span(2, 2, word_rows({"11|20", "01|11"}));
  const AdditiveCode c = AdditiveCode::span(g);
  r.expect(o.words.size() == 8, "reference span has " + std::to_string(o.words.size()) + " words");
  r.expect(c.size() == 8, "span has " + std::to_string(c.size()) + " words");
  r.expect(oracle::from_code(c).words == o.words, "span differs from reference");
  r.expect(text(oracle::type(o)) == "(2,2;1,1;1)", "reference type " + text(oracle::type(o)));
  r.expect(params_of(c) == "(2,2;1,1;1)", "type " + params_of(c));
  r.expect(oracle::self_dual(o), "reference says not self-dual");
  r.expect(is_self_dual(c), "not self-dual");
  r.expect(oracle::type_class(o) == 0, "reference class");
  r.expect(classify(c) == SelfDualClass::Type0, "class " + to_string(classify(c)));
  r.expect(oracle::enumerator(o) == counts({1, 0, 0, 4, 3, 0, 0}), "reference enumerator");
  const std::string we = to_string(weight_enumerator(c));
  r.expect(we == "x^6 + 4*x^3*y^3 + 3*x^2*y^4", "enumerator " + we);
  r.expect(catalog("C1").code == c, "catalog C1 differs");
  return r.passed();
}

bool criterion_2(Report& r) {
  const AdditiveCode c = catalog("C1").code;
  const oracle::Code o = oracle::from_code(c);
  const WeightEnumerator w = weight_enumerator(c);

  const std::string even = to_string(even_subcode_we(w));
  r.expect(even == "x^6 + 3*x^2*y^4", "even subcode enumerator " + even);
  std::set<oracle::Word> even_words;
  for (const auto& v : o.words) {
    if (oracle::weight(v, 2) % 2 == 0) even_words.insert(v);
  }
  r.expect(oracle::enumerator(even_words, 2, 6) == counts({1, 0, 0, 0, 3, 0, 0}), "reference even enumerator");

  const std::string sh = to_string(shadow_we(w));
  r.expect(sh == "3*x^4*y^2 + 4*x^3*y^3 + y^6", "shadow enumerator " + sh);

  std::set<oracle::Word> computed;
  for (const auto& v : shadow(c)) computed.insert(oracle::from_vector(v));
  const std::set<oracle::Word> reference = reference_shadow(o);
  r.expect(computed == reference, "shadow differs from C0-perp \\ C computed by scanning");
  r.expect(oracle::enumerator(reference, 2, 6) == counts({0, 0, 3, 4, 0, 0, 1}), "reference shadow enumerator");

  const std::set<oracle::Word> listed = {oracle::word("11|00"), oracle::word("01|11"), oracle::word("10|13"),
                                         oracle::word("00|20"), oracle::word("01|33"), oracle::word("00|02"),
                                         oracle::word("11|22"), oracle::word("10|31")};
  std::string missing, extra;
  for (const auto& v : listed) {
    if (!computed.count(v)) missing += " " + oracle::text(v, 2);
  }
  for (const auto& v : computed) {
    if (!listed.count(v)) extra += " " + oracle::text(v, 2);
  }
  r.expect(computed == listed, "shadow set differs from the listed vectors: listed but not in shadow {" + missing +
                                   " }, in shadow but not listed {" + extra + " }");
  return r.passed();
}

bool criterion_3(Report& r) {
  const oracle::Code o = oracle::span(2, 1, word_rows({"11|0", "00|2"}));
  const AdditiveCode c = AdditiveCode::span(matrix({2, 1}, {"11|0", "00|2"}));
  r.expect(oracle::from_code(c).words == o.words, "span differs from reference");
  r.expect(oracle::self_dual(o) && is_self_dual(c), "not self-dual");
  r.expect(text(oracle::type(o)) == "(2,1;2,0;1)" && params_of(c) == "(2,1;2,0;1)", "type " + params_of(c));
  r.expect(oracle::type_class(o) == 1 && classify(c) == SelfDualClass::TypeI, "class " + to_string(classify(c)));
  r.expect(oracle::separable(o) && is_separable(c), "not separable");
  r.expect(oracle::antipodal(o) && is_antipodal(c), "not antipodal");
  return r.passed();
}

bool criterion_4(Report& r) {
  struct Case {
    const char* name;
    Ambient a;
    std::initializer_list<const char*> rows;
  };
  const Case cases[] = {
      {"C3", {4, 4}, {"1111|0000", "0101|2000", "0101|0200", "0101|0020", "0011|1111"}},
      {"C4", {4, 6}, {"1111|000000", "0101|220000", "0000|202000", "0101|000200", "0101|111010", "0011|101101"}},
  };
  for (const auto& k : cases) {
    const std::string n = k.name;
    const AdditiveCode c = AdditiveCode::span(matrix(k.a, k.rows));
    const oracle::Code o = oracle::span(static_cast<int>(k.a.alpha), static_cast<int>(k.a.beta), word_rows(k.rows));
    r.expect(oracle::from_code(c).words == o.words, n + " span differs from reference");
    r.expect(oracle::self_dual(o) && is_self_dual(c), n + " not self-dual");
    r.expect(oracle::type_class(o) == 1 && classify(c) == SelfDualClass::TypeI, n + " class " + to_string(classify(c)));
    r.expect(!oracle::separable(o) && !is_separable(c), n + " separable");
    r.expect(oracle::type(o).delta >= 1 && type_params(c).delta >= 1, n + " type " + params_of(c));
    r.expect(catalog(n).code == c, n + " catalog entry differs");
  }
  return r.passed();
}

bool criterion_5(Report& r) {
  const AdditiveCode c = build_recipe("Hamming8*D4");
  /* the binary part must be an extended Hamming code: [8,4,4] and self-dual */
  const oracle::Code h = oracle::puncture(oracle::from_code(catalog("Hamming8").code), true);
  int min_weight = 8;
  for (const auto& w : h.words) {
    if (oracle::weight(w, 8) > 0) min_weight = std::min(min_weight, oracle::weight(w, 8));
  }
  r.expect(h.words.size() == 16 && min_weight == 4 && oracle::self_dual(h), "Hamming8 is not an [8,4,4] code");
  const oracle::Code d = oracle::span(0, 4, word_rows({"|2200", "|2020", "|1111"}));
  oracle::Code o{8, 4, {}};
  for (const auto& x : h.words) {
    for (const auto& y : d.words) {
      oracle::Word w = x;
      w.insert(w.end(), y.begin(), y.end());
      o.words.insert(w);
    }
  }
  r.expect(oracle::from_code(c).words == o.words, "product differs from reference");
  r.expect(c.ambient().length() == 16, "length " + std::to_string(c.ambient().length()));
  r.expect(oracle::self_dual(o) && is_self_dual(c), "not self-dual");
  r.expect(oracle::type_class(o) == 2 && classify(c) == SelfDualClass::TypeII, "class " + to_string(classify(c)));
  r.expect(oracle::separable(o) && is_separable(c), "not separable");
  const WeightEnumerator w = weight_enumerator(c);
  r.expect(same_form(w, form_of(oracle::enumerator(o))), "enumerator differs from reference");
  try {
    const GleasonDecomposition g = gleason_decompose(w, SelfDualClass::TypeII);
    r.expect(expand(g) == w, "decomposition does not re-expand");
    r.expect(gleason_reexpands(w, g, 2), "decomposition does not re-expand with reference generators");
  } catch (const std::exception& e) {
    r.expect(false, std::string("no Type II decomposition: ") + e.what());
  }
  r.expect(catalog("C5").code == c, "catalog C5 differs");
  r.expect(oracle::from_code(catalog("D4").code).words == d.words, "catalog D4 differs");
  return r.passed();
}

bool criterion_6(Report& r) {
  const std::initializer_list<const char*> rows = {"10010110|0000", "01001110|0000", "00100111|0000",
                                                   "00000110|2000", "00000110|0200", "00000110|0020",
                                                   "00011011|1111"};
  const oracle::Code o = oracle::span(8, 4, word_rows(rows));
  const AdditiveCode c = AdditiveCode::span(matrix({8, 4}, rows));
  r.expect(oracle::from_code(c).words == o.words, "span differs from reference");
  r.expect(o.words.size() == 256 && c.size() == 256, "size " + std::to_string(c.size()));
  r.expect(oracle::self_dual(o) && is_self_dual(c), "not self-dual");
  r.expect(oracle::type_class(o) == 2 && classify(c) == SelfDualClass::TypeII, "class " + to_string(classify(c)));
  r.expect(!oracle::separable(o) && !is_separable(c), "separable");
  r.expect(catalog("C6").code == c, "catalog C6 differs");
  return r.passed();
}

void oracle_equivalence(Report& r, const std::string& name, const AdditiveCode& c) {
  const AdditiveCode d = dual(c);
  const AdditiveCode b = brute_force_dual(c);
  r.expect(d == b, name + ": dual differs from the ambient scan");
  r.expect(oracle::from_code(b).words == oracle::dual(oracle::from_code(c)).words,
           name + ": ambient scan differs from reference");
  r.expect(c.size() * d.size() == (std::size_t{1} << c.ambient().length()), name + ": |C||C-perp| != 2^n");
  r.expect(type_params(d) == dual_type(type_params(c)), name + ": dual type " + params_of(d));
  r.expect(text(oracle::type(oracle::from_code(d))) == params_of(d), name + ": dual type differs from counting");
}

bool criterion_7(Report& r) {
  for (const auto& name : catalog_names()) oracle_equivalence(r, name, catalog(name).code);
  std::mt19937_64 rng(20240917);
  for (int trial = 0; trial < 150; ++trial) {
    const GeneratorMatrix g = oracle::random_generators(rng, 10);
    const AdditiveCode c = AdditiveCode::span(g);
    r.expect(oracle::from_code(c).words == oracle::from_generators(g).words, "random span differs from reference");
    oracle_equivalence(r, "random " + std::to_string(trial) + " " + params_of(c), c);
  }
  return r.passed();
}

bool criterion_8(Report& r) {
  std::size_t codes = 0;
  for (std::size_t alpha = 0; alpha <= 8; ++alpha) {
    for (std::size_t beta = 0; alpha + 2 * beta <= 8; ++beta) {
      if (alpha + beta == 0) continue;
      SearchOptions options;
      options.alpha = alpha;
      options.beta = beta;
      for (const auto& hit : search(options).codes) {
        ++codes;
        const AdditiveCode& c = hit.code;
        const oracle::Code o = oracle::from_code(c);
        const std::string name = params_of(c);
        r.expect(oracle::self_dual(o), name + " not self-dual");
        const int kappa = oracle::type(o).kappa;
        const oracle::Code cx = oracle::puncture(o, true), cy = oracle::puncture(o, false);
        const auto self_orthogonal = [](const oracle::Code& p) {
          for (const auto& a : p.words) {
            for (const auto& b : p.words) {
              if (oracle::inner(a, b, p.alpha) != 0) return false;
            }
          }
          return true;
        };
        const std::array<bool, 7> reference = {
            self_orthogonal(cx),
            oracle::self_dual(cx),
            cx.words.size() == (std::size_t{1} << kappa),
            self_orthogonal(cy),
            oracle::self_dual(cy),
            cy.words.size() == (std::size_t{1} << beta),
            oracle::separable(o),
        };
        bool agree = true;
        for (bool b : reference) agree = agree && b == reference[0];
        r.expect(agree, name + ": reference predicates disagree");
        r.expect(separability_predicates(c).values == reference, name + ": predicates differ from reference");
        /* 2 wt_H(x) + p(y) = 0 mod 4 on every codeword */
        bool congruent = true;
        for (const auto& w : o.words) {
          int wx = 0, p = 0;
          for (std::size_t i = 0; i < w.size(); ++i) {
            if (i < alpha) wx += w[i];
            else p += w[i] % 2;
          }
          congruent = congruent && (2 * wx + p) % 4 == 0;
        }
        r.expect(congruent, name + ": order-four congruence fails");
        r.expect(!order_four_congruence_violation(c).has_value(), name + ": library reports a violation");
        /* (C_b)_X is binary self-dual of length 2 kappa */
        oracle::Code bx{static_cast<int>(alpha), 0, {}};
        for (const auto& w : o.words) {
          if (std::all_of(w.begin() + alpha, w.end(), [](int e) { return e % 2 == 0; })) {
            bx.words.insert(oracle::Word(w.begin(), w.begin() + alpha));
          }
        }
        r.expect(static_cast<int>(alpha) == 2 * kappa && oracle::self_dual(bx), name + ": (C_b)_X not self-dual");
        r.expect(order_two_projection_self_dual(c), name + ": library projection check");
      }
    }
  }
  r.expect(codes > 0, "no codes searched");
  return r.passed();
}

/* Independent restatement of the existence conditions. */
bool expected_admissible(std::size_t alpha, std::size_t beta, int column) {
  if (alpha % 2) return false;
  if (alpha == 0 || beta == 0) {
    switch (column) {
      case 0: return false;
      case 1: return beta > 0 || alpha >= 2;
      case 2: return false;
      default: return (alpha + 2 * beta) % 8 == 0;
    }
  }
  switch (column) {
    case 0: return alpha >= 2 && beta >= 2;
    case 1: return alpha >= 2 && beta >= 1;
    case 2: return alpha >= 4 && beta >= 4;
    default: return alpha % 8 == 0 && beta % 4 == 0 && alpha >= 8 && beta >= 4;
  }
}

const char* column_name(int column) {
  static const char* names[] = {"Type 0", "Type I separable", "Type I non-separable", "Type II"};
  return names[column];
}

SelfDualClass column_class(int column) {
  return column == 0 ? SelfDualClass::Type0 : column == 3 ? SelfDualClass::TypeII : SelfDualClass::TypeI;
}

std::optional<bool> column_separability(int column) {
  if (column == 1) return true;
  if (column == 2) return false;
  return std::nullopt;
}

bool criterion_9(Report& r) {
  std::size_t built = 0;
  for (std::size_t alpha = 0; alpha <= 12; ++alpha) {
    for (std::size_t beta = 0; beta <= 8; ++beta) {
      if (alpha + beta == 0) continue;
      for (int column = 0; column < 4; ++column) {
        const std::string cell = "(" + std::to_string(alpha) + "," + std::to_string(beta) + ") " + column_name(column);
        const bool expected = expected_admissible(alpha, beta, column);
        const bool got = admissible({alpha, beta, column_class(column), column_separability(column)});
        r.expect(got == expected, cell + ": admissible() = " + (got ? "true" : "false"));
        if (!expected) {
          bool rejected = false;
          try {
            ladder_build(alpha, beta, column_class(column), column_separability(column));
          } catch (const PreconditionError&) {
            rejected = true;
          }
          r.expect(rejected, cell + ": inadmissible cell was built");
          continue;
        }
        try {
          const AdditiveCode c = ladder_build(alpha, beta, column_class(column), column_separability(column));
          ++built;
          const oracle::Code o = oracle::from_code(c);
          r.expect(c.ambient() == Ambient{alpha, beta}, cell + ": wrong ambient");
          r.expect(generators_self_dual(c), cell + ": not self-dual");
          r.expect(weight_class(o) + 1 == static_cast<int>(column_class(column)), cell + ": wrong weights");
          r.expect(classify(c) == column_class(column), cell + ": classify = " + to_string(classify(c)));
          if (column == 1) r.expect(oracle::separable(o), cell + ": not separable");
          if (column == 2) r.expect(!oracle::separable(o), cell + ": separable");
        } catch (const std::exception& e) {
          r.expect(false, cell + ": " + e.what());
        }
      }
    }
  }
  /* the conditions are also sharp on every small ambient */
  for (std::size_t alpha = 0; alpha <= 10; ++alpha) {
    for (std::size_t beta = 0; alpha + 2 * beta <= 10; ++beta) {
      if (alpha + beta == 0) continue;
      SearchOptions options;
      options.alpha = alpha;
      options.beta = beta;
      std::array<bool, 4> found{};
      for (const auto& hit : search(options).codes) {
        if (hit.cls == SelfDualClass::Type0) found[0] = true;
        if (hit.cls == SelfDualClass::TypeI) found[hit.separable ? 1 : 2] = true;
        if (hit.cls == SelfDualClass::TypeII) found[3] = true;
      }
      for (int column = 0; column < 4; ++column) {
        r.expect(found[column] == expected_admissible(alpha, beta, column),
                 "search (" + std::to_string(alpha) + "," + std::to_string(beta) + ") " + column_name(column) +
                     (found[column] ? " found" : " not found"));
      }
    }
  }
  r.expect(built > 100, "only " + std::to_string(built) + " cells built");
  return r.passed();
}

bool criterion_10(Report& r) {
  const AdditiveCode c1 = catalog("C1").code;
  const AdditiveCode n = neighbor(c1, parse_vector("11|22"));
  const oracle::Code on = oracle::from_code(n);
  r.expect(oracle::self_dual(on), "neighbor through 11|22 not self-dual");
  r.expect(oracle::type_class(on) > 0, "neighbor through 11|22 is Type 0");
  for (const char* recipe : {"C1", "C1*C2", "C1*Gprime"}) {
    const auto [a, b] = non_type0_neighbors(build_recipe(recipe));
    const std::pair<const char*, const AdditiveCode*> outputs[] = {{"<C, s>", &a}, {"<C, s + t>", &b}};
    for (const auto& [label, m] : outputs) {
      const oracle::Code o = oracle::from_code(*m);
      const std::string name = std::string(label) + " for " + recipe;
      r.expect(oracle::self_dual(o), name + " not self-dual");
      r.expect(oracle::type_class(o) > 0, name + " is Type 0");
    }
  }

  /* odd-weight self-orthogonal vectors outside a code */
  std::size_t odd_tried = 0;
  for (const char* recipe : {"C2*Gdoubleprime", "C1", "C3", "C2*C2", "C1*Gprime"}) {
    const AdditiveCode c = build_recipe(recipe);
    const oracle::Code o = oracle::from_code(c);
    const int alpha = o.alpha;
    for (const auto& v : oracle::ambient(o.alpha, o.beta)) {
      if (o.words.count(v) || oracle::inner(v, v, alpha) != 0 || oracle::weight(v, alpha) % 2 == 0) continue;
      ++odd_tried;
      const AdditiveCode m = neighbor(c, parse_vector(oracle::text(v, alpha), c.ambient()));
      const oracle::Code om = oracle::from_code(m);
      const std::string name = std::string(recipe) + " through " + oracle::text(v, alpha);
      r.expect(oracle::self_dual(om), name + ": not self-dual");
      r.expect(oracle::type_class(om) == 0, name + ": not Type 0");
      r.expect(om.words.count(v) == 1, name + ": vector missing");
    }
  }
  r.expect(odd_tried > 0, "no odd self-orthogonal vector found");

  const GlueResult g = glue(c1, c1);
  const oracle::Code og = oracle::from_code(g.code);
  r.expect(g.code.ambient() == Ambient{4, 4}, "glue ambient");
  r.expect(oracle::self_dual(og), "glue(C1, C1) not self-dual");
  const AdditiveCode p = build_recipe("C1*Gprime");
  const oracle::Code og2 = oracle::from_code(glue(c1, p).code);
  r.expect(oracle::self_dual(og2), "glue(C1, C1*Gprime) not self-dual");
  return r.passed();
}

bool criterion_11(Report& r) {
  std::vector<std::pair<std::string, AdditiveCode>> codes;
  for (const auto& name : catalog_names()) codes.emplace_back(name, catalog(name).code);
  for (const char* recipe : {"C1*C1", "C1*C2", "C1*Gprime", "C2*Gdoubleprime", "C3*C1", "Hamming8*Eq7"}) {
    codes.emplace_back(recipe, build_recipe(recipe));
  }
  codes.emplace_back("ladder (6,5) Type 0", ladder_build(6, 5, SelfDualClass::Type0));
  codes.emplace_back("ladder (16,8) Type II", ladder_build(16, 8, SelfDualClass::TypeII));
  codes.emplace_back("glue(C1,C1)", glue(catalog("C1").code, catalog("C1").code).code);
  for (std::size_t alpha = 0; alpha <= 6; alpha += 2) {
    for (std::size_t beta = 0; alpha + 2 * beta <= 8; ++beta) {
      if (alpha + beta == 0) continue;
      SearchOptions options;
      options.alpha = alpha;
      options.beta = beta;
      options.up_to_equivalence = true;
      for (const auto& hit : search(options).codes) codes.emplace_back("search " + params_of(hit.code), hit.code);
    }
  }

  std::size_t type0 = 0;
  for (const auto& [name, c] : codes) {
    const oracle::Code o = oracle::from_code(c);
    const WeightEnumerator w = weight_enumerator(c);
    r.expect(same_form(w, form_of(oracle::enumerator(o))), name + ": enumerator differs from reference");
    r.expect(macwilliams(w, c.size()) == w, name + ": not a MacWilliams fixed point");
    const int cls = weight_class(o);
    if (cls == 0) {
      ++type0;
      const WeightEnumerator s = shadow_we(w);
      r.expect(s == weight_enumerator(shadow(c), c.ambient().length()), name + ": shadow enumerator differs");
      if (c.ambient().length() <= 12) {
        r.expect(same_form(s, form_of(oracle::enumerator(reference_shadow(o), o.alpha, o.length()))),
                 name + ": shadow enumerator differs from the scanned shadow");
      }
    }
    for (int ring = 0; ring < 3; ++ring) {
      const SelfDualClass rc = static_cast<SelfDualClass>(ring + 1);
      if (ring <= cls) {
        try {
          const GleasonDecomposition d = gleason_decompose(w, rc);
          r.expect(expand(d) == w && gleason_reexpands(w, d, ring), name + ": decomposition does not re-expand");
        } catch (const std::exception& e) {
          r.expect(false, name + ": no decomposition in " + to_string(rc) + " ring: " + e.what());
        }
      } else {
        bool rejected = false;
        try {
          gleason_decompose(w, rc);
        } catch (const PreconditionError&) {
          rejected = true;
        }
        r.expect(rejected, name + ": decomposed in the " + to_string(rc) + " ring");
      }
    }
  }
  r.expect(type0 >= 5, "too few Type 0 codes");
  r.expect(squares_to_identity(kMacWilliams, 1), "transform matrix does not square to the identity");
  return r.passed();
}

bool criterion_12(Report& r) {
  const auto start = std::chrono::steady_clock::now();
  const auto census = [&](std::size_t alpha, std::size_t beta, const char* cls, std::size_t guard) {
    int status = 0;
    const std::string out = run_cli_text({"--guard", std::to_string(guard), "search", std::to_string(alpha),
                                          std::to_string(beta), "--class", cls},
                                         &status);
    r.expect(status == 0, "search failed: " + out);
    return out;
  };
  const auto none = [&](std::size_t alpha, std::size_t beta, const char* cls, std::size_t guard) {
    const std::string out = census(alpha, beta, cls, guard);
    r.expect(out.rfind("0 self-dual codes\n", 0) == 0,
             "Type " + std::string(cls) + " at (" + std::to_string(alpha) + "," + std::to_string(beta) + "): " +
                 out.substr(0, out.find('\n')));
  };

  none(2, 1, "0", 10);
  for (std::size_t alpha = 0; alpha <= 8; ++alpha) none(alpha, 1, "0", 10);
  for (std::size_t beta = 1; beta <= 5; ++beta) none(0, beta, "0", 10);
  for (std::size_t beta = 1; beta <= 4; ++beta) {
    const std::string out = census(2, beta, "I", 10);
    r.expect(out.find("non-separable") == std::string::npos, "Type I non-separable at (2," + std::to_string(beta) + ")");
  }
  for (std::size_t alpha = 1; alpha < 16; ++alpha) {
    for (std::size_t beta = 1; alpha + 2 * beta < 16; ++beta) none(alpha, beta, "II", 15);
  }
  /* the minimums themselves are reached */
  r.expect(census(2, 2, "0", 10).rfind("0 self-dual", 0) != 0, "no Type 0 at (2,2)");
  r.expect(census(4, 4, "I", 12).find("non-separable") != std::string::npos, "no Type I non-separable at (4,4)");
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.expect(seconds <= 300, "took " + std::to_string(seconds) + " s");
  return r.passed();
}

struct Criterion {
  const char* title;
  bool (*run)(Report&);
};

const Criterion kCriteria[] = {
    {"C1: span, type, Type 0, enumerator", criterion_1},
    {"C1: even subcode, shadow enumerator, shadow set", criterion_2},
    {"C2: type, Type I, separable, antipodal", criterion_3},
    {"C3, C4: Type I, non-separable, delta >= 1", criterion_4},
    {"Hamming8 x D4: Type II, separable, Gleason", criterion_5},
    {"C6: 256 words, Type II, non-separable", criterion_6},
    {"dual against ambient scan, sizes, dual type", criterion_7},
    {"separability predicates and congruences on search output", criterion_8},
    {"existence ladder and admissibility", criterion_9},
    {"neighbors and gluing", criterion_10},
    {"MacWilliams, shadow and Gleason on test codes", criterion_11},
    {"minimal lengths by exhaustive search", criterion_12},
};

bool run_one(int n) {
  const Criterion& c = kCriteria[n - 1];
  Report report;
  bool ok = false;
  const auto start = std::chrono::steady_clock::now();
  try {
    ok = c.run(report);
  } catch (const std::exception& e) {
    report.expect(false, std::string("exception: ") + e.what());
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream line;
  line.setf(std::ios::fixed);
  line.precision(2);
  line << "criterion " << (n < 10 ? " " : "") << n << ": " << (ok ? "PASS" : "FAIL") << "  " << c.title << "  ["
       << report.summary() << ", " << seconds << " s]";
  std::cout << line.str() << std::endl;
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  constexpr int count = static_cast<int>(std::size(kCriteria));
  if (argc > 1) {
    const int n = std::atoi(argv[1]);
    if (n < 1 || n > count) {
      std::cerr << "criterion must be 1.." << count << "\n";
      return 2;
    }
    return run_one(n) ? 0 : 1;
  }
  int failed = 0;
  for (int n = 1; n <= count; ++n) failed += !run_one(n);
  std::cout << count - failed << "/" << count << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
