#include "z2z4/verify.hpp"

#include <functional>

#include "z2z4/construct.hpp"
#include "z2z4/duality.hpp"
#include "z2z4/enumerator.hpp"
#include "z2z4/shadow.hpp"

namespace z2z4 {

namespace {

class Checks {
 public:
  void expect(std::string name, const std::function<bool(std::string&)>& body) {
    CheckResult r{std::move(name), false, {}};
    try {
      r.passed = body(r.detail);
    } catch (const std::exception& e) {
      r.detail = e.what();
    }
    results_.push_back(std::move(r));
  }

  void equal_text(std::string name, const std::function<std::string()>& observed, const std::string& expected) {
    expect(std::move(name), [&](std::string& detail) {
      detail = observed();
      return detail == expected;
    });
  }

  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  std::vector<CheckResult> results_;
};

std::string class_summary(const AdditiveCode& c) {
  return to_string(classify(c)) + (is_separable(c) ? ", separable" : ", non-separable") +
         (is_antipodal(c) ? ", antipodal" : ", non-antipodal");
}

}  // namespace

std::vector<CheckResult> verify_examples() {
  Checks checks;
  const AdditiveCode c1 = catalog("C1").code;

  checks.equal_text("C1 size", [&] { return std::to_string(c1.size()); }, "8");
  checks.equal_text("C1 type", [&] { return to_string(type_params(c1)); }, "(2,2;1,1;1)");
  checks.equal_text("C1 class", [&] { return class_summary(c1); }, "Type 0, non-separable, non-antipodal");
  checks.equal_text("C1 weight enumerator", [&] { return to_string(weight_enumerator(c1)); },
                    "x^6 + 4*x^3*y^3 + 3*x^2*y^4");
  checks.equal_text("C1 even subcode enumerator", [&] { return to_string(even_subcode_we(weight_enumerator(c1))); },
                    "x^6 + 3*x^2*y^4");
  checks.equal_text("C1 even subcode", [&] {
    std::string s;
    const AdditiveCode even = even_weight_subcode(c1);
    for (const auto& w : even.codewords()) s += to_string(w) + " ";
    return s;
  }, "00|00 00|22 11|02 11|20 ");
  checks.equal_text("C1 shadow enumerator", [&] { return to_string(shadow_we(weight_enumerator(c1))); },
                    "3*x^4*y^2 + 4*x^3*y^3 + y^6");
  checks.equal_text("C1 shadow size", [&] { return std::to_string(shadow(c1).size()); }, "8");
  checks.expect("C1 shadow set has the shadow enumerator", [&](std::string& detail) {
    detail = to_string(weight_enumerator(shadow(c1), 6));
    return weight_enumerator(shadow(c1), 6) == shadow_we(weight_enumerator(c1));
  });
  checks.expect("C1 orthogonality table", [&](std::string&) {
    return orthogonality_table(decompose(c1)) == kOrthogonalityRelations;
  });
  checks.equal_text("C1 Gleason decomposition",
                    [&] { return to_string(gleason_decompose(weight_enumerator(c1), SelfDualClass::Type0)); },
                    "(1, 0, -3, -2) on (g1^3, g1^2*g2, g1*g2^2, g2^3)");

  const AdditiveCode c2 = catalog("C2").code;
  checks.equal_text("C2 type", [&] { return to_string(type_params(c2)); }, "(2,1;2,0;1)");
  checks.equal_text("C2 class", [&] { return class_summary(c2); }, "Type I, separable, antipodal");

  for (const char* name : {"C3", "C4"}) {
    const AdditiveCode c = catalog(name).code;
    checks.equal_text(std::string(name) + " class", [&] { return class_summary(c); },
                      "Type I, non-separable, antipodal");
    checks.expect(std::string(name) + " has order-four generators", [&](std::string& detail) {
      detail = to_string(type_params(c));
      return type_params(c).delta >= 1;
    });
  }

  const AdditiveCode c5 = catalog("C5").code;
  checks.equal_text("C5 length", [&] { return std::to_string(c5.ambient().length()); }, "16");
  checks.equal_text("C5 class", [&] { return class_summary(c5); }, "Type II, separable, antipodal");
  checks.expect("C5 enumerator in the Type II ring", [&](std::string& detail) {
    const auto d = gleason_decompose(weight_enumerator(c5), SelfDualClass::TypeII);
    detail = to_string(d);
    return expand(d) == weight_enumerator(c5);
  });

  const AdditiveCode c6 = catalog("C6").code;
  checks.equal_text("C6 size", [&] { return std::to_string(c6.size()); }, "256");
  checks.equal_text("C6 class", [&] { return class_summary(c6); }, "Type II, non-separable, antipodal");

  for (const auto& name : catalog_names()) {
    const CatalogEntry entry = catalog(name);
    checks.expect(name + " expected attributes", [&](std::string& detail) {
      detail = to_string(type_params(entry.code)) + " " + class_summary(entry.code);
      return (!entry.expected.params || *entry.expected.params == type_params(entry.code)) &&
             classify(entry.code) == entry.expected.cls && is_separable(entry.code) == entry.expected.separable;
    });
    checks.expect(name + " enumerator fixed by MacWilliams", [&](std::string& detail) {
      const auto w = weight_enumerator(entry.code);
      detail = to_string(macwilliams(w, entry.code.size()));
      return macwilliams(w, entry.code.size()) == w;
    });
  }

  checks.expect("MacWilliams matrix squares to the identity", [](std::string&) {
    return squares_to_identity(kMacWilliams, 1) && squares_to_identity(kNegation, 0);
  });
  return checks.take();
}

}  // namespace z2z4
