#include "cli.hpp"

#include <CLI11.hpp>

#include <optional>
#include <ostream>
#include <sstream>

#include "z2z4/construct.hpp"
#include "z2z4/duality.hpp"
#include "z2z4/enumerator.hpp"
#include "z2z4/errors.hpp"
#include "z2z4/io.hpp"
#include "z2z4/search.hpp"
#include "z2z4/shadow.hpp"
#include "z2z4/verify.hpp"

namespace z2z4 {

namespace {

struct Guards {
  std::optional<std::size_t> value;

  std::size_t span() const { return value.value_or(kDefaultMaxLength); }
  std::size_t oracle() const { return value.value_or(kDefaultOracleMaxLength); }
  std::size_t search() const { return value.value_or(kDefaultSearchMaxLength); }
};

AdditiveCode load(const std::string& path, const Guards& guards) {
  return AdditiveCode::span(read_code_file(path), guards.span());
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string summary(const AdditiveCode& code) {
  const SelfDualClass cls = classify(code);
  if (cls == SelfDualClass::NotSelfDual) return to_string(cls);
  return to_string(cls) + (is_separable(code) ? ", separable" : ", non-separable") +
         (is_antipodal(code) ? ", antipodal" : ", non-antipodal");
}

/* Generators extracted greedily from the sorted codeword list: equal codes print identically. */
GeneratorMatrix canonical_rows(const AdditiveCode& code) {
  return AdditiveCode::from_subgroup(code.ambient(), code.codewords(), code.ambient().length())->generators();
}

void print_code(std::ostream& out, const AdditiveCode& code, const std::string& comment) {
  out << "# " << comment << "\n" << format_code_file(code.generators());
}

void cmd_info(std::ostream& out, const AdditiveCode& code) {
  const SelfDualClass cls = classify(code);
  const WeightEnumerator w = weight_enumerator(code, code.ambient().length());
  out << "type: " << to_string(type_params(code)) << "\n"
      << "size: " << code.size() << "\n"
      << "self-dual: " << yes_no(cls != SelfDualClass::NotSelfDual) << "\n"
      << "class: " << to_string(cls) << "\n"
      << "separable: " << yes_no(is_separable(code)) << "\n"
      << "antipodal: " << yes_no(is_antipodal(code)) << "\n"
      << "weight enumerator: " << to_string(w) << "\n";
  if (cls == SelfDualClass::NotSelfDual) return;
  out << "gleason: " << to_string(gleason_decompose(w, cls)) << "\n";
  if (cls == SelfDualClass::Type0) {
    const auto s = shadow(code);
    out << "shadow: " << s.size() << " vectors, " << to_string(weight_enumerator(s, code.ambient().length()))
        << "\n";
  }
}

void cmd_we(std::ostream& out, const AdditiveCode& code, const std::string& variant, const std::string& format) {
  WeightEnumerator w = weight_enumerator(code, code.ambient().length());
  if (variant == "even") {
    w = even_subcode_we(w);
  } else if (variant == "shadow") {
    if (classify(code) != SelfDualClass::Type0) throw PreconditionError("shadow enumerator needs a Type 0 code");
    w = shadow_we(w);
  }
  out << (format == "coeffs" ? to_coefficient_string(w) : to_string(w)) << "\n";
}

void cmd_shadow(std::ostream& out, const AdditiveCode& code, bool cosets) {
  const auto s = shadow(code);
  out << s.size() << " vectors\n";
  for (const auto& v : s) out << to_string(v) << "\n";
  if (!cosets) return;
  const ShadowDecomposition d = decompose(code);
  out << "s: " << to_string(d.s) << "\n" << "t: " << to_string(d.t) << "\n";
  const char* names[] = {"C00", "C10", "C01", "C11"};
  const OrthogonalityTable table = orthogonality_table(d);
  out << "     C00 C10 C01 C11\n";
  for (std::size_t a = 0; a < 4; ++a) {
    out << names[a];
    for (std::size_t b = 0; b < 4; ++b) out << "   " << static_cast<int>(table[a][b]);
    out << "\n";
  }
}

int cmd_verify(std::ostream& out) {
  const auto results = verify_examples();
  std::size_t passed = 0;
  for (const auto& r : results) {
    if (r.passed) {
      ++passed;
      out << "PASS " << r.name << "\n";
    } else {
      out << "FAIL " << r.name << ": " << r.detail << "\n";
    }
  }
  out << passed << "/" << results.size() << " checks passed\n";
  return passed == results.size() ? 0 : 1;
}

void cmd_search(std::ostream& out, const SearchOptions& options) {
  const SearchResult result = search(options);
  out << result.codes.size() << " self-dual codes\n";
  std::size_t index = 0;
  for (const auto& hit : result.codes) {
    out << "\n# " << ++index << ": " << to_string(type_params(hit.code)) << " " << summary(hit.code) << "\n"
        << format_code_file(hit.generators);
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Self-dual Z2Z4-additive codes"};
  app.require_subcommand(1);
  app.fallthrough();
  Guards guards;
  app.add_option("--guard", guards.value, "largest binary length alpha + 2*beta to enumerate");

  std::string file, other, vector_literal, variant = "plain", format = "text", class_name, recipe;
  bool oracle = false, cosets = false, equivalence = false;
  std::optional<std::size_t> alpha, beta;
  std::optional<std::string> separable;
  unsigned workers = 0;

  auto* info = app.add_subcommand("info", "type, class, enumerators and shadow of a code");
  info->add_option("file", file)->required();
  auto* dual_cmd = app.add_subcommand("dual", "dual code");
  dual_cmd->add_option("file", file)->required();
  dual_cmd->add_flag("--oracle", oracle, "scan the whole ambient instead of using the standard form");
  auto* classify_cmd = app.add_subcommand("classify", "self-dual class");
  classify_cmd->add_option("file", file)->required();
  auto* we = app.add_subcommand("we", "weight enumerator");
  we->add_option("file", file)->required();
  we->add_option("--variant", variant)->check(CLI::IsMember({"plain", "even", "shadow"}));
  we->add_option("--format", format)->check(CLI::IsMember({"text", "coeffs"}));
  auto* gleason = app.add_subcommand("gleason", "decomposition over the invariant ring");
  gleason->add_option("file", file)->required();
  gleason->add_option("--class", class_name, "ring to use instead of the code's own class");
  auto* shadow_cmd = app.add_subcommand("shadow", "shadow of a Type 0 code");
  shadow_cmd->add_option("file", file)->required();
  shadow_cmd->add_flag("--cosets", cosets, "also print s, t and the coset orthogonality table");
  auto* neighbor_cmd = app.add_subcommand("neighbor", "self-dual neighbor through a vector");
  neighbor_cmd->add_option("file", file)->required();
  neighbor_cmd->add_option("vector", vector_literal)->required();
  auto* glue_cmd = app.add_subcommand("glue", "glue two Type 0 codes");
  glue_cmd->add_option("first", file)->required();
  glue_cmd->add_option("second", other)->required();
  auto* construct = app.add_subcommand("construct", "build a code from the catalog or by parameters");
  construct->add_option("--recipe", recipe, "product of catalog names, e.g. C1*Gprime");
  construct->add_option("--alpha", alpha);
  construct->add_option("--beta", beta);
  construct->add_option("--class", class_name);
  construct->add_option("--separable", separable)->check(CLI::IsMember({"yes", "no"}));
  auto* verify = app.add_subcommand("verify-paper", "check the worked examples");
  auto* search_cmd = app.add_subcommand("search", "census of self-dual codes");
  search_cmd->add_option("alpha", alpha)->required();
  search_cmd->add_option("beta", beta)->required();
  search_cmd->add_option("--class", class_name);
  search_cmd->add_flag("--equivalence", equivalence, "one code per permutation-equivalence class");
  search_cmd->add_option("--workers", workers);

  std::vector<const char*> argv{"z2z4"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (info->parsed()) {
      cmd_info(out, load(file, guards));
    } else if (dual_cmd->parsed()) {
      const AdditiveCode code = load(file, guards);
      const AdditiveCode d = oracle ? brute_force_dual(code, guards.oracle()) : dual(code, guards.span());
      out << format_code_file(canonical_rows(d));
    } else if (classify_cmd->parsed()) {
      out << summary(load(file, guards)) << "\n";
    } else if (we->parsed()) {
      cmd_we(out, load(file, guards), variant, format);
    } else if (gleason->parsed()) {
      const AdditiveCode code = load(file, guards);
      SelfDualClass cls = class_name.empty() ? classify(code) : parse_class(class_name);
      out << to_string(gleason_decompose(weight_enumerator(code, code.ambient().length()), cls)) << "\n";
    } else if (shadow_cmd->parsed()) {
      cmd_shadow(out, load(file, guards), cosets);
    } else if (neighbor_cmd->parsed()) {
      const AdditiveCode code = load(file, guards);
      const AdditiveCode n = neighbor(code, parse_vector(vector_literal, code.ambient()));
      print_code(out, n, summary(n));
    } else if (glue_cmd->parsed()) {
      const GlueResult g = glue(load(file, guards), load(other, guards), guards.span());
      print_code(out, g.code,
                 summary(g.code) + (g.variant == GlueVariant::Matched ? ", matched union" : ", crossed union"));
    } else if (construct->parsed()) {
      AdditiveCode code;
      if (!recipe.empty()) {
        code = build_recipe(recipe, guards.span());
      } else {
        if (!alpha || !beta || class_name.empty()) {
          throw PreconditionError("construct needs --recipe or --alpha, --beta and --class");
        }
        std::optional<bool> sep;
        if (separable) sep = *separable == "yes";
        code = ladder_build(*alpha, *beta, parse_class(class_name), sep, guards.span());
      }
      print_code(out, code, to_string(type_params(code)) + " " + summary(code));
    } else if (verify->parsed()) {
      return cmd_verify(out);
    } else if (search_cmd->parsed()) {
      SearchOptions options;
      options.alpha = *alpha;
      options.beta = *beta;
      if (!class_name.empty()) options.cls = parse_class(class_name);
      options.up_to_equivalence = equivalence;
      options.workers = workers;
      options.max_length = guards.search();
      cmd_search(out, options);
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const GuardExceeded& e) {
    err << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace z2z4
