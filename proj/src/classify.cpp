#include "z2z4/classify.hpp"

#include <algorithm>
#include <cctype>

#include "z2z4/duality.hpp"
#include "z2z4/errors.hpp"

namespace z2z4 {

std::string to_string(SelfDualClass cls) {
  switch (cls) {
    case SelfDualClass::Type0: return "Type 0";
    case SelfDualClass::TypeI: return "Type I";
    case SelfDualClass::TypeII: return "Type II";
    case SelfDualClass::NotSelfDual: break;
  }
  return "not self-dual";
}

SelfDualClass parse_class(const std::string& text) {
  std::string key;
  for (char c : text) {
    if (c != ' ' && c != '_' && c != '-') key.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  if (key.rfind("type", 0) == 0) key.erase(0, 4);
  if (key == "0") return SelfDualClass::Type0;
  if (key == "i" || key == "1") return SelfDualClass::TypeI;
  if (key == "ii" || key == "2") return SelfDualClass::TypeII;
  throw PreconditionError("unknown class '" + text + "' (expected 0, I or II)");
}

SelfDualClass classify(const AdditiveCode& code) {
  if (!is_self_dual(code)) return SelfDualClass::NotSelfDual;
  bool doubly_even = true;
  for (const auto& w : code.codewords()) {
    const auto wt = weight(w);
    if (wt % 2 == 1) return SelfDualClass::Type0;
    if (wt % 4 != 0) doubly_even = false;
  }
  return doubly_even ? SelfDualClass::TypeII : SelfDualClass::TypeI;
}

namespace {

bool ladder(std::size_t value, std::size_t minimum, std::size_t step) {
  return value >= minimum && (value - minimum) % step == 0;
}

bool admissible_interior(std::size_t alpha, std::size_t beta, SelfDualClass cls, bool separable) {
  switch (cls) {
    case SelfDualClass::Type0:
      return !separable && ladder(alpha, 2, 2) && beta >= 2;
    case SelfDualClass::TypeI:
      return separable ? ladder(alpha, 2, 2) && beta >= 1 : ladder(alpha, 4, 2) && beta >= 4;
    case SelfDualClass::TypeII:
      return ladder(alpha, 8, 8) && ladder(beta, 4, 4);
    case SelfDualClass::NotSelfDual: break;
  }
  return false;
}

bool admissible_boundary(std::size_t alpha, std::size_t beta, SelfDualClass cls, bool separable) {
  if (!separable || alpha % 2 != 0) return false;
  const std::size_t n = alpha + 2 * beta;
  switch (cls) {
    case SelfDualClass::TypeI: return n % 2 == 0;
    case SelfDualClass::TypeII: return n % 8 == 0;
    default: return false;
  }
}

}  // namespace

bool admissible(const AdmissibilityQuery& q) {
  if (q.alpha == 0 && q.beta == 0) throw PreconditionError("admissibility query needs alpha + beta > 0");
  if (q.cls == SelfDualClass::NotSelfDual) throw PreconditionError("admissibility is defined for Type 0, I and II");
  if (q.cls == SelfDualClass::Type0 && q.separable == true) {
    throw PreconditionError("Type 0 codes are never separable");
  }
  auto check = [&](bool separable) {
    return (q.alpha == 0 || q.beta == 0) ? admissible_boundary(q.alpha, q.beta, q.cls, separable)
                                         : admissible_interior(q.alpha, q.beta, q.cls, separable);
  };
  if (q.separable) return check(*q.separable);
  return check(true) || check(false);
}

StructureReport check_structure_relations(const AdditiveCode& code) {
  StructureReport report;
  report.cls = classify(code);
  if (report.cls == SelfDualClass::NotSelfDual) {
    throw PreconditionError("structure relations are defined for self-dual codes only");
  }
  report.separable = is_separable(code);
  report.antipodal = is_antipodal(code);
  report.delta = type_params(code).delta;
  const bool even = report.cls != SelfDualClass::Type0;
  report.antipodal_iff_even = report.antipodal == even;
  report.separable_implies_antipodal = !report.separable || report.antipodal;
  report.non_separable_implies_unit = report.separable || report.delta >= 1;

  if (!report.separable) {
    // Bilinearity: if any pair of codewords has odd binary inner product, some pair of generators does.
    const auto& rows = code.generators().rows();
    for (std::size_t i = 0; i < rows.size() && !report.witness; ++i) {
      for (std::size_t j = i; j < rows.size(); ++j) {
        if (binary_inner(rows[i].binary(), rows[j].binary()) == 1 &&
            quaternary_inner(rows[i].quaternary(), rows[j].quaternary()) == 2) {
          report.witness.emplace(rows[i], rows[j]);
          break;
        }
      }
    }
  }
  return report;
}

SeparabilityPredicates separability_predicates(const AdditiveCode& code) {
  const AdditiveCode cx = puncture_x(code);
  const AdditiveCode cy = puncture_y(code);
  const TypeParams params = type_params(code);
  SeparabilityPredicates p;
  p.values = {is_self_orthogonal(cx),          is_self_dual(cx), cx.log2_size() == params.kappa,
              is_self_orthogonal(cy),          is_self_dual(cy), cy.log2_size() == params.beta,
              is_separable(code)};
  return p;
}

std::optional<MixedVector> order_four_congruence_violation(const AdditiveCode& code) {
  for (const auto& w : code.codewords()) {
    const std::size_t expected = hamming_weight(w.binary()) % 2 == 0 ? 0 : 2;
    if (p_count(w.quaternary()) % 4 != expected) return w;
  }
  return std::nullopt;
}

bool order_two_projection_self_dual(const AdditiveCode& code) {
  const AdditiveCode projection = puncture_x(order_two_subcode(code));
  return code.ambient().alpha == 2 * type_params(code).kappa && is_self_dual(projection);
}

std::vector<std::vector<std::uint8_t>> gray_image(const AdditiveCode& code) {
  std::vector<std::vector<std::uint8_t>> out;
  out.reserve(code.size());
  for (const auto& w : code.codewords()) out.push_back(gray_map(w));
  return out;
}

bool gray_image_linear(const AdditiveCode& code) {
  // The image has |C| distinct words; it is linear iff its binary span is no larger.
  const std::size_t n = code.ambient().length();
  const std::size_t limit = code.log2_size();
  std::vector<std::vector<std::uint8_t>> basis(n);
  std::size_t rank = 0;
  for (const auto& w : code.codewords()) {
    auto v = gray_map(w);
    for (std::size_t p = 0; p < n; ++p) {
      if (v[p] == 0) continue;
      if (basis[p].empty()) {
        basis[p] = std::move(v);
        if (++rank > limit) return false;
        break;
      }
      for (std::size_t k = p; k < n; ++k) v[k] ^= basis[p][k];
    }
  }
  return rank == limit;
}

}  // namespace z2z4
