#include "z2z4/duality.hpp"

#include <stdexcept>

#include "z2z4/errors.hpp"

namespace z2z4 {

GeneratorMatrix parity_check_matrix(const StandardForm& form) {
  const auto& p = form.params;
  const std::size_t alpha = p.alpha;
  const std::size_t kappa = p.kappa;
  const std::size_t twos = p.gamma - p.kappa;
  const std::size_t width = form.free_width();
  const Block t_b = form.t_b();
  const Block t_1 = form.t_1();
  const Block t_2 = form.t_2();
  const Block s_b = form.s_b();
  const Block s_q = form.s_q();
  const Block r = form.r();

  // Quaternary column offsets of the three blocks.
  const std::size_t twos_at = width;
  const std::size_t units_at = width + twos;

  GeneratorMatrix h(Ambient{alpha, p.beta});
  for (std::size_t i = 0; i < alpha - kappa; ++i) {
    MixedVector row(h.ambient());
    for (std::size_t c = 0; c < kappa; ++c) row.set_x(c, t_b(c, i));
    row.set_x(kappa + i, 1);
    for (std::size_t j = 0; j < p.delta; ++j) row.set_y(units_at + j, 2U * s_b(j, i));
    h.add_row(std::move(row));
  }
  for (std::size_t i = 0; i < twos; ++i) {
    MixedVector row(h.ambient());
    row.set_y(twos_at + i, 2);
    for (std::size_t j = 0; j < p.delta; ++j) row.set_y(units_at + j, 2U * r(j, i));
    h.add_row(std::move(row));
  }
  for (std::size_t i = 0; i < width; ++i) {
    MixedVector row(h.ambient());
    for (std::size_t c = 0; c < kappa; ++c) row.set_x(c, t_2(c, i) & 1U);
    row.set_y(i, 1);
    for (std::size_t c = 0; c < twos; ++c) row.set_y(twos_at + c, t_1(c, i));
    for (std::size_t j = 0; j < p.delta; ++j) {
      unsigned entry = s_q(j, i);
      for (std::size_t c = 0; c < twos; ++c) entry += static_cast<unsigned>(r(j, c)) * t_1(c, i);
      row.set_y(units_at + j, (4U - (entry & 3U)) & 3U);
    }
    h.add_row(std::move(row));
  }
  return h;
}

AdditiveCode dual(const AdditiveCode& code, std::size_t max_length) {
  const StandardForm form = standard_form(code.generators());
  const GeneratorMatrix h = parity_check_matrix(form);
  GeneratorMatrix original(code.ambient());
  for (const auto& row : h.rows()) original.add_row(form.to_original(row));
  return AdditiveCode::span(original, max_length);
}

AdditiveCode brute_force_dual(const AdditiveCode& code, std::size_t max_length) {
  const Ambient ambient = code.ambient();
  if (ambient.length() > max_length) {
    throw GuardExceeded("brute-force dual would scan 2^" + std::to_string(ambient.length()) +
                        " ambient vectors, above the oracle guard of 2^" + std::to_string(max_length));
  }
  std::vector<MixedVector> orthogonal;
  const std::uint64_t count = ambient_size(ambient);
  for (std::uint64_t index = 0; index < count; ++index) {
    MixedVector v = ambient_element(ambient, index);
    bool ok = true;
    for (const auto& u : code.codewords()) {
      if (inner_product(u, v) != 0) {
        ok = false;
        break;
      }
    }
    if (ok) orthogonal.push_back(std::move(v));
  }
  auto result = AdditiveCode::from_subgroup(ambient, std::move(orthogonal), ambient.length());
  if (!result) throw std::logic_error("orthogonal complement is not a subgroup");
  return std::move(*result);
}

TypeParams dual_type(const TypeParams& p) {
  const long long alpha = static_cast<long long>(p.alpha);
  const long long beta = static_cast<long long>(p.beta);
  const long long gamma = static_cast<long long>(p.gamma);
  const long long delta = static_cast<long long>(p.delta);
  const long long kappa = static_cast<long long>(p.kappa);
  const long long g = alpha + gamma - 2 * kappa;
  const long long d = beta - gamma - delta + kappa;
  const long long k = alpha - kappa;
  if (g < 0 || d < 0 || k < 0) {
    throw PreconditionError("inconsistent type parameters " + to_string(p) + ": dual type has a negative component");
  }
  return {p.alpha, p.beta, static_cast<std::size_t>(g), static_cast<std::size_t>(d), static_cast<std::size_t>(k)};
}

bool is_self_orthogonal(const AdditiveCode& code) {
  const auto& rows = code.generators().rows();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = i; j < rows.size(); ++j) {
      if (inner_product(rows[i], rows[j]) != 0) return false;
    }
  }
  return true;
}

bool is_self_dual(const AdditiveCode& code) {
  return 2 * code.log2_size() == code.ambient().length() && is_self_orthogonal(code);
}

DualityReport duality_report(const AdditiveCode& code, std::size_t max_length) {
  DualityReport report{dual(code, max_length), {}, is_self_orthogonal(code), false};
  report.dual_params = type_params(report.dual);
  report.self_dual = report.self_orthogonal && 2 * code.log2_size() == code.ambient().length();
  return report;
}

}  // namespace z2z4
