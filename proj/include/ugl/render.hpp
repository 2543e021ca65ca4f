#pragma once

#include <string>

#include "ugl/report.hpp"
#include "ugl/shifted.hpp"

#include "json.hpp"

namespace ugl {

enum class Format { text, latex, json };

std::string render_text(const EnvElement& x);
std::string render_latex(const EnvElement& x);
nlohmann::json element_to_json(const EnvElement& x);
EnvElement element_from_json(const nlohmann::json& j);
std::string render(const EnvElement& x, Format f);

std::string render_text(const ShiftedPoly& p);
std::string render_latex(const ShiftedPoly& p);
std::string render(const ShiftedPoly& p, Format f);

std::string render_text(const SuperPolynomial& p);
std::string render(const SuperPolynomial& p, Format f);

nlohmann::json report_to_json(const SuiteReport& r);
SuiteReport report_from_json(const nlohmann::json& j);

// monomial-sum expressions like "(1|1)(2|2) - 2*(1|2)(2|1)"
SuperPolynomial parse_superpoly(const RepContextPtr& ctx, const std::string& text);

}  // namespace ugl
