#pragma once

#include <json.hpp>

#include "zc/forms.hpp"

namespace zc::forms {

using Json = nlohmann::ordered_json;

Json rational_json(const BigRational& q);  // {"num": "...", "den": "..."}
BigRational rational_from_json(const Json& j);

Json to_json(const FormSpec& spec);
Json to_json(const PartialFractionTable& table);
Json to_json(const ZetaLinearForm& form);
Json to_json(const DenominatorReport& rep);
Json to_json(const GrowthReport& rep);

ZetaLinearForm form_from_json(const Json& j);

}  // namespace zc::forms
