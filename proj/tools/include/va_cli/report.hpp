#pragma once

#include <ostream>
#include <string>

#include <json.hpp>

#include "va/apolar.hpp"
#include "va/singlocus.hpp"
#include "va/veronese.hpp"

namespace va::cli {

using Json = nlohmann::ordered_json;

/// Text of the linear form sum a_i x_i.
std::string render_linear_form(const VectorQ& a);

/// Stable report schema. timings_ms is an empty object unless requested so
/// that identical inputs give byte-identical output.
Json certificate_json(const VACertificate& cert, bool include_timings = false);
void print_certificate(std::ostream& os, const VACertificate& cert);

Json singular_json(const SingularReport& report, const Classification& cls);
void print_singular(std::ostream& os, const SingularReport& report, const Classification& cls);

}  // namespace va::cli
