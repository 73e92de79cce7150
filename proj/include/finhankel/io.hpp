#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "finhankel/asymptotics.hpp"
#include "finhankel/invertibility.hpp"

namespace finhankel {

using json = nlohmann::ordered_json;

/// Parses a profile document:
///   { "dimension": int, "vanishes_near_one": bool,
///     "terms": [ { "coeff": [re, im], "lambda": [re, im], "rho": [re, im] } ] }
/// A bare number is accepted wherever [re, im] is. Unknown keys, wrong
/// types, an empty term list and all-zero coefficients raise parse_error.
/// Construction invariants of RadialProfile still raise invalid_profile.
RadialProfile parse_profile(std::string_view text);

/// Reads and parses a profile file; "-" reads standard input.
RadialProfile load_profile(const std::string& path);

json profile_to_json(const RadialProfile& profile);

/// Shortest decimal with 17 significant digits ("%.17g").
std::string format_double(double x);

json complex_to_json(complex z);
json term_to_json(const AsymptoticTerm& t);
json verdict_to_json(const Verdict& v);
json certificate_to_json(const Certificate& c);

/// Summary of a slow-decrease run; window rows are added when requested.
json check_report_to_json(const CheckReport& r, bool with_windows);

/// Origin data, boundary data (null for profiles vanishing near one) and
/// the predicted terms.
json expansion_to_json(const RadialProfile& profile, int n_origin_terms, int max_k = 8, int max_j = 8);

}  // namespace finhankel
