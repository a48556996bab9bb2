#pragma once

#include "hilbforest/classifier.hpp"
#include "hilbforest/enumerator.hpp"
#include "hilbforest/hilbert_poly.hpp"
#include "hilbforest/monomial_ideal.hpp"
#include "hilbforest/probability.hpp"
#include "hilbforest/series.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace hilbforest {

using Json = nlohmann::ordered_json;

/// Accepts a dense polynomial ("3t+1"), a partition literal ("b=[1,1,1,0]",
/// "e=[4,3]") or {"gotzmann":[...]} / {"macaulay":[...]}.
AdmissiblePolynomial parse_polynomial(const std::string& text);

/// "b=[1,1,1,0]"
std::string format_gotzmann(const GotzmannPartition& b);
/// "e=[4,3]"
std::string format_macaulay(const MacaulayPartition& e);

Json to_json(const AdmissiblePolynomial& hp);
AdmissiblePolynomial polynomial_from_json(const Json& j);

/// "x0^2*x1" or "1" in k[x_0..x_n].
Monomial parse_monomial(const std::string& text, int n);
/// "<x0^2, x0*x1> in P^2"; the suffix may be omitted when n is given, and
/// must agree with it otherwise. Also accepts {"n":..,"gens":[[..],..]}.
MonomialIdeal parse_ideal(const std::string& text, std::optional<int> n = std::nullopt);

Json to_json(const MonomialIdeal& ideal);
MonomialIdeal ideal_from_json(const Json& j);

/// {"kpoly":[...],"n":3,"deg_hs":2}
Json to_json(const SeriesProfile& profile);
SeriesProfile profile_from_json(const Json& j);

Json to_json(const ForestNode& node);
Json to_json(const Verdict& v);
Json to_json(const EnumerationResult& r);
Json to_json(const Estimate& e);

}  // namespace hilbforest
