#pragma once

#include <json.hpp>

#include "hecke/character.hpp"
#include "hecke/fq.hpp"
#include "hecke/nabla.hpp"
#include "hecke/oracle.hpp"
#include "hecke/psmod.hpp"
#include "hecke/relations.hpp"
#include "hecke/scalar.hpp"
#include "hecke/weights.hpp"
#include "hecke/wtype.hpp"

namespace hecke {

using Json = nlohmann::json;

/// Space-separated images, e.g. "2 0 1".
std::string permutation_key(const Permutation& w);
Permutation permutation_from_key(const std::string& key);

/// {"d", "r", "n"}.
Json weight_to_json(std::span<const std::int64_t> n, int r);
BalancedWeight weight_from_json(const Json& j);

/// {"d", "entries": {"<perm>": int}}.
Json nabla_to_json(const NablaFunction& nabla);
NablaFunction nabla_from_json(const Json& j);

/// {"d", "q", "r", "theta_exp", "pi_ord", "unit_exp"}.
Json character_to_json(const CharacterData& c);
CharacterData character_from_json(const Json& j);

/// {"pi_deg_coeffs": [[pi_degree, den_exp, c_0, ..., c_{phi(q-1)-1}], ...]}: the
/// coefficient of pi^{pi_degree} is (sum_k c_k zeta^k) / q^{den_exp}. Zero
/// coefficients are omitted.
Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j, const ScalarRingPtr& ring);

/// Coefficient list over F_p in the power basis of the field.
Json fq_to_json(const FqElement& x);
FqElement fq_from_json(const Json& j, const FqFieldPtr& field);

/// {"basis": [perm...], "entries": [[row, col, value]...]} with nonzero entries only.
Json scalar_matrix_to_json(const Matrix<Scalar>& m, int d);
Json fq_matrix_to_json(const FqMatrix& m, int d);

/// {"d", "values": {"<perm>": -1 | 0 | 1}} over W^{s_d}.
Json sigma_to_json(const SigmaFunction& sigma);
SigmaFunction sigma_from_json(const Json& j);

/// {"d", "r", "values": {"<perm>": int}}.
Json partial_to_json(const PartialFunction& partial);
PartialFunction partial_from_json(const Json& j);

/// {"d", "q", "field": {...}, "theta_exp", "sigma", "eps", "generators": {name: matrix}}.
Json wtype_to_json(const WTypeModule& m);
/// Reads q, theta_exp, sigma and eps (defaults: theta 0, eps 1) and rebuilds the matrices.
WTypeModule wtype_from_json(const Json& j);

Json balance_check_to_json(const BalanceCheck& check);
Json nabla_check_to_json(const NablaCheck& check);
Json stability_to_json(const StabilityCheck& check);
Json relation_report_to_json(const RelationReport& report);
Json partial_check_to_json(const PartialCheck& check);
Json oracle_report_to_json(const OracleReport& report);

}  // namespace hecke
