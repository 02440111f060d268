#pragma once

// Deterministic JSON encoding for CLI reports. Every p-adic quantity is
// emitted with its modulus spelled out: {"p", "precision", "digits"} with
// little-endian base-p digits, plus {"f", "poly"} (one digit array per
// polynomial coefficient) for elements of unramified extensions. Key order is
// fixed so identical invocations serialize to identical bytes.

#include "trivzero/lvalues.hpp"
#include "trivzero/padic.hpp"
#include "trivzero/reciprocity.hpp"
#include "trivzero/unramified.hpp"

#include "json.hpp"

#include <string>

namespace trivzero {

using json = nlohmann::ordered_json;

json encode_padic(const PadicInt& x);
json encode_unramified(const UnramifiedElt& x);
json encode_cup(const CupProductValue& v);
json encode_l_invariant(const LInvariantResult& li);

// shared outer shape: {"command", "parameters", ...}
json make_envelope(const std::string& command, json parameters);

} // namespace trivzero
