#pragma once

// Stable file formats.  Everything is emitted as nlohmann ordered_json with a
// fixed field order and integer-only values, so golden files are byte-stable
// across platforms and runs.

#include <string>

#include <json.hpp>

#include "zczkit/builders.hpp"
#include "zczkit/verifier.hpp"

namespace zczkit {

using Json = nlohmann::ordered_json;

Json sequence_to_json(const SncSequence& s);
SncSequence sequence_from_json(const Json& j);

Json code_set_to_json(const CodeSet& set);
CodeSet code_set_from_json(const Json& j);

Json zcz_set_to_json(const ZczSet& set);
ZczSet zcz_set_from_json(const Json& j);

std::string kind_name(SetKind kind);
SetKind kind_from_name(const std::string& name);

// Parameter-bundle schema shared by all generate kinds; the "g" object is
// present iff the file describes a ZCZ spec:
// {"p":2,"n":6,"J":[3],"c":[1],"blocks":[[1,2],[5,4,6]],"linear":[...],
//  "constant":0,"extra_quadratic":"x2*x3 + x3*x4",
//  "g":{"c":[...],"d":[[mu,nu,val],...],"e":[...],"e_prime":0}}
CccSpec ccc_spec_from_json(const Json& j);
ZczSpec zcz_spec_from_json(const Json& j);
bool spec_json_has_g(const Json& j);
Json ccc_spec_to_json(const CccSpec& spec);
Json zcz_spec_to_json(const ZczSpec& spec);

Json report_to_json(const VerificationReport& rep);
Json bound_to_json(const BoundVerdict& v);

// CSV text: one sequence per line, symbols comma-separated, empty field for a
// null entry; code sets put a blank line between codes.
std::string code_set_to_csv(const CodeSet& set);
std::string zcz_set_to_csv(const ZczSet& set);

}  // namespace zczkit
