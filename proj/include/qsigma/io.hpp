// Copyright 2026 The qsigma Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef QSIGMA_IO_HPP
#define QSIGMA_IO_HPP

#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "qsigma/classifier.hpp"
#include "qsigma/glinf.hpp"
#include "qsigma/quasipoly.hpp"

namespace qsigma {

using Json = nlohmann::ordered_json;

// Readers throw ParseError whose message starts with the JSON path of the
// offending node, e.g. "$.p12.terms[0].base: ...". Decoded values are
// validated; a failed invariant is reported as a ParseError too.

QuasiPolynomial quasipoly_from_json(const Json& j, const std::string& path = "$");
Json to_json(const QuasiPolynomial& p);

// {"p12", "p21", "c", optional "zero_split": [a, b]}
SSqWeight ssq_from_json(const Json& j, const std::string& path = "$");
Json to_json(const SSqWeight& w);

// {"m", "charges", "labels": {"int": {...}, "half": {...}}}. A tail is one
// scalar (all l) or a list per l; exceptions map a key to a list per l.
GlWeight gl_weight_from_json(const Json& j, const std::string& path = "$");
Json to_json(const GlWeight& w);

// {"raw": {"lo", "hi", "delta1": {"n": s}, "delta2": {...}, "c"}}
RawLabels raw_labels_from_json(const Json& j, const std::string& path = "$");

ModuleDescriptor descriptor_from_json(const Json& j, const std::string& path = "$");
Json to_json(const ModuleDescriptor& d);
// A single descriptor object or an array of them.
std::vector<ModuleDescriptor> descriptors_from_json(const Json& j, const std::string& path = "$");
Json to_json(const std::vector<ModuleDescriptor>& ds);

using WeightInput = std::variant<SSqWeight, GlWeight, RawLabels>;
// Dispatch on keys: "raw", "p12"/"p21", otherwise a GlWeight.
WeightInput weight_from_json(const Json& j);

// Reads and parses a UTF-8 JSON file; ParseError on I/O or syntax errors.
Json read_json_file(const std::string& file);

}  // namespace qsigma

#endif  // QSIGMA_IO_HPP
