#pragma once

#include <json.hpp>

#include <string>
#include <string_view>

#include "lpa/classify.hpp"
#include "lpa/factor.hpp"
#include "lpa/ideal.hpp"
#include "lpa/oracle.hpp"

namespace lpa::io {

using json = nlohmann::ordered_json;

/// Parses JSON text; syntax errors become InputError with line and column. `origin` prefixes messages.
json parse_json(std::string_view text, const std::string& origin = "input");
/// Reads and parses a file; a missing file is an InputError.
json read_json_file(const std::string& path);

/// {"vertices":[...],"edges":[{"src","dst","mult":n|"omega","id"}]}; ids are always written.
json graph_to_json(const Graph& g);
Graph graph_from_json(const json& j);

/// {"H":[...],"S":[...],"cycles":[{"cycle":["e0#0"],"poly":"x - 1"}],"field":"Q"}.
/// The whole algebra is written with H = all vertices.
json ideal_to_json(const Ideal& I);
/// A "field" member overrides `default_field`. Polynomials are strings or constant-first
/// coefficient lists; cycles are edge tokens "id#k" or vertex sequences with single edges between them.
Ideal ideal_from_json(const json& j, const GraphPtr& g, const Field& default_field);

Cycle cycle_from_json(const json& j, const Graph& g);
json cycle_to_json(const Graph& g, const Cycle& c);
json vertex_set_to_json(const Graph& g, VertexSet s);

json certificate_to_json(const FactorizationCert& cert);
/// Reads target, kind and factors; the stored "verified" flag is ignored and recomputed.
FactorizationCert certificate_from_json(const json& j, const GraphPtr& g, const Field& default_field,
                                        const Config& cfg = {});
json prime_report_to_json(const Graph& g, const PrimeReport& r);
json primary_report_to_json(const PrimaryReport& r);
json cross_check_to_json(const CrossCheckReport& r);

/// Everything the analyze command prints.
json analysis_report(const Graph& g, const Config& cfg);

std::string to_dot(const Graph& g, const std::string& name = "E");

}  // namespace lpa::io
