#pragma once

#include <cstdint>
#include <istream>
#include <string>
#include <string_view>

#include <json.hpp>

#include "unigraph/groups.hpp"
#include "unigraph/linedigraph.hpp"
#include "unigraph/membership.hpp"

namespace unigraph {

using Json = nlohmann::ordered_json;

/// JSON {"n": n, "adjacency": [[...]]} or text (n, then n rows), chosen by
/// the first non-blank character.
Digraph parse_digraph(std::string_view text);
Digraph read_digraph(const std::string& path);

/// Same two formats with nonnegative multiplicities.
Multidigraph parse_multidigraph(std::string_view text);

std::string to_text(const Digraph& d);
/// One adjacency row per line.
std::string to_json_text(const Digraph& d);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

/// Complex entries as [re, im] pairs.
Json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j);
Json int_matrix_to_json(const IntMatrix& m);

Json to_json(const Condition& c);
Json to_json(const ConditionReport& r);
Json to_json(const Certificate& c);
Json to_json(const CertifyResult& r);

std::uint64_t fnv1a64(std::string_view bytes);
std::string hex64(std::uint64_t v);

}  // namespace unigraph
