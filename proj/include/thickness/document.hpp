#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "thickness/decomposition.hpp"

namespace thickness {

struct DocumentError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// On-disk form of a graph or decomposition: a host graph, optional pages,
/// and a free-form metadata object that round-trips untouched.
struct Document {
  Graph host;
  std::optional<std::vector<std::vector<VertexPair>>> pages;
  nlohmann::json metadata = nlohmann::json::object();
};

Document to_document(const Graph& g);
Document to_document(const Decomposition& d);

/// The document's pages as a Decomposition (pages required).
Decomposition document_decomposition(const Document& doc);

/// "v:layer:slot" -> Layer, "w:position" -> Hub, anything else -> Plain.
VertexId parse_label(const std::string& text);

/// Deterministic JSON: sorted keys, vertices and edges sorted by label
/// string, two-space indent, trailing newline. Serializing then parsing is
/// the identity on host, pages, and metadata.
std::string serialize_document(const Document& doc);
Document parse_document(const std::string& text);

/// Graphviz export. Hosts render as one plain graph; documents with pages
/// render one cluster per page, each containing every host vertex.
std::string to_dot(const Document& doc);

}  // namespace thickness
