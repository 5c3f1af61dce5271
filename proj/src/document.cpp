#include "thickness/document.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace thickness {

namespace {

std::optional<int> parse_int(const std::string& text) {
  if (text.empty() || text.size() > 9) return std::nullopt;
  for (char c : text)
    if (c < '0' || c > '9') return std::nullopt;
  return std::stoi(text);
}

std::vector<std::string> split_colons(const std::string& text) {
  std::vector<std::string> parts;
  size_t start = 0;
  for (size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ':') {
      parts.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  return parts;
}

}  // namespace

VertexId parse_label(const std::string& text) {
  auto parts = split_colons(text);
  if (parts.size() == 3 && parts[0] == "v") {
    auto layer = parse_int(parts[1]);
    auto slot = parse_int(parts[2]);
    if (layer && slot) return VertexId::layer(*layer, *slot);
  }
  if (parts.size() == 2 && parts[0] == "w") {
    auto pos = parse_int(parts[1]);
    if (pos) return VertexId::hub(*pos);
  }
  return VertexId::plain(text);
}

namespace {

std::string checked_label(const VertexId& v) {
  std::string s = v.str();
  if (v.is_plain()) {
    if (s.empty()) throw DocumentError("serialize: empty vertex label");
    if (!parse_label(s).is_plain())
      throw DocumentError("serialize: plain label collides with a structured form: " + s);
  }
  return s;
}

std::pair<std::string, std::string> edge_strings(const VertexPair& e) {
  std::string a = checked_label(e.first);
  std::string b = checked_label(e.second);
  if (b < a) std::swap(a, b);
  return {a, b};
}

nlohmann::json edges_json(const std::vector<VertexPair>& edges) {
  std::vector<std::pair<std::string, std::string>> rows;
  rows.reserve(edges.size());
  for (const auto& e : edges) rows.push_back(edge_strings(e));
  std::sort(rows.begin(), rows.end());
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [a, b] : rows) out.push_back({a, b});
  return out;
}

}  // namespace

Document to_document(const Graph& g) { return Document{g, std::nullopt, nlohmann::json::object()}; }

Document to_document(const Decomposition& d) {
  std::vector<std::vector<VertexPair>> pages;
  for (int p = 0; p < d.page_count(); ++p) pages.push_back(d.page_edge_labels(p));
  return Document{d.host(), std::move(pages), nlohmann::json::object()};
}

Decomposition document_decomposition(const Document& doc) {
  if (!doc.pages) throw DocumentError("document has no pages");
  try {
    return Decomposition::from_edge_labels(doc.host, *doc.pages);
  } catch (const std::invalid_argument& e) {
    throw DocumentError(e.what());
  }
}

std::string serialize_document(const Document& doc) {
  nlohmann::json j;
  j["format_version"] = "1";

  std::vector<std::string> verts;
  for (const auto& v : doc.host.vertices()) verts.push_back(checked_label(v));
  std::sort(verts.begin(), verts.end());
  j["host"]["vertices"] = verts;
  j["host"]["edges"] = edges_json(doc.host.edge_labels());

  if (doc.pages) {
    nlohmann::json pages = nlohmann::json::array();
    for (const auto& page : *doc.pages) pages.push_back(edges_json(page));
    j["pages"] = pages;
  }
  if (!doc.metadata.is_object())
    throw DocumentError("serialize: metadata must be a JSON object");
  if (!doc.metadata.empty()) j["metadata"] = doc.metadata;
  return j.dump(2) + "\n";
}

namespace {

const nlohmann::json& expect(const nlohmann::json& j, const char* key,
                             nlohmann::json::value_t type, const char* what) {
  auto it = j.find(key);
  if (it == j.end()) throw DocumentError(std::string("missing key: ") + key);
  if (it->type() != type) throw DocumentError(std::string(key) + " must be " + what);
  return *it;
}

VertexPair parse_edge(const nlohmann::json& entry) {
  if (!entry.is_array() || entry.size() != 2 || !entry[0].is_string() || !entry[1].is_string())
    throw DocumentError("each edge must be a two-element array of labels");
  return make_edge(parse_label(entry[0].get<std::string>()),
                   parse_label(entry[1].get<std::string>()));
}

}  // namespace

Document parse_document(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DocumentError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw DocumentError("document must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (key != "format_version" && key != "host" && key != "pages" && key != "metadata")
      throw DocumentError("unknown key: " + key);
  }

  const auto& version = expect(j, "format_version", nlohmann::json::value_t::string, "a string");
  if (version.get<std::string>() != "1")
    throw DocumentError("unsupported format_version: " + version.get<std::string>());

  const auto& host = expect(j, "host", nlohmann::json::value_t::object, "an object");
  for (const auto& [key, value] : host.items()) {
    if (key != "vertices" && key != "edges") throw DocumentError("unknown host key: " + key);
  }
  const auto& jverts = expect(host, "vertices", nlohmann::json::value_t::array, "an array");
  const auto& jedges = expect(host, "edges", nlohmann::json::value_t::array, "an array");

  std::vector<VertexId> verts;
  for (const auto& entry : jverts) {
    if (!entry.is_string()) throw DocumentError("vertices must be strings");
    verts.push_back(parse_label(entry.get<std::string>()));
  }
  std::vector<VertexPair> edges;
  for (const auto& entry : jedges) edges.push_back(parse_edge(entry));

  Document doc;
  try {
    doc.host = Graph(std::move(verts), edges);
  } catch (const std::invalid_argument& e) {
    throw DocumentError(e.what());
  }

  if (j.contains("pages")) {
    if (!j["pages"].is_array()) throw DocumentError("pages must be an array");
    std::vector<std::vector<VertexPair>> pages;
    for (const auto& jpage : j["pages"]) {
      if (!jpage.is_array()) throw DocumentError("each page must be an array");
      std::vector<VertexPair> page;
      std::set<VertexPair> seen;
      for (const auto& entry : jpage) {
        VertexPair e = parse_edge(entry);
        if (!doc.host.has_edge(e.first, e.second))
          throw DocumentError("page edge not in host: " + e.first.str() + "-" +
                              e.second.str());
        if (!seen.insert(e).second)
          throw DocumentError("edge repeated on one page: " + e.first.str() + "-" +
                              e.second.str());
        page.push_back(e);
      }
      pages.push_back(std::move(page));
    }
    if (pages.empty()) throw DocumentError("pages must not be empty when present");
    doc.pages = std::move(pages);
  }

  if (j.contains("metadata")) {
    if (!j["metadata"].is_object()) throw DocumentError("metadata must be an object");
    doc.metadata = j["metadata"];
  }
  return doc;
}

namespace {

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

std::string to_dot(const Document& doc) {
  std::vector<std::string> verts;
  for (const auto& v : doc.host.vertices()) verts.push_back(checked_label(v));
  std::sort(verts.begin(), verts.end());

  std::ostringstream out;
  out << "graph decomposition {\n";
  if (!doc.pages) {
    for (const auto& v : verts) out << "  " << dot_quote(v) << ";\n";
    std::vector<std::pair<std::string, std::string>> rows;
    for (const auto& e : doc.host.edge_labels()) rows.push_back(edge_strings(e));
    std::sort(rows.begin(), rows.end());
    for (const auto& [a, b] : rows)
      out << "  " << dot_quote(a) << " -- " << dot_quote(b) << ";\n";
  } else {
    for (size_t p = 0; p < doc.pages->size(); ++p) {
      std::string tag = "p" + std::to_string(p + 1) + "|";
      out << "  subgraph cluster_page_" << p + 1 << " {\n";
      out << "    label=" << dot_quote("page " + std::to_string(p + 1)) << ";\n";
      for (const auto& v : verts)
        out << "    " << dot_quote(tag + v) << " [label=" << dot_quote(v) << "];\n";
      std::vector<std::pair<std::string, std::string>> rows;
      for (const auto& e : (*doc.pages)[p]) rows.push_back(edge_strings(e));
      std::sort(rows.begin(), rows.end());
      for (const auto& [a, b] : rows)
        out << "    " << dot_quote(tag + a) << " -- " << dot_quote(tag + b) << ";\n";
      out << "  }\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace thickness
