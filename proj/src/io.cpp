#include "assoc/io.hpp"

#include <fstream>
#include <sstream>

#include "assoc/generators.hpp"

namespace assoc {

std::string graph_to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph graph_from_edge_list(std::istream& in) {
  std::string line;
  int n = -1, m = -1;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    int a, b;
    if (!(fields >> a >> b)) continue;
    if (n < 0) {
      n = a;
      m = b;
    } else {
      edges.emplace_back(a, b);
    }
  }
  if (n < 0) throw std::invalid_argument("edge list is missing the 'n m' header");
  if (static_cast<int>(edges.size()) != m)
    throw std::invalid_argument("edge list header promises " + std::to_string(m) +
                                " edges, found " + std::to_string(edges.size()));
  return Graph(n, std::move(edges));
}

Graph graph_from_edge_list(const std::string& text) {
  std::istringstream in(text);
  return graph_from_edge_list(in);
}

nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::json j;
  j["n"] = g.vertex_count();
  j["edges"] = nlohmann::json::array();
  for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
  if (g.has_labels()) {
    nlohmann::json labels = nlohmann::json::object();
    for (int v = 0; v < g.vertex_count(); ++v)
      if (!g.label(v).empty()) labels[std::to_string(v)] = g.label(v);
    j["labels"] = labels;
  }
  return j;
}

Graph graph_from_json(const nlohmann::json& j) {
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges"))
    edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  Graph g(j.at("n").get<int>(), std::move(edges));
  if (j.contains("labels")) {
    for (const auto& [key, value] : j.at("labels").items())
      g.set_label(std::stoi(key), value.get<std::string>());
  }
  return g;
}

std::string tree_to_text(const SearchTree& t) {
  std::ostringstream out;
  out << t.root() << ';';
  bool first = true;
  for (int v = 0; v < t.vertex_count(); ++v) {
    if (t.parent(v) == -1) continue;
    out << (first ? " " : ", ") << v << ':' << t.parent(v);
    first = false;
  }
  return out.str();
}

SearchTree tree_from_text(const Graph& g, const std::string& text) {
  auto semi = text.find(';');
  if (semi == std::string::npos)
    throw std::invalid_argument("tree text needs the form 'root; v:parent, ...'");
  std::vector<int> parent(g.vertex_count(), -1);
  int root = std::stoi(text.substr(0, semi));
  std::istringstream rest(text.substr(semi + 1));
  std::string item;
  while (std::getline(rest, item, ',')) {
    auto colon = item.find(':');
    if (colon == std::string::npos) {
      if (item.find_first_not_of(" \t") == std::string::npos) continue;
      throw std::invalid_argument("bad tree entry: " + item);
    }
    int v = std::stoi(item.substr(0, colon));
    parent.at(v) = std::stoi(item.substr(colon + 1));
  }
  SearchTree t(g, parent);
  if (t.root() != root) throw std::invalid_argument("declared root disagrees with parents");
  return t;
}

nlohmann::json tree_to_json(const SearchTree& t) {
  nlohmann::json j;
  j["root"] = t.root();
  j["parent"] = nlohmann::json::array();
  for (int v = 0; v < t.vertex_count(); ++v) {
    if (t.parent(v) == -1)
      j["parent"].push_back(nullptr);
    else
      j["parent"].push_back(t.parent(v));
  }
  return j;
}

SearchTree tree_from_json(const Graph& g, const nlohmann::json& j) {
  std::vector<int> parent;
  for (const auto& slot : j.at("parent"))
    parent.push_back(slot.is_null() ? -1 : slot.get<int>());
  SearchTree t(g, parent);
  if (t.root() != j.at("root").get<int>())
    throw std::invalid_argument("declared root disagrees with parents");
  return t;
}

std::string tree_to_dot(const SearchTree& t) {
  const Graph& g = t.graph();
  auto name = [&g](int v) {
    return g.label(v).empty() ? std::to_string(v) : g.label(v);
  };
  std::ostringstream out;
  out << "digraph search_tree {\n";
  for (int v = 0; v < t.vertex_count(); ++v)
    out << "  \"" << name(v) << "\";\n";
  for (int v = 0; v < t.vertex_count(); ++v)
    if (t.parent(v) != -1)
      out << "  \"" << name(t.parent(v)) << "\" -> \"" << name(v) << "\";\n";
  out << "}\n";
  return out.str();
}

nlohmann::json ucd_to_json(const UniversalCliqueDecomposition& ucd) {
  nlohmann::json nodes = nlohmann::json::array();
  for (const UcdNode& node : ucd.nodes) {
    nlohmann::json item;
    item["bag"] = node.bag.to_vector();
    item["children"] = node.children;
    nodes.push_back(item);
  }
  return nlohmann::json{{"nodes", nodes}};
}

UniversalCliqueDecomposition ucd_from_json(const nlohmann::json& j) {
  UniversalCliqueDecomposition ucd;
  for (const auto& item : j.at("nodes")) {
    UcdNode node;
    for (int v : item.at("bag")) node.bag.add(v);
    node.children = item.at("children").get<std::vector<int>>();
    ucd.nodes.push_back(std::move(node));
  }
  return ucd;
}

Graph load_graph(const std::string& arg) {
  if (!arg.empty() && arg.front() == '{') return graph_from_json(nlohmann::json::parse(arg));
  if (arg.find(':') != std::string::npos && !std::ifstream(arg).good())
    return graph_from_spec(arg);
  std::ifstream in(arg);
  if (!in.good()) throw std::invalid_argument("cannot open graph file: " + arg);
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::string text = buffer.str();
  auto start = text.find_first_not_of(" \t\r\n");
  if (start != std::string::npos && text[start] == '{')
    return graph_from_json(nlohmann::json::parse(text));
  return graph_from_edge_list(text);
}

}  // namespace assoc
