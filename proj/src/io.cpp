#include "toricjl/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

namespace toricjl {

namespace {

std::string strip_comment(const std::string& line) {
  const auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

std::vector<std::string> split_words(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  for (std::string w; is >> w;) out.push_back(w);
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.push_back("");
  return out;
}

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

std::map<std::string, std::size_t> label_index(const SimplicialComplex& l) {
  std::map<std::string, std::size_t> idx;
  for (std::size_t v = 0; v < l.labels().size(); ++v) idx[l.labels()[v]] = v;
  return idx;
}

}  // namespace

SimplicialComplex parse_complex(std::istream& in) {
  std::vector<std::string> labels;
  std::map<std::string, std::size_t> index;
  std::vector<std::vector<std::size_t>> faces;
  bool have_header = false;
  std::size_t lineno = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++lineno;
    const std::string line = trim(strip_comment(raw));
    if (line.empty()) continue;
    auto where = [&] { return "line " + std::to_string(lineno) + ": "; };
    if (!have_header) {
      if (line.rfind("vertices:", 0) != 0) throw ParseError(where() + "expected 'vertices:' header");
      labels = split_words(line.substr(9));
      if (labels.size() > kMaxVertices)
        throw ParseError(where() + std::to_string(labels.size()) + " vertices exceed the limit of " +
                         std::to_string(kMaxVertices));
      for (std::size_t v = 0; v < labels.size(); ++v)
        if (!index.emplace(labels[v], v).second) throw ParseError(where() + "duplicate vertex label '" + labels[v] + "'");
      have_header = true;
      continue;
    }
    std::vector<std::size_t> face;
    for (const auto& w : split_words(line)) {
      auto it = index.find(w);
      if (it == index.end()) throw ParseError(where() + "unknown vertex '" + w + "'");
      if (std::find(face.begin(), face.end(), it->second) != face.end())
        throw ParseError(where() + "vertex '" + w + "' repeated inside a face");
      face.push_back(it->second);
    }
    faces.push_back(std::move(face));
  }
  if (!have_header) throw ParseError("missing 'vertices:' header");
  return SimplicialComplex::from_maximal_faces(faces, labels.size(), labels);
}

SimplicialComplex parse_complex(const std::string& text) {
  std::istringstream is(text);
  return parse_complex(is);
}

SimplicialComplex read_complex_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open complex file '" + path.string() + "'");
  try {
    return parse_complex(in);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

std::string format_complex(const SimplicialComplex& l, const std::string& comment) {
  std::ostringstream os;
  if (!comment.empty()) os << "# " << comment << "\n";
  os << "vertices:";
  for (std::size_t v : face_vertices(l.vertices())) os << " " << l.labels()[v];
  os << "\n";
  for (Face f : l.maximal_faces()) {
    if (face_size(f) < 2) continue;  // isolated vertices are declared by the header
    bool first = true;
    for (std::size_t v : face_vertices(f)) {
      os << (first ? "" : " ") << l.labels()[v];
      first = false;
    }
    os << "\n";
  }
  return os.str();
}

Character parse_character(const std::string& spec, const SimplicialComplex& l, std::vector<std::string>& warnings) {
  const std::size_t n = l.ambient_size();
  if (trim(spec) == "diag") return Character::diagonal(n);
  const auto index = label_index(l);
  Character chi{std::vector<std::int64_t>(n, 0)};
  std::vector<bool> given(n, false);
  for (const auto& item : split(spec, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw ParseError("--chi: expected label=int, got '" + item + "'");
    const std::string label = trim(item.substr(0, eq)), value = trim(item.substr(eq + 1));
    auto it = index.find(label);
    if (it == index.end()) throw ParseError("--chi: unknown vertex '" + label + "'");
    if (given[it->second]) throw ParseError("--chi: vertex '" + label + "' assigned twice");
    std::int64_t m = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), m);
    if (ec != std::errc() || ptr != value.data() + value.size())
      throw ParseError("--chi: weight '" + value + "' is not an integer");
    chi.m[it->second] = m;
    given[it->second] = true;
  }
  for (std::size_t v : face_vertices(l.vertices()))
    if (!given[v]) warnings.push_back("vertex '" + l.labels()[v] + "' not mentioned in --chi; weight 0");
  return chi;
}

VertexSet parse_vertex_set(const std::string& spec, const SimplicialComplex& l) {
  VertexSet w = 0;
  if (trim(spec).empty()) return w;
  const auto index = label_index(l);
  for (const auto& item : split(spec, ',')) {
    auto it = index.find(trim(item));
    if (it == index.end()) throw ParseError("unknown vertex '" + trim(item) + "'");
    w |= singleton(it->second);
  }
  return w;
}

std::vector<std::string> fixture_names() {
  return {"path3", "cycle4", "2k2", "simplex1", "simplex2", "simplex3", "simplex4", "triangle-boundary", "rp2", "rp2-flag"};
}

SimplicialComplex fixture(const std::string& name) {
  const std::vector<std::string> abcd{"a", "b", "c", "d"};
  if (name == "path3") return SimplicialComplex::from_maximal_faces({{0, 1}, {1, 2}}, 3, {"a", "b", "c"});
  if (name == "cycle4") return SimplicialComplex::from_maximal_faces({{0, 1}, {1, 2}, {2, 3}, {0, 3}}, 4, abcd);
  if (name == "2k2") return SimplicialComplex::from_maximal_faces({{0, 1}, {2, 3}}, 4, abcd);
  if (name == "triangle-boundary")
    return SimplicialComplex::from_maximal_faces({{0, 1}, {1, 2}, {0, 2}}, 3, {"a", "b", "c"});
  if (name == "rp2" || name == "rp2-flag") {
    const auto rp2 = SimplicialComplex::from_maximal_faces(
        {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5}, {1, 2, 4}, {1, 3, 4}, {1, 3, 5}, {2, 3, 5}, {2, 4, 5}}, 6,
        {"1", "2", "3", "4", "5", "6"});
    return name == "rp2" ? rp2 : barycentric_subdivide(rp2);
  }
  if (name.rfind("simplex", 0) == 0) {
    std::size_t n = 0;
    const char* s = name.data() + 7;
    auto [ptr, ec] = std::from_chars(s, name.data() + name.size(), n);
    if (ec == std::errc() && ptr == name.data() + name.size() && n >= 1 && n <= 16) {
      std::vector<std::size_t> all(n);
      std::vector<std::string> labels;
      for (std::size_t v = 0; v < n; ++v) {
        all[v] = v;
        labels.push_back(v < 26 ? std::string(1, static_cast<char>('a' + v)) : std::to_string(v));
      }
      return SimplicialComplex::from_maximal_faces({all}, n, labels);
    }
  }
  throw ParseError("unknown fixture '" + name + "'");
}

}  // namespace toricjl
