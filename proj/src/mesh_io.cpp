#include "bdmfem/mesh_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "bdmfem/errors.hpp"

namespace bdmfem {

namespace {

/// Token stream that remembers the line each token came from.
class Tokenizer {
public:
  explicit Tokenizer(std::istream& in) : in_(in) {}

  bool next(std::string& token) {
    while (pos_ >= tokens_.size()) {
      std::string line;
      if (!std::getline(in_, line)) return false;
      ++line_no_;
      tokens_.clear();
      pos_ = 0;
      std::istringstream ss(line);
      for (std::string t; ss >> t;) tokens_.push_back(t);
    }
    token = tokens_[pos_++];
    return true;
  }

  int line() const { return line_no_; }

  template <class T>
  T read(const char* what) {
    std::string tok;
    if (!next(tok)) throw ParseError(fmt::format("unexpected end of file while reading {}", what), line_no_ + 1);
    T value{};
    const auto* first = tok.data();
    const auto* last = tok.data() + tok.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
      throw ParseError(fmt::format("cannot parse '{}' as {}", tok, what), line_no_);
    return value;
  }

private:
  std::istream& in_;
  std::vector<std::string> tokens_;
  std::size_t pos_ = 0;
  int line_no_ = 0;
};

}  // namespace

Mesh parse_mesh(std::istream& in) {
  Tokenizer tk(in);
  const long n = tk.read<long>("vertex count");
  const long nt = tk.read<long>("element count");
  if (n <= 0 || nt <= 0) throw ParseError("vertex and element counts must be positive", tk.line());

  Mesh mesh;
  mesh.nodes.resize(n);
  for (auto& p : mesh.nodes) {
    p.x = tk.read<double>("x coordinate");
    p.y = tk.read<double>("y coordinate");
  }
  mesh.elements.resize(nt);
  for (auto& tri : mesh.elements)
    for (int& v : tri) v = tk.read<int>("vertex index") - 1;
  mesh.markers.resize(nt);
  for (auto& row : mesh.markers)
    for (auto& m : row) {
      const int value = tk.read<int>("boundary marker");
      if (value < 0 || value > 2)
        throw ParseError(fmt::format("boundary marker {} is not 0, 1 or 2", value), tk.line());
      m = static_cast<Marker>(value);
    }

  std::string extra;
  if (tk.next(extra)) throw ParseError(fmt::format("trailing content '{}'", extra), tk.line());
  return mesh;
}

Mesh read_mesh(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError(fmt::format("cannot open mesh file '{}'", path));
  return parse_mesh(in);
}

void write_mesh(std::ostream& out, const Mesh& mesh) {
  fmt::print(out, "{} {}\n", mesh.num_nodes(), mesh.num_elements());
  for (const auto& p : mesh.nodes) fmt::print(out, "{} {}\n", p.x, p.y);
  for (const auto& tri : mesh.elements) fmt::print(out, "{} {} {}\n", tri[0] + 1, tri[1] + 1, tri[2] + 1);
  for (const auto& m : mesh.markers)
    fmt::print(out, "{} {} {}\n", static_cast<int>(m[0]), static_cast<int>(m[1]), static_cast<int>(m[2]));
}

void write_mesh(const std::string& path, const Mesh& mesh) {
  std::ofstream out(path);
  if (!out) throw IoError(fmt::format("cannot write mesh file '{}'", path));
  write_mesh(out, mesh);
}

Mesh builtin_paper_mesh() {
  Mesh mesh;
  mesh.nodes = {{-1, 1},    {0, 1},  {1, 1},     {-0.5, 0.5}, {0.5, 0.5}, {-1, 0},  {0, 0},
                {1, 0},     {-0.5, -0.5}, {0.5, -0.5}, {-1, -1},  {0, -1},   {1, -1}};
  const std::vector<Triangle> one_based = {{4, 2, 1},  {4, 1, 6},   {4, 6, 7},   {4, 7, 2},
                                           {5, 3, 2},  {5, 2, 7},   {5, 7, 8},   {5, 8, 3},
                                           {9, 7, 6},  {9, 6, 11},  {9, 11, 12}, {9, 12, 7},
                                           {10, 8, 7}, {10, 7, 12}, {10, 12, 13}, {10, 13, 8}};
  for (auto tri : one_based) mesh.elements.push_back({tri[0] - 1, tri[1] - 1, tri[2] - 1});
  const std::vector<std::array<int, 3>> bd = {{2, 0, 0}, {1, 0, 0}, {0, 0, 0}, {0, 0, 0}, {2, 0, 0}, {0, 0, 0},
                                              {0, 0, 0}, {1, 0, 0}, {0, 0, 0}, {1, 0, 0}, {1, 0, 0}, {0, 0, 0},
                                              {0, 0, 0}, {0, 0, 0}, {1, 0, 0}, {1, 0, 0}};
  for (auto row : bd)
    mesh.markers.push_back({static_cast<Marker>(row[0]), static_cast<Marker>(row[1]), static_cast<Marker>(row[2])});
  return mesh;
}

Mesh load_mesh(std::string_view spec) {
  constexpr std::string_view prefix = "builtin:";
  if (spec.starts_with(prefix)) {
    const auto name = spec.substr(prefix.size());
    if (name == "paper") return builtin_paper_mesh();
    throw ConfigError(fmt::format("unknown builtin mesh '{}'", name));
  }
  return read_mesh(std::string(spec));
}

}  // namespace bdmfem
