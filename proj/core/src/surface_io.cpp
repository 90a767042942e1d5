#include "flatlab/surface_io.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace flatlab {

std::string to_text(const TranslationSurface& s) {
  if (s.float_mode()) fail(Errc::float_mode_unsupported, "serializing a float-mode surface");
  std::ostringstream out;
  if (s.field_disc() == 0)
    out << "field rational\n";
  else
    out << "field sqrt(" << s.field_disc() << ")\n";
  for (int p = 0; p < s.polygon_count(); ++p) {
    out << "polygon p" << p;
    for (const auto& v : s.polygon(p)) out << " (" << v.x.str() << "," << v.y.str() << ")";
    out << "\n";
  }
  for (int p = 0; p < s.polygon_count(); ++p)
    for (int e = 0; e < s.edge_count(p); ++e) {
      GluedEdge g = s.partner(p, e);
      if (g.poly < p || (g.poly == p && g.edge < e)) continue;  // one line per pair
      out << "glue p" << p << "." << e << " p" << g.poly << "." << g.edge << "\n";
    }
  return out.str();
}

namespace {

[[noreturn]] void syntax(int line, const std::string& msg) {
  fail(Errc::syntax_error, "line " + std::to_string(line) + ": " + msg);
}

std::pair<std::string, int> parse_edge_ref(const std::string& tok, int line) {
  size_t dot = tok.rfind('.');
  if (dot == std::string::npos || dot + 1 >= tok.size())
    syntax(line, "expected <name>.<edge>, got '" + tok + "'");
  for (size_t i = dot + 1; i < tok.size(); ++i)
    if (!std::isdigit((unsigned char)tok[i])) syntax(line, "bad edge index in '" + tok + "'");
  return {tok.substr(0, dot), std::stoi(tok.substr(dot + 1))};
}

}  // namespace

TranslationSurface parse_surface(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  bool have_field = false;
  long field_d = 0;
  std::vector<std::string> names;
  std::map<std::string, int> index_of;
  std::vector<std::vector<Vec2>> polys;
  struct GlueLine {
    std::string a, b;
    int ea, eb, line;
  };
  std::vector<GlueLine> glue_lines;

  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw;
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    if (kw == "field") {
      std::string f;
      ls >> f;
      if (f == "rational") {
        field_d = 0;
      } else if (f.rfind("sqrt(", 0) == 0 && f.back() == ')') {
        std::string inner = f.substr(5, f.size() - 6);
        try {
          field_d = std::stol(inner);
        } catch (...) {
          syntax(lineno, "bad field discriminant '" + inner + "'");
        }
        if (field_d <= 1) syntax(lineno, "field discriminant must exceed 1");
      } else {
        syntax(lineno, "expected 'rational' or 'sqrt(D)'");
      }
      have_field = true;
    } else if (kw == "polygon") {
      std::string name;
      if (!(ls >> name)) syntax(lineno, "polygon needs a name");
      if (index_of.count(name)) syntax(lineno, "duplicate polygon '" + name + "'");
      std::vector<Vec2> verts;
      std::string rest;
      std::getline(ls, rest);
      size_t i = 0;
      while (i < rest.size()) {
        if (std::isspace((unsigned char)rest[i])) {
          ++i;
          continue;
        }
        if (rest[i] != '(') syntax(lineno, "expected '(' starting a vertex");
        size_t close = rest.find(')', i);
        if (close == std::string::npos) syntax(lineno, "unterminated vertex");
        std::string pair = rest.substr(i + 1, close - i - 1);
        size_t comma = std::string::npos;
        int depth = 0;
        for (size_t k = 0; k < pair.size(); ++k) {
          if (pair[k] == '(') ++depth;
          if (pair[k] == ')') --depth;
          if (pair[k] == ',' && depth == 0) {
            comma = k;
            break;
          }
        }
        if (comma == std::string::npos) syntax(lineno, "vertex needs two scalars");
        try {
          verts.emplace_back(ExactReal::parse(pair.substr(0, comma)),
                             ExactReal::parse(pair.substr(comma + 1)));
        } catch (const Error& e) {
          syntax(lineno, e.what());
        }
        i = close + 1;
      }
      if (verts.size() < 3) syntax(lineno, "polygon needs at least 3 vertices");
      index_of[name] = (int)polys.size();
      names.push_back(name);
      polys.push_back(std::move(verts));
    } else if (kw == "glue") {
      std::string ta, tb;
      if (!(ls >> ta >> tb)) syntax(lineno, "glue needs two edge references");
      auto [na, ea] = parse_edge_ref(ta, lineno);
      auto [nb, eb] = parse_edge_ref(tb, lineno);
      glue_lines.push_back({na, nb, ea, eb, lineno});
    } else {
      syntax(lineno, "unknown keyword '" + kw + "'");
    }
  }

  if (!have_field) fail(Errc::syntax_error, "missing 'field' header");
  if (polys.empty()) fail(Errc::syntax_error, "no polygons");

  std::vector<std::vector<GluedEdge>> glue(polys.size());
  for (size_t p = 0; p < polys.size(); ++p) glue[p].assign(polys[p].size(), GluedEdge{});
  for (const auto& g : glue_lines) {
    if (!index_of.count(g.a)) syntax(g.line, "unknown polygon '" + g.a + "'");
    if (!index_of.count(g.b)) syntax(g.line, "unknown polygon '" + g.b + "'");
    int pa = index_of[g.a], pb = index_of[g.b];
    if (g.ea >= (int)polys[pa].size()) syntax(g.line, "edge index out of range");
    if (g.eb >= (int)polys[pb].size()) syntax(g.line, "edge index out of range");
    if (glue[pa][g.ea].poly >= 0 || glue[pb][g.eb].poly >= 0)
      syntax(g.line, "edge glued twice");
    glue[pa][g.ea] = {pb, g.eb};
    glue[pb][g.eb] = {pa, g.ea};
  }
  for (size_t p = 0; p < glue.size(); ++p)
    for (size_t e = 0; e < glue[p].size(); ++e)
      if (glue[p][e].poly < 0)
        fail(Errc::gluing_mismatch,
             "edge " + names[p] + "." + std::to_string(e) + " is not glued");

  TranslationSurface s = TranslationSurface::build(std::move(polys), std::move(glue));
  if (s.field_disc() != 0 && s.field_disc() != field_d)
    fail(Errc::field_mismatch, "coordinates use sqrt(" + std::to_string(s.field_disc()) +
                                   ") but the header declares another field");
  return s;
}

TranslationSurface load_surface(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::io_error, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_surface(buf.str());
}

void save_surface(const TranslationSurface& s, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(Errc::io_error, "cannot open '" + path + "' for writing");
  out << to_text(s);
  if (!out) fail(Errc::io_error, "write to '" + path + "' failed");
}

TranslationSurface resolve_surface(const std::string& arg) {
  std::istringstream in(arg);
  std::string head;
  in >> head;
  for (const char* b : {"torus", "octagon", "golden-l", "origami", "perturbed-l"})
    if (head == b) return TranslationSurface::from_builder_spec(arg);
  return load_surface(arg);
}

}  // namespace flatlab
