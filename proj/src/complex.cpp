#include "intsub/complex.hpp"

#include <algorithm>
#include <sstream>

namespace intsub {

bool is_subset(const Face& a, const Face& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

Face face_union(const Face& a, const Face& b) {
  Face r;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

namespace {

// All subsets of `f`, inserted into `out`.
void insert_closure(const Face& f, std::set<Face>& out) {
  const int n = static_cast<int>(f.size());
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    Face g;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) g.push_back(f[i]);
    out.insert(std::move(g));
  }
}

}  // namespace

SimplicialComplex SimplicialComplex::from_facets(std::vector<Face> generators) {
  SimplicialComplex K;
  for (Face& g : generators) {
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
  }
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()),
                   generators.end());

  K.faces_.insert(Face{});
  for (const Face& g : generators) insert_closure(g, K.faces_);

  Face vertices;
  for (const Face& f : K.faces_)
    if (f.size() == 1) vertices.push_back(f[0]);

  // A generator is a facet iff no one-vertex extension is itself a face.
  for (const Face& g : generators) {
    bool maximal = true;
    for (int v : vertices) {
      if (std::binary_search(g.begin(), g.end(), v)) continue;
      if (K.faces_.count(face_union(g, {v}))) {
        maximal = false;
        break;
      }
    }
    if (maximal) K.facets_.push_back(g);
  }
  return K;
}

SimplicialComplex SimplicialComplex::parse(const std::string& text) {
  std::vector<Face> generators;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::istringstream ls(line);
    Face f;
    std::string tok;
    while (ls >> tok) {
      size_t pos = 0;
      long v = 0;
      try {
        v = std::stol(tok, &pos);
      } catch (const std::exception&) {
        pos = 0;
      }
      if (pos != tok.size() || v <= 0)
        throw MalformedInput("line " + std::to_string(lineno) +
                             ": bad vertex token '" + tok + "'");
      f.push_back(static_cast<int>(v));
    }
    if (!f.empty()) generators.push_back(std::move(f));
  }
  if (generators.empty())
    throw MalformedInput("no facets found in input");
  return from_facets(std::move(generators));
}

std::string SimplicialComplex::serialize() const {
  std::ostringstream out;
  for (const Face& f : facets_) {
    for (size_t i = 0; i < f.size(); ++i) {
      if (i) out << ' ';
      out << f[i];
    }
    out << '\n';
  }
  return out.str();
}

int SimplicialComplex::dim() const {
  size_t d = 0;
  for (const Face& f : facets_) d = std::max(d, f.size());
  return static_cast<int>(d) - 1;
}

}  // namespace intsub
