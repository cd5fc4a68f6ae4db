#include "quiverlab/io.hpp"

#include <fstream>
#include <sstream>

namespace quiverlab {

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> toks;
  std::string t;
  while (is >> t) toks.push_back(t);
  return toks;
}

// comment-stripped, tokenized nonblank lines
std::vector<std::vector<std::string>> logical_lines(const std::string& text) {
  std::vector<std::vector<std::string>> out;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    auto toks = tokens_of(line);
    if (!toks.empty()) out.push_back(std::move(toks));
  }
  return out;
}

PathWord parse_relation_word(const std::string& word) {
  PathWord w;
  std::string cur;
  for (char ch : word + "*") {
    if (ch == '*') {
      if (cur.empty()) throw Error(ErrorKind::parse_error, "empty arrow name in '" + word + "'");
      w.arrows.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  return w;
}

int parse_int(const std::string& s) {
  try {
    size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size() || v < 0) throw Error(ErrorKind::parse_error, "bad count '" + s + "'");
    return v;
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::parse_error, "bad count '" + s + "'");
  }
}

template <class F>
Representation<F> assemble_rep(const F& f, AlgebraPtr alg,
                               const std::vector<std::vector<std::string>>& lines) {
  std::vector<int> dims(alg->num_vertices(), 0);
  std::vector<Mat<F>> mats;
  std::vector<char> seen(alg->num_arrows(), 0);

  size_t i = 1;  // field line already consumed
  if (i < lines.size() && lines[i][0] == "dims") {
    for (size_t t = 1; t < lines[i].size(); ++t) {
      const std::string& kv = lines[i][t];
      const auto eq = kv.find('=');
      if (eq == std::string::npos)
        throw Error(ErrorKind::parse_error, "expected <vertex>=<n>, got '" + kv + "'");
      const int v = alg->quiver.vertex_index(kv.substr(0, eq));
      if (v < 0) throw Error(ErrorKind::no_such_vertex, "'" + kv.substr(0, eq) + "'");
      dims[v] = parse_int(kv.substr(eq + 1));
    }
    ++i;
  }

  for (int a = 0; a < alg->num_arrows(); ++a) {
    const auto& ar = alg->quiver.arrows[a];
    mats.push_back(zero_mat(f, dims[alg->quiver.vertex_index(ar.target)],
                            dims[alg->quiver.vertex_index(ar.source)]));
  }

  while (i < lines.size()) {
    if (lines[i][0] != "matrix" || lines[i].size() != 2)
      throw Error(ErrorKind::parse_error, "expected 'matrix <arrow>'");
    const int a = alg->quiver.arrow_index(lines[i][1]);
    if (a < 0) throw Error(ErrorKind::parse_error, "no arrow named '" + lines[i][1] + "'");
    if (seen[a]) throw Error(ErrorKind::parse_error, "duplicate matrix for '" + lines[i][1] + "'");
    seen[a] = 1;
    ++i;
    Mat<F>& m = mats[a];
    for (int r = 0; r < m.rows && m.cols > 0; ++r, ++i) {
      if (i >= lines.size() || static_cast<int>(lines[i].size()) != m.cols)
        throw Error(ErrorKind::parse_error,
                    "matrix " + alg->quiver.arrows[a].name + ": expected " +
                        std::to_string(m.rows) + " rows of " + std::to_string(m.cols) +
                        " entries");
      for (int c = 0; c < m.cols; ++c) m.at(r, c) = f.from_string(lines[i][c]);
    }
  }
  return explicit_rep(alg, f, std::move(dims), std::move(mats));
}

}  // namespace

ParsedQuiver parse_quiver_text(const std::string& text) {
  ParsedQuiver out;
  const auto lines = logical_lines(text);
  bool in_relations = false;
  bool saw_header = false;
  for (const auto& toks : lines) {
    if (!in_relations && toks[0] == "quiver" && toks.size() == 2) {
      out.quiver.name = toks[1];
      saw_header = true;
    } else if (!in_relations && toks[0] == "vertices") {
      out.quiver.vertices.assign(toks.begin() + 1, toks.end());
    } else if (!in_relations && toks[0] == "arrow") {
      // arrow <name>: <src> -> <tgt>
      if (toks.size() != 5 || toks[3] != "->" || toks[1].empty() || toks[1].back() != ':')
        throw Error(ErrorKind::parse_error, "expected 'arrow <name>: <src> -> <tgt>'");
      out.quiver.arrows.push_back({toks[1].substr(0, toks[1].size() - 1), toks[2], toks[4]});
    } else if (!in_relations && toks[0] == "relations" && toks.size() == 1) {
      in_relations = true;
    } else if (in_relations && toks.size() == 3 && toks[1] == "=" && toks[2] == "0") {
      out.relations.push_back(parse_relation_word(toks[0]));
    } else {
      throw Error(ErrorKind::parse_error, "unrecognized line starting '" + toks[0] + "'");
    }
  }
  if (!saw_header)
    throw Error(ErrorKind::parse_error, "missing 'quiver <name>' header");
  out.quiver.validate();
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw Error(ErrorKind::parse_error, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream os(path);
  if (!os) throw Error(ErrorKind::parse_error, "cannot write '" + path + "'");
  os << content;
}

AlgebraPtr load_algebra_file(const std::string& path) {
  const ParsedQuiver pq = parse_quiver_text(read_text_file(path));
  return build_algebra(pq.quiver, pq.relations);
}

std::string quiver_text(const BoundQuiverAlgebra& alg) {
  std::ostringstream os;
  os << "# '*' composes like functions: in a*b, b is traversed first\n";
  os << "quiver " << alg.quiver.name << "\n";
  os << "vertices";
  for (const auto& v : alg.quiver.vertices) os << " " << v;
  os << "\n";
  for (const auto& a : alg.quiver.arrows)
    os << "arrow " << a.name << ": " << a.source << " -> " << a.target << "\n";
  if (!alg.relations.empty()) {
    os << "relations\n";
    for (const auto& r : alg.relations) {
      for (size_t i = 0; i < r.arrows.size(); ++i) os << (i ? "*" : "") << r.arrows[i];
      os << " = 0\n";
    }
  }
  return os.str();
}

void write_quiver_file(const std::string& path, const BoundQuiverAlgebra& alg) {
  write_text_file(path, quiver_text(alg));
}

AnyRep parse_rep_text(const std::string& text, AlgebraPtr alg) {
  const auto lines = logical_lines(text);
  if (lines.empty() || lines[0][0] != "field" || lines[0].size() != 2)
    throw Error(ErrorKind::parse_error, "representation file must start with 'field ...'");
  const FieldDesc fd = FieldDesc::parse(lines[0][1]);
  if (fd.kind == FieldDesc::Kind::prime)
    return assemble_rep(PrimeField(fd.p), alg, lines);
  return assemble_rep(Rationals{}, alg, lines);
}

AnyRep load_rep_file(const std::string& path, AlgebraPtr alg) {
  return parse_rep_text(read_text_file(path), alg);
}

template <class F>
std::string rep_text(const Representation<F>& M) {
  const F& f = M.field;
  std::ostringstream os;
  os << "# representation of quiver " << M.alg->quiver.name << "\n";
  if constexpr (F::is_finite)
    os << "field p:" << f.modulus() << "\n";
  else
    os << "field Q\n";
  os << "dims";
  for (size_t v = 0; v < M.dims.size(); ++v)
    os << " " << M.alg->quiver.vertices[v] << "=" << M.dims[v];
  os << "\n";
  for (int a = 0; a < M.alg->num_arrows(); ++a) {
    const Mat<F>& m = M.mats[a];
    if (m.rows == 0 || m.cols == 0 || mat_is_zero(f, m)) continue;
    os << "matrix " << M.alg->quiver.arrows[a].name << "\n";
    for (int r = 0; r < m.rows; ++r) {
      for (int c = 0; c < m.cols; ++c) os << (c ? " " : "") << f.to_string(m.at(r, c));
      os << "\n";
    }
  }
  return os.str();
}

template <class F>
void write_rep_file(const std::string& path, const Representation<F>& M) {
  write_text_file(path, rep_text(M));
}

template std::string rep_text<PrimeField>(const Representation<PrimeField>&);
template std::string rep_text<Rationals>(const Representation<Rationals>&);
template void write_rep_file<PrimeField>(const std::string&, const Representation<PrimeField>&);
template void write_rep_file<Rationals>(const std::string&, const Representation<Rationals>&);

}  // namespace quiverlab
