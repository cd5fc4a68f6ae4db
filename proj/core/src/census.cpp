#include "quiverlab/census.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace quiverlab {

namespace {

struct ArrowShape {
  int rows = 0, cols = 0, src = 0, tgt = 0;
  int entries() const { return rows * cols; }
};

struct PackShape {
  std::vector<ArrowShape> arrows;
  int bits = 0;  // per entry
  int total_bits = 0;
};

int bits_for(std::uint64_t p) {
  int b = 1;
  while ((1ull << b) < p) ++b;
  return b;
}

PackShape make_shape(const BoundQuiverAlgebra& alg, const std::vector<int>& d, std::uint64_t p) {
  PackShape s;
  s.bits = bits_for(p);
  for (int a = 0; a < alg.num_arrows(); ++a) {
    ArrowShape as;
    as.src = alg.quiver.vertex_index(alg.quiver.arrows[a].source);
    as.tgt = alg.quiver.vertex_index(alg.quiver.arrows[a].target);
    as.rows = d[as.tgt];
    as.cols = d[as.src];
    s.arrows.push_back(as);
    s.total_bits += s.bits * as.entries();
  }
  return s;
}

std::uint64_t pack(const PackShape& s, const std::vector<Mat<PrimeField>>& mats) {
  std::uint64_t key = 0;
  for (const auto& m : mats)
    for (const auto& e : m.a) key = (key << s.bits) | e;
  return key;
}

std::vector<Mat<PrimeField>> unpack(const PackShape& s, const PrimeField& f, std::uint64_t key) {
  std::vector<Mat<PrimeField>> mats;
  for (const auto& as : s.arrows) mats.push_back(zero_mat(f, as.rows, as.cols));
  const std::uint64_t mask = (1ull << s.bits) - 1;
  int shift = s.total_bits;
  for (auto& m : mats)
    for (auto& e : m.a) {
      shift -= s.bits;
      e = (key >> shift) & mask;
    }
  return mats;
}

// all relation-satisfying matrix tuples, emitted in ascending key order
void enumerate_valid(const BoundQuiverAlgebra& alg, const PrimeField& f, const PackShape& s,
                     std::vector<std::uint64_t>& out) {
  const int na = alg.num_arrows();
  std::vector<std::vector<const PathWord*>> check_at(std::max(na, 1));
  for (const auto& r : alg.relations) {
    int last = 0;
    for (const auto& an : r.arrows) last = std::max(last, alg.quiver.arrow_index(an));
    check_at[last].push_back(&r);
  }
  std::vector<Mat<PrimeField>> mats;
  for (const auto& as : s.arrows) mats.push_back(zero_mat(f, as.rows, as.cols));

  auto word_vanishes = [&](const PathWord& r) {
    Mat<PrimeField> acc = mats[alg.quiver.arrow_index(r.arrows[0])];
    for (size_t i = 1; i < r.arrows.size(); ++i)
      acc = mat_mul(f, acc, mats[alg.quiver.arrow_index(r.arrows[i])]);
    return mat_is_zero(f, acc);
  };

  const std::uint64_t p = f.modulus();
  std::function<void(int, std::uint64_t)> rec = [&](int a, std::uint64_t prefix) {
    if (a == na) {
      out.push_back(prefix);
      return;
    }
    auto& m = mats[a];
    const int ne = s.arrows[a].entries();
    std::fill(m.a.begin(), m.a.end(), 0);
    for (;;) {
      bool ok = true;
      for (const auto* r : check_at[a])
        if (!word_vanishes(*r)) {
          ok = false;
          break;
        }
      if (ok) {
        std::uint64_t key = prefix;
        for (const auto& e : m.a) key = (key << s.bits) | e;
        rec(a + 1, key);
      }
      int i = ne - 1;
      while (i >= 0) {
        if (++m.a[i] < p) break;
        m.a[i] = 0;
        --i;
      }
      if (i < 0) break;
    }
  };
  rec(0, 0);
}

// base-change generators: transvections E_ij(1) per vertex, plus one
// diagonal scaling by a primitive root when p > 2. These generate the full
// product of general linear groups; the group is finite, so closing under
// forward application alone reaches every orbit member.
struct GenOp {
  int vertex;
  enum Kind { add, diag } kind;
  int i = 0, j = 0;
};

std::vector<GenOp> make_gens(const std::vector<int>& d, std::uint64_t p) {
  std::vector<GenOp> gens;
  for (int v = 0; v < static_cast<int>(d.size()); ++v) {
    for (int i = 0; i < d[v]; ++i)
      for (int j = 0; j < d[v]; ++j)
        if (i != j) gens.push_back({v, GenOp::add, i, j});
    if (p > 2 && d[v] >= 1) gens.push_back({v, GenOp::diag, 0, 0});
  }
  return gens;
}

std::uint64_t primitive_root(const PrimeField& f) {
  const std::uint64_t p = f.modulus();
  if (p == 2) return 1;
  for (std::uint64_t g = 2; g < p; ++g) {
    std::uint64_t x = g, order = 1;
    while (x != 1) {
      x = f.mul(x, g);
      ++order;
    }
    if (order == p - 1) return g;
  }
  throw Error(ErrorKind::precondition_failed, "no primitive root found");
}

void apply_gen(const PrimeField& f, const PackShape& s, const GenOp& g,
               std::vector<Mat<PrimeField>>& mats, std::uint64_t zeta, std::uint64_t zeta_inv) {
  for (size_t a = 0; a < mats.size(); ++a) {
    auto& m = mats[a];
    if (s.arrows[a].tgt == g.vertex && m.rows > 0 && m.cols > 0) {
      if (g.kind == GenOp::add) {
        for (int c = 0; c < m.cols; ++c) m.at(g.i, c) = f.add(m.at(g.i, c), m.at(g.j, c));
      } else {
        for (int c = 0; c < m.cols; ++c) m.at(0, c) = f.mul(m.at(0, c), zeta);
      }
    }
    if (s.arrows[a].src == g.vertex && m.rows > 0 && m.cols > 0) {
      if (g.kind == GenOp::add) {
        for (int r = 0; r < m.rows; ++r) m.at(r, g.j) = f.sub(m.at(r, g.j), m.at(r, g.i));
      } else {
        for (int r = 0; r < m.rows; ++r) m.at(r, 0) = f.mul(m.at(r, 0), zeta_inv);
      }
    }
  }
}

}  // namespace

CensusReport brick_census(AlgebraPtr alg, const PrimeField& f, const std::vector<int>& bounds,
                          std::uint64_t budget) {
  const int nv = alg->num_vertices();
  if (static_cast<int>(bounds.size()) != nv)
    throw Error(ErrorKind::shape_mismatch, "bounds length");
  for (int b : bounds)
    if (b < 0) throw Error(ErrorKind::bad_parameter, "negative bound");
  const std::uint64_t p = f.modulus();

  CensusReport report;
  report.p = p;
  report.bounds = bounds;

  // nonzero dim vectors within bounds, smallest total dimension first so that
  // all potential summands of a module are classified before the module
  std::vector<std::vector<int>> dvs;
  {
    std::vector<int> cur(nv, 0);
    for (;;) {
      int i = nv - 1;
      while (i >= 0) {
        if (++cur[i] <= bounds[i]) break;
        cur[i] = 0;
        --i;
      }
      if (i < 0) break;
      dvs.push_back(cur);
    }
  }
  std::sort(dvs.begin(), dvs.end(), [](const std::vector<int>& x, const std::vector<int>& y) {
    const int sx = std::accumulate(x.begin(), x.end(), 0);
    const int sy = std::accumulate(y.begin(), y.end(), 0);
    if (sx != sy) return sx < sy;
    return x < y;
  });

  // refuse oversized runs before doing any work
  std::uint64_t total = 0;
  for (const auto& d : dvs) {
    const PackShape s = make_shape(*alg, d, p);
    if (s.total_bits > 64)
      throw Error(ErrorKind::budget_exceeded,
                  "matrix tuple needs " + std::to_string(s.total_bits) + " bits");
    std::uint64_t count = 1;
    for (const auto& as : s.arrows)
      for (int e = 0; e < as.entries(); ++e) {
        if (count > budget / p) throw Error(ErrorKind::budget_exceeded, "enumeration too large");
        count *= p;
      }
    if (total > budget - count) throw Error(ErrorKind::budget_exceeded, "enumeration too large");
    total += count;
  }

  const std::uint64_t zeta = primitive_root(f);
  const std::uint64_t zeta_inv = f.inv(zeta);

  std::map<std::vector<int>, int> dv_index;
  for (size_t i = 0; i < dvs.size(); ++i) dv_index[dvs[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> classes_of(dvs.size());  // indices into report.classes

  for (size_t di = 0; di < dvs.size(); ++di) {
    const auto& d = dvs[di];
    const PackShape shape = make_shape(*alg, d, p);
    std::vector<std::uint64_t> keys;
    enumerate_valid(*alg, f, shape, keys);
    std::vector<std::int32_t> orbit(keys.size(), -1);
    const auto gens = make_gens(d, p);

    auto key_index = [&](std::uint64_t k) {
      const auto it = std::lower_bound(keys.begin(), keys.end(), k);
      if (it == keys.end() || *it != k)
        throw Error(ErrorKind::precondition_failed, "orbit left the valid set");
      return static_cast<int>(it - keys.begin());
    };

    int nclasses = 0;
    std::vector<std::uint64_t> stack;
    for (size_t i = 0; i < keys.size(); ++i) {
      if (orbit[i] >= 0) continue;
      const int cid = nclasses++;
      orbit[i] = cid;
      std::uint64_t osize = 1;
      stack.assign(1, keys[i]);
      while (!stack.empty()) {
        const std::uint64_t k = stack.back();
        stack.pop_back();
        const auto base = unpack(shape, f, k);
        for (const auto& g : gens) {
          auto mats = base;
          apply_gen(f, shape, g, mats, zeta, zeta_inv);
          const std::uint64_t nk = pack(shape, mats);
          if (nk == k) continue;
          const int idx = key_index(nk);
          if (orbit[idx] < 0) {
            orbit[idx] = cid;
            ++osize;
            stack.push_back(nk);
          }
        }
      }
      CensusClass cls;
      cls.dims = d;
      cls.rep.alg = alg;
      cls.rep.field = f;
      cls.rep.dims = d;
      cls.rep.mats = unpack(shape, f, keys[i]);
      cls.orbit_size = osize;
      for (const auto& m : cls.rep.mats) cls.arrow_is_zero.push_back(mat_is_zero(f, m));
      classes_of[di].push_back(static_cast<int>(report.classes.size()));
      report.classes.push_back(std::move(cls));
    }

    // mark decomposables: every decomposable class is A (+) B with A an
    // already-classified indecomposable and B any smaller class
    std::vector<bool> decomposable(nclasses, false);
    for (size_t ai = 0; ai < di; ++ai) {
      const auto& da = dvs[ai];
      std::vector<int> db(nv);
      bool fits = true;
      for (int v = 0; v < nv; ++v) {
        db[v] = d[v] - da[v];
        if (db[v] < 0) fits = false;
      }
      if (!fits) continue;
      const auto bit = dv_index.find(db);
      if (bit == dv_index.end()) continue;  // db == 0 cannot happen (ai < di)
      for (const int ac : classes_of[ai]) {
        if (!report.classes[ac].indecomposable) continue;
        for (const int bc : classes_of[bit->second]) {
          std::vector<Mat<PrimeField>> sum;
          for (int ar = 0; ar < alg->num_arrows(); ++ar)
            sum.push_back(block_diag(
                f, {report.classes[ac].rep.mats[ar], report.classes[bc].rep.mats[ar]}));
          decomposable[orbit[key_index(pack(shape, sum))]] = true;
        }
      }
    }

    for (int cid = 0; cid < nclasses; ++cid) {
      auto& cls = report.classes[classes_of[di][cid]];
      cls.indecomposable = !decomposable[cid];
      if (cls.indecomposable) {
        cls.end = end_analysis(cls.rep);
        if (cls.end.is_indecomposable.decided() && !cls.end.is_indecomposable.is_yes())
          throw Error(ErrorKind::precondition_failed,
                      "endomorphism analysis contradicts the direct-sum lookup");
        cls.end.is_indecomposable = Verdict::of(true);
      } else {
        // a projection onto a nonzero proper summand is a non-invertible
        // nonzero endomorphism, so no scan is needed
        cls.end.dim_end = hom_basis(cls.rep, cls.rep).dim();
        cls.end.is_brick = false;
        cls.end.is_schur = Verdict::of(false);
        cls.end.is_indecomposable = Verdict::of(false);
      }
    }
  }

  // canonical output order: dim vector, then representative key (shapes agree
  // within a dim vector, so entrywise comparison is exactly key order)
  std::sort(report.classes.begin(), report.classes.end(),
            [](const CensusClass& x, const CensusClass& y) {
              if (x.dims != y.dims) return x.dims < y.dims;
              for (size_t m = 0; m < x.rep.mats.size(); ++m)
                if (x.rep.mats[m].a != y.rep.mats[m].a) return x.rep.mats[m].a < y.rep.mats[m].a;
              return false;
            });
  for (const auto& cls : report.classes) {
    if (cls.indecomposable) ++report.indecomposables;
    if (cls.end.is_brick) ++report.bricks;
    if (cls.end.is_schur.is_yes()) ++report.schur;
  }
  return report;
}

}  // namespace quiverlab
