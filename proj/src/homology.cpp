#include "gridhom/homology.hpp"

#include <vector>

#include "gridhom/errors.hpp"

namespace gridhom {

namespace {

std::vector<Bigrading> keys(const SparseBoundary& b) {
  std::vector<Bigrading> out;
  out.reserve(b.blocks().size());
  for (const auto& [g, blk] : b.blocks()) out.push_back(g);
  return out;
}

}  // namespace

gf2::BitVector HomologyBlock::coordinates(gf2::BitVector cycle) const {
  gf2::BitVector tags(representatives_.size());
  reducer_.reduce(cycle, &tags);
  if (cycle.any()) throw ConsistencyError("vector is not a cycle in its block");
  return tags;
}

Homology::Homology(SparseBoundary complex) : complex_(std::move(complex)) {
  const auto gs = keys(complex_);
  std::vector<std::optional<HomologyBlock>> out(gs.size());
  const auto count = static_cast<long long>(gs.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long long i = 0; i < count; ++i) {
    const Bigrading g = gs[static_cast<std::size_t>(i)];
    const std::size_t dim = complex_.find(g)->basis.size();
    HomologyBlock h(g, dim);
    const Bigrading above{g.maslov + 1, g.alexander};
    if (complex_.find(above)) {
      const gf2::Matrix incoming = complex_.matrix(above).transposed();
      for (std::size_t c = 0; c < incoming.rows(); ++c) {
        gf2::BitVector v(dim);
        const auto row = incoming.row(c);
        std::copy(row.begin(), row.end(), v.words().begin());
        h.reducer_.insert(std::move(v));
      }
    }
    for (auto& z : gf2::kernel_basis(complex_.matrix(g))) {
      const int tag = static_cast<int>(h.representatives_.size());
      if (h.reducer_.insert(std::move(z), tag)) h.representatives_.push_back(h.reducer_.vector(h.reducer_.size() - 1));
    }
    out[static_cast<std::size_t>(i)] = std::move(h);
  }
  for (std::size_t i = 0; i < gs.size(); ++i) blocks_.emplace(gs[i], std::move(*out[i]));
}

const HomologyBlock* Homology::block(Bigrading g) const {
  const auto it = blocks_.find(g);
  return it == blocks_.end() ? nullptr : &it->second;
}

BigradedRanks Homology::ranks() const {
  BigradedRanks r;
  for (const auto& [g, h] : blocks_) r.add(g, static_cast<std::int64_t>(h.rank()));
  return r;
}

BigradedRanks homology_ranks(const SparseBoundary& b) {
  const auto gs = keys(b);
  std::vector<std::size_t> rank_out(gs.size());
  const auto count = static_cast<long long>(gs.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long long i = 0; i < count; ++i) {
    rank_out[static_cast<std::size_t>(i)] = gf2::rank(b.matrix(gs[static_cast<std::size_t>(i)]));
  }
  std::map<Bigrading, std::size_t> rk;
  for (std::size_t i = 0; i < gs.size(); ++i) rk[gs[i]] = rank_out[i];
  BigradedRanks out;
  for (std::size_t i = 0; i < gs.size(); ++i) {
    const Bigrading g = gs[i];
    const auto above = rk.find({g.maslov + 1, g.alexander});
    const std::size_t incoming = above == rk.end() ? 0 : above->second;
    const std::size_t dim = b.find(g)->basis.size();
    if (rk[g] + incoming > dim) throw ConsistencyError("boundary ranks exceed the chain dimension");
    out.add(g, static_cast<std::int64_t>(dim - rk[g] - incoming));
  }
  return out;
}

gf2::Matrix induced_map(const Homology& from, Bigrading from_grading, const Homology& to, Bigrading to_grading,
                        const std::function<BasisLabel(BasisLabel)>& label_map) {
  const auto* src = from.block(from_grading);
  const auto* dst = to.block(to_grading);
  const std::size_t rows = dst ? dst->rank() : 0;
  const std::size_t cols = src ? src->rank() : 0;
  gf2::Matrix m(rows, cols);
  if (rows == 0 || cols == 0) return m;
  const auto& src_basis = from.complex().find(from_grading)->basis;
  const auto& dst_basis = to.complex().find(to_grading)->basis;
  const std::size_t dst_dim = dst_basis.size();
  for (std::size_t c = 0; c < cols; ++c) {
    gf2::BitVector image(dst_dim);
    for (const auto i : src->representatives()[c].ones()) {
      const BasisLabel target = label_map(src_basis[i]);
      const auto idx = to.complex().index_of(target);
      if (!idx || *idx >= dst_dim || dst_basis[*idx] != target) throw ConsistencyError("induced map leaves the target block");
      image.flip(*idx);
    }
    const auto coords = dst->coordinates(std::move(image));
    for (const auto r : coords.ones()) m.set(r, c);
  }
  return m;
}

}  // namespace gridhom
