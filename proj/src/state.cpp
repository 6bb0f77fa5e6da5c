#include "tilted_ising/state.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace tilted_ising {

PureState::PureState(int L_, Eigen::VectorXcd amps) : L(L_), amplitudes(std::move(amps)) {
  if (L < 1) throw std::invalid_argument("PureState: L must be >= 1");
  if (amplitudes.size() != static_cast<Eigen::Index>(std::size_t{1} << L))
    throw std::invalid_argument("PureState: amplitude vector must have dimension 2^L");
}

PureState PureState::basis_state(int L, std::size_t index) {
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(std::size_t{1} << L);
  if (index >= static_cast<std::size_t>(amps.size()))
    throw std::invalid_argument("basis_state: index out of range");
  amps[index] = 1.0;
  return PureState(L, std::move(amps));
}

void PureState::normalize() {
  double n = norm();
  if (n == 0.0) throw std::invalid_argument("normalize: zero state");
  amplitudes /= n;
}

SiteSubset SiteSubset::range(int first, int last) {
  SiteSubset s;
  for (int i = first; i <= last; ++i) s.sites.push_back(i);
  return s;
}

void SiteSubset::validate(int L) const {
  if (sites.empty()) throw std::invalid_argument("SiteSubset: empty subset");
  int prev = 0;
  for (int s : sites) {
    if (s < 1 || s > L) throw std::invalid_argument("SiteSubset: site index out of [1, L]");
    if (s <= prev) throw std::invalid_argument("SiteSubset: indices must be strictly increasing");
    prev = s;
  }
}

std::size_t basis_index(const std::vector<int>& spin_string) {
  std::size_t k = 0;
  for (int b : spin_string) {
    if (b != 0 && b != 1) throw std::invalid_argument("basis_index: bits must be 0 or 1");
    k = (k << 1) | static_cast<std::size_t>(b);
  }
  return k;
}

std::size_t reverse_bits(std::size_t k, int L) {
  std::size_t r = 0;
  for (int i = 0; i < L; ++i) {
    r = (r << 1) | ((k >> i) & 1u);
  }
  return r;
}

PureState bit_reverse_state(const PureState& psi) {
  Eigen::VectorXcd out(psi.amplitudes.size());
  for (std::size_t k = 0; k < psi.dim(); ++k) {
    out[reverse_bits(k, psi.L)] = psi.amplitudes[k];
  }
  return PureState(psi.L, std::move(out));
}

namespace {

// Scatter table: word w over the subset's own bits -> bits placed at the
// subset's positions inside the full index.
std::vector<std::size_t> scatter_table(const std::vector<int>& sites, int L) {
  const std::size_t m = sites.size();
  std::vector<std::size_t> table(std::size_t{1} << m, 0);
  for (std::size_t w = 0; w < table.size(); ++w) {
    std::size_t k = 0;
    for (std::size_t j = 0; j < m; ++j) {
      if ((w >> (m - 1 - j)) & 1u) k |= std::size_t{1} << (L - sites[j]);
    }
    table[w] = k;
  }
  return table;
}

}  // namespace

ReducedDensityMatrix partial_trace(const PureState& psi, const SiteSubset& keep) {
  keep.validate(psi.L);
  std::vector<int> traced;
  traced.reserve(psi.L - keep.size());
  for (int s = 1; s <= psi.L; ++s) {
    if (!std::binary_search(keep.sites.begin(), keep.sites.end(), s)) traced.push_back(s);
  }
  const auto amap = scatter_table(keep.sites, psi.L);
  const auto emap = scatter_table(traced, psi.L);
  const std::size_t dA = amap.size(), dE = emap.size();

  Eigen::MatrixXcd M(dA, dE);
  for (std::size_t e = 0; e < dE; ++e) {
    const std::size_t base = emap[e];
    for (std::size_t a = 0; a < dA; ++a) {
      M(a, e) = psi.amplitudes[amap[a] | base];
    }
  }
  ReducedDensityMatrix rho;
  rho.sites = keep;
  rho.matrix = M * M.adjoint();
  return rho;
}

ReducedDensityMatrix partial_trace_pair(const PureState& psi, int i, int j) {
  if (i == j) throw std::invalid_argument("partial_trace_pair: sites must differ");
  if (i > j) std::swap(i, j);
  return partial_trace(psi, SiteSubset{i, j});
}

PureState random_state(int L, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  Eigen::VectorXcd amps(std::size_t{1} << L);
  for (Eigen::Index k = 0; k < amps.size(); ++k) {
    double re = gauss(rng);
    double im = gauss(rng);
    amps[k] = Complex(re, im);
  }
  PureState psi(L, std::move(amps));
  psi.normalize();
  return psi;
}

}  // namespace tilted_ising
