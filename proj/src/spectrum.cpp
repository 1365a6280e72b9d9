#include "specop/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "specop/errors.hpp"

namespace specop {

namespace {

// Groups sorted (value, mult) pairs whose consecutive gap is within tol,
// replacing each group by its multiplicity-weighted mean.
std::vector<std::pair<double, std::size_t>> group(
    std::vector<std::pair<double, std::size_t>> raw, double tol) {
  std::sort(raw.begin(), raw.end());
  std::vector<std::pair<double, std::size_t>> out;
  std::size_t i = 0;
  while (i < raw.size()) {
    double weighted = raw[i].first * static_cast<double>(raw[i].second);
    std::size_t mult = raw[i].second;
    std::size_t j = i + 1;
    while (j < raw.size() && raw[j].first - raw[j - 1].first <= tol) {
      weighted += raw[j].first * static_cast<double>(raw[j].second);
      mult += raw[j].second;
      ++j;
    }
    out.emplace_back(weighted / static_cast<double>(mult), mult);
    i = j;
  }
  return out;
}

}  // namespace

SpectrumWord SpectrumWord::of_values(std::span<const double> values, double tol) {
  SpectrumWord w(tol);
  std::vector<std::pair<double, std::size_t>> raw;
  raw.reserve(values.size());
  for (double v : values) raw.emplace_back(v, 1);
  w.entries_ = group(std::move(raw), tol);
  return w;
}

SpectrumWord SpectrumWord::single(double value, std::size_t mult, double tol) {
  SpectrumWord w(tol);
  if (mult > 0) w.entries_.emplace_back(value, mult);
  return w;
}

std::size_t SpectrumWord::total_multiplicity() const {
  std::size_t n = 0;
  for (const auto& [v, m] : entries_) n += m;
  return n;
}

double SpectrumWord::sum() const {
  double s = 0;
  for (const auto& [v, m] : entries_) s += v * static_cast<double>(m);
  return s;
}

std::size_t SpectrumWord::zero_multiplicity() const {
  for (const auto& [v, m] : entries_)
    if (std::abs(v) <= tol_) return m;
  return 0;
}

SpectrumWord SpectrumWord::times(const SpectrumWord& o) const {
  SpectrumWord w(tol_);
  auto raw = entries_;
  raw.insert(raw.end(), o.entries_.begin(), o.entries_.end());
  w.entries_ = group(std::move(raw), tol_);
  return w;
}

SpectrumWord SpectrumWord::divided_by(double value) const {
  std::size_t best = entries_.size();
  double best_gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const double gap = std::abs(entries_[i].first - value);
    if (gap < best_gap) {
      best_gap = gap;
      best = i;
    }
  }
  if (best == entries_.size() || best_gap > tol_)
    throw MissingFactorError("word has no factor near " + std::to_string(value));
  SpectrumWord w(tol_);
  w.entries_ = entries_;
  if (--w.entries_[best].second == 0)
    w.entries_.erase(w.entries_.begin() + static_cast<std::ptrdiff_t>(best));
  return w;
}

SpectrumWord SpectrumWord::phi_shift(double s) const {
  SpectrumWord base = zero_multiplicity() > 0 ? divided_by(0.0) : *this;
  return base.affine(1.0, s);
}

SpectrumWord SpectrumWord::mu_shift(double q, double s) const {
  return divided_by(q).affine(1.0, s);
}

SpectrumWord SpectrumWord::affine(double scale, double offset) const {
  SpectrumWord w(tol_);
  w.entries_ = entries_;
  for (auto& [v, m] : w.entries_) v = scale * v + offset;
  w.entries_ = group(std::move(w.entries_), tol_);
  return w;
}

std::string SpectrumWord::str() const {
  std::string out;
  char buf[64];
  for (const auto& [v, m] : entries_) {
    const double shown = (v == 0.0) ? 0.0 : v;  // normalize -0
    std::snprintf(buf, sizeof buf, "%.12g", shown);
    if (!out.empty()) out += ' ';
    out += buf;
    if (m > 1) {
      out += '^';
      out += std::to_string(m);
    }
  }
  return out;
}

bool words_match(const SpectrumWord& a, const SpectrumWord& b, double max_dev) {
  return words_deviation(a, b) <= max_dev;
}

double words_deviation(const SpectrumWord& a, const SpectrumWord& b) {
  const auto& ea = a.entries();
  const auto& eb = b.entries();
  if (ea.size() != eb.size())
    return std::numeric_limits<double>::infinity();
  double dev = 0;
  for (std::size_t i = 0; i < ea.size(); ++i) {
    if (ea[i].second != eb[i].second)
      return std::numeric_limits<double>::infinity();
    dev = std::max(dev, std::abs(ea[i].first - eb[i].first));
  }
  return dev;
}

std::vector<double> symmetric_eigenvalues(RealMatrix m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("matrix must be square");
  double norm = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (std::abs(m(i, j) - m(j, i)) > 1e-12)
        throw std::invalid_argument("matrix is not symmetric");
      norm += m(i, j) * m(i, j);
    }
  norm = std::sqrt(norm);
  if (norm == 0.0) return std::vector<double>(n, 0.0);

  const double threshold = 1e-12 * norm;
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += 2 * m(p, q) * m(p, q);
    if (std::sqrt(off) < threshold) {
      std::vector<double> eig(n);
      for (std::size_t i = 0; i < n; ++i) eig[i] = m(i, i);
      std::sort(eig.begin(), eig.end());
      return eig;
    }
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = m(p, q);
        if (apq == 0.0) continue;
        const double theta = (m(q, q) - m(p, p)) / (2 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1));
        const double c = 1.0 / std::sqrt(t * t + 1);
        const double s = t * c;
        for (std::size_t i = 0; i < n; ++i) {
          const double mip = m(i, p);
          const double miq = m(i, q);
          m(i, p) = c * mip - s * miq;
          m(i, q) = s * mip + c * miq;
        }
        for (std::size_t i = 0; i < n; ++i) {
          const double mpi = m(p, i);
          const double mqi = m(q, i);
          m(p, i) = c * mpi - s * mqi;
          m(q, i) = s * mpi + c * mqi;
        }
      }
    }
  }
  throw std::logic_error("Jacobi iteration failed to converge in 100 sweeps");
}

SpectrumWord eig_sym(const RealMatrix& m, double tol) {
  const auto eig = symmetric_eigenvalues(m);
  return SpectrumWord::of_values(eig, tol);
}

SpectrumWord eig_sym(const IntMatrix& m, double tol) {
  return eig_sym(widen(m), tol);
}

std::size_t nullity(const RealMatrix& m, double tol) {
  std::size_t count = 0;
  for (double v : symmetric_eigenvalues(m))
    if (std::abs(v) <= tol) ++count;
  return count;
}

}  // namespace specop
