#include "mrt/perm/perm.hpp"

#include <numeric>
#include <sstream>

#include "mrt/util/error.hpp"

namespace mrt::perm {

Perm::Perm(std::size_t n) : img_(n) { std::iota(img_.begin(), img_.end(), 0); }

Perm Perm::from_images0(std::vector<std::uint32_t> images) {
  std::vector<bool> seen(images.size(), false);
  for (auto v : images) {
    if (v >= images.size() || seen[v]) throw math_error("Perm: image list is not a bijection");
    seen[v] = true;
  }
  Perm p;
  p.img_ = std::move(images);
  return p;
}

Perm Perm::from_images1(const std::vector<std::uint32_t>& images) {
  std::vector<std::uint32_t> zero;
  zero.reserve(images.size());
  for (auto v : images) {
    if (v == 0) throw math_error("Perm: 1-based image 0");
    zero.push_back(v - 1);
  }
  return from_images0(std::move(zero));
}

Perm Perm::from_cycles(std::size_t n, const std::vector<std::vector<std::uint32_t>>& cycles) {
  Perm p(n);
  for (const auto& cyc : cycles)
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      if (cyc[i] >= n) throw math_error("Perm: cycle point out of range");
      p.img_[cyc[i]] = cyc[(i + 1) % cyc.size()];
    }
  // re-validate
  return from_images0(p.img_);
}

Perm Perm::operator*(const Perm& o) const {
  if (degree() != o.degree()) throw math_error("Perm: degree mismatch");
  Perm r;
  r.img_.resize(degree());
  for (std::size_t i = 0; i < degree(); ++i) r.img_[i] = o.img_[img_[i]];
  return r;
}

Perm Perm::inverse() const {
  Perm r;
  r.img_.resize(degree());
  for (std::size_t i = 0; i < degree(); ++i) r.img_[img_[i]] = std::uint32_t(i);
  return r;
}

Perm Perm::conjugated_by(const Perm& t) const { return t.inverse() * (*this * t); }

std::uint64_t Perm::order() const {
  std::vector<bool> seen(degree(), false);
  std::uint64_t ord = 1;
  for (std::size_t i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    std::uint32_t x = std::uint32_t(i);
    do {
      seen[x] = true;
      x = img_[x];
      ++len;
    } while (x != i);
    ord = std::lcm(ord, len);
  }
  return ord;
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < degree(); ++i)
    if (img_[i] != i) return false;
  return true;
}

std::size_t Perm::fixed_points() const {
  std::size_t n = 0;
  for (std::size_t i = 0; i < degree(); ++i)
    if (img_[i] == i) ++n;
  return n;
}

std::string Perm::to_cycle_string() const {
  std::ostringstream os;
  std::vector<bool> seen(degree(), false);
  bool any = false;
  for (std::size_t i = 0; i < degree(); ++i) {
    if (seen[i] || img_[i] == i) continue;
    any = true;
    os << '(';
    std::uint32_t x = std::uint32_t(i);
    bool first = true;
    do {
      if (!first) os << ' ';
      os << x + 1;
      first = false;
      seen[x] = true;
      x = img_[x];
    } while (x != i);
    os << ')';
  }
  if (!any) return "()";
  return os.str();
}

}  // namespace mrt::perm
