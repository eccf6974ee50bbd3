#include "alphaconv/domain.hpp"

#include "alphaconv/errors.hpp"

namespace alphaconv {

namespace {

// 2^24 grid points is far beyond desk scale already.
constexpr std::size_t kMaxGridPoints = std::size_t{1} << 24;

}  // namespace

BoxDomain::BoxDomain(Point lo, Point hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_.dim() == 0) throw DomainError("box must have dimension >= 1");
  if (lo_.dim() != hi_.dim()) throw DomainError("box corners differ in dimension");
  if (lo_.mode() != hi_.mode()) throw ModeError("box corners mix scalar modes");
  for (std::size_t i = 0; i < lo_.dim(); ++i)
    if (!(lo_[i] < hi_[i]))
      throw DomainError("box needs lo < hi on axis " + std::to_string(i));
}

bool BoxDomain::contains(const Point& x) const {
  if (x.dim() != dim()) return false;
  for (std::size_t i = 0; i < dim(); ++i)
    if (!(lo_[i] < x[i] && x[i] < hi_[i])) return false;
  return true;
}

void BoxDomain::require_contains(const Point& x) const {
  if (!contains(x)) throw DomainError("point " + x.to_string() + " lies outside the open box");
}

std::pair<Point, Point> BoxDomain::difference_bound() const {
  return {lo_ - hi_, hi_ - lo_};
}

BoxDomain BoxDomain::half_difference() const {
  const Scalar two = Scalar::integer(2, mode());
  return BoxDomain((lo_ - hi_) / two, (hi_ - lo_) / two);
}

std::vector<Point> sample_domain(const BoxDomain& dom, std::size_t n_per_axis) {
  if (n_per_axis < 2) throw DomainError("sample_domain needs n_per_axis >= 2");
  std::size_t total = 1;
  for (std::size_t i = 0; i < dom.dim(); ++i) {
    if (total > kMaxGridPoints / n_per_axis) throw DomainError("grid budget exceeded");
    total *= n_per_axis;
  }

  const Mode mode = dom.mode();
  const Scalar n = Scalar::integer(static_cast<long>(n_per_axis), mode);
  const Scalar two = Scalar::integer(2, mode);
  std::vector<std::vector<Scalar>> axes(dom.dim());
  for (std::size_t a = 0; a < dom.dim(); ++a) {
    const Scalar cell = (dom.hi()[a] - dom.lo()[a]) / n;
    for (std::size_t k = 0; k < n_per_axis; ++k) {
      const Scalar offset = Scalar::integer(static_cast<long>(2 * k + 1), mode) / two;
      axes[a].push_back(dom.lo()[a] + offset * cell);
    }
  }

  std::vector<Point> out;
  out.reserve(total);
  std::vector<std::size_t> idx(dom.dim(), 0);
  for (std::size_t count = 0; count < total; ++count) {
    std::vector<Scalar> coords;
    coords.reserve(dom.dim());
    for (std::size_t a = 0; a < dom.dim(); ++a) coords.push_back(axes[a][idx[a]]);
    out.emplace_back(std::move(coords));
    for (std::size_t a = dom.dim(); a-- > 0;) {
      if (++idx[a] < n_per_axis) break;
      idx[a] = 0;
    }
  }
  return out;
}

}  // namespace alphaconv
