#include "stx/points.hpp"

#include <algorithm>

#include "stx/hom.hpp"

namespace stx {

PresPtr share(CotrussPresentation p) {
  return std::make_shared<const CotrussPresentation>(std::move(p));
}

namespace {

int non_alias_count(const GeneratorSet& gens) {
  int n = 0;
  for (int i = 0; i < gens.count(); ++i)
    if (!gens.gen(i).is_alias()) ++n;
  return n;
}

}  // namespace

Point::Point(PresPtr pres, TestAlgebra alg, std::vector<GrassmannElement> images)
    : pres_(std::move(pres)), alg_(std::move(alg)) {
  const GeneratorSet& gens = *pres_->gens;
  if (alg_.field != pres_->field)
    throw UsageError("point algebra field differs from the presentation field");
  if (static_cast<int>(images.size()) != non_alias_count(gens))
    throw UsageError("point needs one image per non-alias generator");
  images_.assign(gens.count(), GrassmannElement::zero(alg_));
  size_t next = 0;
  for (int i = 0; i < gens.count(); ++i) {
    if (gens.gen(i).is_alias()) continue;
    GrassmannElement img = std::move(images[next++]);
    if (img.algebra() != alg_) throw UsageError("point image lives in the wrong test algebra");
    int par = img.homogeneous_parity();
    if (gens.gen(i).odd) {
      if (!img.is_zero() && par != 1)
        throw InputError("image of odd generator " + gens.gen(i).name + " is not odd");
      if (!(img * img).is_zero())
        throw InputError("image of odd generator " + gens.gen(i).name + " does not square to zero");
    } else if (par != 0) {
      throw InputError("image of even generator " + gens.gen(i).name + " is not even");
    }
    images_[i] = std::move(img);
  }
  for (int i = 0; i < gens.count(); ++i) {
    if (!gens.gen(i).is_alias()) continue;
    const GrassmannElement& primary = images_[gens.gen(i).inverse_of];
    if (primary.body().is_zero())
      throw NotInvertibleError("image of invertible generator " +
                               gens.gen(gens.gen(i).inverse_of).name + " has zero scalar part");
    images_[i] = primary.inverse();
  }
}

int Point::cmp(const Point& o) const {
  const GeneratorSet& gens = *pres_->gens;
  for (int i = 0; i < gens.count(); ++i) {
    if (gens.gen(i).is_alias()) continue;
    if (int c = images_[i].cmp(o.images_[i])) return c;
  }
  return 0;
}

std::string Point::to_string() const {
  const GeneratorSet& gens = *pres_->gens;
  std::string out = "(";
  bool first = true;
  for (int i = 0; i < gens.count(); ++i) {
    if (gens.gen(i).is_alias()) continue;
    if (!first) out += ", ";
    first = false;
    out += gens.gen(i).name + " -> " + images_[i].to_string();
  }
  return out + ")";
}

namespace {

GrassmannElement eval_monomial(const SuperMonomial& m, const Point& p) {
  const GeneratorSet& gens = *p.presentation()->gens;
  GrassmannElement acc = GrassmannElement::one(p.algebra());
  for (int slot = 0; slot < gens.even_slots(); ++slot) {
    int e = m.even_exponents[slot];
    if (e == 0) continue;
    int gi = gens.slot_gen(slot);
    if (e < 0) {
      gi = gens.gen(gi).inverse_alias;
      e = -e;
    }
    const GrassmannElement& base = p.image(gi);
    for (int k = 0; k < e; ++k) acc = acc * base;
  }
  for (int pos : m.odd_support) acc = acc * p.image(gens.odd_gen(pos));
  return acc;
}

void require_same_context(const Point& a, const Point& b) {
  if (a.presentation()->gens != b.presentation()->gens &&
      !a.presentation()->gens->same_as(*b.presentation()->gens))
    throw UsageError("points belong to different presentations");
  if (a.algebra() != b.algebra()) throw UsageError("points live over different test algebras");
}

Point eval_hom_at(const GenHom& h, const std::vector<const Point*>& pts) {
  const Point& lead = *pts.front();
  const GeneratorSet& gens = *lead.presentation()->gens;
  std::vector<GrassmannElement> imgs;
  for (int i = 0; i < gens.count(); ++i) {
    if (gens.gen(i).is_alias()) continue;
    imgs.push_back(eval_at_points(h.image(i), pts));
  }
  return Point(lead.presentation(), lead.algebra(), std::move(imgs));
}

Point scalar_map_point(const PresPtr& P, const TestAlgebra& A, const GenHom& eps) {
  const GeneratorSet& gens = *P->gens;
  std::vector<GrassmannElement> imgs;
  for (int i = 0; i < gens.count(); ++i) {
    if (gens.gen(i).is_alias()) continue;
    Scalar c = eps.eval_scalar(SuperPoly::of_generator(P->gens, P->field, i));
    imgs.push_back(GrassmannElement::constant(A, c));
  }
  return Point(P, A, std::move(imgs));
}

}  // namespace

GrassmannElement eval_at_points(const TensorElement& w, const std::vector<const Point*>& pts) {
  if (static_cast<int>(pts.size()) != w.arity())
    throw UsageError("eval_at_points needs one point per tensor slot");
  const TestAlgebra& A = pts.front()->algebra();
  GrassmannElement out = GrassmannElement::zero(A);
  for (const auto& [mono, coeff] : w.terms()) {
    GrassmannElement term = GrassmannElement::constant(A, coeff);
    for (size_t k = 0; k < mono.factors.size(); ++k)
      term = term * eval_monomial(mono.factors[k], *pts[k]);
    out = out + term;
  }
  return out;
}

Point point_mul(const Point& s, const Point& t) {
  require_same_context(s, t);
  return eval_hom_at(s.presentation()->delta2, {&s, &t});
}

Point point_heap(const Point& s, const Point& t, const Point& u) {
  require_same_context(s, t);
  require_same_context(s, u);
  return eval_hom_at(s.presentation()->delta3, {&s, &t, &u});
}

Point unit_point(const PresPtr& P, const TestAlgebra& A) {
  if (!P->counit) throw MissingMapError("presentation " + P->name + " has no counit");
  return scalar_map_point(P, A, *P->counit);
}

Point zero_point(const PresPtr& P, const TestAlgebra& A) {
  if (!P->cozero) throw MissingMapError("presentation " + P->name + " has no cozero");
  return scalar_map_point(P, A, *P->cozero);
}

Point brace_add(const Point& t, const Point& u) {
  Point e = unit_point(t.presentation(), t.algebra());
  return point_heap(t, e, u);
}

Point brace_neg(const Point& t) {
  Point e = unit_point(t.presentation(), t.algebra());
  return point_heap(e, t, e);
}

namespace {

constexpr std::uint64_t kEnumerateLimit = 1ull << 22;

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 w = static_cast<unsigned __int128>(a) * b;
  constexpr std::uint64_t cap = 1ull << 63;
  return w > cap ? cap : static_cast<std::uint64_t>(w);
}

// Per-generator count of admissible images over A.
std::uint64_t image_count(const Generator& g, const TestAlgebra& A) {
  std::uint64_t p = A.field.modulus();
  if (g.odd) return span_count(A, odd_basis_masks(A.odd_dim).size());
  std::uint64_t evens = span_count(A, even_basis_masks(A.odd_dim).size());
  if (!g.invertible()) return evens;
  // nonzero scalar part: (p-1) * p^(even_dim - 1)
  return evens / p * (p - 1);
}

}  // namespace

std::uint64_t point_count(const PresPtr& P, const TestAlgebra& A) {
  if (!A.field.is_prime_field())
    throw InfiniteBaseError("point enumeration needs a finite scalar field, not QQ");
  const GeneratorSet& gens = *P->gens;
  std::uint64_t total = 1;
  for (int i = 0; i < gens.count(); ++i) {
    if (gens.gen(i).is_alias()) continue;
    total = sat_mul(total, image_count(gens.gen(i), A));
  }
  return total;
}

std::vector<Point> enumerate_points(const PresPtr& P, const TestAlgebra& A) {
  std::uint64_t expected = point_count(P, A);
  if (expected > kEnumerateLimit)
    throw BudgetError("point set of size " + std::to_string(expected) +
                      " exceeds the enumeration limit " + std::to_string(kEnumerateLimit));
  const GeneratorSet& gens = *P->gens;

  std::vector<std::vector<GrassmannElement>> candidates;
  for (int i = 0; i < gens.count(); ++i) {
    const Generator& g = gens.gen(i);
    if (g.is_alias()) continue;
    std::vector<GrassmannElement> opts =
        enumerate_span(A, g.odd ? odd_basis_masks(A.odd_dim) : even_basis_masks(A.odd_dim));
    if (g.invertible())
      std::erase_if(opts, [](const GrassmannElement& e) { return e.body().is_zero(); });
    candidates.push_back(std::move(opts));
  }

  std::vector<Point> out;
  out.reserve(expected);
  std::vector<size_t> digit(candidates.size(), 0);
  for (;;) {
    std::vector<GrassmannElement> imgs;
    imgs.reserve(candidates.size());
    for (size_t k = 0; k < candidates.size(); ++k) imgs.push_back(candidates[k][digit[k]]);
    out.emplace_back(P, A, std::move(imgs));
    // odometer, last generator fastest
    size_t k = candidates.size();
    while (k > 0) {
      --k;
      if (++digit[k] < candidates[k].size()) break;
      digit[k] = 0;
      if (k == 0) {
        std::sort(out.begin(), out.end(), [](const Point& a, const Point& b) { return a.cmp(b) < 0; });
        return out;
      }
    }
    if (candidates.empty()) {  // single point, no digits to advance
      return out;
    }
  }
}

int point_index(const std::vector<Point>& sorted, const Point& p) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), p,
                             [](const Point& a, const Point& b) { return a.cmp(b) < 0; });
  if (it == sorted.end() || !(*it == p)) return -1;
  return static_cast<int>(it - sorted.begin());
}

namespace {

Scalar draw_coefficient(const Field& f, std::mt19937_64& rng) {
  if (f.is_prime_field()) return Scalar::of(f, static_cast<long long>(rng() % f.modulus()));
  return Scalar::of(f, static_cast<long long>(rng() % 19) - 9);
}

GrassmannElement draw_span_element(const TestAlgebra& A, const std::vector<std::uint64_t>& basis,
                                   std::mt19937_64& rng) {
  GrassmannElement e = GrassmannElement::zero(A);
  for (std::uint64_t mask : basis) e.add_term(mask, draw_coefficient(A.field, rng));
  return e;
}

}  // namespace

Point sample_point(const PresPtr& P, const TestAlgebra& A, std::mt19937_64& rng) {
  const GeneratorSet& gens = *P->gens;
  std::vector<GrassmannElement> imgs;
  for (int i = 0; i < gens.count(); ++i) {
    const Generator& g = gens.gen(i);
    if (g.is_alias()) continue;
    const auto basis = g.odd ? odd_basis_masks(A.odd_dim) : even_basis_masks(A.odd_dim);
    GrassmannElement img = draw_span_element(A, basis, rng);
    while (g.invertible() && img.body().is_zero()) img = draw_span_element(A, basis, rng);
    imgs.push_back(std::move(img));
  }
  return Point(P, A, std::move(imgs));
}

Point sample_point(const PresPtr& P, const TestAlgebra& A, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return sample_point(P, A, rng);
}

TestAlgebraHom::TestAlgebraHom(TestAlgebra source, TestAlgebra target,
                               std::vector<GrassmannElement> xi_images)
    : source_(std::move(source)), target_(std::move(target)), xi_images_(std::move(xi_images)) {
  if (source_.field != target_.field)
    throw UsageError("test-algebra homomorphism must preserve the scalar field");
  if (static_cast<int>(xi_images_.size()) != source_.odd_dim)
    throw UsageError("test-algebra homomorphism needs one image per source xi");
  for (const GrassmannElement& img : xi_images_) {
    if (img.algebra() != target_) throw UsageError("xi image lives in the wrong target algebra");
    if (!img.is_zero() && img.homogeneous_parity() != 1)
      throw InputError("xi image is not odd");
  }
}

GrassmannElement TestAlgebraHom::apply(const GrassmannElement& a) const {
  if (a.algebra() != source_) throw UsageError("element is not in the hom's source algebra");
  GrassmannElement out = GrassmannElement::zero(target_);
  for (const auto& [mask, coeff] : a.terms()) {
    GrassmannElement term = GrassmannElement::constant(target_, coeff);
    for (int i = 0; i < source_.odd_dim && !term.is_zero(); ++i)
      if (mask >> i & 1) term = term * xi_images_[i];
    out = out + term;
  }
  return out;
}

TestAlgebraHom random_test_algebra_hom(const TestAlgebra& source, const TestAlgebra& target,
                                       std::mt19937_64& rng) {
  std::vector<GrassmannElement> imgs;
  const auto basis = odd_basis_masks(target.odd_dim);
  for (int i = 0; i < source.odd_dim; ++i) imgs.push_back(draw_span_element(target, basis, rng));
  return TestAlgebraHom(source, target, std::move(imgs));
}

Point pushforward(const TestAlgebraHom& psi, const Point& s) {
  if (s.algebra() != psi.source()) throw UsageError("point does not live over the hom's source");
  const GeneratorSet& gens = *s.presentation()->gens;
  std::vector<GrassmannElement> imgs;
  for (int i = 0; i < gens.count(); ++i) {
    if (gens.gen(i).is_alias()) continue;
    imgs.push_back(psi.apply(s.image(i)));
  }
  return Point(s.presentation(), psi.target(), std::move(imgs));
}

}  // namespace stx
