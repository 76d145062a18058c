#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "stx/cotruss.hpp"
#include "stx/grassmann.hpp"

namespace stx {

using PresPtr = std::shared_ptr<const CotrussPresentation>;

PresPtr share(CotrussPresentation p);

// A Lambda_n-valued point of a presentation: one Grassmann image per
// generator.  The constructor takes images for the non-alias generators in
// declaration order, validates parity (and that odd images square to zero),
// and fills in alias images by inversion.
class Point {
 public:
  Point(PresPtr pres, TestAlgebra alg, std::vector<GrassmannElement> images);

  const PresPtr& presentation() const { return pres_; }
  const TestAlgebra& algebra() const { return alg_; }
  const GrassmannElement& image(int gen_idx) const { return images_[gen_idx]; }

  bool operator==(const Point& o) const { return cmp(o) == 0; }
  bool operator!=(const Point& o) const { return cmp(o) != 0; }
  int cmp(const Point& o) const;  // canonical total order within one point set

  std::string to_string() const;  // "(x -> 1 + 2*xi1*xi2, theta -> xi1)"

 private:
  PresPtr pres_;
  TestAlgebra alg_;
  std::vector<GrassmannElement> images_;  // every generator index, aliases filled
};

// Value of a tensor-algebra element under one point per slot (points are even
// maps, so no crossing signs arise).
GrassmannElement eval_at_points(const TensorElement& w, const std::vector<const Point*>& pts);

Point point_mul(const Point& s, const Point& t);
Point point_heap(const Point& s, const Point& t, const Point& u);

// g -> epsilon(g) * 1_A.  Throws MissingMapError when the map is absent.
Point unit_point(const PresPtr& P, const TestAlgebra& A);
Point zero_point(const PresPtr& P, const TestAlgebra& A);

// t +_e u = [t, e, u]  and  -_e t = [e, t, e]  with e the unit point.
Point brace_add(const Point& t, const Point& u);
Point brace_neg(const Point& t);

// Number of points over A (saturating at 2^63) without materializing them.
std::uint64_t point_count(const PresPtr& P, const TestAlgebra& A);

// All points in canonical (sorted) order.  Finite scalar fields only;
// invertible generators range over even images with nonzero scalar part.
std::vector<Point> enumerate_points(const PresPtr& P, const TestAlgebra& A);

// Index of p in the sorted output of enumerate_points, -1 when absent.
int point_index(const std::vector<Point>& sorted, const Point& p);

// Random point with integer-box coefficients (rationals: [-9, 9]); invertible
// generators are resampled until the scalar part is nonzero.
Point sample_point(const PresPtr& P, const TestAlgebra& A, std::mt19937_64& rng);
Point sample_point(const PresPtr& P, const TestAlgebra& A, std::uint64_t seed);

// Homomorphism Lambda_m -> Lambda_n over one scalar field, determined by odd
// images of the source xi's.
class TestAlgebraHom {
 public:
  TestAlgebraHom(TestAlgebra source, TestAlgebra target, std::vector<GrassmannElement> xi_images);

  const TestAlgebra& source() const { return source_; }
  const TestAlgebra& target() const { return target_; }
  const GrassmannElement& xi_image(int i) const { return xi_images_[i]; }  // 0-based

  GrassmannElement apply(const GrassmannElement& a) const;

 private:
  TestAlgebra source_, target_;
  std::vector<GrassmannElement> xi_images_;
};

TestAlgebraHom random_test_algebra_hom(const TestAlgebra& source, const TestAlgebra& target,
                                       std::mt19937_64& rng);

Point pushforward(const TestAlgebraHom& psi, const Point& s);

}  // namespace stx
