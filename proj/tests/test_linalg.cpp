#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "curvemul/errors.hpp"
#include "curvemul/linalg.hpp"
#include "support.hpp"

using namespace curvemul;

namespace {

const FieldSpec F2 = FieldSpec::gf2();
const FieldSpec F4 = FieldSpec::gf4();
const FieldSpec F16 = FieldSpec::gf16();

Matrix random_matrix(std::mt19937_64& rng, const FieldSpec& f, std::size_t r, std::size_t c) {
  std::vector<Bits> e(r * c);
  for (auto& v : e) v = static_cast<Bits>(rng() % f.order());
  return Matrix(f, r, c, e);
}

}  // namespace

TEST_CASE("rank") {
  CHECK(rank(Matrix::identity(F2, 3)) == 3);
  CHECK(rank(Matrix(F2, 2, 2)) == 0);
  const Matrix m(F4, 2, 3, {1, 2, 3, 2, 3, 1});  // second row = a * first row
  CHECK(rank(m) == 1);
  const Matrix copy = m;
  rank(m);
  CHECK(m == copy);
}

TEST_CASE("invert") {
  CHECK(invert(Matrix::identity(F16, 4)) == Matrix::identity(F16, 4));
  CHECK(invert(Matrix(F4, 2, 2, {2, 0, 0, 3})) == Matrix(F4, 2, 2, {3, 0, 0, 2}));
  const Matrix u(F2, 2, 2, {1, 1, 0, 1});
  CHECK(invert(u) == u);
  CHECK(mat_mul(u, u) == Matrix::identity(F2, 2));
  CHECK_THROWS_AS(invert(Matrix(F2, 2, 2, {1, 1, 1, 1})), SetupError);
  CHECK_THROWS_AS(invert(Matrix(F2, 2, 3)), UsageError);
}

TEST_CASE("invert round trip on random invertible matrices") {
  std::mt19937_64 rng(5);
  for (const FieldSpec& f : {F2, F4, F16}) {
    int done = 0;
    while (done < 30) {
      const std::size_t n = 1 + rng() % 12;
      const Matrix m = random_matrix(rng, f, n, n);
      if (rank(m) != n) continue;
      const Matrix inv = invert(m);
      CHECK(mat_mul(m, inv) == Matrix::identity(f, n));
      CHECK(mat_mul(inv, m) == Matrix::identity(f, n));
      ++done;
    }
  }
}

TEST_CASE("rank is invariant under row swaps and row additions") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    const FieldSpec f = trial % 2 ? F16 : F2;
    const std::size_t r = 2 + rng() % 7, c = 1 + rng() % 8;
    // low-rank products make the test meaningful
    const std::size_t inner = 1 + rng() % 5;
    const Matrix m = mat_mul(random_matrix(rng, f, r, inner), random_matrix(rng, f, inner, c));
    const std::size_t rk = rank(m);
    std::vector<Bits> e(m.entries().begin(), m.entries().end());
    for (int step = 0; step < 10; ++step) {
      const std::size_t i = rng() % r, j = rng() % r;
      if (rng() % 2) {
        for (std::size_t k = 0; k < c; ++k) std::swap(e[i * c + k], e[j * c + k]);
      } else if (i != j) {
        const Bits s = static_cast<Bits>(rng() % f.order());
        for (std::size_t k = 0; k < c; ++k) e[i * c + k] ^= f.mul(s, e[j * c + k]);
      }
    }
    CHECK(rank(Matrix(f, r, c, e)) == rk);
  }
}

TEST_CASE("mat_vec counting") {
  CountingContext ctx;
  const std::vector<Bits> v = {1, 0, 3};
  CHECK(mat_vec(Matrix::identity(F4, 3), v, ctx, false) == v);
  CHECK(ctx.scalar_mults == 9);

  CountingContext z;
  CHECK(mat_vec(Matrix::identity(F4, 3), std::vector<Bits>{0, 0, 0}, z, true) == std::vector<Bits>{0, 0, 0});
  CHECK(z.scalar_mults == 0);

  CountingContext s;
  mat_vec(Matrix::identity(F4, 3), v, s, true);
  CHECK(s.scalar_mults == 6);

  CHECK_THROWS_AS(mat_vec(Matrix::identity(F4, 3), std::vector<Bits>{1}, s, false), UsageError);
}

TEST_CASE("mat_vec skip_zero count equals rows times nonzeros") {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 100; ++i) {
    const Matrix m = random_matrix(rng, F16, 1 + rng() % 10, 1 + rng() % 10);
    std::vector<Bits> v(m.cols());
    std::size_t nz = 0;
    for (auto& x : v) {
      x = rng() % 3 == 0 ? 0 : static_cast<Bits>(rng() % 16);
      nz += x != 0;
    }
    CountingContext a, b;
    CHECK(mat_vec(m, v, a, true) == mat_vec(m, v, b, false));
    CHECK(a.scalar_mults == m.rows() * nz);
    CHECK(b.scalar_mults == m.rows() * m.cols());
  }
}

TEST_CASE("mat_vec_partial") {
  std::mt19937_64 rng(4);
  const Matrix m = random_matrix(rng, F16, 6, 5);
  const auto v = random_element(rng, F16, 5);
  CountingContext a, b, c;
  CHECK(mat_vec_partial(m, v, 6, a) == mat_vec(m, v, b, false));
  CHECK(a.scalar_mults == b.scalar_mults);
  CHECK(mat_vec_partial(m, v, 0, c).empty());
  CHECK(c.scalar_mults == 0);
  CHECK_THROWS_AS(mat_vec_partial(m, v, 7, c), UsageError);
}

TEST_CASE("instance matrices") {
  const CompiledInstance f4 = compile(load_instance(testing::instance_path("f4_5")));
  CHECK(rank(f4.T) == 11);

  const CompiledInstance f16 = compile(load_instance(testing::instance_path("f16_13")));
  std::vector<Bits> x(13);
  for (std::size_t i = 0; i < 13; ++i) x[i] = static_cast<Bits>(1 + i % 15);
  CountingContext ctx;
  mat_vec(f16.T, embed_x(x, 13, 2), ctx, true);
  CHECK(ctx.scalar_mults == 27 * 13);

  const CompiledInstance f2 = compile(load_instance(testing::instance_path("f2_5")));
  CountingContext p;
  mat_vec_partial(invert(f2.T), std::vector<Bits>(11, 1), 9, p);
  CHECK(p.scalar_mults == 99);
}
