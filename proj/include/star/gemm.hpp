#pragma once

#include <Eigen/Core>

#include "star/parallel.hpp"

namespace star {

template <typename S>
using RowMat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
template <typename S>
using Map = Eigen::Map<RowMat<S>>;
template <typename S>
using CMap = Eigen::Map<const RowMat<S>>;

namespace detail {
constexpr std::size_t kGemmGrainRows = 64;
}

// C[M,N] (+)= A[M,K] * B[K,N].  Parallelized over output rows; each element
// is accumulated by a single worker, so results are scheduling-independent.
template <typename S>
void gemm_nn(const S* a, const S* b, S* c, std::size_t m, std::size_t k, std::size_t n,
             bool accumulate) {
  CMap<S> B(b, k, n);
  parallel_for(m, detail::kGemmGrainRows, [&](std::size_t r0, std::size_t r1) {
    CMap<S> A(a + r0 * k, r1 - r0, k);
    Map<S> C(c + r0 * n, r1 - r0, n);
    if (accumulate)
      C.noalias() += A * B;
    else
      C.noalias() = A * B;
  });
}

// C[M,N] (+)= A[M,K] * B[N,K]^T
template <typename S>
void gemm_nt(const S* a, const S* b, S* c, std::size_t m, std::size_t k, std::size_t n,
             bool accumulate) {
  CMap<S> B(b, n, k);
  parallel_for(m, detail::kGemmGrainRows, [&](std::size_t r0, std::size_t r1) {
    CMap<S> A(a + r0 * k, r1 - r0, k);
    Map<S> C(c + r0 * n, r1 - r0, n);
    if (accumulate)
      C.noalias() += A * B.transpose();
    else
      C.noalias() = A * B.transpose();
  });
}

// C[M,N] (+)= A[K,M]^T * B[K,N]
template <typename S>
void gemm_tn(const S* a, const S* b, S* c, std::size_t m, std::size_t k, std::size_t n,
             bool accumulate) {
  CMap<S> A(a, k, m);
  CMap<S> B(b, k, n);
  parallel_for(m, detail::kGemmGrainRows, [&](std::size_t r0, std::size_t r1) {
    Map<S> C(c + r0 * n, r1 - r0, n);
    if (accumulate)
      C.noalias() += A.middleCols(r0, r1 - r0).transpose() * B;
    else
      C.noalias() = A.middleCols(r0, r1 - r0).transpose() * B;
  });
}

// c[N] += column sums of A[M,N]
template <typename S>
void colsum_acc(const S* a, S* c, std::size_t m, std::size_t n) {
  CMap<S> A(a, m, n);
  Map<S> C(c, 1, n);
  C.noalias() += A.colwise().sum();
}

}  // namespace star
