#pragma once

#include <cstdint>
#include <vector>

namespace consign::kernels {

// Production kernels, OpenMP-parallel. All floating-point reductions use a
// fixed block structure so results are bit-identical for any thread count.
// Serial textbook twins live in consign::reference for tests and benchmarks.

void set_threads(int n);  // 0 restores the hardware default
int threads();

// column means of a row-major rows x cols matrix
void column_means(const double* m, int rows, int cols, double* mu);

// gram[i*rows+j] = <row_i - mu, row_j - mu>
void gram_centered(const double* m, int rows, int cols, const double* mu, double* gram);

// u[c] = inv_sigma * sum_r q[r] * (m[r*cols+c] - mu[c])
void lift_component(const double* m, int rows, int cols, const double* mu, const double* q,
                    double inv_sigma, double* u);

// sigma[c] = mu[c] + sum_k c_k * basis[k*d+c]
void reconstruct(const double* mu, const double* basis, const double* coeff, int k, int d,
                 double* sigma);

// per-pixel argmax over L scores, lowest index wins ties
void argmax_labels(const double* sigma, int pixels, int labels, uint8_t* out);

// num[l] = #{p: ref[p]==l && other[p]==l}, den[l] = #{p: ref[p]==l}
void agreement_counts(const uint8_t* ref, const uint8_t* other, int pixels, int labels,
                      int64_t* num, int64_t* den);

// Gradient of the tempered-softmax surrogate loss with respect to the basis
// coefficients. `den` are the per-label reference pixel counts, `n_present`
// the number of labels occurring in ref.
void surrogate_gradient(const double* sigma, const uint8_t* ref, const int64_t* den, int pixels,
                        int labels, const double* basis, int k, double tau, int n_present,
                        double* grad);

// deterministic blocked dot product
double dot_blocked(const double* a, const double* b, size_t n);

}  // namespace consign::kernels

namespace consign::reference {

// Serial reference implementations, kept intentionally naive. Tests compare
// them against the OpenMP kernels; the benchmark times both.

void column_means(const double* m, int rows, int cols, double* mu);
void gram_centered(const double* m, int rows, int cols, const double* mu, double* gram);
void lift_component(const double* m, int rows, int cols, const double* mu, const double* q,
                    double inv_sigma, double* u);
void reconstruct(const double* mu, const double* basis, const double* coeff, int k, int d,
                 double* sigma);
void argmax_labels(const double* sigma, int pixels, int labels, uint8_t* out);
void agreement_counts(const uint8_t* ref, const uint8_t* other, int pixels, int labels,
                      int64_t* num, int64_t* den);
void surrogate_gradient(const double* sigma, const uint8_t* ref, const int64_t* den, int pixels,
                        int labels, const double* basis, int k, double tau, int n_present,
                        double* grad);
double dot(const double* a, const double* b, size_t n);

}  // namespace consign::reference
