#pragma once

#include <array>
#include <queue>
#include <vector>

#include "kasym/errors.hpp"
#include "kasym/numeric/scalar.hpp"

namespace kasym::numeric {

/// 15-point Kronrod rule extending the 7-point Gauss rule on [-1, 1].
/// x[0..7] are the non-negative nodes in decreasing order (x[7] = 0); the
/// Gauss nodes are x[1], x[3], x[5], x[7] with weights wg[0..3].
template <class T>
struct GaussKronrod15 {
    std::array<T, 8> x;
    std::array<T, 8> wk;
    std::array<T, 4> wg;
};

template <class T>
const GaussKronrod15<T>& gauss_kronrod15();

template <class T>
struct QuadratureResult {
    Complex<T> value;
    T error;
    int intervals;
};

template <class T>
struct Segment {
    T a, b;
    Complex<T> value;
    T error;
    bool operator<(const Segment& o) const { return error < o.error; }
};

template <class T, class F>
Segment<T> gk15_segment(F& f, const T& a, const T& b) {
    const auto& rule = gauss_kronrod15<T>();
    const T c = (a + b) / T(2);
    const T h = (b - a) / T(2);
    const Complex<T> fc = f(c);
    Complex<T> kron = fc * rule.wk[7];
    Complex<T> gauss = fc * rule.wg[3];
    for (int j = 0; j < 7; ++j) {
        const T dx = h * rule.x[static_cast<std::size_t>(j)];
        const Complex<T> s = f(c - dx) + f(c + dx);
        kron += s * rule.wk[static_cast<std::size_t>(j)];
        if (j % 2 == 1) gauss += s * rule.wg[static_cast<std::size_t>(j / 2)];
    }
    Segment<T> seg{a, b, kron * h, T(0)};
    seg.error = cabs(Complex<T>((kron - gauss) * h));
    return seg;
}

/// Globally adaptive Gauss-Kronrod on [a, b]. Stops when the summed error
/// estimate is below max(rel_tol*|I|, abs_tol).
template <class T, class F>
QuadratureResult<T> integrate_adaptive(F&& f, const T& a, const T& b, const T& rel_tol, const T& abs_tol,
                                       int max_intervals = 2000) {
    std::priority_queue<Segment<T>> heap;
    heap.push(gk15_segment(f, a, b));
    Complex<T> total = heap.top().value;
    T err = heap.top().error;
    int count = 1;
    while (true) {
        const T target = rel_tol * cabs(total) > abs_tol ? rel_tol * cabs(total) : abs_tol;
        if (err <= target) break;
        if (count >= max_intervals) {
            throw QuadratureError("adaptive quadrature did not converge within " + std::to_string(max_intervals) +
                                  " intervals");
        }
        Segment<T> worst = heap.top();
        heap.pop();
        const T mid = (worst.a + worst.b) / T(2);
        Segment<T> left = gk15_segment(f, worst.a, mid);
        Segment<T> right = gk15_segment(f, mid, worst.b);
        total += left.value + right.value - worst.value;
        err += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        ++count;
        if (count % 64 == 0) {
            // re-sum to shed accumulated rounding in the running totals
            std::priority_queue<Segment<T>> copy = heap;
            total = Complex<T>();
            err = T(0);
            while (!copy.empty()) {
                total += copy.top().value;
                err += copy.top().error;
                copy.pop();
            }
        }
    }
    std::priority_queue<Segment<T>> copy = heap;
    Complex<T> sum;
    T esum(0);
    while (!copy.empty()) {
        sum += copy.top().value;
        esum += copy.top().error;
        copy.pop();
    }
    return {sum, esum, count};
}

}  // namespace kasym::numeric
