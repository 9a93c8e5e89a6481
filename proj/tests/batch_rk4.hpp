#pragma once

// Lane-batched RK4 for the moment ODE, used by the acceptance oracle run.
// Eight independent grid points advance per step in structure-of-arrays
// layout; every statement is an elementwise lane loop, so the whole step
// vectorizes without shuffles. States are stored as the 21-entry lower
// triangle of the symmetric covariance. Algebra identical to
// optobec::integrate_moments; cross-checked against it in the acceptance
// binary before use.

#include <array>

#include "optobec/dynamics.hpp"
#include "optobec/steadystate.hpp"

namespace optobec::batch {

constexpr int lanes = 8;

// triangle index of (i, j)
constexpr int tri(int i, int j) {
    const int a = i < j ? i : j;
    const int b = i < j ? j : i;
    return a * 6 - a * (a - 1) / 2 + (b - a);
}

struct BatchState {
    alignas(64) double v[21 * lanes];
};

struct BatchRk4 {
    alignas(64) double wm[lanes], gm[lanes], om[lanes], ga[lanes];
    alignas(64) double kap[lanes], del[lanes], cm[lanes], ca[lanes];
    alignas(64) double d1[lanes], d4[lanes], d5[lanes];
    alignas(64) double h[lanes], h2[lanes], h6[lanes];

    void set_lane(int l, const DriftMatrix& m, const DiffusionMatrix& d, double step) {
        wm[l] = m.omega_m; gm[l] = m.gamma_m; om[l] = m.atom_freq; ga[l] = m.gamma_a;
        kap[l] = m.kappa; del[l] = m.delta; cm[l] = m.chi_mc; ca[l] = m.chi_ac;
        d1[l] = d.diagonal(1); d4[l] = d.diagonal(4); d5[l] = d.diagonal(5);
        h[l] = step; h2[l] = 0.5 * step; h6[l] = step / 6.0;
    }

    // K = M V + (M V)^T + D on the packed triangle
    inline void apply(const double* __restrict x, double* __restrict k) const {
        constexpr int L = lanes;
        for (int l = 0; l < L; ++l) {
            k[0*L+l] = wm[l]*x[1*L+l] + wm[l]*x[1*L+l];
            k[1*L+l] = wm[l]*x[6*L+l] - wm[l]*x[0*L+l] - gm[l]*x[1*L+l] + cm[l]*x[4*L+l];
            k[2*L+l] = wm[l]*x[7*L+l] + om[l]*x[3*L+l];
            k[3*L+l] = wm[l]*x[8*L+l] - om[l]*x[2*L+l] - ga[l]*x[3*L+l] - ca[l]*x[4*L+l];
            k[4*L+l] = wm[l]*x[9*L+l] - kap[l]*x[4*L+l] + del[l]*x[5*L+l];
            k[5*L+l] = wm[l]*x[10*L+l] + cm[l]*x[0*L+l] - ca[l]*x[2*L+l] - del[l]*x[4*L+l] - kap[l]*x[5*L+l];
            k[6*L+l] = -wm[l]*x[1*L+l] - gm[l]*x[6*L+l] + cm[l]*x[9*L+l] - wm[l]*x[1*L+l] - gm[l]*x[6*L+l] + cm[l]*x[9*L+l] + d1[l];
            k[7*L+l] = -wm[l]*x[2*L+l] - gm[l]*x[7*L+l] + cm[l]*x[13*L+l] + om[l]*x[8*L+l];
            k[8*L+l] = -wm[l]*x[3*L+l] - gm[l]*x[8*L+l] + cm[l]*x[16*L+l] - om[l]*x[7*L+l] - ga[l]*x[8*L+l] - ca[l]*x[9*L+l];
            k[9*L+l] = -wm[l]*x[4*L+l] - gm[l]*x[9*L+l] + cm[l]*x[18*L+l] - kap[l]*x[9*L+l] + del[l]*x[10*L+l];
            k[10*L+l] = -wm[l]*x[5*L+l] - gm[l]*x[10*L+l] + cm[l]*x[19*L+l] + cm[l]*x[1*L+l] - ca[l]*x[7*L+l] - del[l]*x[9*L+l] - kap[l]*x[10*L+l];
            k[11*L+l] = om[l]*x[12*L+l] + om[l]*x[12*L+l];
            k[12*L+l] = om[l]*x[15*L+l] - om[l]*x[11*L+l] - ga[l]*x[12*L+l] - ca[l]*x[13*L+l];
            k[13*L+l] = om[l]*x[16*L+l] - kap[l]*x[13*L+l] + del[l]*x[14*L+l];
            k[14*L+l] = om[l]*x[17*L+l] + cm[l]*x[2*L+l] - ca[l]*x[11*L+l] - del[l]*x[13*L+l] - kap[l]*x[14*L+l];
            k[15*L+l] = -om[l]*x[12*L+l] - ga[l]*x[15*L+l] - ca[l]*x[16*L+l] - om[l]*x[12*L+l] - ga[l]*x[15*L+l] - ca[l]*x[16*L+l];
            k[16*L+l] = -om[l]*x[13*L+l] - ga[l]*x[16*L+l] - ca[l]*x[18*L+l] - kap[l]*x[16*L+l] + del[l]*x[17*L+l];
            k[17*L+l] = -om[l]*x[14*L+l] - ga[l]*x[17*L+l] - ca[l]*x[19*L+l] + cm[l]*x[3*L+l] - ca[l]*x[12*L+l] - del[l]*x[16*L+l] - kap[l]*x[17*L+l];
            k[18*L+l] = -kap[l]*x[18*L+l] + del[l]*x[19*L+l] - kap[l]*x[18*L+l] + del[l]*x[19*L+l] + d4[l];
            k[19*L+l] = -kap[l]*x[19*L+l] + del[l]*x[20*L+l] + cm[l]*x[4*L+l] - ca[l]*x[13*L+l] - del[l]*x[18*L+l] - kap[l]*x[19*L+l];
            k[20*L+l] = cm[l]*x[5*L+l] - ca[l]*x[14*L+l] - del[l]*x[19*L+l] - kap[l]*x[20*L+l] + cm[l]*x[5*L+l] - ca[l]*x[14*L+l] - del[l]*x[19*L+l] - kap[l]*x[20*L+l] + d5[l];
        }
    }

    void advance(BatchState& s, long nsteps) const {
        constexpr int L = lanes;
        alignas(64) double k[21 * L], t[21 * L], acc[21 * L];
        double* __restrict v = s.v;
        for (long n = 0; n < nsteps; ++n) {
            apply(v, k);
            for (int i = 0; i < 21; ++i)
                for (int l = 0; l < L; ++l) {
                    acc[i*L+l] = k[i*L+l];
                    t[i*L+l] = v[i*L+l] + h2[l]*k[i*L+l];
                }
            apply(t, k);
            for (int i = 0; i < 21; ++i)
                for (int l = 0; l < L; ++l) {
                    acc[i*L+l] += 2.0*k[i*L+l];
                    t[i*L+l] = v[i*L+l] + h2[l]*k[i*L+l];
                }
            apply(t, k);
            for (int i = 0; i < 21; ++i)
                for (int l = 0; l < L; ++l) {
                    acc[i*L+l] += 2.0*k[i*L+l];
                    t[i*L+l] = v[i*L+l] + h[l]*k[i*L+l];
                }
            apply(t, k);
            for (int i = 0; i < 21; ++i)
                for (int l = 0; l < L; ++l)
                    v[i*L+l] += h6[l]*(acc[i*L+l] + k[i*L+l]);
        }
    }
};

inline void set_state(BatchState& s, int lane, const Mat6& v) {
    for (int i = 0; i < 6; ++i)
        for (int j = i; j < 6; ++j) s.v[tri(i, j) * lanes + lane] = v(i, j);
}

inline Mat6 get_state(const BatchState& s, int lane) {
    Mat6 v;
    for (int i = 0; i < 6; ++i)
        for (int j = i; j < 6; ++j)
            v(i, j) = v(j, i) = s.v[tri(i, j) * lanes + lane];
    return v;
}

} // namespace optobec::batch
