"""
Why k = sigma gives a flat top
==============================

For a step edge smoothed at scale sigma, the first and second derivatives
are a Gaussian and its derivative. Their weighted quadratic sum R(x) is
flattest at the edge centre when the weight k equals sigma, so the
combined response barely changes when the edge moves slightly.
"""

import numpy as np

from qgliqa.edge_analysis import (default_betas, flat_top_halfwidth, ideal_k_curves, r_derivative,
                                  r_profile)

sigma = 1.0
x = np.linspace(-3, 3, 7)

# R(x) for several k. Only k <= sigma keeps x = 0 a maximum.
for m in (0.5, 1.0, 1.5):
    r = r_profile(x, sigma, m * sigma)
    print(f"k={m}σ  R/R(0):", np.round(r / r[3], 4))

# Width of the region where R stays within 1% of its peak.
for m in (0.25, 0.5, 0.75, 1.0, 1.25):
    print(f"k={m}σ  half-width of 99% plateau: {flat_top_halfwidth(sigma, m * sigma):.3f}")

# The slope is zero at the centre for every k; for k = sigma the curvature vanishes too.
print("f(0) =", r_derivative([0.0], sigma, sigma)[0])

# Ideal k for a flat region of half-width beta*sigma. Both curves start at k = sigma.
betas = default_betas()
k_a, k_b = ideal_k_curves(betas, sigma)
for b in (0.01, 0.1, 0.3, 0.5):
    i = np.argmin(np.abs(betas - b))
    print(f"beta={betas[i]:.3f}: k_a={k_a[i]:.4f} k_b={k_b[i]:.4f}")

# Normalizing by 2πσ² and plotting against x/σ collapses all scales to one curve.
u = np.linspace(-3, 3, 61)
curves = [r_profile(u * s, s, s) * 2 * np.pi * s * s for s in (0.5, 1.0, 2.0)]
print("max spread between scales:", np.max(np.ptp(curves, axis=0)))

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(1, 2, figsize=(9, 3.5))
    xs = np.linspace(-3, 3, 301)
    for m in (0.5, 1.0, 1.5):
        ax[0].plot(xs, np.sqrt(r_profile(xs, sigma, m * sigma)), label=f"k={m}σ")
    ax[0].set_xlabel("x")
    ax[0].set_ylabel("sqrt R(x)")
    ax[0].legend()
    ax[1].plot(betas, k_a, label="k_a")
    ax[1].plot(betas, k_b, label="k_b")
    ax[1].set_ylim(0.9, 2.0)
    ax[1].set_xlabel("beta")
    ax[1].legend()
    fig.tight_layout()
    fig.savefig("edge_theory.png", dpi=120)
    print("saved edge_theory.png")
except ImportError:
    pass
