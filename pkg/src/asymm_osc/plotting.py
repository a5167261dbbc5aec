"""Figure rendering for the CLI report path (headless Agg backend)."""

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402


def _save(fig, path):
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_spectrum(records, path):
    """Eigenvalue ladder: nu_+ and energy against the index n."""
    fig, ax = plt.subplots(figsize=(6, 4))
    ns = [r.n for r in records]
    ax.plot(ns, [r.nu_plus for r in records], "o-", label=r"$\nu_+$")
    ax.plot(ns, [r.energy for r in records], "s--", label=r"$E$")
    glued = [r.n for r in records if r.glued_hermite]
    if glued:
        ax.plot(glued, [records[n].nu_plus for n in glued], "r*",
                markersize=12, label="glued")
    ax.set_xlabel("n")
    ax.legend()
    _save(fig, path)


def plot_wavefunction(rows, path):
    """psi(x) and |psi(x)|^2 from (x, psi, density) rows."""
    xs, psi, dens = (np.array(c) for c in zip(*rows))
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.plot(xs, psi, label=r"$\psi(x)$")
    ax.plot(xs, dens, label=r"$|\psi(x)|^2$")
    ax.axvline(0.0, color="gray", lw=0.5)
    ax.set_xlabel("x")
    ax.legend()
    _save(fig, path)


def plot_xmatrix(matrix, path):
    """Signed heat map of the position matrix."""
    m = np.asarray(matrix)
    fig, ax = plt.subplots(figsize=(5, 4))
    vmax = np.max(np.abs(m))
    im = ax.imshow(m, cmap="RdBu_r", vmin=-vmax, vmax=vmax)
    fig.colorbar(im, ax=ax)
    ax.set_xlabel("j")
    ax.set_ylabel("i")
    _save(fig, path)


def plot_beats(signal, path):
    """Mean position against time with the beat center line."""
    ts, xs = (np.array(c) for c in zip(*signal.samples))
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.plot(ts, xs)
    ax.axhline(signal.center, color="gray", ls="--", lw=0.8,
               label=f"center {signal.center:.4g}")
    ax.set_xlabel("t")
    ax.set_ylabel(r"$\langle x \rangle$")
    ax.legend()
    _save(fig, path)


def plot_compare_density(rows, path):
    """Quantum vs classical position densities from (x, q, c) rows."""
    xs = np.array([r[0] for r in rows])
    q = np.array([r[1] for r in rows])
    c = np.array([np.nan if r[2] is None else r[2] for r in rows])
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.plot(xs, q, label="quantum")
    ax.plot(xs, c, label="classical")
    ax.set_xlabel("x")
    ax.set_ylabel("density")
    ax.legend()
    _save(fig, path)
