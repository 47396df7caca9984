import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402


def plot_bench(rows, path, title=None):
    """Runtime and expanded-state count against instance size, one line per p."""
    fig, (ax_t, ax_s) = plt.subplots(1, 2, figsize=(9, 3.6))
    for p in sorted({r["p"] for r in rows}):
        sel = sorted((r for r in rows if r["p"] == p), key=lambda r: r["n"])
        sizes = sorted({r["n"] for r in sel})
        secs = [max(r["seconds"] for r in sel if r["n"] == n) for n in sizes]
        states = [max(r["states_expanded"] for r in sel if r["n"] == n) for n in sizes]
        ax_t.plot(sizes, secs, marker="o", label=f"p={p:g}")
        ax_s.plot(sizes, states, marker="s", label=f"p={p:g}")
    ax_t.set_xlabel("arguments")
    ax_t.set_ylabel("seconds (worst seed)")
    ax_s.set_xlabel("arguments")
    ax_s.set_ylabel("states expanded (worst seed)")
    ax_s.set_yscale("symlog")
    ax_t.legend(frameon=False)
    if title:
        fig.suptitle(title)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
