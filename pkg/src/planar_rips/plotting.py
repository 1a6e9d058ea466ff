"""Static figure of a point cloud, its unit disk graph and the shadow boundary."""
from __future__ import annotations

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .complex import FlagComplex  # noqa: E402
from .rips import PointCloud  # noqa: E402


def render_cloud(cloud: PointCloud, k: FlagComplex, path: str,
                 boundary: list | None = None, title: str | None = None) -> None:
    xs = [float(p.x) for p in cloud.points]
    ys = [float(p.y) for p in cloud.points]
    fig, ax = plt.subplots(figsize=(5, 5))
    for f in k.facets:
        if len(f) >= 3:
            ax.fill([xs[v] for v in f], [ys[v] for v in f], color="tab:blue", alpha=0.08, lw=0)
    marked = {tuple(e) for e in boundary or []}
    for u, v in k.graph.edges():
        on = (u, v) in marked
        ax.plot([xs[u], xs[v]], [ys[u], ys[v]], color="tab:red" if on else "0.45",
                lw=1.6 if on else 0.7, zorder=1)
    ax.scatter(xs, ys, s=14, color="black", zorder=2)
    for i, (x, y) in enumerate(zip(xs, ys)):
        ax.annotate(k.graph.label(i), (x, y), textcoords="offset points", xytext=(3, 3), fontsize=7)
    ax.set_aspect("equal")
    if title:
        ax.set_title(title, fontsize=9)
    # no date and a fixed id salt keep svg output byte-stable
    with matplotlib.rc_context({"svg.hashsalt": "planar-rips"}):
        fig.savefig(path, metadata={"Date": None} if path.endswith(".svg") else None, bbox_inches="tight")
    plt.close(fig)
