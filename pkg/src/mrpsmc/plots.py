"""SVG line charts of the simulated time histories."""

import os

_SERIES = (
    ("xi", "Sliding variable", ""),
    ("omega", "Angular velocity", "rad/s"),
    ("sigma_db", "Attitude error (MRP)", ""),
    ("sigma_lb", "Inertial attitude (MRP)", ""),
    ("u_N", "Reaching control torque", "N.m"),
    ("u_eq", "Equivalent control torque", "N.m"),
)


def emit_plots(records, out_dir) -> None:
    """Write six standalone SVG charts (three labeled series each) to out_dir.

    Files: xi.svg, omega.svg, sigma_db.svg, sigma_lb.svg, u_N.svg, u_eq.svg.
    """
    if not records:
        raise ValueError("no telemetry records to plot")
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    os.makedirs(out_dir, exist_ok=True)
    ts = [r.t for r in records]
    for stem, title, unit in _SERIES:
        fig, ax = plt.subplots(figsize=(6.4, 4.0))
        for i, style in enumerate(("-", "--", ":")):
            ax.plot(ts, [getattr(r, stem)[i] for r in records], style,
                    label=f"{stem}{i + 1}")
        ax.set_xlabel("t [s]")
        ax.set_ylabel(f"{stem} [{unit}]" if unit else stem)
        ax.set_title(title)
        ax.grid(True, alpha=0.4)
        ax.legend()
        fig.tight_layout()
        fig.savefig(os.path.join(out_dir, f"{stem}.svg"), format="svg")
        plt.close(fig)
