"""
default package settings definition
author: tgx authors

This file is part of tgx, licensed under the GNU GPL v3 or later.
"""

import importlib.util
import os
import sys


def get_default_plot_backend() -> str:
    if os.name == "posix" and os.getenv("DISPLAY", default="") == "":
        if sys.platform != "darwin":
            return "Agg"

    backends = {"PyQt5": "Qt5Agg"}
    for pkg in backends:
        if importlib.util.find_spec(pkg) is not None:
            return backends[pkg]
    return "TkAgg"


# default settings with documentation
# yapf: disable
DEFAULT_SETTINGS_DICT_DOC = {
    "global_logfile_enabled": (
        False,
        "Whether to write a global logfile (tgx.log) to the settings folder."
    ),
    "console_logging_format": (
        "%(message)s",
        "Format string for the logging module (affects only console output)."
    ),
    "oracle_n_limit": (
        16,
        ("Largest vertex count the exact oracle accepts.\n"
         "Its state space grows with 2^n * n * T.")
    ),
    "broadcast_max_retries": (
        100,
        "Subset draws per timestep of the greedy-random broadcast policy."
    ),
    "random_graph_max_attempts": (
        100,
        "Regenerations of G(n, p) before giving up on a connected graph."
    ),
    "regularity_mode": (
        "three-point",
        ("Regularity condition of 'tgx freq --regularity':\n"
         "'three-point' (t - r, t, t + r agree) or 'two-point' (t, t + r).")
    ),
    "plot_backend": (
        get_default_plot_backend(),
        "matplotlib backend - default is 'Qt5Agg' (if PyQt is installed) or 'TkAgg'."
    ),
    "plot_figsize": (
        [8, 5],
        "The default size of one (sub)plot figure (width, height)."
    ),
    "plot_activation_cmap": (
        "Greys",
        "matplotlib colormap of the edge activation raster."
    ),
    "plot_walk_color": (
        "tab:red",
        "Color of the scheduled walk drawn over the activation raster."
    ),
    "pygments_style": (
        "monokai",
        "Style used for the syntax highlighting of 'tgx config show'."
    ),
    "table_export_format": (
        "csv",
        "Format for exporting tables, e.g. 'csv', 'excel', 'latex', 'json'...",
    ),
    "bench_sizes": (
        [8, 16, 32],
        "Vertex counts timed by 'tgx bench'."
    ),
}
# yapf: enable

# without documentation
DEFAULT_SETTINGS_DICT = {k: v[0] for k, v in DEFAULT_SETTINGS_DICT_DOC.items()}
