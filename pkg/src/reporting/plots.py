"""Gnuplot command files for the CSVs an experiment leaves behind."""

from pathlib import Path

from ..errors import MissingArtifactsError

_HEADER = """set datafile separator ","
set key top right
"""

# CSV stem -> (plot file, gnuplot body); {csv} is replaced by the CSV file name
PLOT_TEMPLATES = {
    "spacings": ("spacing.plot", """set title "Normalized level spacings"
set xlabel "s"
set ylabel "density"
binwidth = 0.1
bin(x) = binwidth * floor(x / binwidth) + binwidth / 2
stats "{csv}" using "spacing" nooutput
n = STATS_records
set xrange [0:4]
plot "{csv}" using (bin(column("spacing"))):(1.0 / (n * binwidth)) smooth frequency with boxes title "empirical", \\
     exp(-x) title "Poisson", \\
     pi / 2 * x * exp(-pi * x**2 / 4) title "Wigner surmise"
"""),
    "dos": ("dos.plot", """set title "Density of states"
set xlabel "E"
set ylabel "density"
plot "{csv}" using "energy":"density":"stderr" with yerrorlines title "estimate"
"""),
    "decay": ("decay.plot", """set title "Fractional moment decay"
set xlabel "distance"
set ylabel "log moment"
plot "{csv}" using "distance":"log_moment":"stderr" with yerrorbars title "log E|G|^s"
"""),
    "lyapunov": ("lyapunov.plot", """set title "Finite-volume Lyapunov exponent"
set xlabel "E"
set ylabel "gamma"
plot "{csv}" using "E":"gamma":"stderr" with yerrorlines title "gamma_L", \\
     "{csv}" using "E":"lower_bound" with linespoints title "lower bound"
"""),
    "negligibility": ("negligibility.plot", """set title "Negligibility of the rescaled root measure"
set xlabel "L"
set ylabel "probability"
plot "{csv}" using "L":"probability":"stderr" with yerrorlines title "P(mass > epsilon)"
"""),
    "sw_diagnostic": ("sw_diagnostic.plot", """set title "Square-summability diagnostic"
set logscale xy
set xlabel "eta"
set ylabel "inverse quantity"
plot "{csv}" using "eta":(strcol("graph") eq "sc_backbone" && column("quantile") == 0.5 ? column("inverse_quantity") : NaN) \\
         with linespoints title "sc backbone median", \\
     "{csv}" using "eta":(strcol("graph") eq "canopy" && column("quantile") == 0.5 ? column("inverse_quantity") : NaN) \\
         with linespoints title "canopy median"
"""),
    "counts": ("counts.plot", """set title "Eigenvalue counts per realization"
set xlabel "count"
set ylabel "frequency"
plot "{csv}" using "count":(1) smooth frequency with boxes title "counts"
"""),
}


def discover_csv_files(out_dir: Path) -> list[Path]:
    """CSV files of a finished run, sorted by name.

    Raises:
        MissingArtifactsError: If the directory is missing or holds no CSV
    """
    out_dir = Path(out_dir)
    if not out_dir.exists():
        raise MissingArtifactsError(f"Output directory not found: {out_dir}")

    csv_files = [p for p in out_dir.iterdir() if p.is_file() and p.suffix.lower() == ".csv"]
    if not csv_files:
        raise MissingArtifactsError(f"No CSV files found in {out_dir}")

    csv_files.sort(key=lambda p: p.name)
    return csv_files


def emit_plots(out_dir: Path) -> list[Path]:
    """Write one gnuplot file per recognized CSV; reruns overwrite.

    Example:
        After a spacing run, ``emit_plots(out)`` writes ``out/spacing.plot``
        reading ``spacings.csv``.
    """
    written = []
    for csv_path in discover_csv_files(out_dir):
        template = PLOT_TEMPLATES.get(csv_path.stem)
        if template is None:
            continue
        plot_name, body = template
        plot_path = csv_path.parent / plot_name
        plot_path.write_text(_HEADER + body.replace("{csv}", csv_path.name))
        written.append(plot_path)

    print(f"Wrote {len(written)} plot file(s) to {out_dir}")
    for path in written:
        print(f"  - {path.name}")
    return written
